#pragma once

// Permissive local search for vertex cover on beta-separable graphs:
// coloring-driven candidate sets, Hall-violator extraction on the bipartite
// graph spanned by a candidate and the cover's complement, and the structural
// witness check the method relies on.

#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "lsvc/coloring.hpp"
#include "lsvc/graph.hpp"
#include "lsvc/matching.hpp"
#include "lsvc/strict.hpp"

namespace lsvc {

class NotSeparableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Q(f): an independent subset of the cover, derived from a 0/1 coloring.
struct CandidateSet {
    VertexSet q_set;
};

struct FamilyParams {
    int q = 0;
    int t = 0;
    int beta = 0;
    FamilyMode mode = FamilyMode::Universal;
    std::uint64_t seed = 0;
    std::uint64_t family_size = 0;     // colorings drawn
    std::uint64_t candidate_count = 0;  // distinct candidate sets after pruning
};

struct CandidateFamily {
    std::vector<CandidateSet> candidates;
    FamilyParams params;
};

struct ImprovedCover {
    VertexSet cover;
    VertexSet witness_w;
    VertexSet witness_q;
    std::size_t candidate_index = 0;
    FamilyParams params;
};

struct NoImprovementWithinK {
    FamilyParams params;
    bool probabilistic = false;
};

using PermissiveOutcome = std::variant<ImprovedCover, NoImprovementWithinK>;

// The three structural conditions an improving exchange inside the
// k-neighborhood reduces to: s_star independent, |N(s_star)∖s| < |s_star|,
// and |N(s_star)∖s| + |s_star| ≤ k. The empty set fails the strict
// inequality.
inline bool check_structural_witness(const Graph& g, const VertexSet& s, int k,
                                     const VertexSet& s_star) {
    if (!set_difference_of(s_star, s).empty())
        throw std::invalid_argument("check_structural_witness: s_star not within the cover");
    if (!is_independent_set(g, s_star)) return false;
    VertexSet outside = set_difference_of(neighborhood(g, s_star, 1, false), s);
    const int o = static_cast<int>(outside.size());
    const int sz = static_cast<int>(s_star.size());
    return o < sz && o + sz <= k;
}

// Q(f) for a coloring f of the cover s (f is indexed by position in s's
// sorted id order). Steps: C0 = cover vertices colored 0; drop C0 vertices of
// the low-degree part that have a neighbor inside C0; then drop every
// endpoint of an edge inside the remainder. The result is independent in G.
inline CandidateSet prune_coloring(const Graph& g, const SeparabilityCertificate& cert,
                                   const VertexSet& s, const Coloring& f) {
    if (f.labels.size() != s.size())
        throw std::invalid_argument("prune_coloring: coloring width != cover size");
    if (cert.v1.size() + cert.v2.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("prune_coloring: certificate does not match graph");
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    std::vector<char> in_c0(n, 0);
    {
        std::size_t i = 0;
        for (Vertex v : s) {
            if (f.labels[i] == 0) in_c0[static_cast<std::size_t>(v)] = 1;
            ++i;
        }
    }
    std::vector<char> remains = in_c0;
    for (Vertex v : cert.v2) {
        if (!in_c0[static_cast<std::size_t>(v)]) continue;
        for (Vertex w : g.neighbors(v))
            if (in_c0[static_cast<std::size_t>(w)]) {
                remains[static_cast<std::size_t>(v)] = 0;
                break;
            }
    }
    std::vector<Vertex> q;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!remains[static_cast<std::size_t>(v)]) continue;
        bool touched = false;
        for (Vertex w : g.neighbors(v))
            if (remains[static_cast<std::size_t>(w)]) {
                touched = true;
                break;
            }
        if (!touched) q.push_back(v);
    }
    return CandidateSet{VertexSet::from(std::move(q))};
}

// Builds the candidate sets for one search: q = k + beta*k, colorings over
// the cover with parameter t = min(q, |s|), each coloring pruned to its
// Q(f), duplicates removed preserving first occurrence.
inline CandidateFamily candidate_family(const Graph& g, const SeparabilityCertificate& cert,
                                        const VertexSet& s, int k, FamilyMode mode,
                                        std::uint64_t seed,
                                        std::optional<double> delta = std::nullopt) {
    if (k < 1) throw std::invalid_argument("candidate_family: k < 1");
    if (cert.beta < 0) throw std::invalid_argument("candidate_family: negative beta");
    const long long q_wide = static_cast<long long>(k) +
                             static_cast<long long>(cert.beta) * k;
    if (q_wide > std::numeric_limits<int>::max())
        throw std::invalid_argument("candidate_family: q overflows");
    const int q = static_cast<int>(q_wide);
    const int t = std::min<int>(q, static_cast<int>(s.size()));

    ColoringFamily fam =
        (mode == FamilyMode::Universal)
            ? universal_family(static_cast<int>(s.size()), t)
            : random_family(static_cast<int>(s.size()), t,
                            delta ? repetitions_for_failure_bound(t, *delta)
                                  : default_repetitions(t),
                            seed);

    CandidateFamily out;
    out.params.q = q;
    out.params.t = t;
    out.params.beta = cert.beta;
    out.params.mode = mode;
    out.params.seed = seed;
    out.params.family_size = fam.colorings.size();
    std::unordered_set<std::string> seen;
    seen.reserve(fam.colorings.size() * 2);
    for (const Coloring& f : fam.colorings) {
        CandidateSet cand = prune_coloring(g, cert, s, f);
        std::string key;
        if (!cand.q_set.empty())
            key.assign(reinterpret_cast<const char*>(cand.q_set.ids().data()),
                       cand.q_set.size() * sizeof(Vertex));
        if (seen.insert(std::move(key)).second) out.candidates.push_back(std::move(cand));
    }
    out.params.candidate_count = out.candidates.size();
    return out;
}

namespace detail {

// One candidate: find a Hall violator W on the Q side of G[Q ∪ I] and turn
// it into the exchanged cover (S∖W) ∪ N(W), neighbors taken inside G[Q ∪ I].
inline std::optional<ImprovedCover> try_candidate(const Graph& g, const VertexSet& s,
                                                  const VertexSet& i_side,
                                                  const CandidateSet& cand) {
    const VertexSet& qset = cand.q_set;
    if (qset.empty()) return std::nullopt;
    InducedSubgraph sub = induced_subgraph(g, set_union_of(qset, i_side));
    std::vector<Vertex> a_local, b_local;
    for (std::size_t i = 0; i < sub.original_ids.size(); ++i)
        (qset.contains(sub.original_ids[i]) ? a_local : b_local)
            .push_back(static_cast<Vertex>(i));
    BipartiteGraph bg = BipartiteGraph::create(sub.graph, VertexSet::from(std::move(a_local)),
                                               VertexSet::from(std::move(b_local)));
    std::optional<VertexSet> w_local = find_hall_violator(bg, Side::A);
    if (!w_local) return std::nullopt;

    std::vector<Vertex> w_orig, nw_orig;
    for (Vertex v : *w_local) {
        w_orig.push_back(sub.original_ids[static_cast<std::size_t>(v)]);
        for (Vertex u : sub.graph.neighbors(v))
            nw_orig.push_back(sub.original_ids[static_cast<std::size_t>(u)]);
    }
    VertexSet w = VertexSet::from(std::move(w_orig));
    VertexSet nw = VertexSet::from(std::move(nw_orig));
    ImprovedCover result;
    result.cover = set_union_of(set_difference_of(s, w), nw);
    result.witness_w = std::move(w);
    result.witness_q = qset;
    return result;
}

}  // namespace detail

// Theorem-4-shaped search. Throws NotSeparableError when the canonical
// certificate for beta fails. In universal mode a negative answer is
// deterministic; in randomized mode it carries the probabilistic flag. With
// threads > 1 candidates are scanned concurrently and the lowest-index
// success is reported, so results match the serial order.
inline PermissiveOutcome permissive_search(const CoverInstance& inst, int beta,
                                           FamilyMode mode, std::uint64_t seed,
                                           std::optional<double> delta = std::nullopt,
                                           int threads = 1) {
    std::optional<SeparabilityCertificate> cert = certify_separability(inst.graph, beta);
    if (!cert)
        throw NotSeparableError("graph is not " + std::to_string(beta) + "-separable");
    CandidateFamily cf =
        candidate_family(inst.graph, *cert, inst.cover, inst.k, mode, seed, delta);

    std::vector<Vertex> outside;
    for (Vertex v = 0; v < inst.graph.vertex_count(); ++v)
        if (!inst.cover.contains(v)) outside.push_back(v);
    const VertexSet i_side = VertexSet::from(std::move(outside));

    auto finish = [&](ImprovedCover&& win, std::size_t index) -> PermissiveOutcome {
        win.candidate_index = index;
        win.params = cf.params;
        return PermissiveOutcome{std::move(win)};
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < cf.candidates.size(); ++i) {
            auto res = detail::try_candidate(inst.graph, inst.cover, i_side, cf.candidates[i]);
            if (res) return finish(std::move(*res), i);
        }
        return NoImprovementWithinK{cf.params, mode == FamilyMode::Randomized};
    }

    const std::size_t total = cf.candidates.size();
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::vector<std::optional<ImprovedCover>> found(total);
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            if (i > best.load()) continue;
            try {
                auto res = detail::try_candidate(inst.graph, inst.cover, i_side,
                                                 cf.candidates[i]);
                if (res) {
                    found[i] = std::move(res);
                    std::size_t cur = best.load();
                    while (i < cur && !best.compare_exchange_weak(cur, i)) {
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(threads), std::max<std::size_t>(total, 1));
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);

    std::size_t winner = best.load();
    if (winner != std::numeric_limits<std::size_t>::max())
        return finish(std::move(*found[winner]), winner);
    return NoImprovementWithinK{cf.params, mode == FamilyMode::Randomized};
}

}  // namespace lsvc
