#pragma once

// Test-side oracles, written independently of the library's algorithms:
// raw neighborhood enumeration, bitmask brute forces, an exact cover solver,
// and small fixture helpers. Everything here favors obviousness over speed.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lsvc/lsvc.hpp"

namespace testutil {

using lsvc::BipartiteGraph;
using lsvc::Graph;
using lsvc::Vertex;
using lsvc::VertexSet;

// Raw k-exchange search: enumerates drop sets D ⊆ s and add sets A ⊆ V∖s
// with |D| + |A| ≤ k and |A| < |D|, returns the first (S∖D) ∪ A that covers.
inline std::optional<VertexSet> raw_exchange_improvement(const Graph& g, const VertexSet& s,
                                                         int k) {
    std::vector<Vertex> inside(s.begin(), s.end());
    std::vector<Vertex> outside;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!s.contains(v)) outside.push_back(v);

    std::vector<Vertex> drop, add;
    std::optional<VertexSet> found;

    auto try_current = [&]() {
        VertexSet candidate = s;
        for (Vertex v : drop) candidate.erase(v);
        for (Vertex v : add) candidate.insert(v);
        if (lsvc::is_vertex_cover(g, candidate)) found = candidate;
    };

    auto enum_add = [&](auto&& self, std::size_t start, std::size_t want) -> void {
        if (found) return;
        if (want == 0) {
            try_current();
            return;
        }
        for (std::size_t i = start; i + want <= outside.size() && !found; ++i) {
            add.push_back(outside[i]);
            self(self, i + 1, want - 1);
            add.pop_back();
        }
    };
    auto enum_drop = [&](auto&& self, std::size_t start, std::size_t want) -> void {
        if (found) return;
        if (want == 0) {
            std::size_t budget = static_cast<std::size_t>(k) - drop.size();
            std::size_t max_add = std::min(budget, drop.size() - 1);
            for (std::size_t a = 0; a <= max_add && !found; ++a)
                enum_add(enum_add, 0, a);
            return;
        }
        for (std::size_t i = start; i + want <= inside.size() && !found; ++i) {
            drop.push_back(inside[i]);
            self(self, i + 1, want - 1);
            drop.pop_back();
        }
    };
    for (std::size_t d = 1; d <= std::min<std::size_t>(inside.size(), static_cast<std::size_t>(k)) && !found; ++d)
        enum_drop(enum_drop, 0, d);
    return found;
}

// Bitmask scan over one part: first subset (by mask order) violating Hall's
// condition, restricted to |subset| ≤ max_size when given.
inline std::optional<VertexSet> hall_violator_bitmask(const BipartiteGraph& bg,
                                                      const VertexSet& part,
                                                      int max_size = -1) {
    const std::vector<Vertex>& ids = part.ids();
    const Graph& g = bg.underlying;
    for (std::uint32_t mask = 1; mask < (1u << ids.size()); ++mask) {
        int size = std::popcount(mask);
        if (max_size >= 0 && size > max_size) continue;
        std::set<Vertex> nbhd;
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (mask & (1u << i))
                for (Vertex w : g.neighbors(ids[i])) nbhd.insert(w);
        if (static_cast<int>(nbhd.size()) < size) {
            std::vector<Vertex> out;
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (mask & (1u << i)) out.push_back(ids[i]);
            return VertexSet::from(std::move(out));
        }
    }
    return std::nullopt;
}

// Kuhn's augmenting-path matching, an implementation independent of the
// library's phase-based one.
inline int matching_size_kuhn(const BipartiteGraph& bg) {
    const Graph& g = bg.underlying;
    std::vector<Vertex> match(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<char> used;
    auto augment = [&](auto&& self, Vertex u) -> bool {
        for (Vertex w : g.neighbors(u)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            if (match[static_cast<std::size_t>(w)] == -1 ||
                self(self, match[static_cast<std::size_t>(w)])) {
                match[static_cast<std::size_t>(w)] = u;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (Vertex u : bg.a) {
        used.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        if (augment(augment, u)) ++size;
    }
    return size;
}

// Exhaustive bipartition scan: is there any (v1, v2) split certifying the
// bound? Exponential; n ≤ 12 or so.
inline bool separable_bitmask(const Graph& g, int beta) {
    const int n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) {
            if (mask & (1u << v)) {
                int inside = 0;
                for (Vertex w : g.neighbors(v))
                    if (mask & (1u << w)) ++inside;
                ok = inside <= beta;
            } else {
                ok = g.degree(v) <= beta;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Minimum cover size by scanning all vertex subsets. n ≤ 20.
inline int min_vertex_cover_bitmask(const Graph& g) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    int best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (auto [u, v] : edges)
            if (!(mask & (1u << u)) && !(mask & (1u << v))) {
                covers = false;
                break;
            }
        if (covers) best = size;
    }
    return best;
}

// Same scan, keeping a witness. Optimal covers admit no improvement at all,
// which makes them handy for exercising the negative path of a search.
inline VertexSet optimal_cover_bitmask(const Graph& g) {
    const int n = g.vertex_count();
    const auto edges = g.edges();
    int best = n + 1;
    std::uint32_t best_mask = (1u << n) - 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (auto [u, v] : edges)
            if (!(mask & (1u << u)) && !(mask & (1u << v))) {
                covers = false;
                break;
            }
        if (covers) {
            best = size;
            best_mask = mask;
        }
    }
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (best_mask & (1u << v)) out.insert(v);
    return out;
}

namespace detail {

inline int greedy_matching_bound(const std::vector<std::vector<Vertex>>& adj,
                                 const std::vector<char>& gone) {
    std::vector<char> hit(adj.size(), 0);
    int size = 0;
    for (std::size_t u = 0; u < adj.size(); ++u) {
        if (gone[u] || hit[u]) continue;
        for (Vertex w : adj[u]) {
            if (gone[static_cast<std::size_t>(w)] || hit[static_cast<std::size_t>(w)])
                continue;
            hit[u] = 1;
            hit[static_cast<std::size_t>(w)] = 1;
            ++size;
            break;
        }
    }
    return size;
}

inline void min_vc_branch(std::vector<std::vector<Vertex>>& adj, std::vector<char>& gone,
                          int taken, int& best) {
    // Degree-1 rule: taking the neighbor of a pendant vertex is always safe.
    bool again = true;
    std::vector<Vertex> picked;
    while (again) {
        again = false;
        for (std::size_t v = 0; v < adj.size(); ++v) {
            if (gone[v]) continue;
            int deg = 0;
            Vertex only = -1;
            for (Vertex w : adj[v])
                if (!gone[static_cast<std::size_t>(w)]) {
                    ++deg;
                    only = w;
                }
            if (deg == 1) {
                gone[static_cast<std::size_t>(only)] = 1;
                picked.push_back(only);
                ++taken;
                again = true;
            }
        }
    }
    Vertex pivot = -1;
    int pivot_deg = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (gone[v]) continue;
        int deg = 0;
        for (Vertex w : adj[v])
            if (!gone[static_cast<std::size_t>(w)]) ++deg;
        if (deg > pivot_deg) {
            pivot_deg = deg;
            pivot = static_cast<Vertex>(v);
        }
    }
    if (pivot == -1) {
        best = std::min(best, taken);
    } else if (taken + greedy_matching_bound(adj, gone) < best) {
        gone[static_cast<std::size_t>(pivot)] = 1;
        min_vc_branch(adj, gone, taken + 1, best);
        gone[static_cast<std::size_t>(pivot)] = 0;

        std::vector<Vertex> nbrs;
        for (Vertex w : adj[static_cast<std::size_t>(pivot)])
            if (!gone[static_cast<std::size_t>(w)]) nbrs.push_back(w);
        for (Vertex w : nbrs) gone[static_cast<std::size_t>(w)] = 1;
        min_vc_branch(adj, gone, taken + static_cast<int>(nbrs.size()), best);
        for (Vertex w : nbrs) gone[static_cast<std::size_t>(w)] = 0;
    }
    for (Vertex v : picked) gone[static_cast<std::size_t>(v)] = 0;
}

}  // namespace detail

// Exact minimum vertex cover via branch and bound (pendant rule, matching
// lower bound, max-degree branching). Cross-checked against
// min_vertex_cover_bitmask in the test suite before heavier use.
inline int min_vertex_cover_size(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    int best = n;
    detail::min_vc_branch(adj, gone, 0, best);
    return best;
}

inline bool has_clique_of_size(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k <= 0) return true;
    if (k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        bool clique = true;
        for (int i = 0; i < k && clique; ++i)
            for (int j = i + 1; j < k && clique; ++j)
                if (!g.has_edge(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]))
                    clique = false;
        if (clique) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Degeneracy by definition: the largest, over vertex subsets, of the minimum
// degree in the induced subgraph. 2^n scan.
inline int degeneracy_bitmask(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int mindeg = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!(mask & (1u << v))) continue;
            int deg = 0;
            for (Vertex w : g.neighbors(v))
                if (mask & (1u << w)) ++deg;
            mindeg = std::min(mindeg, deg);
        }
        best = std::max(best, mindeg);
    }
    return best;
}

// Pattern-coverage check written against std::set, independent of the
// library's bitmask version.
inline bool universal_by_definition(const std::vector<lsvc::Coloring>& colorings, int n,
                                    int t) {
    std::vector<int> idx(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (t > n) return false;
    const std::size_t want = std::size_t{1} << t;
    while (true) {
        std::set<std::vector<std::uint8_t>> seen;
        for (const auto& c : colorings) {
            std::vector<std::uint8_t> pattern(static_cast<std::size_t>(t));
            for (int j = 0; j < t; ++j)
                pattern[static_cast<std::size_t>(j)] =
                    c.labels[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
            seen.insert(std::move(pattern));
            if (seen.size() == want) break;
        }
        if (seen.size() != want) return false;
        if (t == 0) return true;
        int i = t - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Random bipartite graph with parts {0..a-1} and {a..a+b-1}.
inline BipartiteGraph random_bipartite(int a, int b, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex w = a; w < a + b; ++w)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, w);
    std::vector<Vertex> a_ids(static_cast<std::size_t>(a));
    std::vector<Vertex> b_ids(static_cast<std::size_t>(b));
    for (int i = 0; i < a; ++i) a_ids[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < b; ++i) b_ids[static_cast<std::size_t>(i)] = a + i;
    return BipartiteGraph::create(Graph::from_edges(a + b, edges),
                                  VertexSet::from(std::move(a_ids)),
                                  VertexSet::from(std::move(b_ids)));
}

inline VertexSet full_vertex_set(const Graph& g) {
    std::vector<Vertex> ids(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) ids[static_cast<std::size_t>(v)] = v;
    return VertexSet::from(std::move(ids));
}

}  // namespace testutil
