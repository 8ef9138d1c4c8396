#pragma once

// Exponential-time baselines: strict local search over the k-exchange
// neighborhood of a vertex cover, and a size-bounded Hall-set search.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsvc/graph.hpp"

namespace lsvc {

struct CoverInstance {
    Graph graph;
    VertexSet cover;
    int k = 0;

    static CoverInstance create(Graph graph, VertexSet cover, int k) {
        if (k < 0) throw std::invalid_argument("CoverInstance: k < 0");
        check_in_range(graph, cover, "CoverInstance");
        if (!is_vertex_cover(graph, cover))
            throw std::invalid_argument("CoverInstance: set is not a vertex cover");
        return {std::move(graph), std::move(cover), k};
    }
};

struct HallInstance {
    BipartiteGraph bg;
    int k = 0;

    static HallInstance create(BipartiteGraph bg, int k) {
        if (k < 1) throw std::invalid_argument("HallInstance: k < 1");
        return {std::move(bg), k};
    }
};

// Searches for a strictly smaller cover within symmetric-difference distance
// k of inst.cover. Enumerates independent P ⊆ cover in lexicographic order
// over sorted ids, maintaining |N(P)∖S| incrementally; both |P| and
// |N(P)∖S| grow with P, so a branch dies once their sum exceeds k. The
// first P with |N(P)∖S| < |P| yields (S∖P) ∪ (N(P)∖S).
inline std::optional<VertexSet> strict_search(const CoverInstance& inst) {
    const Graph& g = inst.graph;
    const std::vector<Vertex>& s_ids = inst.cover.ids();
    const int k = inst.k;
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());

    std::vector<char> in_s(n, 0), in_p(n, 0);
    for (Vertex v : inst.cover) in_s[static_cast<std::size_t>(v)] = 1;
    std::vector<int> hits(n, 0);
    int outside = 0;
    std::vector<Vertex> pstack;
    std::optional<VertexSet> result;

    auto dfs = [&](auto&& self, std::size_t start) -> bool {
        if (!pstack.empty() && outside < static_cast<int>(pstack.size())) {
            std::vector<Vertex> out;
            for (Vertex v : s_ids)
                if (!in_p[static_cast<std::size_t>(v)]) out.push_back(v);
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                if (!in_s[static_cast<std::size_t>(v)] &&
                    hits[static_cast<std::size_t>(v)] > 0)
                    out.push_back(v);
            result = VertexSet::from(std::move(out));
            return true;
        }
        for (std::size_t i = start; i < s_ids.size(); ++i) {
            Vertex u = s_ids[i];
            bool independent = true;
            for (Vertex w : g.neighbors(u))
                if (in_p[static_cast<std::size_t>(w)]) {
                    independent = false;
                    break;
                }
            if (!independent) continue;
            in_p[static_cast<std::size_t>(u)] = 1;
            pstack.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!in_s[static_cast<std::size_t>(w)] &&
                    hits[static_cast<std::size_t>(w)]++ == 0)
                    ++outside;
            bool dead = static_cast<int>(pstack.size()) + outside > k;
            if (!dead && self(self, i + 1)) return true;
            for (Vertex w : g.neighbors(u))
                if (!in_s[static_cast<std::size_t>(w)] &&
                    --hits[static_cast<std::size_t>(w)] == 0)
                    --outside;
            pstack.pop_back();
            in_p[static_cast<std::size_t>(u)] = 0;
        }
        return false;
    };
    dfs(dfs, 0);
    return result;
}

// Smallest-first search for S ⊆ A with |S| ≤ k and |N(S)| < |S|.
// |N(·)| only grows, so a partial set is dead for target size len once
// |N(partial)| ≥ len.
inline std::optional<VertexSet> hall_set_bruteforce(const HallInstance& inst) {
    const Graph& g = inst.bg.underlying;
    const std::vector<Vertex>& a_ids = inst.bg.a.ids();
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    const int limit = std::min<int>(inst.k, static_cast<int>(a_ids.size()));

    std::vector<int> hits(n, 0);
    int nsize = 0;
    std::vector<Vertex> pstack;
    std::optional<VertexSet> result;

    auto dfs = [&](auto&& self, std::size_t start, int len) -> bool {
        if (static_cast<int>(pstack.size()) == len) {
            if (nsize < len) {
                result = VertexSet::from(pstack);
                return true;
            }
            return false;
        }
        if (nsize >= len) return false;
        std::size_t remaining = static_cast<std::size_t>(len) - pstack.size();
        for (std::size_t i = start; i + remaining <= a_ids.size(); ++i) {
            Vertex u = a_ids[i];
            pstack.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (hits[static_cast<std::size_t>(w)]++ == 0) ++nsize;
            if (self(self, i + 1, len)) return true;
            for (Vertex w : g.neighbors(u))
                if (--hits[static_cast<std::size_t>(w)] == 0) --nsize;
            pstack.pop_back();
        }
        return false;
    };
    for (int len = 1; len <= limit; ++len)
        if (dfs(dfs, 0, len)) break;
    return result;
}

}  // namespace lsvc
