#pragma once

// Parameterized instance transformations: clique to Hall-set (plain and
// 2-subdivided), the minimize rule for Hall sets on 2-subdivided instances,
// Hall-set to cover local search, and the cover-size shift under
// 2-subdivision.

#include <stdexcept>
#include <utility>
#include <vector>

#include "lsvc/graph.hpp"
#include "lsvc/strict.hpp"

namespace lsvc {

struct CliqueInstance {
    Graph graph;
    int k = 0;

    static CliqueInstance create(Graph graph, int k) {
        if (k < 1 || k > graph.vertex_count())
            throw std::invalid_argument("CliqueInstance: k outside 1..n");
        return {std::move(graph), k};
    }
};

// One vertex v_e per edge e, adjacent to both endpoints of e and to all of a
// fresh t-element set U, t = C(k,2) - k - 1. The graph is bipartite with
// A = {v_e}, B = originals ∪ U; the target size is k' = C(k,2). Ids:
// originals keep 0..n-1, v_e fills n..n+m-1 in canonical edge order, U after.
inline HallInstance clique_to_hallset(const CliqueInstance& ci) {
    const int k = ci.k;
    if (k < 4)
        throw std::invalid_argument(
            "clique_to_hallset: k < 4 leaves the padding set size negative");
    const Graph& g = ci.graph;
    const int n = g.vertex_count();
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    const int kprime = k * (k - 1) / 2;
    const int t = kprime - k - 1;

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m) * (2 + static_cast<std::size_t>(t)));
    for (int j = 0; j < m; ++j) {
        const Vertex ve = n + j;
        edges.emplace_back(es[static_cast<std::size_t>(j)].first, ve);
        edges.emplace_back(es[static_cast<std::size_t>(j)].second, ve);
        for (int u = 0; u < t; ++u) edges.emplace_back(ve, n + m + u);
    }
    Graph g2 = Graph::from_edges(n + m + t, edges);

    std::vector<Vertex> a_ids, b_ids;
    for (Vertex v = 0; v < n; ++v) b_ids.push_back(v);
    for (Vertex v = n; v < n + m; ++v) a_ids.push_back(v);
    for (Vertex v = n + m; v < n + m + t; ++v) b_ids.push_back(v);
    return HallInstance::create(
        BipartiteGraph::create(std::move(g2), VertexSet::from(std::move(a_ids)),
                               VertexSet::from(std::move(b_ids))),
        kprime);
}

// clique_to_hallset followed by a 2-subdivision. The subdivision pair on the
// j-th edge (x, y) of the intermediate graph is z = n1+2j (adjacent to x) and
// z' = n1+2j+1 (adjacent to y); each joins the side opposite its original
// endpoint, so A' ⊇ A and B' ⊇ B. Target size k' = (3+t)·C(k,2).
inline HallInstance clique_to_hallset_2subdivided(const CliqueInstance& ci) {
    HallInstance base = clique_to_hallset(ci);
    const Graph& g1 = base.bg.underlying;
    const int n1 = g1.vertex_count();
    const auto es = g1.edges();
    Graph g2 = subdivide_twice(g1);

    std::vector<Vertex> a_ids(base.bg.a.ids());
    std::vector<Vertex> b_ids(base.bg.b.ids());
    for (std::size_t j = 0; j < es.size(); ++j) {
        const Vertex z = n1 + static_cast<Vertex>(2 * j);
        const Vertex zp = z + 1;
        if (base.bg.a.contains(es[j].first)) {
            b_ids.push_back(z);
            a_ids.push_back(zp);
        } else {
            a_ids.push_back(z);
            b_ids.push_back(zp);
        }
    }
    const int k = ci.k;
    const int c2 = k * (k - 1) / 2;
    const int t = c2 - k - 1;
    const int kprime = (3 + t) * c2;
    return HallInstance::create(
        BipartiteGraph::create(std::move(g2), VertexSet::from(std::move(a_ids)),
                               VertexSet::from(std::move(b_ids))),
        kprime);
}

// Exhaustively applies: pick the lowest-id edge-layer vertex v whose block
// {v} ∪ N²(v) meets s properly (neither disjoint nor contained), remove the
// whole block from s, restart. Blocks belong to the layer that replaced the
// original edges; in a 2-subdivided-reduction instance those are the A-side
// vertices of degree ≥ 3, since every subdivision vertex has degree exactly
// 2. Distinct blocks are disjoint, so the fixed point is a union of complete
// blocks, and a Hall set stays a Hall set under the rule.
inline VertexSet minimize_rule(const BipartiteGraph& bg, VertexSet s) {
    if (!set_difference_of(s, bg.a).empty())
        throw std::invalid_argument("minimize_rule: set not within the A side");
    const Graph& g = bg.underlying;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : bg.a) {
            if (g.degree(v) < 3) continue;
            VertexSet block = neighborhood(g, VertexSet{v}, 2, false);
            block.insert(v);
            VertexSet inter = set_intersection_of(s, block);
            if (!inter.empty() && inter != block) {
                s = set_difference_of(s, block);
                changed = true;
                break;
            }
        }
    }
    return s;
}

// The A side of a bipartite graph covers every edge, so (underlying, A,
// 2k-1) is a cover-search instance; a Hall set of size ≤ k exists iff that
// instance admits an improving exchange.
inline CoverInstance hallset_to_lsvc(const HallInstance& hi) {
    return CoverInstance::create(hi.bg.underlying, hi.bg.a, 2 * hi.k - 1);
}

struct SubdivisionShift {
    Graph graph;
    int shift = 0;  // minimum cover grows by exactly this much
};

inline SubdivisionShift vc_subdivision_shift(const Graph& g) {
    return {subdivide_twice(g), static_cast<int>(g.edge_count())};
}

}  // namespace lsvc
