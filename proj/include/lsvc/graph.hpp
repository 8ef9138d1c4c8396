#pragma once

// Undirected simple graphs over dense 0-based vertex ids, vertex sets,
// neighborhood/distance queries, degeneracy, beta-separability certificates,
// and 2-subdivision.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsvc {

using Vertex = int;

// Sorted, duplicate-free set of vertex ids. Value type; cheap to copy at the
// sizes this library targets.
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }

    static VertexSet from(std::vector<Vertex> ids) {
        VertexSet s;
        s.ids_ = std::move(ids);
        s.normalize();
        return s;
    }

    bool contains(Vertex v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }

    void insert(Vertex v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }

    void erase(Vertex v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it != ids_.end() && *it == v) ids_.erase(it);
    }

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    const std::vector<Vertex>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<Vertex> ids_;
};

inline VertexSet set_union_of(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from(std::move(out));
}

inline VertexSet set_difference_of(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from(std::move(out));
}

inline VertexSet set_intersection_of(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet::from(std::move(out));
}

// Symmetric-difference cardinality |s1 ∪ s2| − |s1 ∩ s2|.
inline int set_distance(const VertexSet& s1, const VertexSet& s2) {
    std::vector<Vertex> out;
    std::set_symmetric_difference(s1.begin(), s1.end(), s2.begin(), s2.end(),
                                  std::back_inserter(out));
    return static_cast<int>(out.size());
}

// Finite, undirected, simple graph. Immutable after construction; adjacency
// lists are kept sorted so membership queries are binary searches.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(static_cast<std::size_t>(check_n(n))) {}

    // Builds a graph from an edge list. Parallel edges are collapsed;
    // self-loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) {
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            g.m_ += nb.size();
        }
        g.m_ /= 2;
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Edges in canonical order: u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(m_);
        for (Vertex u = 0; u < vertex_count(); ++u)
            for (Vertex v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static int check_n(int n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        return n;
    }

    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

inline void check_in_range(const Graph& g, const VertexSet& s, const char* what) {
    if (!s.empty() && (*s.begin() < 0 || *(s.end() - 1) >= g.vertex_count()))
        throw std::invalid_argument(std::string(what) + ": vertex id out of range");
}

// Vertices at distance exactly d from s (closed=false) or at distance at most
// d including s itself (closed=true). Multi-source BFS.
inline VertexSet neighborhood(const Graph& g, const VertexSet& s, int d, bool closed) {
    check_in_range(g, s, "neighborhood");
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<Vertex> bfs;
    for (Vertex v : s) {
        dist[static_cast<std::size_t>(v)] = 0;
        bfs.push(v);
    }
    std::vector<Vertex> out;
    if (closed) out.assign(s.begin(), s.end());
    while (!bfs.empty()) {
        Vertex u = bfs.front();
        bfs.pop();
        int du = dist[static_cast<std::size_t>(u)];
        if (du == d) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(w)] != -1) continue;
            dist[static_cast<std::size_t>(w)] = du + 1;
            if (closed || du + 1 == d) out.push_back(w);
            bfs.push(w);
        }
    }
    return VertexSet::from(std::move(out));
}

// Minimum d such that every subgraph has a vertex of degree at most d,
// by iterated minimum-degree peeling with a bucket queue.
inline int degeneracy(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> deg(static_cast<std::size_t>(n));
    int maxdeg = 0;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[static_cast<std::size_t>(v)]);
    }
    // Bucket queue with lazy deletion: a vertex may sit in stale buckets, the
    // entry matching its current degree is the live one.
    std::vector<std::vector<Vertex>> bucket(static_cast<std::size_t>(maxdeg) + 1);
    for (Vertex v = 0; v < n; ++v) bucket[static_cast<std::size_t>(deg[v])].push_back(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    int result = 0;
    int cur = 0;
    for (int peeled = 0; peeled < n;) {
        while (bucket[static_cast<std::size_t>(cur)].empty()) ++cur;
        Vertex v = bucket[static_cast<std::size_t>(cur)].back();
        bucket[static_cast<std::size_t>(cur)].pop_back();
        if (removed[static_cast<std::size_t>(v)] ||
            deg[static_cast<std::size_t>(v)] != cur)
            continue;
        removed[static_cast<std::size_t>(v)] = 1;
        ++peeled;
        result = std::max(result, cur);
        for (Vertex w : g.neighbors(v)) {
            if (removed[static_cast<std::size_t>(w)]) continue;
            int dw = --deg[static_cast<std::size_t>(w)];
            bucket[static_cast<std::size_t>(dw)].push_back(w);
            if (dw < cur) cur = dw;
        }
    }
    return result;
}

// Witness that a graph is beta-separable: (v1, v2) partition the vertex set,
// every v1-vertex has at most beta neighbors inside v1, every v2-vertex has
// total degree at most beta.
struct SeparabilityCertificate {
    int beta = 0;
    VertexSet v1;
    VertexSet v2;
};

// Direct check of the two certificate conditions plus partition-ness.
inline bool verify_separability(const Graph& g, const SeparabilityCertificate& cert) {
    if (cert.beta < 0) return false;
    if (!set_intersection_of(cert.v1, cert.v2).empty()) return false;
    if (cert.v1.size() + cert.v2.size() != static_cast<std::size_t>(g.vertex_count()))
        return false;
    for (Vertex w : cert.v2)
        if (g.degree(w) > cert.beta) return false;
    for (Vertex v : cert.v1) {
        int inside = 0;
        for (Vertex w : g.neighbors(v))
            if (cert.v1.contains(w)) ++inside;
        if (inside > cert.beta) return false;
    }
    return true;
}

// Canonical certificate: v2 = all vertices of degree <= beta, v1 = the rest.
// If any bipartition certifies beta-separability this one does, so failure of
// the canonical split proves the graph is not beta-separable.
inline std::optional<SeparabilityCertificate> certify_separability(const Graph& g,
                                                                   int beta) {
    if (beta < 0) throw std::invalid_argument("certify_separability: beta < 0");
    std::vector<Vertex> low, high;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        (g.degree(v) <= beta ? low : high).push_back(v);
    SeparabilityCertificate cert{beta, VertexSet::from(std::move(high)),
                                 VertexSet::from(std::move(low))};
    for (Vertex v : cert.v1) {
        int inside = 0;
        for (Vertex w : g.neighbors(v))
            if (cert.v1.contains(w)) ++inside;
        if (inside > beta) return std::nullopt;
    }
    return cert;
}

// Replaces every edge xy by the path x - z - z' - y. For the j-th edge in
// canonical order, z = n + 2j and z' = n + 2j + 1; this fixed id scheme keeps
// subdivisions reproducible byte-for-byte.
inline Graph subdivide_twice(const Graph& g) {
    int n = g.vertex_count();
    auto es = g.edges();
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(3 * es.size());
    for (std::size_t j = 0; j < es.size(); ++j) {
        Vertex z = n + static_cast<Vertex>(2 * j);
        Vertex zp = z + 1;
        out.emplace_back(es[j].first, z);
        out.emplace_back(z, zp);
        out.emplace_back(zp, es[j].second);
    }
    return Graph::from_edges(n + static_cast<int>(2 * es.size()), out);
}

// Checks that g follows the subdivide_twice id scheme over n_original
// vertices: subdivision vertices come in consecutive pairs of degree 2 joined
// to each other and to one original endpoint each, and no edge joins two
// originals.
inline bool is_canonical_2_subdivision(const Graph& g, int n_original) {
    int n = g.vertex_count();
    if (n < n_original || (n - n_original) % 2 != 0) return false;
    for (Vertex z = n_original; z < n; z += 2) {
        Vertex zp = z + 1;
        if (g.degree(z) != 2 || g.degree(zp) != 2) return false;
        if (!g.has_edge(z, zp)) return false;
        for (Vertex w : g.neighbors(z))
            if (w != zp && w >= n_original) return false;
        for (Vertex w : g.neighbors(zp))
            if (w != z && w >= n_original) return false;
    }
    for (Vertex u = 0; u < n_original; ++u)
        for (Vertex w : g.neighbors(u))
            if (w < n_original) return false;
    return true;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "is_vertex_cover");
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        if (s.contains(u)) continue;
        for (Vertex w : g.neighbors(u))
            if (w > u && !s.contains(w)) return false;
    }
    return true;
}

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "is_independent_set");
    for (Vertex u : s)
        for (Vertex w : g.neighbors(u))
            if (w > u && s.contains(w)) return false;
    return true;
}

// Induced subgraph with dense ids. original_ids[i] is the input-graph id of
// subgraph vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original_ids;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    check_in_range(g, s, "induced_subgraph");
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> originals(s.begin(), s.end());
    for (std::size_t i = 0; i < originals.size(); ++i)
        pos[static_cast<std::size_t>(originals[i])] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : s)
        for (Vertex w : g.neighbors(u))
            if (u < w && pos[static_cast<std::size_t>(w)] != -1)
                edges.emplace_back(pos[static_cast<std::size_t>(u)],
                                   pos[static_cast<std::size_t>(w)]);
    return {Graph::from_edges(static_cast<int>(originals.size()), edges),
            std::move(originals)};
}

// Bipartite graph as a vertex-partitioned view of an ordinary graph. Every
// edge must have one endpoint in each part.
struct BipartiteGraph {
    VertexSet a;
    VertexSet b;
    Graph underlying;

    static BipartiteGraph create(Graph g, VertexSet a, VertexSet b) {
        if (!set_intersection_of(a, b).empty())
            throw std::invalid_argument("bipartition parts overlap");
        if (a.size() + b.size() != static_cast<std::size_t>(g.vertex_count()))
            throw std::invalid_argument("bipartition does not cover the vertex set");
        for (Vertex u : a)
            for (Vertex w : g.neighbors(u))
                if (a.contains(w))
                    throw std::invalid_argument("edge inside part A");
        for (Vertex u : b)
            for (Vertex w : g.neighbors(u))
                if (b.contains(w))
                    throw std::invalid_argument("edge inside part B");
        return {std::move(a), std::move(b), std::move(g)};
    }
};

}  // namespace lsvc
