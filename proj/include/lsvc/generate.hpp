#pragma once

// Deterministic graph generators and a matching-based cover heuristic.
// All randomness flows through std::mt19937_64 raw words so outputs are
// bit-identical across platforms for a fixed seed.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lsvc/graph.hpp"

namespace lsvc {

namespace detail {

// Uniform double in [0, 1) from one engine word.
inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// Erdos-Renyi G(n, p): each unordered pair is an edge independently with
// probability p.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_graph: n < 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p outside [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (detail::unit_draw(rng) < p) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("complete_graph: n < 0");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n < 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph::from_edges(n, edges);
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n < 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph::from_edges(n, edges);
}

// Both endpoints of a greedy maximal matching over a seed-shuffled edge
// order. Always a vertex cover, at most twice the minimum size.
inline VertexSet matching_cover(const Graph& g, std::uint64_t seed) {
    auto edges = g.edges();
    std::mt19937_64 rng(seed);
    // Fisher-Yates with raw words; std::shuffle's draw pattern is not pinned
    // by the standard.
    for (std::size_t i = edges.size(); i > 1; --i)
        std::swap(edges[i - 1], edges[rng() % i]);
    std::vector<char> matched(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<Vertex> cover;
    for (auto [u, v] : edges) {
        if (matched[static_cast<std::size_t>(u)] || matched[static_cast<std::size_t>(v)])
            continue;
        matched[static_cast<std::size_t>(u)] = 1;
        matched[static_cast<std::size_t>(v)] = 1;
        cover.push_back(u);
        cover.push_back(v);
    }
    return VertexSet::from(std::move(cover));
}

}  // namespace lsvc
