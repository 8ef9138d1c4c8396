#pragma once

// Hopcroft-Karp maximum matching on bipartite graphs and extraction of
// Hall-condition violators (deficiency sets).

#include <limits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "lsvc/graph.hpp"

namespace lsvc {

// Pairs are (a-side vertex, b-side vertex) in underlying-graph ids.
struct Matching {
    std::vector<std::pair<Vertex, Vertex>> pairs;

    std::size_t size() const { return pairs.size(); }
};

inline Matching maximum_matching(const BipartiteGraph& bg) {
    const Graph& g = bg.underlying;
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<Vertex> match(n, -1);
    std::vector<int> dist(n, 0);

    auto layer = [&]() -> bool {
        std::queue<Vertex> q;
        for (Vertex u : bg.a) {
            if (match[static_cast<std::size_t>(u)] == -1) {
                dist[static_cast<std::size_t>(u)] = 0;
                q.push(u);
            } else {
                dist[static_cast<std::size_t>(u)] = kInf;
            }
        }
        bool reachable_free = false;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                Vertex next = match[static_cast<std::size_t>(w)];
                if (next == -1) {
                    reachable_free = true;
                } else if (dist[static_cast<std::size_t>(next)] == kInf) {
                    dist[static_cast<std::size_t>(next)] =
                        dist[static_cast<std::size_t>(u)] + 1;
                    q.push(next);
                }
            }
        }
        return reachable_free;
    };

    auto augment = [&](auto&& self, Vertex u) -> bool {
        for (Vertex w : g.neighbors(u)) {
            Vertex next = match[static_cast<std::size_t>(w)];
            if (next == -1 ||
                (dist[static_cast<std::size_t>(next)] ==
                     dist[static_cast<std::size_t>(u)] + 1 &&
                 self(self, next))) {
                match[static_cast<std::size_t>(u)] = w;
                match[static_cast<std::size_t>(w)] = u;
                return true;
            }
        }
        dist[static_cast<std::size_t>(u)] = kInf;
        return false;
    };

    while (layer())
        for (Vertex u : bg.a)
            if (match[static_cast<std::size_t>(u)] == -1) augment(augment, u);

    Matching result;
    for (Vertex u : bg.a)
        if (match[static_cast<std::size_t>(u)] != -1)
            result.pairs.emplace_back(u, match[static_cast<std::size_t>(u)]);
    return result;
}

enum class Side { A, B };

// If some matching saturates the chosen part, returns nullopt. Otherwise
// returns W: the unmatched vertices of that part closed under
// alternating-path reachability. Every neighbor of W is then matched to a
// distinct W-vertex, so |N(W)| = |W| - (#unmatched) < |W|.
inline std::optional<VertexSet> find_hall_violator(const BipartiteGraph& bg, Side side) {
    const Graph& g = bg.underlying;
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    const VertexSet& part = (side == Side::A) ? bg.a : bg.b;

    // maximum_matching treats bg.a as the augmenting side; matched status is
    // symmetric, so reuse it for either part.
    Matching m = maximum_matching(bg);
    std::vector<Vertex> match(n, -1);
    for (auto [u, w] : m.pairs) {
        match[static_cast<std::size_t>(u)] = w;
        match[static_cast<std::size_t>(w)] = u;
    }

    std::vector<char> in_closure(n, 0);
    std::queue<Vertex> q;
    for (Vertex u : part) {
        if (match[static_cast<std::size_t>(u)] == -1) {
            in_closure[static_cast<std::size_t>(u)] = 1;
            q.push(u);
        }
    }
    if (q.empty()) return std::nullopt;

    std::vector<char> seen_other(n, 0);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (seen_other[static_cast<std::size_t>(w)]) continue;
            seen_other[static_cast<std::size_t>(w)] = 1;
            Vertex back = match[static_cast<std::size_t>(w)];
            // back == -1 would mean an augmenting path past a maximum
            // matching; cannot happen.
            if (back != -1 && !in_closure[static_cast<std::size_t>(back)]) {
                in_closure[static_cast<std::size_t>(back)] = 1;
                q.push(back);
            }
        }
    }

    std::vector<Vertex> w_ids;
    for (Vertex u : part)
        if (in_closure[static_cast<std::size_t>(u)]) w_ids.push_back(u);
    return VertexSet::from(std::move(w_ids));
}

}  // namespace lsvc
