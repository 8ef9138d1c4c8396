#pragma once

// DIMACS edge-format graphs and whitespace-separated vertex-set files.
// Vertex ids are 1-based on disk and 0-based in memory.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lsvc/graph.hpp"

namespace lsvc {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts `c` comment lines, one `p edge n m` line, and `e u v` lines.
// Parallel edges collapse silently; self-loops and ids outside 1..n are
// errors. The declared edge count is checked against distinct edges read.
inline Graph read_dimacs(std::istream& in, const std::string& origin = "<stream>") {
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw IoError(origin + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (n != -1) fail("duplicate problem line");
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0 || declared_m < 0)
                fail("malformed problem line, expected 'p edge n m'");
            continue;
        }
        if (tag == "e") {
            long u, v;
            if (n == -1) fail("edge before problem line");
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 1 || v < 1 || u > n || v > n)
                fail("edge endpoint outside 1.." + std::to_string(n));
            if (u == v) fail("self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            continue;
        }
        fail("unrecognized line tag '" + tag + "'");
    }
    if (n == -1) {
        lineno = 0;
        fail("missing problem line");
    }
    Graph g = Graph::from_edges(n, edges);
    if (static_cast<long>(g.edge_count()) != declared_m) {
        lineno = 0;
        fail("problem line declares " + std::to_string(declared_m) + " edges, found " +
             std::to_string(g.edge_count()) + " distinct");
    }
    return g;
}

inline Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_dimacs(in, path);
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline void write_dimacs_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_dimacs(out, g);
}

// Vertex-set files hold whitespace-separated 1-based ids; duplicates collapse.
inline VertexSet read_vertex_set(std::istream& in, const std::string& origin = "<stream>") {
    std::vector<Vertex> ids;
    long v;
    while (in >> v) {
        if (v < 1) throw IoError(origin + ": vertex id " + std::to_string(v) + " < 1");
        ids.push_back(static_cast<Vertex>(v - 1));
    }
    if (!in.eof()) throw IoError(origin + ": non-numeric token in vertex set");
    return VertexSet::from(std::move(ids));
}

inline VertexSet read_vertex_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_vertex_set(in, path);
}

inline void write_vertex_set(std::ostream& out, const VertexSet& s) {
    bool first = true;
    for (Vertex v : s) {
        if (!first) out << ' ';
        out << v + 1;
        first = false;
    }
    out << '\n';
}

inline void write_vertex_set_file(const std::string& path, const VertexSet& s) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_vertex_set(out, s);
}

}  // namespace lsvc
