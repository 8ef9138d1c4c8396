// Command-line front end: solve (strict or permissive engines), reduce,
// check, and gen subcommands over DIMACS graphs and vertex-set files.
// Reports are line-oriented `key value` pairs. Exit codes: 0 success /
// improvement / pass, 1 no improvement / fail, 2 input or usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "lsvc/lsvc.hpp"

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

void report(const std::string& key, const std::string& value) {
    std::cout << key << ' ' << value << '\n';
}

void report(const std::string& key, long long value) {
    std::cout << key << ' ' << value << '\n';
}

void report_set(const std::string& key, const lsvc::VertexSet& s) {
    std::cout << key;
    for (lsvc::Vertex v : s) std::cout << ' ' << v + 1;
    std::cout << '\n';
}

const char* mode_name(lsvc::FamilyMode mode) {
    return mode == lsvc::FamilyMode::Universal ? "universal" : "randomized";
}

struct SolveOptions {
    std::string graph_path;
    std::string cover_path;
    std::string out_path;
    int k = 1;
    std::string engine = "permissive";
    std::string beta = "auto";
    std::string mode = "auto";
    std::uint64_t seed = 0;
    std::optional<double> delta;
    int threads = 1;
    bool iterate = false;
};

int resolve_beta(const lsvc::Graph& g, const std::string& request) {
    if (request != "auto") {
        int beta = std::stoi(request);
        if (beta < 0) throw std::invalid_argument("--beta must be non-negative");
        return beta;
    }
    int max_degree = 0;
    for (lsvc::Vertex v = 0; v < g.vertex_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    for (int beta = 0; beta <= max_degree; ++beta)
        if (lsvc::certify_separability(g, beta)) return beta;
    return max_degree;  // unreachable: beta = max degree always certifies
}

lsvc::FamilyMode resolve_mode(const std::string& request, int q) {
    if (request == "universal") return lsvc::FamilyMode::Universal;
    if (request == "randomized") return lsvc::FamilyMode::Randomized;
    return q <= 16 ? lsvc::FamilyMode::Universal : lsvc::FamilyMode::Randomized;
}

int run_solve(const SolveOptions& opt) {
    lsvc::Graph g = lsvc::read_dimacs_file(opt.graph_path);
    lsvc::VertexSet cover = lsvc::read_vertex_set_file(opt.cover_path);

    report("command", "solve");
    report("graph", opt.graph_path);
    report("n", g.vertex_count());
    report("m", static_cast<long long>(g.edge_count()));
    report("cover_size", static_cast<long long>(cover.size()));
    report("k", opt.k);
    report("engine", opt.engine);

    const auto start = Clock::now();
    bool improved_any = false;
    long long iterations = 0;

    if (opt.engine == "strict") {
        while (true) {
            lsvc::CoverInstance inst = lsvc::CoverInstance::create(g, cover, opt.k);
            auto res = lsvc::strict_search(inst);
            if (!res) break;
            cover = *res;
            improved_any = true;
            ++iterations;
            report("iteration_cover_size", static_cast<long long>(cover.size()));
            if (!opt.iterate) break;
        }
    } else {
        const int beta = resolve_beta(g, opt.beta);
        const long long q = static_cast<long long>(opt.k) +
                            static_cast<long long>(beta) * opt.k;
        lsvc::FamilyMode mode = resolve_mode(opt.mode, static_cast<int>(q));
        report("beta", beta);
        report("mode", mode_name(mode));
        report("seed", static_cast<long long>(opt.seed));
        bool reported_family = false;
        while (true) {
            lsvc::CoverInstance inst = lsvc::CoverInstance::create(g, cover, opt.k);
            lsvc::PermissiveOutcome outcome = [&] {
                // auto mode prefers the deterministic family but falls back
                // when no construction fits the size caps (large covers)
                if (opt.mode == "auto" && mode == lsvc::FamilyMode::Universal) {
                    try {
                        return lsvc::permissive_search(inst, beta, mode, opt.seed,
                                                       opt.delta, opt.threads);
                    } catch (const std::length_error&) {
                        mode = lsvc::FamilyMode::Randomized;
                        report("mode", mode_name(mode));
                        report("mode_fallback", "universal family exceeds size caps");
                    }
                }
                return lsvc::permissive_search(inst, beta, mode, opt.seed, opt.delta,
                                               opt.threads);
            }();
            const lsvc::FamilyParams& params =
                std::holds_alternative<lsvc::ImprovedCover>(outcome)
                    ? std::get<lsvc::ImprovedCover>(outcome).params
                    : std::get<lsvc::NoImprovementWithinK>(outcome).params;
            if (!reported_family) {
                report("q", params.q);
                report("t", params.t);
                report("family_size", static_cast<long long>(params.family_size));
                report("candidates", static_cast<long long>(params.candidate_count));
                reported_family = true;
            }
            if (auto* win = std::get_if<lsvc::ImprovedCover>(&outcome)) {
                cover = win->cover;
                improved_any = true;
                ++iterations;
                report("iteration_cover_size", static_cast<long long>(cover.size()));
                if (!opt.iterate) {
                    report("candidate_index", static_cast<long long>(win->candidate_index));
                    report_set("witness_w", win->witness_w);
                    report_set("witness_q", win->witness_q);
                    break;
                }
            } else {
                auto& none = std::get<lsvc::NoImprovementWithinK>(outcome);
                if (!improved_any) report("probabilistic", none.probabilistic ? 1 : 0);
                break;
            }
        }
    }

    report("iterations", iterations);
    report("outcome", improved_any ? "improved" : "none");
    if (improved_any) {
        report("new_cover_size", static_cast<long long>(cover.size()));
        report_set("new_cover", cover);
        if (!opt.out_path.empty()) lsvc::write_vertex_set_file(opt.out_path, cover);
    }
    report("wall_ms", elapsed_ms(start));
    return improved_any ? 0 : 1;
}

void write_graph_with_header(const std::string& path, const lsvc::Graph& g,
                             const std::vector<std::pair<std::string, long long>>& header) {
    std::ofstream out(path);
    if (!out) throw lsvc::IoError("cannot open " + path + " for writing");
    for (const auto& [key, value] : header) out << "c " << key << ' ' << value << '\n';
    lsvc::write_dimacs(out, g);
}

struct ReduceOptions {
    std::string graph_path;
    std::string a_side_path;
    int k = 4;
    std::string out_graph;
    std::string out_a;
    std::string out_b;
    std::string out_cover;
};

int run_reduce_clique(const ReduceOptions& opt, bool subdivided) {
    lsvc::Graph g = lsvc::read_dimacs_file(opt.graph_path);
    lsvc::CliqueInstance ci = lsvc::CliqueInstance::create(std::move(g), opt.k);
    lsvc::HallInstance out =
        subdivided ? lsvc::clique_to_hallset_2subdivided(ci) : lsvc::clique_to_hallset(ci);
    const long long t = static_cast<long long>(opt.k) * (opt.k - 1) / 2 - opt.k - 1;
    report("command", subdivided ? "reduce clique-to-hallset-2sub" : "reduce clique-to-hallset");
    report("k", opt.k);
    report("k_prime", out.k);
    report("t", t);
    report("n", out.bg.underlying.vertex_count());
    report("m", static_cast<long long>(out.bg.underlying.edge_count()));
    report("a_size", static_cast<long long>(out.bg.a.size()));
    report("b_size", static_cast<long long>(out.bg.b.size()));
    write_graph_with_header(opt.out_graph, out.bg.underlying,
                            {{"k", opt.k}, {"k_prime", out.k}, {"t", t}});
    if (!opt.out_a.empty()) lsvc::write_vertex_set_file(opt.out_a, out.bg.a);
    if (!opt.out_b.empty()) lsvc::write_vertex_set_file(opt.out_b, out.bg.b);
    return 0;
}

int run_reduce_hallset(const ReduceOptions& opt) {
    lsvc::Graph g = lsvc::read_dimacs_file(opt.graph_path);
    lsvc::VertexSet a = lsvc::read_vertex_set_file(opt.a_side_path);
    std::vector<lsvc::Vertex> rest;
    for (lsvc::Vertex v = 0; v < g.vertex_count(); ++v)
        if (!a.contains(v)) rest.push_back(v);
    lsvc::BipartiteGraph bg = lsvc::BipartiteGraph::create(
        std::move(g), a, lsvc::VertexSet::from(std::move(rest)));
    lsvc::HallInstance hi = lsvc::HallInstance::create(std::move(bg), opt.k);
    lsvc::CoverInstance out = lsvc::hallset_to_lsvc(hi);
    report("command", "reduce hallset-to-lsvc");
    report("k", opt.k);
    report("k_prime", out.k);
    report("n", out.graph.vertex_count());
    report("cover_size", static_cast<long long>(out.cover.size()));
    write_graph_with_header(opt.out_graph, out.graph, {{"k_prime", out.k}});
    if (!opt.out_cover.empty()) lsvc::write_vertex_set_file(opt.out_cover, out.cover);
    return 0;
}

int run_reduce_subdivide(const ReduceOptions& opt) {
    lsvc::Graph g = lsvc::read_dimacs_file(opt.graph_path);
    lsvc::SubdivisionShift out = lsvc::vc_subdivision_shift(g);
    report("command", "reduce subdivide");
    report("n", out.graph.vertex_count());
    report("m", static_cast<long long>(out.graph.edge_count()));
    report("shift", out.shift);
    write_graph_with_header(opt.out_graph, out.graph, {{"shift", out.shift}});
    return 0;
}

struct CheckOptions {
    std::string graph_path;
    std::string cover_path;
    std::string a_side_path;
    std::string witness_path;
    int beta = 0;
    int k = 1;
};

int run_check_separability(const CheckOptions& opt) {
    lsvc::Graph g = lsvc::read_dimacs_file(opt.graph_path);
    report("command", "check separability");
    report("beta", opt.beta);
    auto cert = lsvc::certify_separability(g, opt.beta);
    if (!cert) {
        report("result", "fail");
        report("reason", "no bipartition certifies the bound");
        return 1;
    }
    report("result", "pass");
    report("v1_size", static_cast<long long>(cert->v1.size()));
    report("v2_size", static_cast<long long>(cert->v2.size()));
    return 0;
}

int run_check_cover(const CheckOptions& opt) {
    lsvc::Graph g = lsvc::read_dimacs_file(opt.graph_path);
    lsvc::VertexSet s = lsvc::read_vertex_set_file(opt.cover_path);
    report("command", "check cover");
    const bool ok = lsvc::is_vertex_cover(g, s);
    report("result", ok ? "pass" : "fail");
    if (!ok) report("reason", "an edge has no endpoint in the set");
    return ok ? 0 : 1;
}

int run_check_hall_witness(const CheckOptions& opt) {
    lsvc::Graph g = lsvc::read_dimacs_file(opt.graph_path);
    lsvc::VertexSet a = lsvc::read_vertex_set_file(opt.a_side_path);
    lsvc::VertexSet w = lsvc::read_vertex_set_file(opt.witness_path);
    report("command", "check hall-witness");
    if (!lsvc::set_difference_of(w, a).empty()) {
        report("result", "fail");
        report("reason", "witness not contained in the A side");
        return 1;
    }
    lsvc::VertexSet nbhd = lsvc::neighborhood(g, w, 1, false);
    report("witness_size", static_cast<long long>(w.size()));
    report("neighborhood_size", static_cast<long long>(nbhd.size()));
    const bool ok = !w.empty() && nbhd.size() < w.size();
    report("result", ok ? "pass" : "fail");
    if (!ok) report("reason", "neighborhood is not smaller than the witness");
    return ok ? 0 : 1;
}

int run_check_structural(const CheckOptions& opt) {
    lsvc::Graph g = lsvc::read_dimacs_file(opt.graph_path);
    lsvc::VertexSet s = lsvc::read_vertex_set_file(opt.cover_path);
    lsvc::VertexSet s_star = lsvc::read_vertex_set_file(opt.witness_path);
    report("command", "check structural-witness");
    if (!lsvc::is_vertex_cover(g, s))
        throw std::invalid_argument("the provided set is not a vertex cover");
    if (!lsvc::is_independent_set(g, s_star)) {
        report("result", "fail");
        report("reason", "witness is not independent");
        return 1;
    }
    lsvc::VertexSet outside =
        lsvc::set_difference_of(lsvc::neighborhood(g, s_star, 1, false), s);
    report("witness_size", static_cast<long long>(s_star.size()));
    report("outside_neighbors", static_cast<long long>(outside.size()));
    const bool ok = lsvc::check_structural_witness(g, s, opt.k, s_star);
    report("result", ok ? "pass" : "fail");
    if (!ok)
        report("reason", outside.size() >= s_star.size()
                             ? "outside neighborhood not smaller than witness"
                             : "exchange exceeds the distance budget");
    return ok ? 0 : 1;
}

struct GenOptions {
    int n = 1;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string graph_path;
    std::string out;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex cover local search toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "Search for a smaller vertex cover");
    solve->add_option("--graph", solve_opt.graph_path, "DIMACS graph file")->required();
    solve->add_option("--cover", solve_opt.cover_path, "vertex cover file")->required();
    solve->add_option("-k,--k", solve_opt.k, "exchange budget")->required();
    solve->add_option("--engine", solve_opt.engine, "strict or permissive")
        ->check(CLI::IsMember({"strict", "permissive"}))
        ->capture_default_str();
    solve->add_option("--beta", solve_opt.beta, "separability bound or 'auto'")
        ->capture_default_str();
    solve->add_option("--mode", solve_opt.mode, "universal, randomized, or auto")
        ->check(CLI::IsMember({"universal", "randomized", "auto"}))
        ->capture_default_str();
    solve->add_option("--seed", solve_opt.seed, "seed for randomized mode")
        ->capture_default_str();
    double delta_value = 0.0;
    CLI::Option* delta_opt =
        solve->add_option("--delta", delta_value, "failure bound for randomized mode");
    solve->add_option("--threads", solve_opt.threads, "candidate scan threads")
        ->capture_default_str();
    solve->add_flag("--iterate", solve_opt.iterate, "repeat until no improvement");
    solve->add_option("--out", solve_opt.out_path, "write the improved cover here");
    solve->callback([&]() {
        if (*delta_opt) solve_opt.delta = delta_value;
        exit_code = run_solve(solve_opt);
    });

    CLI::App* reduce = app.add_subcommand("reduce", "Instance transformations");
    reduce->require_subcommand(1);
    ReduceOptions reduce_opt;
    {
        CLI::App* c = reduce->add_subcommand("clique-to-hallset",
                                             "clique instance to Hall-set instance");
        c->add_option("--graph", reduce_opt.graph_path)->required();
        c->add_option("-k,--k", reduce_opt.k)->required();
        c->add_option("--out-graph", reduce_opt.out_graph)->required();
        c->add_option("--out-a", reduce_opt.out_a);
        c->add_option("--out-b", reduce_opt.out_b);
        c->callback([&]() { exit_code = run_reduce_clique(reduce_opt, false); });
    }
    {
        CLI::App* c = reduce->add_subcommand(
            "clique-to-hallset-2sub", "clique instance to 2-subdivided Hall-set instance");
        c->add_option("--graph", reduce_opt.graph_path)->required();
        c->add_option("-k,--k", reduce_opt.k)->required();
        c->add_option("--out-graph", reduce_opt.out_graph)->required();
        c->add_option("--out-a", reduce_opt.out_a);
        c->add_option("--out-b", reduce_opt.out_b);
        c->callback([&]() { exit_code = run_reduce_clique(reduce_opt, true); });
    }
    {
        CLI::App* c = reduce->add_subcommand("hallset-to-lsvc",
                                             "Hall-set instance to cover-search instance");
        c->add_option("--graph", reduce_opt.graph_path)->required();
        c->add_option("--a-side", reduce_opt.a_side_path)->required();
        c->add_option("-k,--k", reduce_opt.k)->required();
        c->add_option("--out-graph", reduce_opt.out_graph)->required();
        c->add_option("--out-cover", reduce_opt.out_cover);
        c->callback([&]() { exit_code = run_reduce_hallset(reduce_opt); });
    }
    {
        CLI::App* c = reduce->add_subcommand("subdivide", "replace edges by length-3 paths");
        c->add_option("--graph", reduce_opt.graph_path)->required();
        c->add_option("--out-graph", reduce_opt.out_graph)->required();
        c->callback([&]() { exit_code = run_reduce_subdivide(reduce_opt); });
    }

    CLI::App* check = app.add_subcommand("check", "Validators");
    check->require_subcommand(1);
    CheckOptions check_opt;
    {
        CLI::App* c = check->add_subcommand("separability", "certify the separability bound");
        c->add_option("--graph", check_opt.graph_path)->required();
        c->add_option("--beta", check_opt.beta)->required();
        c->callback([&]() { exit_code = run_check_separability(check_opt); });
    }
    {
        CLI::App* c = check->add_subcommand("cover", "verify a vertex cover");
        c->add_option("--graph", check_opt.graph_path)->required();
        c->add_option("--cover", check_opt.cover_path)->required();
        c->callback([&]() { exit_code = run_check_cover(check_opt); });
    }
    {
        CLI::App* c = check->add_subcommand("hall-witness", "verify |N(W)| < |W|");
        c->add_option("--graph", check_opt.graph_path)->required();
        c->add_option("--a-side", check_opt.a_side_path)->required();
        c->add_option("--witness", check_opt.witness_path)->required();
        c->callback([&]() { exit_code = run_check_hall_witness(check_opt); });
    }
    {
        CLI::App* c = check->add_subcommand("structural-witness",
                                            "verify the three exchange conditions");
        c->add_option("--graph", check_opt.graph_path)->required();
        c->add_option("--cover", check_opt.cover_path)->required();
        c->add_option("-k,--k", check_opt.k)->required();
        c->add_option("--witness", check_opt.witness_path)->required();
        c->callback([&]() { exit_code = run_check_structural(check_opt); });
    }

    CLI::App* gen = app.add_subcommand("gen", "Instance generators");
    gen->require_subcommand(1);
    GenOptions gen_opt;
    {
        CLI::App* c = gen->add_subcommand("random", "Erdos-Renyi G(n,p)");
        c->add_option("-n,--n", gen_opt.n)->required();
        c->add_option("-p,--p", gen_opt.p)->required();
        c->add_option("--seed", gen_opt.seed)->capture_default_str();
        c->add_option("--out", gen_opt.out)->required();
        c->callback([&]() {
            lsvc::write_dimacs_file(gen_opt.out,
                                    lsvc::random_graph(gen_opt.n, gen_opt.p, gen_opt.seed));
        });
    }
    {
        CLI::App* c = gen->add_subcommand("complete", "complete graph");
        c->add_option("-n,--n", gen_opt.n)->required();
        c->add_option("--out", gen_opt.out)->required();
        c->callback(
            [&]() { lsvc::write_dimacs_file(gen_opt.out, lsvc::complete_graph(gen_opt.n)); });
    }
    {
        CLI::App* c = gen->add_subcommand("cycle", "cycle graph");
        c->add_option("-n,--n", gen_opt.n)->required();
        c->add_option("--out", gen_opt.out)->required();
        c->callback(
            [&]() { lsvc::write_dimacs_file(gen_opt.out, lsvc::cycle_graph(gen_opt.n)); });
    }
    {
        CLI::App* c = gen->add_subcommand("path", "path graph");
        c->add_option("-n,--n", gen_opt.n)->required();
        c->add_option("--out", gen_opt.out)->required();
        c->callback(
            [&]() { lsvc::write_dimacs_file(gen_opt.out, lsvc::path_graph(gen_opt.n)); });
    }
    {
        CLI::App* c = gen->add_subcommand("cover", "matching-based vertex cover");
        c->add_option("--graph", gen_opt.graph_path)->required();
        c->add_option("--seed", gen_opt.seed)->capture_default_str();
        c->add_option("--out", gen_opt.out)->required();
        c->callback([&]() {
            lsvc::Graph g = lsvc::read_dimacs_file(gen_opt.graph_path);
            lsvc::write_vertex_set_file(gen_opt.out, lsvc::matching_cover(g, gen_opt.seed));
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
