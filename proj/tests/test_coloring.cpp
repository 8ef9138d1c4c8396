#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "lsvc/lsvc.hpp"
#include "testutil.hpp"

using namespace lsvc;

TEST_CASE("repetition schedules") {
    REQUIRE(default_repetitions(0) == 1);
    REQUIRE(default_repetitions(1) == 2);
    REQUIRE(default_repetitions(10) == 1024);
    REQUIRE(default_repetitions(62) == (std::uint64_t{1} << 62));
    REQUIRE_THROWS_AS(default_repetitions(63), std::length_error);

    // ceil(2^t ln(1/delta))
    REQUIRE(repetitions_for_failure_bound(4, 0.25) == 23);
    REQUIRE(repetitions_for_failure_bound(4, 0.01) == 74);
    REQUIRE(repetitions_for_failure_bound(0, 0.5) == 1);
    REQUIRE(repetitions_for_failure_bound(3, 1e-6) >= repetitions_for_failure_bound(3, 1e-3));
    REQUIRE_THROWS_AS(repetitions_for_failure_bound(2, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(repetitions_for_failure_bound(2, 1.5), std::invalid_argument);
}

TEST_CASE("random families are reproducible") {
    ColoringFamily f1 = random_family(10, 3, 20, 77);
    ColoringFamily f2 = random_family(10, 3, 20, 77);
    REQUIRE(f1.colorings.size() == 20);
    REQUIRE(f1.ground_size == 10);
    REQUIRE(f1.parameter_t == 3);
    REQUIRE(f1.mode == FamilyMode::Randomized);
    REQUIRE(f1.colorings == f2.colorings);

    ColoringFamily f3 = random_family(10, 3, 20, 78);
    REQUIRE(f1.colorings != f3.colorings);

    for (const auto& c : f1.colorings) {
        REQUIRE(c.labels.size() == 10);
        for (auto label : c.labels) REQUIRE((label == 0 || label == 1));
    }

    REQUIRE_THROWS_AS(random_family(3, 4, 8, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(random_family(3, 2, 0, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(random_family(3, -1, 8, 0), std::invalid_argument);
}

TEST_CASE("random family hit rate near the schedule's target") {
    // With t=4 and the default 16 repetitions, a fixed 4-set/pattern pair is
    // hit with probability 1-(15/16)^16 ~= 0.6439. Frequency over 2000 seeds
    // must land inside a 5-point band.
    const int n = 16, t = 4;
    const std::uint64_t reps = default_repetitions(t);
    const std::size_t positions[4] = {1, 5, 6, 12};
    const std::uint8_t want[4] = {1, 0, 1, 1};
    int hits = 0;
    const int trials = 2000;
    for (int seed = 0; seed < trials; ++seed) {
        ColoringFamily f = random_family(n, t, reps, static_cast<std::uint64_t>(seed));
        bool hit = false;
        for (const auto& c : f.colorings) {
            bool all = true;
            for (int i = 0; i < 4 && all; ++i) all = c.labels[positions[i]] == want[i];
            if (all) {
                hit = true;
                break;
            }
        }
        if (hit) ++hits;
    }
    double freq = static_cast<double>(hits) / trials;
    REQUIRE(freq >= 0.6439 - 0.05);
    REQUIRE(freq <= 0.6439 + 0.05);
}

TEST_CASE("trivial universal families") {
    ColoringFamily f0 = universal_family(5, 0);
    REQUIRE(f0.colorings.size() == 1);

    ColoringFamily f1 = universal_family(8, 1);
    REQUIRE(f1.colorings.size() == 2);
    REQUIRE(f1.colorings[0].labels == std::vector<std::uint8_t>(8, 0));
    REQUIRE(f1.colorings[1].labels == std::vector<std::uint8_t>(8, 1));

    ColoringFamily cube = universal_family(3, 3);
    REQUIRE(cube.colorings.size() == 8);
    std::set<std::vector<std::uint8_t>> distinct;
    for (const auto& c : cube.colorings) distinct.insert(c.labels);
    REQUIRE(distinct.size() == 8);

    REQUIRE_THROWS_AS(universal_family(3, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(universal_family(-1, 0), std::invalid_argument);
}

TEST_CASE("universal families cover every pattern on small grounds") {
    for (int n = 1; n <= 10; ++n) {
        for (int t = 0; t <= std::min(n, 4); ++t) {
            ColoringFamily f = universal_family(n, t);
            REQUIRE(f.mode == FamilyMode::Universal);
            INFO("n=" << n << " t=" << t << " size=" << f.colorings.size());
            REQUIRE(is_universal(f.colorings, n, t));
            REQUIRE(testutil::universal_by_definition(f.colorings, n, t));
        }
    }
}

TEST_CASE("universality for t extends below t") {
    ColoringFamily f = universal_family(9, 4);
    REQUIRE(is_universal(f.colorings, 9, 3));
    REQUIRE(is_universal(f.colorings, 9, 2));
}

TEST_CASE("universality checker rejects gaps") {
    // the full cube hits every pattern exactly once, so one missing
    // coloring is a guaranteed gap
    ColoringFamily cube = universal_family(3, 3);
    REQUIRE(cube.colorings.size() == 8);
    std::vector<Coloring> broken(cube.colorings.begin() + 1, cube.colorings.end());
    REQUIRE(!is_universal(broken, 3, 3));
    REQUIRE(!testutil::universal_by_definition(broken, 3, 3));
}

TEST_CASE("splitter construction splits every subset") {
    auto maps = detail::build_splitter(12, 3);
    REQUIRE(maps.has_value());
    REQUIRE(detail::verify_splitter(12, 3, *maps));
    // each map assigns one of t buckets per element
    for (const auto& m : *maps) {
        REQUIRE(m.size() == 12);
        for (auto bucket : m) REQUIRE(bucket < 3);
    }
}

TEST_CASE("mid-size grounds go through the splitter route") {
    // 40 choose 3 is under the subset budget, the cube is unavailable past 30
    // positions, so the splitter handles this size; verify exhaustively.
    ColoringFamily f = universal_family(40, 3);
    REQUIRE(f.ground_size == 40);
    REQUIRE(testutil::universal_by_definition(f.colorings, 40, 3));
    // far smaller than the 2^40 cube
    REQUIRE(f.colorings.size() < 20000);
}

TEST_CASE("prime composition route is universal") {
    // 60 choose 3 stays verifiable; call the route directly.
    ColoringFamily f = detail::fks_family(60, 3);
    REQUIRE(testutil::universal_by_definition(f.colorings, 60, 3));
}

TEST_CASE("large grounds fall back to prime composition") {
    // 300 choose 3 exceeds the splitter budget; spot-check coverage on
    // sampled position triples.
    ColoringFamily f = universal_family(300, 3);
    REQUIRE(f.mode == FamilyMode::Universal);
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 400; ++trial) {
        std::set<std::size_t> pos_set;
        while (pos_set.size() < 3) pos_set.insert(static_cast<std::size_t>(rng() % 300));
        std::vector<std::size_t> pos(pos_set.begin(), pos_set.end());
        std::set<int> patterns;
        for (const auto& c : f.colorings) {
            patterns.insert(c.labels[pos[0]] << 2 | c.labels[pos[1]] << 1 | c.labels[pos[2]]);
            if (patterns.size() == 8) break;
        }
        REQUIRE(patterns.size() == 8);
    }
}

TEST_CASE("construction is deterministic") {
    ColoringFamily a = universal_family(40, 3);
    ColoringFamily b = universal_family(40, 3);
    REQUIRE(a.colorings == b.colorings);
}

TEST_CASE("oversized requests are refused") {
    REQUIRE_THROWS_AS(universal_family(1000000, 10), std::length_error);
    REQUIRE_THROWS_AS(universal_family(22, 22), std::length_error);
    // full cube at the edge still works
    ColoringFamily f = universal_family(16, 16);
    REQUIRE(f.colorings.size() == 65536);
}

TEST_CASE("family serialization round trip") {
    ColoringFamily f = random_family(9, 3, 12, 5);
    std::ostringstream out;
    write_family(out, f.colorings);
    std::istringstream in(out.str());
    std::vector<Coloring> back = read_family(in);
    REQUIRE(back == f.colorings);

    std::istringstream bad("0101\n01x1\n");
    REQUIRE_THROWS_AS(read_family(bad), std::runtime_error);
    std::istringstream ragged("0101\n011\n");
    REQUIRE_THROWS_AS(read_family(ragged), std::runtime_error);
}
