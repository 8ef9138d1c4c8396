#pragma once

// 0/1 coloring families over a ground set {0..n-1}: seeded random families
// with boosting, and deterministic (n,t)-universal families. A family is
// (n,t)-universal when its restriction to any t-subset of positions realizes
// all 2^t patterns.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lsvc {

struct Coloring {
    std::vector<std::uint8_t> labels;  // one {0,1} value per ground position

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class FamilyMode { Randomized, Universal };

struct ColoringFamily {
    int ground_size = 0;
    int parameter_t = 0;
    FamilyMode mode = FamilyMode::Universal;
    std::uint64_t seed = 0;         // randomized mode only
    std::uint64_t repetitions = 0;  // randomized mode only
    std::uint64_t size_bound = 0;   // loose size bound recorded at construction
    std::vector<Coloring> colorings;
};

inline std::uint64_t default_repetitions(int t) {
    if (t < 0) throw std::invalid_argument("default_repetitions: t < 0");
    if (t >= 63)
        throw std::length_error("default_repetitions: 2^t does not fit in 64 bits");
    return std::uint64_t{1} << t;
}

// Smallest repetition count with miss probability (1 - 2^-t)^reps <= delta,
// bounded by the standard (1-x) <= e^-x estimate: ceil(2^t * ln(1/delta)).
inline std::uint64_t repetitions_for_failure_bound(int t, double delta) {
    if (t < 0 || t >= 50)
        throw std::invalid_argument("repetitions_for_failure_bound: t out of range");
    if (!(delta > 0.0 && delta < 1.0))
        throw std::invalid_argument("repetitions_for_failure_bound: delta outside (0,1)");
    double reps = std::ceil(std::ldexp(1.0, t) * std::log(1.0 / delta));
    return static_cast<std::uint64_t>(reps);
}

// `repetitions` independent uniform colorings. Draw order is pinned (one
// engine word per label, coloring-major) so families are bit-identical across
// platforms for a fixed seed.
inline ColoringFamily random_family(int n, int t, std::uint64_t repetitions,
                                    std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_family: n < 0");
    if (t < 0 || t > n) throw std::invalid_argument("random_family: t outside 0..n");
    if (repetitions == 0) throw std::invalid_argument("random_family: zero repetitions");
    ColoringFamily fam;
    fam.ground_size = n;
    fam.parameter_t = t;
    fam.mode = FamilyMode::Randomized;
    fam.seed = seed;
    fam.repetitions = repetitions;
    fam.size_bound = repetitions;
    std::mt19937_64 rng(seed);
    fam.colorings.reserve(repetitions);
    for (std::uint64_t r = 0; r < repetitions; ++r) {
        Coloring c;
        c.labels.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            c.labels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rng() & 1);
        fam.colorings.push_back(std::move(c));
    }
    return fam;
}

inline ColoringFamily universal_family(int n, int t);

namespace detail {

constexpr std::uint64_t kSubsetBudget = 2'000'000;     // t-subsets enumerable
constexpr std::uint64_t kMaxColorings = 4'000'000;     // family length cap
constexpr std::uint64_t kMaxFamilyBytes = 256ull << 20;  // label storage cap
constexpr std::uint64_t kSplitterSeed = 0x9e3779b97f4a7c15ull;

inline std::uint64_t binomial_capped(int n, int t, std::uint64_t cap) {
    if (t < 0 || t > n) return 0;
    int tt = std::min(t, n - t);
    unsigned __int128 c = 1;
    for (int i = 1; i <= tt; ++i) {
        c = c * static_cast<unsigned>(n - tt + i) / static_cast<unsigned>(i);
        if (c > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(c);
}

// Calls fn(idx) for every sorted t-subset idx of {0..n-1}; aborts when fn
// returns false.
template <class F>
inline void for_each_subset(int n, int t, F&& fn) {
    if (t > n) return;
    std::vector<int> idx(static_cast<std::size_t>(t));
    std::iota(idx.begin(), idx.end(), 0);
    if (t == 0) {
        fn(idx);
        return;
    }
    while (true) {
        if (!fn(idx)) return;
        int i = t - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline long long next_prime(long long x) {
    while (!is_prime(x)) ++x;
    return x;
}

// Probability a uniform map [t buckets] is injective on a fixed t-subset.
inline double split_probability(int t) {
    double p = 1.0;
    for (int i = 1; i <= t; ++i) p *= static_cast<double>(i) / t;
    return p;
}

// Sequentially draws random maps {0..n-1} -> {0..t-1}, keeping each map that
// makes at least one still-unsplit t-subset injective, until every t-subset
// is split by some kept map. Deterministic: fixed internal seed.
inline std::optional<std::vector<std::vector<std::uint8_t>>> build_splitter(int n, int t) {
    std::uint64_t count64 = binomial_capped(n, t, kSubsetBudget);
    if (count64 == 0 || count64 > kSubsetBudget) return std::nullopt;
    std::vector<std::uint16_t> subs;
    subs.reserve(static_cast<std::size_t>(count64) * static_cast<std::size_t>(t));
    for_each_subset(n, t, [&](const std::vector<int>& s) {
        for (int x : s) subs.push_back(static_cast<std::uint16_t>(x));
        return true;
    });
    const std::size_t count = subs.size() / static_cast<std::size_t>(t);
    std::vector<std::uint32_t> active(count);
    std::iota(active.begin(), active.end(), 0u);

    const double prob = split_probability(t);
    const double est_maps = std::log(static_cast<double>(count) + 2.0) / prob + 8.0;
    const std::size_t max_tries =
        1000 + static_cast<std::size_t>(10.0 * est_maps + 60.0 / prob);

    std::vector<std::vector<std::uint8_t>> maps;
    std::mt19937_64 rng(kSplitterSeed);
    std::vector<std::uint64_t> mark(static_cast<std::size_t>(t), 0);
    std::uint64_t epoch = 0;
    std::vector<std::uint8_t> h(static_cast<std::size_t>(n));
    std::size_t tries = 0;
    while (!active.empty()) {
        if (++tries > max_tries) return std::nullopt;
        for (int i = 0; i < n; ++i)
            h[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(rng() % static_cast<std::uint64_t>(t));
        std::size_t kept = 0;
        bool useful = false;
        for (std::uint32_t idx : active) {
            const std::uint16_t* s = subs.data() + static_cast<std::size_t>(idx) * t;
            ++epoch;
            bool injective = true;
            for (int j = 0; j < t; ++j) {
                std::uint8_t b = h[s[j]];
                if (mark[b] == epoch) {
                    injective = false;
                    break;
                }
                mark[b] = epoch;
            }
            if (injective)
                useful = true;
            else
                active[kept++] = idx;
        }
        active.resize(kept);
        if (useful) maps.push_back(h);
    }
    return maps;
}

// Independent re-check: every t-subset must be injective under some map.
inline bool verify_splitter(int n, int t,
                            const std::vector<std::vector<std::uint8_t>>& maps) {
    std::vector<std::uint64_t> mark(static_cast<std::size_t>(t), 0);
    std::uint64_t epoch = 0;
    bool ok = true;
    for_each_subset(n, t, [&](const std::vector<int>& s) {
        for (const auto& h : maps) {
            ++epoch;
            bool injective = true;
            for (int j = 0; j < t; ++j) {
                std::uint8_t b = h[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])];
                if (mark[b] == epoch) {
                    injective = false;
                    break;
                }
                mark[b] = epoch;
            }
            if (injective) return true;
        }
        ok = false;
        return false;
    });
    return ok;
}

inline void dedupe_colorings(std::vector<Coloring>& cs) {
    std::unordered_set<std::string> seen;
    seen.reserve(cs.size() * 2);
    std::vector<Coloring> out;
    out.reserve(cs.size());
    for (auto& c : cs) {
        std::string key;
        if (!c.labels.empty())
            key.assign(reinterpret_cast<const char*>(c.labels.data()), c.labels.size());
        if (seen.insert(std::move(key)).second) out.push_back(std::move(c));
    }
    cs = std::move(out);
}

inline ColoringFamily make_universal_shell(int n, int t) {
    ColoringFamily fam;
    fam.ground_size = n;
    fam.parameter_t = t;
    fam.mode = FamilyMode::Universal;
    return fam;
}

// All 2^n colorings; trivially universal for every t <= n.
inline ColoringFamily cube_family(int n, int t) {
    ColoringFamily fam = make_universal_shell(n, t);
    const std::uint64_t total = std::uint64_t{1} << n;
    fam.size_bound = total;
    fam.colorings.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Coloring c;
        c.labels.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            c.labels[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>((mask >> i) & 1);
        fam.colorings.push_back(std::move(c));
    }
    return fam;
}

// Splitter maps composed with all 2^t bucket patterns. If a subset is
// injective under map h and pattern p ranges over {0,1}^t, the subset
// receives all 2^t label patterns.
inline std::optional<ColoringFamily> splitter_family(int n, int t) {
    auto maps = build_splitter(n, t);
    if (!maps || !verify_splitter(n, t, *maps)) return std::nullopt;
    const std::uint64_t projected = static_cast<std::uint64_t>(maps->size()) << t;
    if (projected > kMaxColorings ||
        projected * static_cast<std::uint64_t>(std::max(n, 1)) > kMaxFamilyBytes)
        return std::nullopt;
    ColoringFamily fam = make_universal_shell(n, t);
    fam.size_bound = projected;
    fam.colorings.reserve(projected);
    for (const auto& h : *maps) {
        for (std::uint64_t p = 0; p < (std::uint64_t{1} << t); ++p) {
            Coloring c;
            c.labels.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                c.labels[static_cast<std::size_t>(i)] =
                    static_cast<std::uint8_t>((p >> h[static_cast<std::size_t>(i)]) & 1);
            fam.colorings.push_back(std::move(c));
        }
    }
    dedupe_colorings(fam.colorings);
    return fam;
}

// Prime-composition route. With r = t(t-1)+1 and prime p >= max(n, C(t,2)*r+2),
// for every t-subset some a in [1, p-1] makes x -> ((a*x) mod p) mod r
// injective: each colliding pair rules out at most 2*floor((p-1)/r)+1 values
// of a, and C(t,2)*(2*(p-1)/r+1) < p-1 by the choice of p. Composing all such
// maps with a (r,t)-universal inner family is therefore (n,t)-universal.
inline ColoringFamily fks_family(int n, int t) {
    const long long r = static_cast<long long>(t) * (t - 1) + 1;
    const long long pairs = static_cast<long long>(t) * (t - 1) / 2;
    const long long p = next_prime(std::max<long long>(n, pairs * r + 2));
    ColoringFamily inner = universal_family(static_cast<int>(r), t);
    const std::uint64_t projected =
        static_cast<std::uint64_t>(p - 1) * inner.colorings.size();
    if (projected > kMaxColorings ||
        projected * static_cast<std::uint64_t>(std::max(n, 1)) > kMaxFamilyBytes)
        throw std::length_error(
            "universal_family: composed family exceeds resource caps; "
            "use randomized colorings instead");
    ColoringFamily fam = make_universal_shell(n, t);
    fam.size_bound = projected;
    fam.colorings.reserve(projected);
    std::vector<std::uint8_t> h(static_cast<std::size_t>(n));
    for (long long a = 1; a < p; ++a) {
        for (int x = 0; x < n; ++x)
            h[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(
                (static_cast<unsigned __int128>(a) * static_cast<unsigned>(x)) % p % r);
        for (const Coloring& g : inner.colorings) {
            Coloring c;
            c.labels.resize(static_cast<std::size_t>(n));
            for (int x = 0; x < n; ++x)
                c.labels[static_cast<std::size_t>(x)] = g.labels[h[static_cast<std::size_t>(x)]];
            fam.colorings.push_back(std::move(c));
        }
    }
    dedupe_colorings(fam.colorings);
    return fam;
}

// Estimated family length for the (n,t) chooser; infinity when no route fits.
inline double estimate_universal_size(int n, int t) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (t <= 1) return 2.0;
    auto fits = [&](double colorings) {
        return colorings <= static_cast<double>(kMaxColorings) &&
               colorings * std::max(n, 1) <= static_cast<double>(kMaxFamilyBytes);
    };
    double best = inf;
    if (n <= 30) {
        double cube = std::ldexp(1.0, n);
        if (fits(cube)) best = cube;
    }
    std::uint64_t csub = binomial_capped(n, t, kSubsetBudget);
    if (csub <= kSubsetBudget) {
        double maps = std::log(static_cast<double>(csub) + 2.0) / split_probability(t) + 8.0;
        double est = maps * std::ldexp(1.0, t);
        if (fits(est)) best = std::min(best, est);
    }
    return best;
}

}  // namespace detail

// Deterministic (n,t)-universal family. Routes, chosen by estimated size:
// full cube (small n), greedy splitter with exhaustive verification
// (enumerable t-subsets), or prime composition (2 <= t <= 6). Throws
// std::length_error when every route exceeds the resource caps.
inline ColoringFamily universal_family(int n, int t) {
    if (n < 0) throw std::invalid_argument("universal_family: n < 0");
    if (t < 0 || t > n) throw std::invalid_argument("universal_family: t outside 0..n");
    if (t == 0) {
        ColoringFamily fam = detail::make_universal_shell(n, t);
        fam.size_bound = 1;
        fam.colorings = {Coloring{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)}};
        return fam;
    }
    if (t == 1) {
        ColoringFamily fam = detail::make_universal_shell(n, t);
        fam.size_bound = 2;
        fam.colorings = {Coloring{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)},
                         Coloring{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1)}};
        return fam;
    }

    auto fits = [&](double colorings) {
        return colorings <= static_cast<double>(detail::kMaxColorings) &&
               colorings * std::max(n, 1) <= static_cast<double>(detail::kMaxFamilyBytes);
    };
    enum Route { kCube, kSplitter, kPrime };
    std::vector<std::pair<double, Route>> routes;
    if (n <= 30) {
        double est = std::ldexp(1.0, n);
        if (fits(est)) routes.emplace_back(est, kCube);
    }
    std::uint64_t csub = detail::binomial_capped(n, t, detail::kSubsetBudget);
    if (csub <= detail::kSubsetBudget) {
        double maps =
            std::log(static_cast<double>(csub) + 2.0) / detail::split_probability(t) + 8.0;
        double est = maps * std::ldexp(1.0, t);
        if (fits(est)) routes.emplace_back(est, kSplitter);
    }
    if (t >= 2 && t <= 6) {
        long long r = static_cast<long long>(t) * (t - 1) + 1;
        if (r < n) {
            long long pairs = static_cast<long long>(t) * (t - 1) / 2;
            long long p = detail::next_prime(std::max<long long>(n, pairs * r + 2));
            double est = static_cast<double>(p - 1) *
                         detail::estimate_universal_size(static_cast<int>(r), t);
            if (fits(est)) routes.emplace_back(est, kPrime);
        }
    }
    std::sort(routes.begin(), routes.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto [est, route] : routes) {
        switch (route) {
            case kCube:
                return detail::cube_family(n, t);
            case kSplitter:
                if (auto fam = detail::splitter_family(n, t)) return std::move(*fam);
                break;  // construction budget exceeded; try the next route
            case kPrime:
                return detail::fks_family(n, t);
        }
    }
    throw std::length_error("universal_family: no deterministic construction within "
                            "resource caps for n=" + std::to_string(n) + ", t=" +
                            std::to_string(t) + "; use randomized colorings instead");
}

// Exhaustive universality check: every t-subset of positions must realize
// all 2^t patterns. Intended for small n (enumerates C(n,t) subsets).
inline bool is_universal(const std::vector<Coloring>& colorings, int n, int t) {
    if (n < 0 || t < 0 || t > n) return false;
    if (t >= 30) throw std::invalid_argument("is_universal: t too large to enumerate");
    for (const Coloring& c : colorings)
        if (c.labels.size() != static_cast<std::size_t>(n)) return false;
    const std::uint32_t want = std::uint32_t{1} << t;
    bool ok = true;
    std::vector<char> seen(want);
    detail::for_each_subset(n, t, [&](const std::vector<int>& s) {
        std::fill(seen.begin(), seen.end(), 0);
        std::uint32_t found = 0;
        for (const Coloring& c : colorings) {
            std::uint32_t pattern = 0;
            for (int j = 0; j < t; ++j)
                pattern |= static_cast<std::uint32_t>(
                               c.labels[static_cast<std::size_t>(s[static_cast<std::size_t>(j)])])
                           << j;
            if (!seen[pattern]) {
                seen[pattern] = 1;
                if (++found == want) break;
            }
        }
        if (found != want) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

// One coloring per line as a 0/1 string, for fixture reuse.
inline void write_family(std::ostream& out, const std::vector<Coloring>& colorings) {
    for (const Coloring& c : colorings) {
        std::string line(c.labels.size(), '0');
        for (std::size_t i = 0; i < c.labels.size(); ++i)
            if (c.labels[i]) line[i] = '1';
        out << line << '\n';
    }
}

inline std::vector<Coloring> read_family(std::istream& in) {
    std::vector<Coloring> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Coloring c;
        c.labels.reserve(line.size());
        for (char ch : line) {
            if (ch == '0')
                c.labels.push_back(0);
            else if (ch == '1')
                c.labels.push_back(1);
            else
                throw std::runtime_error("coloring line contains character '" +
                                         std::string(1, ch) + "'");
        }
        if (!out.empty() && c.labels.size() != out.front().labels.size())
            throw std::runtime_error("coloring lines have differing widths");
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace lsvc
