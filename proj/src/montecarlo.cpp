#include "tridist/montecarlo.hpp"

#include "tridist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

namespace tridist {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Runs fn(i) for i in [0, n) across worker_threads() threads.  Each index
// computes independently, so the partition does not affect results.
template <typename Fn> void parallel_for(std::size_t n, Fn&& fn) {
    const std::size_t workers =
        std::min<std::size_t>(worker_threads(), std::max<std::size_t>(n / 1024, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) {
            break;
        }
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) {
                fn(i);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

} // namespace

SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
    // Hash the seed and the stream index independently so that sequential
    // stream ids land far apart in the generator's sequence space.
    return SplitMix64(mix64(seed) ^ mix64(stream ^ 0x5851f42d4c957f2dull));
}

Vec2 point_from_uniforms(const PlacedTriangle& t, double u, double v) {
    if (u + v > 1.0) {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    return t.C + u * (t.B - t.C) + v * (t.A - t.C);
}

Vec2 sample_point(const PlacedTriangle& t, SplitMix64& rng) {
    const double u = rng.next_double();
    const double v = rng.next_double();
    return point_from_uniforms(t, u, v);
}

Vec2 sample_point(const Triangle& t, SplitMix64& rng) {
    const PlacedTriangle placed = place(t);
    return sample_point(placed, rng);
}

namespace {

std::vector<double> distance_samples(const PlacedTriangle& t1, const PlacedTriangle& t2,
                                     const RunSpec& spec) {
    std::vector<double> out(spec.pairs);
    parallel_for(spec.pairs, [&](std::size_t i) {
        SplitMix64 rng = stream_rng(spec.seed, i);
        const Vec2 p = sample_point(t1, rng);
        const Vec2 q = sample_point(t2, rng);
        out[i] = distance(p, q);
    });
    return out;
}

} // namespace

std::vector<double> pair_distance_samples(const Triangle& t, const RunSpec& spec) {
    const PlacedTriangle placed = place(t);
    return distance_samples(placed, placed, spec);
}

std::vector<double> cross_distance_samples(const PlacedTriangle& t1, const PlacedTriangle& t2,
                                           const RunSpec& spec) {
    return distance_samples(t1, t2, spec);
}

EmpiricalCDF sample_pair_distances(const Triangle& t, const RunSpec& spec) {
    return EmpiricalCDF(pair_distance_samples(t, spec));
}

EmpiricalCDF sample_cross_distances(const PlacedTriangle& t1, const PlacedTriangle& t2,
                                    const RunSpec& spec) {
    return EmpiricalCDF(cross_distance_samples(t1, t2, spec));
}

double ks_statistic(const EmpiricalCDF& emp, const std::function<double(double)>& cdf) {
    const auto& s = emp.sorted_samples();
    const double n = static_cast<double>(s.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double ref = cdf(s[i]);
        const double above = std::abs(static_cast<double>(i + 1) / n - ref);
        const double below = std::abs(static_cast<double>(i) / n - ref);
        worst = std::max({worst, above, below});
    }
    return worst;
}

unsigned worker_threads() {
    if (const char* env = std::getenv("TRIDIST_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) {
            return static_cast<unsigned>(std::min<long>(parsed, 256));
        }
        return 1;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace tridist
