#pragma once

#include "tridist/empirical_cdf.hpp"
#include "tridist/geometry.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace tridist {

// Everything that determines a simulation run.  Identical RunSpecs yield
// bit-identical sample lists: sample i is a pure function of (seed, i), so
// results do not depend on the worker count.
struct RunSpec {
    std::uint64_t seed = 0;
    std::size_t pairs = 0;
};

// Counter-seeded generator (splitmix64).  Cheap to construct, so each
// sample index derives its own stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// Decorrelated per-stream generator for a given run seed.
SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t stream);

// Maps two uniforms to a uniform point of the triangle: interpret (u, v) as
// parallelogram coordinates along the edges C->B and C->A and fold the far
// half back ((u, v) -> (1-u, 1-v) when u + v > 1).
Vec2 point_from_uniforms(const PlacedTriangle& t, double u, double v);

Vec2 sample_point(const PlacedTriangle& t, SplitMix64& rng);
Vec2 sample_point(const Triangle& t, SplitMix64& rng); // in the canonical frame

// Distances between independent uniform point pairs, both points in t
// (canonical frame).  Sample i uses stream i of the seed.
std::vector<double> pair_distance_samples(const Triangle& t, const RunSpec& spec);

// Distances between one uniform point in t1 and one in t2 (shared frame).
std::vector<double> cross_distance_samples(const PlacedTriangle& t1, const PlacedTriangle& t2,
                                           const RunSpec& spec);

EmpiricalCDF sample_pair_distances(const Triangle& t, const RunSpec& spec);
EmpiricalCDF sample_cross_distances(const PlacedTriangle& t1, const PlacedTriangle& t2,
                                    const RunSpec& spec);

// Kolmogorov-Smirnov statistic of an empirical CDF against a reference CDF:
// the supremum over the sample points of the gap on either side of each
// step.
double ks_statistic(const EmpiricalCDF& emp, const std::function<double(double)>& cdf);

// Worker count for sample generation: the TRIDIST_THREADS environment
// variable caps it when set; otherwise the hardware concurrency.  Always at
// least 1.
unsigned worker_threads();

} // namespace tridist
