#pragma once

#include "tridist/geometry.hpp"
#include "tridist/piecewise.hpp"

#include <numbers>
#include <vector>

namespace tridist {

// Layout of the chord-length CDF for one triangle: piece i of the domain
// [0, a] runs over (breaks[i], breaks[i+1]] and is evaluated by the measure
// regime regimes[i] (see chord_measure).  Pieces may have zero width when
// breakpoints tie (isoceles/equilateral shapes); consumers drop those.
struct CasePlan {
    std::vector<double> breaks;
    std::vector<int> regimes;
};

CasePlan case_plan(const Triangle& t);

// Unnormalized cumulative chord measure for regime k (1..7) at length l.
// The chord-length CDF is chord_measure(t, k, l) / t.u on the piece that
// regime k covers.  Total over the domain: regime values stitch together
// continuously and reach t.u at l = a.
double chord_measure(const Triangle& t, int k, double l);

// Exact chord-length CDF (probability a random chord is at most l), as a
// piecewise function on [0, a].
PiecewiseFn chord_cdf(const Triangle& t);

// One chord of the rotational scan: the support line direction theta and
// the chord length cut at offset steps across the strip.
struct ChordSample {
    double theta;
    double length;
};

// Geometry of the strip swept at direction theta: when a side of the
// triangle is parallel to the sweep line the chord length interpolates
// linearly across the full width d; otherwise the width splits at the
// vertex into d1 + d2 with the longest chord of length `base` at the split.
struct SweepOrientation {
    bool side_parallel;
    double width;   // d = d1 + d2
    double d1;
    double d2;
    double base;    // chord length at the interior peak (or at the far side)
};

SweepOrientation sweep_orientation(const Triangle& t, double theta);

// Rotational-scan sampler: sweeps support-line directions theta over
// [0, pi] in steps of dtheta (plus the side-parallel directions, matched
// within 1e-12 and inserted when absent), and cuts chords at offsets
// 0, dd, 2*dd, ... across each strip.  Samples are ordered by (theta,
// offset).  Chord lengths never exceed a + 1e-12.
std::vector<ChordSample> chord_sweep(const Triangle& t,
                                     double dtheta = std::numbers::pi / 180.0,
                                     double dd = 1e-3);

} // namespace tridist
