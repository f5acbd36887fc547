#pragma once

#include "tridist/geometry.hpp"
#include "tridist/piecewise.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace tridist {

// Closed antiderivatives of the chord measure, one pair per regime k:
//   integral[k](d)  -- antiderivative of chord_measure(t, k, .)
//   moment[k](d)    -- antiderivative of d * integral[k](d)
// Each closed form is accepted only after a finite-difference consistency
// check against its defining derivative (1e-5 relative, probed across the
// regime's piece of the case plan); a failing entry is replaced by running
// quadrature anchored at the piece's left edge, and the replacement is
// recorded in fallback_notes.  Evaluators are only meaningful on their own
// piece; consumers combine differences, so the anchor constant cancels.
struct AntiderivativeTable {
    using Evaluator = std::function<double(double)>;
    std::array<Evaluator, 8> integral; // index 1..7; [0] unused
    std::array<Evaluator, 8> moment;   // index 1..7; [0] unused
    std::vector<std::string> fallback_notes;
};

// force_quadrature is a diagnostics knob (used by the verification suite to
// exercise the numerical path): bit k (1..7) forces integral[k] onto
// quadrature, bit k+10 forces moment[k].
AntiderivativeTable antiderivative_table(const Triangle& t, unsigned force_quadrature = 0);

// First moment helpers for the distance distribution:
//   i_star(t, d)    = perimeter-weighted integral of the chord CDF over [0, d]
//   i_diamond(t, d) = integral over [0, d] of tau * i_star(t, tau)
// Both throw DomainError outside [0, a] (1e-12 slack).
double i_star(const Triangle& t, double d, unsigned force_quadrature = 0);
double i_diamond(const Triangle& t, double d, unsigned force_quadrature = 0);

// Density and CDF of the distance between two independent uniform points in
// the triangle, plus any fallback diagnostics from the antiderivative gate.
struct PointDistances {
    PiecewiseFn pdf;
    PiecewiseFn cdf;
    std::vector<std::string> fallback_notes;
};

PointDistances point_distances(const Triangle& t, unsigned force_quadrature = 0);
PiecewiseFn pdist_pdf(const Triangle& t);
PiecewiseFn pdist_cdf(const Triangle& t);

} // namespace tridist
