#pragma once

#include "tridist/geometry.hpp"

#include <functional>
#include <string>

namespace tridist {

enum class PairShape { Convex, Concave };

// Two triangles glued along a common side, together with the distance CDF
// of the whole union region (supplied by the caller: a closed form or a
// tabulated curve).  S1, S2 are the triangle areas and S their sum -- the
// areas partition the union.
struct TrianglePairConfig {
    Triangle t1, t2;
    PairShape shape = PairShape::Convex;
    std::function<double(double)> whole_cdf;
    double union_diameter = 0.0;
    double shared_side = 0.0;
    double S1 = 0.0, S2 = 0.0, S = 0.0;
};

// Validates and assembles a pair configuration.  Throws ShapeMismatch when
// shared_side is not a side of both triangles (1e-9 relative), and
// ConstructionError for a missing whole_cdf or a diameter smaller than the
// triangles' own sides.
TrianglePairConfig make_pair_config(const Triangle& t1, const Triangle& t2, PairShape shape,
                                    std::function<double(double)> whole_cdf,
                                    double union_diameter, double shared_side);

// CDF of the distance between one uniform point in each triangle of a
// convex pair:  d  |->  (S^2 G(d) - S1^2 G1(d) - S2^2 G2(d)) / (2 S1 S2),
// where G is the union's CDF and G1, G2 the per-triangle ones.  The result
// is probed on a 512-point grid (range within [-1e-6, 1+1e-6], nondecreasing
// with 1e-6 slack, reaching 1 within 1e-6) and NotACdf is thrown on failure
// -- a wrong whole_cdf surfaces here.  Throws UnsupportedConfiguration for
// a concave pair: the subtraction identity needs the union to be convex, so
// concave layouts are limited to the special case below.
std::function<double(double)> cross_cdf_convex(const TrianglePairConfig& config);

// CDF of the distance between one uniform point in each of two adjacent
// centroid-thirds of an equilateral triangle of side t.a.  Joining the
// centroid to the vertices cuts the equilateral into three copies of t
// (angles 2pi/3, pi/6, pi/6); two adjacent copies share a centroid-vertex
// edge and form a concave union.  The bookkeeping identity over the whole
// equilateral gives  d |-> (3 G_equilateral(d / t.a) - G_t(d)) / 2.
// Throws ShapeMismatch unless t has those angles within 1e-9.
std::function<double(double)> cross_cdf_concave_equilateral(const Triangle& t);

// A ready-made pair layout addressable from the CLI.
struct PairGeometry {
    std::string name;
    Triangle t1, t2;
    PlacedTriangle p1, p2; // concrete vertices in a shared frame
    std::function<double(double)> cross_cdf;
    std::function<double(double)> cross_pdf;
    double diameter = 0.0;
};

// Known ids:
//   "rhombus-pi6": the two halves of the base-1 rhombus on either side of
//     its long diagonal (each a 2pi/3-apex isoceles triangle); convex union.
//   "concave-pi6": two adjacent centroid-thirds of the unit equilateral
//     triangle (they share a centroid-vertex edge; concave union).
// Throws ParseError for any other id.
PairGeometry named_pair(const std::string& id);

} // namespace tridist
