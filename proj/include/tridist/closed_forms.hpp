#pragma once

#include <functional>
#include <string>

namespace tridist {

// An exactly-known distance distribution: density and cumulative function
// with support [0, support_max] (pdf is 0 and cdf is 0/1 outside).  The
// factories below run build-time checks -- cdf(0) = 0 and cdf(support_max)
// = 1 within 1e-12, continuity at every internal branch boundary within
// 1e-9 -- and throw ConstructionError when a check fails.
struct NamedDistribution {
    std::string name;
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    double support_max = 0.0;
};

// Distance between two independent uniform points of the unit-side
// equilateral triangle.  Support [0, 1].
NamedDistribution equilateral_unit();

// Distance between two independent uniform points of the unit-side rhombus
// with a pi/3 vertex angle (two unit equilateral triangles glued along a
// side).  Support [0, sqrt(3)].
NamedDistribution rhombus_unit();

// Distance between one uniform point in each half of that rhombus scaled to
// base 1: the halves are the two 2pi/3-apex isoceles triangles on either
// side of the long diagonal.  Support [0, 1].
NamedDistribution rhombus_pair_cross();

// Distance between one uniform point in each of two adjacent thirds of the
// unit equilateral triangle: joining the centroid to the vertices cuts the
// triangle into three 2pi/3-apex isoceles triangles, and two of them share
// a centroid-vertex edge, forming a concave union.  Support [0, 1].
NamedDistribution concave_pair_cross();

// Rescales all lengths by s > 0: cdf_s(d) = cdf(d/s), pdf_s(d) = pdf(d/s)/s,
// support_max_s = s * support_max.  Throws InvalidScale unless s > 0.
NamedDistribution scaled(const NamedDistribution& base, double s);

} // namespace tridist
