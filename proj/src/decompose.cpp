#include "tridist/decompose.hpp"

#include "tridist/closed_forms.hpp"
#include "tridist/errors.hpp"
#include "tridist/piecewise.hpp"
#include "tridist/point_dist.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>
#include <utility>

namespace tridist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSideRelTol = 1e-9;
constexpr double kAngleTol = 1e-9;
constexpr double kProbeSlack = 1e-6;
constexpr int kProbeCount = 512;

bool has_side(const Triangle& t, double len) {
    const double tol = kSideRelTol * t.a;
    return std::abs(t.a - len) <= tol || std::abs(t.b - len) <= tol ||
           std::abs(t.c - len) <= tol;
}

} // namespace

TrianglePairConfig make_pair_config(const Triangle& t1, const Triangle& t2, PairShape shape,
                                    std::function<double(double)> whole_cdf,
                                    double union_diameter, double shared_side) {
    if (!whole_cdf) {
        throw ConstructionError("pair configuration needs the union's distance CDF");
    }
    if (!(shared_side > 0.0)) {
        throw ShapeMismatch("shared side length must be positive");
    }
    if (!has_side(t1, shared_side) || !has_side(t2, shared_side)) {
        std::ostringstream msg;
        msg << "shared side " << shared_side << " is not a side of both triangles";
        throw ShapeMismatch(msg.str());
    }
    const double longest = std::max(t1.a, t2.a);
    if (!(union_diameter >= longest * (1 - kSideRelTol))) {
        throw ConstructionError("union diameter cannot be smaller than a triangle side");
    }
    TrianglePairConfig config;
    config.t1 = t1;
    config.t2 = t2;
    config.shape = shape;
    config.whole_cdf = std::move(whole_cdf);
    config.union_diameter = union_diameter;
    config.shared_side = shared_side;
    config.S1 = t1.area;
    config.S2 = t2.area;
    config.S = t1.area + t2.area;
    return config;
}

std::function<double(double)> cross_cdf_convex(const TrianglePairConfig& config) {
    if (config.shape != PairShape::Convex) {
        throw UnsupportedConfiguration(
            "the area-weighted subtraction needs a convex union; only the equilateral "
            "centroid split is solved for concave pairs");
    }
    const auto g1 = std::make_shared<PiecewiseFn>(pdist_cdf(config.t1));
    const auto g2 = std::make_shared<PiecewiseFn>(pdist_cdf(config.t2));
    const auto whole = config.whole_cdf;
    const double s1 = config.S1, s2 = config.S2, s = config.S;
    auto cross = [whole, g1, g2, s, s1, s2](double d) {
        return (s * s * whole(d) - s1 * s1 * (*g1)(d) - s2 * s2 * (*g2)(d)) / (2 * s1 * s2);
    };

    double prev = 0.0;
    for (int i = 0; i < kProbeCount; ++i) {
        const double d = config.union_diameter * static_cast<double>(i) / (kProbeCount - 1);
        const double v = cross(d);
        if (!std::isfinite(v) || v < -kProbeSlack || v > 1 + kProbeSlack) {
            std::ostringstream msg;
            msg << "cross CDF leaves [0, 1] (value " << v << " at d=" << d
                << "); the union CDF is inconsistent with the pair";
            throw NotACdf(msg.str());
        }
        if (i > 0 && v < prev - kProbeSlack) {
            std::ostringstream msg;
            msg << "cross CDF decreases near d=" << d
                << "; the union CDF is inconsistent with the pair";
            throw NotACdf(msg.str());
        }
        if (i == kProbeCount - 1 && std::abs(v - 1.0) > kProbeSlack) {
            std::ostringstream msg;
            msg << "cross CDF reaches " << v << " at the union diameter instead of 1";
            throw NotACdf(msg.str());
        }
        prev = v;
    }
    return cross;
}

std::function<double(double)> cross_cdf_concave_equilateral(const Triangle& t) {
    const double expected[3] = {2 * kPi / 3, kPi / 6, kPi / 6};
    if (std::abs(t.alpha - expected[0]) > kAngleTol || std::abs(t.beta - expected[1]) > kAngleTol ||
        std::abs(t.gamma - expected[2]) > kAngleTol) {
        throw ShapeMismatch("the concave split needs the 2pi/3-apex isoceles triangle "
                            "(a centroid-third of an equilateral triangle)");
    }
    const auto g_t = std::make_shared<PiecewiseFn>(pdist_cdf(t));
    const NamedDistribution eq = equilateral_unit();
    const auto g_eq = eq.cdf;
    const double side = t.a;
    return [g_t, g_eq, side](double d) { return (3 * g_eq(d / side) - (*g_t)(d)) / 2; };
}

PairGeometry named_pair(const std::string& id) {
    const double s3 = std::sqrt(3.0);
    if (id == "rhombus-pi6") {
        // Base-1 rhombus with vertices (0,0), (1,0) and (1/2, +-sqrt(3)/6);
        // the two triangles sit on either side of the long diagonal.
        const Triangle half = triangle_from_angles(2 * kPi / 3, kPi / 6, kPi / 6, 1.0);
        PairGeometry pair;
        pair.name = id;
        pair.t1 = half;
        pair.t2 = half;
        pair.p1 = {{0.5, s3 / 6}, {1.0, 0.0}, {0.0, 0.0}};
        pair.p2 = {{0.5, -s3 / 6}, {1.0, 0.0}, {0.0, 0.0}};
        pair.diameter = 1.0;
        // The union is the unit-side pi/3 rhombus scaled by 1/sqrt(3).
        const NamedDistribution whole = scaled(rhombus_unit(), 1.0 / s3);
        const TrianglePairConfig config =
            make_pair_config(half, half, PairShape::Convex, whole.cdf, 1.0, 1.0);
        pair.cross_cdf = cross_cdf_convex(config);
        pair.cross_pdf = rhombus_pair_cross().pdf;
        return pair;
    }
    if (id == "concave-pi6") {
        // Unit equilateral triangle (0,0), (1,0), (1/2, sqrt(3)/2) with
        // centroid (1/2, sqrt(3)/6); the pair is two of its centroid-thirds,
        // sharing the edge from (1,0) to the centroid.
        const Triangle third = triangle_from_angles(2 * kPi / 3, kPi / 6, kPi / 6, 1.0);
        const Vec2 corner_a{0.0, 0.0};
        const Vec2 corner_b{1.0, 0.0};
        const Vec2 corner_c{0.5, s3 / 2};
        const Vec2 centroid{0.5, s3 / 6};
        PairGeometry pair;
        pair.name = id;
        pair.t1 = third;
        pair.t2 = third;
        pair.p1 = {centroid, corner_b, corner_a};
        pair.p2 = {centroid, corner_c, corner_b};
        pair.diameter = 1.0;
        pair.cross_cdf = cross_cdf_concave_equilateral(third);
        pair.cross_pdf = concave_pair_cross().pdf;
        return pair;
    }
    throw ParseError("unknown pair configuration '" + id +
                     "' (known: rhombus-pi6, concave-pi6)");
}

} // namespace tridist
