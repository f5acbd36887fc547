#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tridist/closed_forms.hpp"
#include "tridist/decompose.hpp"
#include "tridist/errors.hpp"
#include "tridist/geometry.hpp"
#include "tridist/montecarlo.hpp"
#include "tridist/piecewise.hpp"
#include "tridist/point_dist.hpp"
#include "test_support.hpp"

#include <cmath>
#include <numbers>

using namespace tridist;
using doctest::Approx;

namespace {

Triangle apex_third(double longest = 1.0) {
    return triangle_from_angles(2 * std::numbers::pi / 3, std::numbers::pi / 6,
                                std::numbers::pi / 6, longest);
}

} // namespace

TEST_CASE("convex decomposition reproduces the closed rhombus-halves law") {
    const PairGeometry pair = named_pair("rhombus-pi6");
    const NamedDistribution closed = rhombus_pair_cross();
    for (int i = 0; i <= 500; ++i) {
        const double d = static_cast<double>(i) / 500.0;
        CHECK(std::abs(pair.cross_cdf(d) - closed.cdf(d)) <= 1e-9);
    }
}

TEST_CASE("concave split reproduces the closed adjacent-thirds law") {
    const PairGeometry pair = named_pair("concave-pi6");
    const NamedDistribution closed = concave_pair_cross();
    for (int i = 0; i <= 500; ++i) {
        const double d = static_cast<double>(i) / 500.0;
        CHECK(std::abs(pair.cross_cdf(d) - closed.cdf(d)) <= 1e-9);
    }
}

TEST_CASE("concave split scales with the triangle") {
    const auto cross = cross_cdf_concave_equilateral(apex_third(2.0));
    const NamedDistribution closed = scaled(concave_pair_cross(), 2.0);
    for (double d : {0.1, 0.5, 0.9, 1.3, 1.7}) {
        CHECK(cross(d) == Approx(closed.cdf(d)).epsilon(1e-9));
    }
}

TEST_CASE("pair configuration validation") {
    const Triangle half = apex_third();
    const NamedDistribution whole = scaled(rhombus_unit(), 1.0 / std::sqrt(3.0));

    // missing union CDF
    CHECK_THROWS_AS(make_pair_config(half, half, PairShape::Convex, nullptr, 1.0, 1.0),
                    ConstructionError);
    // shared side that neither triangle has
    CHECK_THROWS_AS(make_pair_config(half, half, PairShape::Convex, whole.cdf, 1.0, 0.7),
                    ShapeMismatch);
    CHECK_THROWS_AS(make_pair_config(half, half, PairShape::Convex, whole.cdf, 1.0, 0.0),
                    ShapeMismatch);
    // diameter smaller than the longest triangle side
    CHECK_THROWS_AS(make_pair_config(half, half, PairShape::Convex, whole.cdf, 0.5, 1.0),
                    ConstructionError);

    // areas are recorded and summed
    const TrianglePairConfig ok =
        make_pair_config(half, half, PairShape::Convex, whole.cdf, 1.0, 1.0);
    CHECK(ok.S1 == Approx(half.area).epsilon(1e-15));
    CHECK(ok.S == Approx(2 * half.area).epsilon(1e-15));
    // the short legs also count as shared sides
    const TrianglePairConfig legs = make_pair_config(
        half, half, PairShape::Convex, whole.cdf, 1.0, std::sqrt(3.0) / 3.0);
    CHECK(legs.shared_side == Approx(std::sqrt(3.0) / 3.0).epsilon(1e-15));
}

TEST_CASE("convex subtraction rejects concave shapes and bogus union CDFs") {
    const Triangle half = apex_third();
    const NamedDistribution whole = scaled(rhombus_unit(), 1.0 / std::sqrt(3.0));

    const TrianglePairConfig concave =
        make_pair_config(half, half, PairShape::Concave, whole.cdf, 1.0, 1.0);
    CHECK_THROWS_AS(cross_cdf_convex(concave), UnsupportedConfiguration);

    // a constant is no distance CDF for this union
    const TrianglePairConfig bogus = make_pair_config(
        half, half, PairShape::Convex, [](double) { return 0.5; }, 1.0, 1.0);
    CHECK_THROWS_AS(cross_cdf_convex(bogus), NotACdf);
}

TEST_CASE("concave split demands the apex-third shape") {
    CHECK_THROWS_AS(cross_cdf_concave_equilateral(testsupport::tri_deg(60, 60, 60)),
                    ShapeMismatch);
    CHECK_THROWS_AS(cross_cdf_concave_equilateral(testsupport::tri_deg(130, 30, 20)),
                    ShapeMismatch);
    CHECK_NOTHROW(cross_cdf_concave_equilateral(apex_third()));
}

TEST_CASE("named pair geometry is consistent") {
    const PairGeometry rhombus = named_pair("rhombus-pi6");
    CHECK(rhombus.name == "rhombus-pi6");
    CHECK(rhombus.diameter == 1.0);
    // each placed triangle realizes its abstract side lengths
    for (const PlacedTriangle& p : {rhombus.p1, rhombus.p2}) {
        const double sides[3] = {distance(p.B, p.C), distance(p.A, p.C), distance(p.A, p.B)};
        CHECK(*std::max_element(sides, sides + 3) == Approx(rhombus.t1.a).epsilon(1e-12));
        CHECK(*std::min_element(sides, sides + 3) == Approx(rhombus.t1.c).epsilon(1e-12));
    }
    // the two halves share the long diagonal from (0,0) to (1,0)
    CHECK(distance(rhombus.p1.B, rhombus.p2.B) == 0.0);
    CHECK(distance(rhombus.p1.C, rhombus.p2.C) == 0.0);
    CHECK(rhombus.p1.A.y > 0.0);
    CHECK(rhombus.p2.A.y < 0.0);

    const PairGeometry concave = named_pair("concave-pi6");
    CHECK(concave.diameter == 1.0);
    // shared edge: corner (1,0) to the centroid, of length sqrt(3)/3
    CHECK(distance(concave.p1.A, concave.p2.A) == 0.0); // both start at the centroid
    CHECK(distance(concave.p1.A, concave.p1.B) == Approx(std::sqrt(3.0) / 3.0).epsilon(1e-12));
    CHECK(distance(concave.p1.B, concave.p2.C) == 0.0); // shared corner (1,0)
    // the union is concave: the two outer corners are a full side apart
    CHECK(distance(concave.p1.C, concave.p2.B) == Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(named_pair("nope"), ParseError);
    CHECK_THROWS_AS(named_pair(""), ParseError);
}

// An asymmetric convex pair: the unit equilateral triangle cut by the line
// from its apex to the point (0.3, 0) on the base.  The union CDF is the
// closed equilateral law, so the subtraction rule can be exercised on two
// non-congruent triangles.
namespace {

struct CevianSplit {
    Triangle t1, t2;
    PlacedTriangle p1, p2;
    double shared = 0.0;
};

CevianSplit cevian_split() {
    const double s3 = std::sqrt(3.0);
    const Vec2 apex{0.5, s3 / 2};
    const Vec2 left{0.0, 0.0};
    const Vec2 right{1.0, 0.0};
    const Vec2 foot{0.3, 0.0};
    CevianSplit split;
    split.shared = distance(apex, foot);
    split.t1 = triangle_from_sides(1.0, split.shared, 0.3);
    split.t2 = triangle_from_sides(1.0, split.shared, 0.7);
    split.p1 = {apex, foot, left};
    split.p2 = {apex, right, foot};
    return split;
}

} // namespace

TEST_CASE("convex subtraction is symmetric in the two triangles") {
    const CevianSplit split = cevian_split();
    const auto whole = equilateral_unit().cdf;
    const TrianglePairConfig fwd =
        make_pair_config(split.t1, split.t2, PairShape::Convex, whole, 1.0, split.shared);
    const TrianglePairConfig rev =
        make_pair_config(split.t2, split.t1, PairShape::Convex, whole, 1.0, split.shared);
    const auto cross_fwd = cross_cdf_convex(fwd);
    const auto cross_rev = cross_cdf_convex(rev);
    for (int i = 0; i <= 500; ++i) {
        const double d = static_cast<double>(i) / 500.0;
        CHECK(std::abs(cross_fwd(d) - cross_rev(d)) <= 1e-12);
    }
}

TEST_CASE("cross CDF recombines into the union CDF") {
    const CevianSplit split = cevian_split();
    const auto whole = equilateral_unit().cdf;
    const TrianglePairConfig config =
        make_pair_config(split.t1, split.t2, PairShape::Convex, whole, 1.0, split.shared);
    const auto cross = cross_cdf_convex(config);
    const PiecewiseFn g1 = pdist_cdf(config.t1);
    const PiecewiseFn g2 = pdist_cdf(config.t2);
    const double s1 = config.S1, s2 = config.S2, s = config.S;
    for (int i = 0; i <= 500; ++i) {
        const double d = static_cast<double>(i) / 500.0;
        const double recombined =
            (s1 * s1 * g1(d) + 2 * s1 * s2 * cross(d) + s2 * s2 * g2(d)) / (s * s);
        CHECK(std::abs(recombined - whole(d)) <= 1e-9);
    }
}

TEST_CASE("asymmetric cross CDF matches cross-triangle sampling") {
    const CevianSplit split = cevian_split();
    const auto whole = equilateral_unit().cdf;
    const TrianglePairConfig config =
        make_pair_config(split.t1, split.t2, PairShape::Convex, whole, 1.0, split.shared);
    const auto cross = cross_cdf_convex(config);
    const EmpiricalCDF emp = sample_cross_distances(split.p1, split.p2, {31, 20000});
    CHECK(ks_statistic(emp, cross) <= 0.02);
}
