#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tridist/errors.hpp"
#include "tridist/piecewise.hpp"

#include <cmath>
#include <numbers>

using namespace tridist;
using doctest::Approx;

namespace {
PiecewiseFn::Evaluator ident() {
    return [](double x) { return x; };
}
PiecewiseFn::Evaluator constant(double v) {
    return [v](double) { return v; };
}
} // namespace

TEST_CASE("cumulative function evaluates inside and outside its domain") {
    const PiecewiseFn f(PiecewiseFn::Kind::Cdf, {0.0, 1.0}, {ident()});
    CHECK(f(-0.1) == 0.0);
    CHECK(f(0.0) == 0.0);
    CHECK(f(0.5) == 0.5);
    CHECK(f(1.0) == 1.0);
    CHECK(f(1.1) == 1.0);
    CHECK(f.domain_min() == 0.0);
    CHECK(f.domain_max() == 1.0);
    CHECK(f.kind() == PiecewiseFn::Kind::Cdf);
}

TEST_CASE("density evaluates to zero on both sides of the domain") {
    const PiecewiseFn f(PiecewiseFn::Kind::Pdf, {0.0, 2.0}, {constant(0.5)});
    CHECK(f(-0.1) == 0.0);
    CHECK(f(1.0) == 0.5);
    CHECK(f(2.0) == 0.5);
    CHECK(f(2.1) == 0.0);
}

TEST_CASE("breakpoints evaluate on the segment to their left") {
    // The two segments agree within the join tolerance but differ by a
    // detectable constant, so the value at the breakpoint identifies the
    // segment that produced it.
    const double shift = 5e-10;
    const PiecewiseFn f(PiecewiseFn::Kind::Pdf, {0.0, 0.5, 1.0},
                        {ident(), [shift](double x) { return x + shift; }});
    CHECK(f(0.5) == 0.5);          // left segment exactly
    CHECK(f(0.75) == 0.75 + shift); // interior of the right segment
    CHECK(f(1.0) == 1.0 + shift);
}

TEST_CASE("zero-width pieces are dropped") {
    const PiecewiseFn f(PiecewiseFn::Kind::Cdf, {0.0, 0.5, 0.5, 1.0},
                        {ident(), constant(1e9), ident()});
    REQUIRE(f.breakpoints().size() == 3);
    CHECK(f.breakpoints()[1] == 0.5);
    CHECK(f(0.25) == 0.25);
    CHECK(f(0.75) == 0.75);
}

TEST_CASE("tiny float-noise negative widths are treated as ties") {
    const double b = 0.5;
    const double b_noise = b - 1e-16; // below the drop tolerance, slightly negative width
    const PiecewiseFn f(PiecewiseFn::Kind::Cdf, {0.0, b, b_noise, 1.0},
                        {ident(), constant(1e9), ident()});
    CHECK(f.breakpoints().size() == 3);
    CHECK(f(0.75) == 0.75);
}

TEST_CASE("a collapsed final piece keeps the true right endpoint") {
    const PiecewiseFn f(PiecewiseFn::Kind::Cdf, {0.0, 1.0 - 1e-16, 1.0},
                        {[](double x) { return std::min(x, 1.0); }, constant(1e9)});
    REQUIRE(f.breakpoints().size() == 2);
    CHECK(f.domain_max() == 1.0);
    CHECK(f(1.0) == 1.0);
    CHECK(f(1.0 + 1e-12) == 1.0);
}

TEST_CASE("construction rejects malformed inputs") {
    // decreasing breakpoints
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Cdf, {0.0, 0.6, 0.5, 1.0},
                                {ident(), ident(), ident()}),
                    ConstructionError);
    // segment/breakpoint count mismatch
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Cdf, {0.0, 1.0}, {ident(), ident()}),
                    ConstructionError);
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Cdf, {0.0}, {}), ConstructionError);
    // non-positive span
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Cdf, {1.0, 1.0}, {ident()}),
                    ConstructionError);
    // non-finite breakpoint
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Cdf,
                                {0.0, std::numeric_limits<double>::infinity()}, {ident()}),
                    ConstructionError);
    // adjacent segments disagree at the join
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Pdf, {0.0, 0.5, 1.0},
                                {ident(), [](double x) { return x + 0.1; }}),
                    ConstructionError);
}

TEST_CASE("cumulative checks: endpoints and monotonicity") {
    // right endpoint misses 1
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Cdf, {0.0, 1.0},
                                {[](double x) { return 0.5 * x; }}),
                    NotACdf);
    // left endpoint misses 0
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Cdf, {0.0, 1.0},
                                {[](double x) { return 0.2 + 0.8 * x; }}),
                    NotACdf);
    // non-monotone but endpoint-correct
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Cdf, {0.0, 1.0},
                                {[](double x) {
                                     return x + 0.3 * std::sin(2 * std::numbers::pi * x);
                                 }}),
                    NotACdf);
}

TEST_CASE("density checks: negativity beyond the floor is rejected") {
    CHECK_THROWS_AS(PiecewiseFn(PiecewiseFn::Kind::Pdf, {0.0, 1.0}, {constant(-1e-6)}),
                    ConstructionError);
    // a -1e-13 wiggle is within the floor
    const PiecewiseFn ok(PiecewiseFn::Kind::Pdf, {0.0, 1.0}, {constant(-1e-13)});
    CHECK(ok(0.5) == -1e-13);
}
