#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tridist/closed_forms.hpp"
#include "tridist/errors.hpp"
#include "tridist/quadrature.hpp"

#include <cmath>
#include <limits>
#include <vector>

using namespace tridist;
using doctest::Approx;

namespace {

// Branch boundaries of each distribution, for segment-wise integration.
std::vector<double> segments_for(const NamedDistribution& d) {
    const double s3 = std::sqrt(3.0);
    if (d.name == "equilateral-unit") {
        return {0.0, s3 / 2, 1.0};
    }
    if (d.name == "rhombus-unit") {
        return {0.0, s3 / 2, 1.0, s3};
    }
    if (d.name == "rhombus-pair-cross") {
        return {0.0, s3 / 6, 0.5, s3 / 3, 1.0};
    }
    if (d.name == "concave-pair-cross") {
        return {0.0, s3 / 6, s3 / 3, s3 / 2, 1.0};
    }
    REQUIRE(false);
    return {};
}

double integrate_pdf(const NamedDistribution& d) {
    const std::vector<double> seg = segments_for(d);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
        total += integrate(d.pdf, seg[i], seg[i + 1], 1e-11);
    }
    return total;
}

} // namespace

TEST_CASE("equilateral unit distribution reference values") {
    const NamedDistribution d = equilateral_unit();
    CHECK(d.name == "equilateral-unit");
    CHECK(d.support_max == 1.0);
    CHECK(d.pdf(0.25) == Approx(1.9037486754879533).epsilon(1e-12));
    CHECK(d.pdf(0.95) == Approx(0.002088688703362429).epsilon(1e-12));
    CHECK(d.cdf(0.25) == Approx(0.30404254608060766).epsilon(1e-12));
    CHECK(d.cdf(0.5) == Approx(0.7566159779204025).epsilon(1e-12));
    CHECK(d.cdf(0.95) == Approx(0.9999741393592068).epsilon(1e-12));
}

TEST_CASE("rhombus unit distribution reference values") {
    const NamedDistribution d = rhombus_unit();
    CHECK(d.name == "rhombus-unit");
    CHECK(d.support_max == Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(d.cdf(0.3) == Approx(0.23751630498997).epsilon(1e-12));
    CHECK(d.cdf(0.9) == Approx(0.9163761912211505).epsilon(1e-12));
    CHECK(d.cdf(1.2) == Approx(0.9873280552867469).epsilon(1e-12));
    CHECK(d.pdf(0.3) == Approx(1.310324829451872).epsilon(1e-12));
    CHECK(d.pdf(0.95) == Approx(0.3537793845161697).epsilon(1e-12));
    CHECK(d.pdf(1.2) == Approx(0.09778180527171987).epsilon(1e-12));
}

TEST_CASE("rhombus-halves cross distribution reference values") {
    const NamedDistribution d = rhombus_pair_cross();
    CHECK(d.name == "rhombus-pair-cross");
    CHECK(d.support_max == 1.0);
    CHECK(d.cdf(0.2) == Approx(0.1709459464478566).epsilon(1e-12));
    CHECK(d.cdf(0.4) == Approx(0.7075078868888218).epsilon(1e-12));
    CHECK(d.cdf(0.5) == Approx(0.8894819497861077).epsilon(1e-12));
    CHECK(d.cdf(0.55) == Approx(0.93284120433123).epsilon(1e-12));
    CHECK(d.cdf(0.8) == Approx(0.9977515746042833).epsilon(1e-12));
    CHECK(d.pdf(0.3) == Approx(2.9007290010334557).epsilon(1e-12));
    CHECK(d.pdf(0.7) == Approx(0.16412436978971243).epsilon(1e-12));
}

TEST_CASE("adjacent-thirds cross distribution reference values") {
    const NamedDistribution d = concave_pair_cross();
    CHECK(d.name == "concave-pair-cross");
    CHECK(d.support_max == 1.0);
    CHECK(d.cdf(0.2) == Approx(0.10337672111924724).epsilon(1e-12));
    CHECK(d.cdf(0.4) == Approx(0.4818005584691598).epsilon(1e-12));
    CHECK(d.cdf(0.5) == Approx(0.6800045119161942).epsilon(1e-12));
    CHECK(d.cdf(0.7) == Approx(0.9414241026979232).epsilon(1e-12));
    CHECK(d.cdf(0.95) == Approx(0.9999653904562305).epsilon(1e-12));
    CHECK(d.pdf(0.3) == Approx(1.9905611576523887).epsilon(1e-12));
    CHECK(d.pdf(0.8) == Approx(0.24396889842035105).epsilon(1e-12));
}

TEST_CASE("densities integrate to one and cumulatives hit their endpoints") {
    for (const NamedDistribution& d :
         {equilateral_unit(), rhombus_unit(), rhombus_pair_cross(), concave_pair_cross()}) {
        CAPTURE(d.name);
        CHECK(std::abs(integrate_pdf(d) - 1.0) <= 1e-8);
        CHECK(d.cdf(0.0) == 0.0);
        CHECK(std::abs(d.cdf(d.support_max) - 1.0) <= 1e-12);
        CHECK(d.cdf(-0.5) == 0.0);
        CHECK(d.cdf(d.support_max * 2) == 1.0);
        CHECK(d.pdf(-0.5) == 0.0);
        CHECK(d.pdf(d.support_max * 2) == 0.0);
        // continuity across the internal branch boundaries
        const std::vector<double> seg = segments_for(d);
        for (std::size_t i = 1; i + 1 < seg.size(); ++i) {
            const double eps = 1e-11 * d.support_max;
            CHECK(std::abs(d.cdf(seg[i] + eps) - d.cdf(seg[i] - eps)) <= 1e-9);
        }
        // the cumulative is the integral of the density
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < seg.size(); ++i) {
            acc += integrate(d.pdf, seg[i], seg[i + 1], 1e-11);
            CHECK(d.cdf(seg[i + 1]) == Approx(acc).epsilon(1e-8));
        }
    }
}

TEST_CASE("scaling rescales lengths and preserves probability") {
    const NamedDistribution base = equilateral_unit();
    for (double s : {0.5, 2.0, 3.0}) {
        const NamedDistribution d = scaled(base, s);
        CHECK(d.support_max == Approx(s * base.support_max).epsilon(1e-15));
        CHECK(d.name.find('*') != std::string::npos);
        for (int i = 0; i <= 100; ++i) {
            const double x = base.support_max * static_cast<double>(i) / 100.0;
            CHECK(std::abs(d.cdf(s * x) - base.cdf(x)) <= 1e-12);
            CHECK(std::abs(d.pdf(s * x) - base.pdf(x) / s) <= 1e-12);
        }
    }
    // scaling by 1 is the identity
    const NamedDistribution same = scaled(base, 1.0);
    CHECK(same.cdf(0.37) == base.cdf(0.37));
}

TEST_CASE("invalid scale factors are rejected") {
    const NamedDistribution base = rhombus_unit();
    CHECK_THROWS_AS(scaled(base, 0.0), InvalidScale);
    CHECK_THROWS_AS(scaled(base, -1.0), InvalidScale);
    CHECK_THROWS_AS(scaled(base, std::numeric_limits<double>::quiet_NaN()), InvalidScale);
    CHECK_THROWS_AS(scaled(base, std::numeric_limits<double>::infinity()), InvalidScale);
}
