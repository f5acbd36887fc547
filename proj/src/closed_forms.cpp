#include "tridist/closed_forms.hpp"

#include "tridist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace tridist {

namespace {

constexpr double kPi = std::numbers::pi;
const double kS3 = std::sqrt(3.0);

double unit_clamp(double x) { return std::clamp(x, -1.0, 1.0); }
double sq(double x) { return std::sqrt(std::max(x, 0.0)); }

double pdf_equilateral(double d) {
    if (d <= 0.0 || d >= 1.0) {
        return 0.0;
    }
    if (d <= kS3 / 2) {
        return 4 * d * ((2 + 4 * kS3 * kPi / 9) * d * d - 8 * d + 2 * kS3 * kPi / 3);
    }
    return 4 * d *
           (2 * kS3 / 3 * (4 * d * d + 6) * std::asin(unit_clamp(kS3 / (2 * d))) +
            (2 - 8 * kS3 * kPi / 9) * d * d + 6 * sq(4 * d * d - 3) - 8 * d - 4 * kS3 * kPi / 3);
}

double cdf_equilateral(double d) {
    if (d <= 0.0) {
        return 0.0;
    }
    if (d >= 1.0) {
        return 1.0;
    }
    if (d <= kS3 / 2) {
        return 2 * ((1 + 2 * kS3 * kPi / 9) * d * d * d * d - 16.0 / 3 * d * d * d +
                    2 * kS3 * kPi / 3 * d * d);
    }
    return 2 * (4 * kS3 * d * d / 3 * (d * d + 3) * std::asin(unit_clamp(kS3 / (2 * d))) +
                (26 * d * d / 3 + 1) * sq(d * d - 0.75) + (1 - 4 * kS3 * kPi / 9) * d * d * d * d -
                16.0 / 3 * d * d * d - 4 * kS3 * kPi / 3 * d * d);
}

double pdf_rhombus(double d) {
    if (d <= 0.0 || d >= kS3) {
        return 0.0;
    }
    if (d <= kS3 / 2) {
        return 2 * d *
               ((4.0 / 3 + 2 * kS3 * kPi / 27) * d * d - 16.0 / 3 * d + 2 * kS3 * kPi / 3);
    }
    if (d <= 1.0) {
        return 2 * d *
               (8 * kS3 / 3 * (1 + d * d / 3) * std::asin(unit_clamp(kS3 / (2 * d))) +
                (4.0 / 3 - 10 * kS3 * kPi / 27) * d * d - 16.0 / 3 * d +
                10.0 / 3 * sq(4 * d * d - 3) - 2 * kS3 * kPi / 3);
    }
    return 2 * d *
           (4 * kS3 / 3 * (1 - d * d / 3) * std::asin(unit_clamp(kS3 / (2 * d))) -
            (2.0 / 3 - 2 * kS3 * kPi / 27) * d * d + sq(4 * d * d - 3) - 2 * kS3 * kPi / 9 - 1);
}

double cdf_rhombus(double d) {
    if (d <= 0.0) {
        return 0.0;
    }
    if (d >= kS3) {
        return 1.0;
    }
    const double d2 = d * d;
    const double d3 = d2 * d;
    const double d4 = d2 * d2;
    if (d <= kS3 / 2) {
        return (2.0 / 3 + kS3 * kPi / 27) * d4 - 32.0 / 9 * d3 + 2 * kS3 * kPi / 3 * d2;
    }
    if (d <= 1.0) {
        return 4 * kS3 / 3 * (2 * d2 + d4 / 3) * std::asin(unit_clamp(kS3 / (2 * d))) +
               (2.0 / 3 - 5 * kS3 * kPi / 27) * d4 - 32.0 / 9 * d3 - 2 * kS3 * kPi / 3 * d2 +
               1.0 / 6 * (14 * d2 + 3) * sq(4 * d2 - 3);
    }
    return 2 * kS3 / 3 * (2 * d2 - d4 / 3) * std::asin(unit_clamp(kS3 / (2 * d))) +
           (kS3 * kPi / 27 - 1.0 / 3) * d4 - (2 * kS3 * kPi / 9 + 1) * d2 +
           1.0 / 36 * (22 * d2 + 15) * sq(4 * d2 - 3) + 0.25;
}

double pdf_rhombus_cross(double d) {
    if (d <= 0.0 || d >= 1.0) {
        return 0.0;
    }
    const double d2 = d * d;
    if (d <= kS3 / 6) {
        return 8.0 / 3 * d * (36 * d - (9 + 13 * kS3 * kPi) * d2);
    }
    if (d <= 0.5) {
        return 8.0 / 3 * d *
               ((36 * kS3 * std::acos(unit_clamp(kS3 / (6 * d))) - 13 * kS3 * kPi - 9) * d2 -
                9 * sq(36 * d2 - 3) - 6 * kS3 * std::asin(unit_clamp(kS3 / (6 * d))) +
                3 * kS3 * kPi + 36 * d);
    }
    if (d <= kS3 / 3) {
        return 8.0 / 3 * d *
               (12 * kS3 * (1 + d2) * std::asin(unit_clamp(1 / (2 * d))) +
                (36 * kS3 * std::acos(unit_clamp(kS3 / (6 * d))) - 9 - 19 * kS3 * kPi) * d2 +
                15 * sq(12 * d2 - 3) - 3 * kS3 * kPi -
                6 * kS3 * std::asin(unit_clamp(kS3 / (6 * d))) - 9 * sq(36 * d2 - 3) + 36 * d);
    }
    return 8.0 / 3 * d *
           ((12 * kS3 * std::acos(unit_clamp(1 / (2 * d))) -
             6 * kS3 * std::asin(unit_clamp(1 / (2 * d))) - 3 * kS3 * kPi - 18) *
                d2 -
            9 * kS3 / 2 * sq(4 * d2 - 1) + 36 * d - 4.5);
}

double cdf_rhombus_cross(double d) {
    if (d <= 0.0) {
        return 0.0;
    }
    if (d >= 1.0) {
        return 1.0;
    }
    const double d2 = d * d;
    const double d3 = d2 * d;
    const double d4 = d2 * d2;
    if (d <= kS3 / 6) {
        return 32 * d3 - (26 * kS3 * kPi / 3 + 6) * d4;
    }
    if (d <= 0.5) {
        return (24 * kS3 * std::acos(unit_clamp(kS3 / (6 * d))) - 26 * kS3 * kPi / 3 - 6) * d4 +
               32 * d3 +
               (4 * kS3 * kPi - 26.0 / 3 * sq(36 * d2 - 3) -
                8 * kS3 * std::asin(unit_clamp(kS3 / (6 * d)))) *
                   d2 -
               1.0 / 9 * sq(36 * d2 - 3);
    }
    if (d <= kS3 / 3) {
        return 1.0 / 9 * (126 * d2 + 9) * sq(12 * d2 - 3) -
               1.0 / 9 * (1 + 78 * d2) * sq(36 * d2 - 3) -
               38 * d2 / 3 *
                   (12 * kS3 / 19 * std::asin(unit_clamp(kS3 / (6 * d))) -
                    36 * kS3 * d2 / 19 * std::acos(unit_clamp(kS3 / (6 * d))) -
                    12 * kS3 / 19 * (2 + d2) * std::asin(unit_clamp(1 / (2 * d))) +
                    kS3 * kPi * (d2 + 6.0 / 19) + 9 * d2 / 19 - 48 * d / 19);
    }
    return (8 * kS3 * std::acos(unit_clamp(1 / (2 * d))) -
            4 * kS3 * std::asin(unit_clamp(1 / (2 * d))) - 2 * kS3 * kPi - 12) *
               d4 +
           32 * d3 + kS3 / 2 * (1 - 10 * d2) * sq(4 * d2 - 1) - 6 * d2 + 0.5;
}

double pdf_concave_cross(double d) {
    if (d <= 0.0 || d >= 1.0) {
        return 0.0;
    }
    const double d2 = d * d;
    if (d <= kS3 / 6) {
        return 8.0 / 3 * (12 * kS3 - 9 * d - 6 * kS3 * kPi * d) * d2;
    }
    if (d <= kS3 / 3) {
        return 4.0 / 3 * d *
               ((36 * kS3 * std::acos(unit_clamp(kS3 / (6 * d))) - 12 * kS3 * kPi - 18) * d2 +
                24 * kS3 * d - 9 * sq(36 * d2 - 3) + 3 * kS3 * kPi -
                6 * kS3 * std::asin(unit_clamp(kS3 / (6 * d))));
    }
    if (d <= kS3 / 2) {
        return 4.0 / 9 * d *
               ((36 * kS3 * std::acos(unit_clamp(1 / (2 * d))) - 6 * kS3 * kPi) * d2 -
                27 * sq(12 * d2 - 3) - 18 * kS3 * std::asin(unit_clamp(1 / (2 * d))) +
                12 * kS3 * kPi);
    }
    return 32 * kS3 / 3 * d *
           (9 * kS3 / 8 * sq(4 * d2 - 3) - 9.0 / 8 * sq(4 * d2 - 1) +
            (1.5 * d2 + 2.25) * std::asin(unit_clamp(kS3 / (2 * d))) +
            1.5 * d2 * std::acos(unit_clamp(1 / (2 * d))) - kPi * d2 -
            0.75 * std::asin(unit_clamp(1 / (2 * d))) - 5.0 / 8 * kPi);
}

double cdf_concave_cross(double d) {
    if (d <= 0.0) {
        return 0.0;
    }
    if (d >= 1.0) {
        return 1.0;
    }
    const double d2 = d * d;
    const double d3 = d2 * d;
    const double d4 = d2 * d2;
    if (d <= kS3 / 6) {
        return 32 * kS3 / 3 * d3 - (6 + 4 * kS3 * kPi) * d4;
    }
    if (d <= kS3 / 3) {
        return 1.0 / 18 * (-78 * d2 - 1) * sq(36 * d2 - 3) -
               4 * d2 *
                   (kS3 * std::asin(unit_clamp(kS3 / (6 * d))) -
                    3 * kS3 * d2 * std::acos(unit_clamp(kS3 / (6 * d))) +
                    (kPi * d2 - 8.0 / 3 * d - kPi / 2) * kS3 + 1.5 * d2);
    }
    if (d <= kS3 / 2) {
        return kS3 / 6 *
               (16 * kPi * d2 - 4 * kPi * d4 - sq(4 * d2 - 1) * (1 + 26 * d2) -
                24 * d2 *
                    (std::asin(unit_clamp(1 / (2 * d))) -
                     d2 * std::acos(unit_clamp(1 / (2 * d)))));
    }
    return 1.0 / 6 * (78 * d2 + 9) * sq(4 * d2 - 3) -
           8 * kS3 / 3 *
               ((1.0 / 16 + 13.0 / 8 * d2) * sq(4 * d2 - 1) +
                d2 * (1.5 * std::asin(unit_clamp(1 / (2 * d))) -
                      (1.5 * d2 + 4.5) * std::asin(unit_clamp(kS3 / (2 * d))) -
                      1.5 * d2 * std::acos(unit_clamp(1 / (2 * d))) + kPi * d2 + 5.0 / 4 * kPi));
}

// Build-time sanity for an exact distribution: endpoint values and
// continuity across the internal branch boundaries.
NamedDistribution checked(std::string name, std::function<double(double)> pdf,
                          std::function<double(double)> cdf, double support_max,
                          const std::vector<double>& branch_points) {
    constexpr double kEndpointTol = 1e-12;
    constexpr double kBranchTol = 1e-9;
    const double probe = 1e-12 * support_max;

    const double at_zero = cdf(probe);
    if (std::abs(at_zero) > kEndpointTol) {
        throw ConstructionError(name + ": cumulative function is " + std::to_string(at_zero) +
                                " near 0");
    }
    const double at_end = cdf(support_max * (1 - 1e-13));
    if (std::abs(at_end - 1.0) > kEndpointTol) {
        throw ConstructionError(name + ": cumulative function is " + std::to_string(at_end) +
                                " at the end of the support");
    }
    for (double p : branch_points) {
        const double jump = std::abs(cdf(p + probe) - cdf(p - probe));
        if (jump > kBranchTol) {
            std::ostringstream msg;
            msg << name << ": cumulative function jumps by " << jump << " at branch point " << p;
            throw ConstructionError(msg.str());
        }
    }
    return NamedDistribution{std::move(name), std::move(pdf), std::move(cdf), support_max};
}

} // namespace

NamedDistribution equilateral_unit() {
    return checked("equilateral-unit", pdf_equilateral, cdf_equilateral, 1.0, {kS3 / 2});
}

NamedDistribution rhombus_unit() {
    return checked("rhombus-unit", pdf_rhombus, cdf_rhombus, kS3, {kS3 / 2, 1.0});
}

NamedDistribution rhombus_pair_cross() {
    return checked("rhombus-pair-cross", pdf_rhombus_cross, cdf_rhombus_cross, 1.0,
                   {kS3 / 6, 0.5, kS3 / 3});
}

NamedDistribution concave_pair_cross() {
    return checked("concave-pair-cross", pdf_concave_cross, cdf_concave_cross, 1.0,
                   {kS3 / 6, kS3 / 3, kS3 / 2});
}

NamedDistribution scaled(const NamedDistribution& base, double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw InvalidScale("scale factor must be a positive finite number");
    }
    NamedDistribution out;
    std::ostringstream name;
    name << base.name << "*" << s;
    out.name = name.str();
    out.support_max = base.support_max * s;
    const auto pdf = base.pdf;
    const auto cdf = base.cdf;
    out.pdf = [pdf, s](double d) { return pdf(d / s) / s; };
    out.cdf = [cdf, s](double d) { return cdf(d / s); };
    return out;
}

} // namespace tridist
