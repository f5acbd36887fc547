#include "tridist/chord_dist.hpp"

#include "tridist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace tridist {

namespace {

constexpr double kPi = std::numbers::pi;

double cot(double x) { return std::cos(x) / std::sin(x); }

// Ratio arguments may drift past [-1, 1] by float noise near breakpoint
// ties; clamp before the inverse trig call.
double unit_clamp(double x) { return std::clamp(x, -1.0, 1.0); }

struct Phis {
    double p1, p2, p3;
};

Phis phis(const Triangle& t, double l) {
    if (!(l > 0.0)) {
        return {0.0, 0.0, 0.0};
    }
    return {std::acos(unit_clamp(t.h_a / l)), std::acos(unit_clamp(t.h_b / l)),
            std::acos(unit_clamp(t.h_c / l))};
}

} // namespace

CasePlan case_plan(const Triangle& t) {
    switch (classify(t)) {
    case CaseLabel::Obtuse:
        return {{0.0, t.h_a, t.c, t.b, t.a}, {1, 2, 3, 4}};
    case CaseLabel::AcuteLowAltitude:
        return {{0.0, t.h_a, t.h_b, t.h_c, t.c, t.b, t.a}, {1, 2, 5, 6, 7, 4}};
    case CaseLabel::AcuteHighAltitude:
    default:
        return {{0.0, t.h_a, t.h_b, t.c, t.h_c, t.b, t.a}, {1, 2, 5, 3, 7, 4}};
    }
}

double chord_measure(const Triangle& t, int k, double l) {
    const double al = t.alpha, be = t.beta, ga = t.gamma;
    const double a = t.a, b = t.b, c = t.c;
    const auto [p1, p2, p3] = phis(t, l);
    const double ca = cot(al), cb = cot(be), cg = cot(ga);
    switch (k) {
    case 1:
        return 1.5 * l + l / 2 * ((kPi - al) * ca + (kPi - be) * cb + (kPi - ga) * cg);
    case 2:
        return 1.5 * l + a * std::sin(p1) +
               l / 2 * ((kPi - al) * ca + (kPi - be - 2 * p1) * cb + (kPi - ga - 2 * p1) * cg);
    case 3:
        return l + c + a / 2 * std::sin(p1) + b / 2 * std::sin(p2) +
               l / 2 * ((kPi / 2 - p2) * ca + (kPi / 2 - p1) * cb +
                        (kPi - 2 * ga - p1 - p2) * cg);
    case 4:
        return l / 2 + b + c + b / 2 * std::sin(p2) + c / 2 * std::sin(p3) +
               l / 2 * ((al - p2 - p3) * ca + (kPi / 2 - be - p3) * cb +
                        (kPi / 2 - ga - p2) * cg);
    case 5:
        return 1.5 * l + a * std::sin(p1) + b * std::sin(p2) +
               l / 2 * ((kPi - al - 2 * p2) * ca + (kPi - be - 2 * p1) * cb +
                        (kPi - ga - 2 * p1 - 2 * p2) * cg);
    case 6:
        return 1.5 * l + a * std::sin(p1) + b * std::sin(p2) + c * std::sin(p3) +
               l / 2 * ((kPi - al - 2 * p2 - 2 * p3) * ca + (kPi - be - 2 * p1 - 2 * p3) * cb +
                        (kPi - ga - 2 * p1 - 2 * p2) * cg);
    case 7:
        return l + c + a / 2 * std::sin(p1) + b / 2 * std::sin(p2) + c * std::sin(p3) +
               l / 2 * ((kPi / 2 - p2 - 2 * p3) * ca + (kPi / 2 - p1 - 2 * p3) * cb +
                        (kPi - 2 * ga - p1 - p2) * cg);
    default:
        throw DomainError("chord measure regime must be 1..7 (got " + std::to_string(k) + ")");
    }
}

PiecewiseFn chord_cdf(const Triangle& t) {
    const CasePlan plan = case_plan(t);
    std::vector<PiecewiseFn::Evaluator> segments;
    segments.reserve(plan.regimes.size());
    for (int k : plan.regimes) {
        segments.push_back([t, k](double l) { return chord_measure(t, k, l) / t.u; });
    }
    return PiecewiseFn(PiecewiseFn::Kind::Cdf, plan.breaks, std::move(segments));
}

namespace {

constexpr double kThetaTol = 1e-12; // match tolerance for the side-parallel directions

} // namespace

SweepOrientation sweep_orientation(const Triangle& t, double theta) {
    const double a = t.a, b = t.b, c = t.c;
    const double be = t.beta, ga = t.gamma;
    const Vec2 A{b * std::cos(ga), t.h_a};
    const Vec2 B{a, 0.0};

    SweepOrientation o{};
    if (std::abs(theta) < kThetaTol || std::abs(theta - kPi) < kThetaTol) {
        // Sweep line parallel to side a (the x-axis).
        o = {true, t.h_a, 0.0, 0.0, a};
    } else if (std::abs(theta - ga) < kThetaTol) {
        // Parallel to side b.
        o = {true, t.h_b, 0.0, 0.0, b};
    } else if (std::abs(theta - (kPi - be)) < kThetaTol) {
        // Parallel to side c.
        o = {true, t.h_c, 0.0, 0.0, c};
    } else if (theta > 0.0 && theta < ga) {
        // Vertex C is between the supporting lines through A and B.  The
        // peak chord runs from C to the opposite side; its far end I lies
        // on side c (between A and B).
        const double d1 = b * std::sin(ga - theta);
        const double d2 = a * std::sin(theta);
        const double yI = a / (cot(be) + cot(theta));
        const double xI = yI * cot(theta);
        o = {false, d1 + d2, d1, d2, std::hypot(xI, yI)};
    } else if (theta > ga && theta < kPi - be) {
        // Vertex A is interior to the strip; the peak chord ends at I on
        // side a (the x-axis).
        const double d1 = b * std::sin(theta - ga);
        const double d2 = c * std::sin(theta + be);
        const double xI = b / ((cot(ga) + cot(theta - ga)) * std::sin(ga));
        o = {false, d1 + d2, d1, d2, std::hypot(xI - A.x, 0.0 - A.y)};
    } else if (theta > kPi - be && theta < kPi) {
        // Vertex B is interior; the peak chord ends at I on side b.
        const double d1 = a * std::sin(theta);
        const double d2 = -c * std::sin(theta + be);
        const double yI = a / (cot(ga) - cot(theta));
        const double xI = yI * cot(ga);
        o = {false, d1 + d2, d1, d2, std::hypot(xI - B.x, yI - B.y)};
    } else {
        throw DomainError("sweep direction must lie in [0, pi]");
    }
    return o;
}

std::vector<ChordSample> chord_sweep(const Triangle& t, double dtheta, double dd) {
    if (!(dtheta > 0.0) || !(dd > 0.0)) {
        throw DomainError("sweep step sizes must be positive");
    }
    std::vector<double> thetas;
    const int n = static_cast<int>(std::floor(kPi / dtheta + 1e-9));
    thetas.reserve(static_cast<std::size_t>(n) + 4);
    for (int k = 0; k <= n; ++k) {
        thetas.push_back(k * dtheta);
    }
    if (thetas.back() < kPi - kThetaTol) {
        thetas.push_back(kPi);
    }
    for (double s : {t.gamma, kPi - t.beta}) {
        const bool present = std::any_of(thetas.begin(), thetas.end(),
                                         [s](double th) { return std::abs(s - th) < kThetaTol; });
        if (!present) {
            thetas.push_back(s);
        }
    }
    std::sort(thetas.begin(), thetas.end());

    std::vector<ChordSample> samples;
    for (double th : thetas) {
        const SweepOrientation o = sweep_orientation(t, th);
        long k = 0;
        double off = 0.0;
        while (off <= o.width + 1e-15) {
            double len;
            if (o.side_parallel) {
                len = off * o.base / o.width;
            } else {
                len = off <= o.d1 ? off * o.base / o.d1 : (o.width - off) * o.base / o.d2;
            }
            samples.push_back({th, len});
            ++k;
            off = static_cast<double>(k) * dd;
        }
    }
    return samples;
}

} // namespace tridist
