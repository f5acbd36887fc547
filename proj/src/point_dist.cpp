#include "tridist/point_dist.hpp"

#include "tridist/chord_dist.hpp"
#include "tridist/errors.hpp"
#include "tridist/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <sstream>
#include <utility>

namespace tridist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGateRelTol = 1e-5; // acceptance bound for the derivative check
constexpr int kGateProbes = 50;
constexpr double kDomainSlack = 1e-12;

double cot(double x) { return std::cos(x) / std::sin(x); }
double unit_clamp(double x) { return std::clamp(x, -1.0, 1.0); }
double sq(double x) { return std::sqrt(std::max(x, 0.0)); }

// Shared inverse-trig/radical terms of the closed antiderivatives.
struct Terms {
    double ac1, ac2, ac3; // acos(h/d), clamped
    double as1, as2, as3; // asin(h/d), clamped
    double r1, r2, r3;    // sqrt(d^2 - h^2), clamped at 0
};

Terms terms_at(const Triangle& t, double d) {
    Terms m{};
    if (d > 0.0) {
        m.ac1 = std::acos(unit_clamp(t.h_a / d));
        m.ac2 = std::acos(unit_clamp(t.h_b / d));
        m.ac3 = std::acos(unit_clamp(t.h_c / d));
        m.as1 = std::asin(unit_clamp(t.h_a / d));
        m.as2 = std::asin(unit_clamp(t.h_b / d));
        m.as3 = std::asin(unit_clamp(t.h_c / d));
    } else {
        m.as1 = m.as2 = m.as3 = kPi / 2.0;
    }
    m.r1 = sq(d * d - t.h_a * t.h_a);
    m.r2 = sq(d * d - t.h_b * t.h_b);
    m.r3 = sq(d * d - t.h_c * t.h_c);
    return m;
}

double angle_sum_term(const Triangle& t) {
    return (kPi - t.alpha) * cot(t.alpha) + (kPi - t.beta) * cot(t.beta) +
           (kPi - t.gamma) * cot(t.gamma) + 3.0;
}

// Closed antiderivative of chord_measure(t, k, .) at d.
double measure_integral_closed(const Triangle& t, int k, double d) {
    const double al = t.alpha, be = t.beta, ga = t.gamma;
    const double a = t.a, b = t.b, c = t.c;
    const double ha = t.h_a, hb = t.h_b, hc = t.h_c;
    const double ca = cot(al), cb = cot(be), cg = cot(ga);
    const double T0 = angle_sum_term(t);
    const auto [ac1, ac2, ac3, as1, as2, as3, r1, r2, r3] = terms_at(t, d);
    switch (k) {
    case 1:
        return d * d / 4 * T0;
    case 2:
        return 1.5 * a * r1 - a * d * d / (2 * ha) * ac1 + a * ha * as1 + d * d / 4 * T0;
    case 3:
        return 0.75 * (a * r1 + b * r2) - d * d / 4 * (a / ha * ac1 + b / hb * ac2) +
               0.5 * (a * ha * as1 + b * hb * as2) +
               d / 2 * (kPi * d / 4 * (a / ha + b / hb) + d + 2 * c - ga * d * cg);
    case 4:
        return 0.75 * (b * r2 + c * r3) - d * d / 4 * (b / hb * ac2 + c / hc * ac3) +
               0.5 * (b * hb * as2 + c * hc * as3) +
               d * (d / 4 * (al * ca - be * cb - ga * cg) + kPi * a * d / (8 * ha) + d / 4 +
                    b + c);
    case 5:
        return 1.5 * (a * r1 + b * r2) - d * d / 2 * (a / ha * ac1 + b / hb * ac2) +
               a * ha * as1 + b * hb * as2 + d * d / 4 * T0;
    case 6:
        return 1.5 * (a * r1 + b * r2 + c * r3) -
               d * d / 2 * (a / ha * ac1 + b / hb * ac2 + c / hc * ac3) + a * ha * as1 +
               b * hb * as2 + c * hc * as3 + d * d / 4 * T0;
    case 7:
        return 0.75 * (a * r1 + b * r2 + 2 * c * r3) -
               d * d / 4 * (a / ha * ac1 + b / hb * ac2 + 2 * c / hc * ac3) +
               0.5 * (a * ha * as1 + b * hb * as2 + 2 * c * hc * as3) +
               d / 2 * (kPi * d / 4 * (a / ha + b / hb) + d + 2 * c - ga * d * cg);
    default:
        throw DomainError("antiderivative regime must be 1..7");
    }
}

// Closed antiderivative of d * measure_integral_closed(t, k, d) at d.
double measure_moment_closed(const Triangle& t, int k, double d) {
    const double al = t.alpha, be = t.beta, ga = t.gamma;
    const double a = t.a, b = t.b, c = t.c;
    const double ha = t.h_a, hb = t.h_b, hc = t.h_c;
    const double ca = cot(al), cb = cot(be), cg = cot(ga);
    const double T0 = angle_sum_term(t);
    const auto [ac1, ac2, ac3, as1, as2, as3, r1, r2, r3] = terms_at(t, d);
    switch (k) {
    case 1:
        return d * d * d * d / 16 * T0;
    case 2:
        return 1.0 / (48 * ha) *
               ((26 * a * ha * d * d + 4 * a * ha * ha * ha) * r1 -
                3 * d * d *
                    (2 * a * d * d * ac1 +
                     ha * (d * d *
                               ((al - kPi) * ca + (be - kPi) * cb + (ga - kPi) * cg - 3) -
                           8 * a * ha * as1)));
    case 3:
        return 1.0 / (96 * ha * hb) *
               (26 * a * ha * hb * (d * d + 2 * ha * ha / 13) * r1 +
                26 * b * ha * hb * (d * d + 2 * hb * hb / 13) * r2 -
                12 * d * d *
                    (d * d / 2 * (a * hb * ac1 + b * ha * ac2) -
                     2 * ha * hb * (a * ha * as1 + b * hb * as2) +
                     d * (ga * ha * hb * d * cg -
                          ha * ((8 * c / 3 + d) * hb + kPi * b * d / 4) -
                          kPi * a * hb * d / 4)));
    case 4:
        return 1.0 / (96 * ha * hb * hc) *
               (4 * ha * hb * hc *
                    (b * (13 * d * d / 2 + hb * hb) * r2 +
                     c * (13 * d * d / 2 + hc * hc) * r3) +
                6 * d * d *
                    (-d * d * ha * hc * b * ac2 +
                     hb * (-d * d * c * ha * ac3 +
                           hc * (4 * ha * (b * hb * as2 + c * hc * as3) +
                                 d * (d * ha * (al * ca - be * cb - ga * cg) +
                                      ha * (d + 16.0 / 3 * (b + c)) + kPi * a * d / 2)))));
    case 5:
        return 1.0 / (48 * ha * hb) *
               (26 * ha * hb *
                    (a * (d * d + 2 * ha * ha / 13) * r1 +
                     b * (d * d + 2 * hb * hb / 13) * r2) -
                3 * d * d *
                    (2 * a * hb * d * d * ac1 +
                     ha * (2 * b * d * d * ac2 -
                           hb * (8 * a * ha * as1 + 8 * b * hb * as2 + d * d * T0))));
    case 6:
        return 1.0 / (48 * ha * hb * hc) *
               (4 * ha * hb * hc *
                    (13 * a / 2 * (d * d + 2 * ha * ha / 13) * r1 +
                     b * (13 * d * d / 2 + hb * hb) * r2 +
                     c * (13 * d * d / 2 + hc * hc) * r3) -
                3 * d * d *
                    (2 * a * hb * hc * d * d * ac1 +
                     ha * (2 * b * hc * d * d * ac2 +
                           hb * (2 * c * d * d * ac3 -
                                 hc * (8 * (a * ha * as1 + b * hb * as2 + c * hc * as3) +
                                       d * d * T0)))));
    case 7:
        return 1.0 / (96 * ha * hb * hc) *
               (26 * ha * hb * hc *
                    (a * (d * d + 2 * ha * ha / 13) * r1 +
                     b * (d * d + 2 * hb * hb / 13) * r2 +
                     2 * c * (d * d + 2 * hc * hc / 13) * r3) -
                12 * d * d *
                    (d * d / 2 * (a * hb * hc * ac1 + b * ha * hc * ac2 + 2 * c * ha * hb * ac3) -
                     hc * (2 * ha * hb * (a * ha * as1 + b * hb * as2 + 2 * c * hc * as3) -
                           d * (ga * ha * hb * d * cg -
                                ha * (hb * (8 * c / 3 + d) + kPi * d * b / 4) -
                                kPi * a * hb * d / 4))));
    default:
        throw DomainError("antiderivative regime must be 1..7");
    }
}

struct Piece {
    double lo = 0.0, hi = 0.0;
    int k = 0;
    std::function<double(double)> integral;
    std::function<double(double)> moment;
    double integral_lo = 0.0;
    double moment_lo = 0.0;
    double istar_lo = 0.0; // cumulative I* at lo
    double idia_lo = 0.0;  // cumulative I-diamond at lo
    double coeff = 0.0;    // istar_lo - integral_lo (partial-piece weight)
};

struct GateResult {
    bool ok = true;
    double worst_rel = 0.0;
    double worst_at = 0.0;
};

GateResult run_gate(const std::function<double(double)>& antiderivative,
                    const std::function<double(double)>& derivative, double lo, double hi,
                    double eps_cap, double denom_floor) {
    GateResult r;
    const double width = hi - lo;
    const double eps = std::min(eps_cap, 0.1 * width);
    for (int j = 0; j < kGateProbes; ++j) {
        const double d = lo + width * (j + 0.5) / kGateProbes;
        const double fd = (antiderivative(d + eps) - antiderivative(d - eps)) / (2 * eps);
        const double ref = derivative(d);
        const double rel = std::abs(fd - ref) / std::max(std::abs(ref), denom_floor);
        if (rel > r.worst_rel) {
            r.worst_rel = rel;
            r.worst_at = d;
        }
    }
    r.ok = r.worst_rel <= kGateRelTol;
    return r;
}

struct Model {
    Triangle t;
    std::vector<Piece> pieces;
    std::vector<std::string> notes;

    const Piece& piece_for(double d) const {
        // d in (lo, hi] selects a piece; d <= first lo selects the first.
        std::size_t i = pieces.size() - 1;
        while (i > 0 && d <= pieces[i].lo) {
            --i;
        }
        return pieces[i];
    }

    double istar(double d) const {
        if (d <= 0.0) {
            return 0.0;
        }
        d = std::min(d, t.a);
        const Piece& p = piece_for(d);
        return p.istar_lo + p.integral(d) - p.integral_lo;
    }

    double idia(double d) const {
        if (d <= 0.0) {
            return 0.0;
        }
        d = std::min(d, t.a);
        const Piece& p = piece_for(d);
        return p.idia_lo + 0.5 * (d * d - p.lo * p.lo) * p.coeff + p.moment(d) - p.moment_lo;
    }

    double pdf(double d) const {
        if (d <= 0.0 || d >= t.a) {
            return 0.0;
        }
        return 2 * d / t.area * (kPi + (istar(d) - t.u * d) / t.area);
    }

    double cdf(double d) const {
        if (d <= 0.0) {
            return 0.0;
        }
        if (d > t.a) {
            return 1.0;
        }
        const double A = t.area;
        return 1 / A * (d * d * (kPi - 2 * t.u / (3 * A) * d) + 2 / A * idia(d));
    }
};

std::shared_ptr<Model> build_model(const Triangle& t, unsigned force_quadrature) {
    auto model = std::make_shared<Model>();
    model->t = t;

    const CasePlan plan = case_plan(t);
    for (std::size_t i = 0; i < plan.regimes.size(); ++i) {
        const double lo = plan.breaks[i];
        const double hi = plan.breaks[i + 1];
        if (hi - lo <= 1e-12 * t.a) {
            continue; // breakpoint tie; the piece carries no measure
        }
        Piece p;
        p.lo = lo;
        p.hi = hi;
        p.k = plan.regimes[i];
        model->pieces.push_back(std::move(p));
    }
    if (model->pieces.empty()) {
        throw ConstructionError("distance model has no piece of positive width");
    }

    const double eps_cap = 1e-6 * t.a;
    const double integral_floor = 1e-9 * t.u;
    const double moment_floor = 1e-9 * t.u * t.a * t.a;

    for (Piece& p : model->pieces) {
        const int k = p.k;
        const double lo = p.lo;
        auto closed_integral = [t, k](double d) { return measure_integral_closed(t, k, d); };
        auto derivative = [t, k](double d) { return chord_measure(t, k, d); };

        const bool force_int = (force_quadrature >> k) & 1u;
        GateResult gi;
        if (!force_int) {
            gi = run_gate(closed_integral, derivative, p.lo, p.hi, eps_cap, integral_floor);
        }
        if (force_int || !gi.ok) {
            p.integral = [t, k, lo](double d) {
                return integrate([&t, k](double x) { return chord_measure(t, k, x); }, lo, d);
            };
            std::ostringstream msg;
            msg << "regime " << k << " integral: ";
            if (force_int) {
                msg << "quadrature forced by caller";
            } else {
                msg << "closed form failed derivative check (worst rel " << gi.worst_rel
                    << " at d=" << gi.worst_at << "); using quadrature";
            }
            model->notes.push_back(msg.str());
        } else {
            p.integral = closed_integral;
        }

        auto closed_moment = [t, k](double d) { return measure_moment_closed(t, k, d); };
        auto moment_derivative = [&p](double d) { return d * p.integral(d); };

        const bool force_mom = (force_quadrature >> (k + 10)) & 1u;
        GateResult gm;
        if (!force_mom) {
            gm = run_gate(closed_moment, moment_derivative, p.lo, p.hi, eps_cap, moment_floor);
        }
        if (force_mom || !gm.ok) {
            auto integral_fn = p.integral;
            p.moment = [integral_fn, lo](double d) {
                return integrate([&integral_fn](double x) { return x * integral_fn(x); }, lo, d);
            };
            std::ostringstream msg;
            msg << "regime " << k << " moment: ";
            if (force_mom) {
                msg << "quadrature forced by caller";
            } else {
                msg << "closed form failed derivative check (worst rel " << gm.worst_rel
                    << " at d=" << gm.worst_at << "); using quadrature";
            }
            model->notes.push_back(msg.str());
        } else {
            p.moment = closed_moment;
        }
    }

    double istar_acc = 0.0;
    double idia_acc = 0.0;
    for (Piece& p : model->pieces) {
        p.integral_lo = p.integral(p.lo);
        p.moment_lo = p.moment(p.lo);
        p.istar_lo = istar_acc;
        p.idia_lo = idia_acc;
        p.coeff = p.istar_lo - p.integral_lo;
        istar_acc += p.integral(p.hi) - p.integral_lo;
        idia_acc += 0.5 * (p.hi * p.hi - p.lo * p.lo) * p.coeff + p.moment(p.hi) - p.moment_lo;
    }
    return model;
}

double checked_domain(const Triangle& t, double d, const char* what) {
    if (!(d >= -kDomainSlack * t.a) || !(d <= t.a * (1 + kDomainSlack))) {
        throw DomainError(std::string(what) + " argument must lie in [0, a]");
    }
    return std::clamp(d, 0.0, t.a);
}

} // namespace

AntiderivativeTable antiderivative_table(const Triangle& t, unsigned force_quadrature) {
    auto model = build_model(t, force_quadrature);
    AntiderivativeTable table;
    for (int k = 1; k <= 7; ++k) {
        // Regimes outside the case plan keep their closed forms (no piece to
        // gate them against; they carry no measure for this triangle).
        table.integral[k] = [t, k](double d) { return measure_integral_closed(t, k, d); };
        table.moment[k] = [t, k](double d) { return measure_moment_closed(t, k, d); };
    }
    for (const Piece& p : model->pieces) {
        table.integral[p.k] = p.integral;
        table.moment[p.k] = p.moment;
    }
    table.fallback_notes = model->notes;
    return table;
}

double i_star(const Triangle& t, double d, unsigned force_quadrature) {
    const double x = checked_domain(t, d, "i_star");
    return build_model(t, force_quadrature)->istar(x);
}

double i_diamond(const Triangle& t, double d, unsigned force_quadrature) {
    const double x = checked_domain(t, d, "i_diamond");
    return build_model(t, force_quadrature)->idia(x);
}

PointDistances point_distances(const Triangle& t, unsigned force_quadrature) {
    auto model = build_model(t, force_quadrature);
    std::vector<double> breaks;
    breaks.push_back(model->pieces.front().lo);
    for (const Piece& p : model->pieces) {
        breaks.push_back(p.hi);
    }
    std::vector<PiecewiseFn::Evaluator> pdf_segs, cdf_segs;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        pdf_segs.emplace_back([model](double d) { return model->pdf(d); });
        cdf_segs.emplace_back([model](double d) { return model->cdf(d); });
    }
    PiecewiseFn pdf(PiecewiseFn::Kind::Pdf, breaks, std::move(pdf_segs));
    PiecewiseFn cdf(PiecewiseFn::Kind::Cdf, breaks, std::move(cdf_segs));
    return PointDistances{std::move(pdf), std::move(cdf), model->notes};
}

PiecewiseFn pdist_pdf(const Triangle& t) { return std::move(point_distances(t).pdf); }

PiecewiseFn pdist_cdf(const Triangle& t) { return std::move(point_distances(t).cdf); }

} // namespace tridist
