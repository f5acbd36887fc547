#include "tridist/quadrature.hpp"

#include <cmath>

namespace tridist {

namespace {

double adapt(const std::function<double(double)>& f, double a, double fa, double b, double fb,
             double m, double fm, double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                 int max_depth) {
    if (lo == hi) {
        return 0.0;
    }
    if (lo > hi) {
        return -integrate(f, hi, lo, abs_tol, max_depth);
    }
    const double m = 0.5 * (lo + hi);
    const double fa = f(lo);
    const double fb = f(hi);
    const double fm = f(m);
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    return adapt(f, lo, fa, hi, fb, m, fm, whole, abs_tol, max_depth);
}

} // namespace tridist
