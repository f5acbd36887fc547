#include "tridist/piecewise.hpp"

#include "tridist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tridist {

namespace {

constexpr double kWidthTol = 1e-12;   // of the total span: below this a piece is dropped
constexpr double kJoinTol = 1e-9;     // allowed mismatch between adjacent segments
constexpr double kEndpointTol = 1e-9; // allowed deviation of a Cdf from 0/1 at the ends
constexpr double kMonotoneSlack = 1e-9;
constexpr double kDensityFloor = -1e-12;
constexpr int kProbeCount = 1000;

} // namespace

PiecewiseFn::PiecewiseFn(Kind kind, std::vector<double> breakpoints,
                         std::vector<Evaluator> segments)
    : kind_(kind) {
    if (breakpoints.size() < 2 || segments.size() + 1 != breakpoints.size()) {
        throw ConstructionError("piecewise function needs n+1 breakpoints for n segments");
    }
    for (double x : breakpoints) {
        if (!std::isfinite(x)) {
            throw ConstructionError("piecewise breakpoints must be finite");
        }
    }
    const double span = breakpoints.back() - breakpoints.front();
    if (!(span > 0.0)) {
        throw ConstructionError("piecewise domain has non-positive span");
    }

    // Drop pieces whose width is negligible against the span (ties between
    // consecutive breakpoints, including sub-tolerance float noise).
    const double drop_tol = kWidthTol * span;
    breaks_.push_back(breakpoints.front());
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double width = breakpoints[i + 1] - breakpoints[i];
        if (width < -drop_tol) {
            throw ConstructionError("piecewise breakpoints must be nondecreasing");
        }
        if (width > drop_tol) {
            breaks_.push_back(breakpoints[i + 1]);
            segments_.push_back(segments[i]);
        } else if (i + 2 == breakpoints.size() && !segments_.empty()) {
            // The final piece collapsed; keep the true right endpoint of the
            // domain rather than the last kept breakpoint.
            breaks_.back() = breakpoints[i + 1];
        }
    }
    if (segments_.empty()) {
        throw ConstructionError("piecewise function has no piece of positive width");
    }
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i) {
        if (!(breaks_[i] < breaks_[i + 1])) {
            throw ConstructionError("piecewise breakpoints must be strictly increasing");
        }
    }

    for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
        const double x = breaks_[i + 1];
        const double left = segments_[i](x);
        const double right = segments_[i + 1](x);
        if (!(std::abs(left - right) <= kJoinTol)) {
            throw ConstructionError("piecewise segments disagree at x=" + std::to_string(x) +
                                    " by " + std::to_string(left - right));
        }
    }

    double prev = 0.0;
    for (int i = 0; i < kProbeCount; ++i) {
        const double x = breaks_.front() + span * static_cast<double>(i) / (kProbeCount - 1);
        const double v = (*this)(x);
        if (!std::isfinite(v)) {
            throw ConstructionError("piecewise function is not finite at x=" + std::to_string(x));
        }
        if (kind_ == Kind::Cdf) {
            if (i == 0 && std::abs(v) > kEndpointTol) {
                throw NotACdf("cumulative function is " + std::to_string(v) +
                              " at the left endpoint");
            }
            if (i == kProbeCount - 1 && std::abs(v - 1.0) > kEndpointTol) {
                throw NotACdf("cumulative function is " + std::to_string(v) +
                              " at the right endpoint");
            }
            if (i > 0 && v < prev - kMonotoneSlack) {
                throw NotACdf("cumulative function decreases near x=" + std::to_string(x));
            }
            prev = v;
        } else if (v < kDensityFloor) {
            throw ConstructionError("density is negative (" + std::to_string(v) + ") at x=" +
                                    std::to_string(x));
        }
    }
}

double PiecewiseFn::operator()(double x) const {
    if (x < breaks_.front()) {
        return 0.0;
    }
    if (x > breaks_.back()) {
        return kind_ == Kind::Cdf ? 1.0 : 0.0;
    }
    // lower_bound gives the first breakpoint >= x, so x in (b[j-1], b[j]]
    // selects segment j-1; the left domain edge belongs to segment 0.
    const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
    const std::size_t j = static_cast<std::size_t>(it - breaks_.begin());
    const std::size_t seg = j == 0 ? 0 : j - 1;
    return segments_[std::min(seg, segments_.size() - 1)](x);
}

} // namespace tridist
