#pragma once

#include <functional>
#include <vector>

namespace tridist {

// A piecewise-defined distribution function (density or cumulative) on
// [breakpoints.front(), breakpoints.back()].  Segment i covers
// (breakpoints[i], breakpoints[i+1]]; evaluation exactly at a breakpoint
// uses the segment to its left (the leftmost breakpoint belongs to segment
// 0).  Outside the domain a Cdf evaluates to 0 below and 1 above, while a
// Pdf evaluates to 0 on both sides.
//
// Construction validates the whole object and throws on failure:
//  - zero-width pieces (width <= 1e-12 of the span) are dropped, after which
//    breakpoints must be strictly increasing       -> ConstructionError
//  - adjacent segments must agree at the interior breakpoints within 1e-9
//                                                  -> ConstructionError
//  - Cdf: endpoints within 1e-9 of 0 and 1, and nondecreasing (slack 1e-9)
//    on a 1000-point probe grid                    -> NotACdf
//  - Pdf: no probe value below -1e-12              -> ConstructionError
class PiecewiseFn {
public:
    enum class Kind { Cdf, Pdf };
    using Evaluator = std::function<double(double)>;

    PiecewiseFn(Kind kind, std::vector<double> breakpoints, std::vector<Evaluator> segments);

    double operator()(double x) const;

    Kind kind() const { return kind_; }
    const std::vector<double>& breakpoints() const { return breaks_; }
    double domain_min() const { return breaks_.front(); }
    double domain_max() const { return breaks_.back(); }

private:
    Kind kind_;
    std::vector<double> breaks_;
    std::vector<Evaluator> segments_;
};

} // namespace tridist
