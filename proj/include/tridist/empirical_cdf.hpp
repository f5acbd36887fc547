#pragma once

#include <cstddef>
#include <vector>

namespace tridist {

// Right-continuous step function F(x) = (#samples <= x) / n.  Construction
// copies and sorts the samples; throws EmptySample when n == 0 and
// ConstructionError when a sample is not finite.
class EmpiricalCDF {
public:
    explicit EmpiricalCDF(std::vector<double> samples);

    // Fraction of samples <= x.
    double operator()(double x) const;
    // Fraction of samples < x (the left limit at x).
    double at_left(double x) const;

    const std::vector<double>& sorted_samples() const { return sorted_; }
    std::size_t size() const { return sorted_.size(); }

private:
    std::vector<double> sorted_;
};

EmpiricalCDF empirical_cdf_from_samples(std::vector<double> samples);

} // namespace tridist
