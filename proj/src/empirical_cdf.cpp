#include "tridist/empirical_cdf.hpp"

#include "tridist/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tridist {

EmpiricalCDF::EmpiricalCDF(std::vector<double> samples) : sorted_(std::move(samples)) {
    if (sorted_.empty()) {
        throw EmptySample("empirical distribution needs at least one sample");
    }
    for (double s : sorted_) {
        if (!std::isfinite(s)) {
            throw ConstructionError("empirical samples must be finite");
        }
    }
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCDF::operator()(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCDF::at_left(double x) const {
    const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EmpiricalCDF empirical_cdf_from_samples(std::vector<double> samples) {
    return EmpiricalCDF(std::move(samples));
}

} // namespace tridist
