#pragma once

#include <functional>

namespace tridist {

// Adaptive Simpson quadrature with Richardson extrapolation.  Subdivides
// until the local Simpson error estimate meets the (absolute) tolerance or
// the recursion depth limit is reached.  Integrands are expected to be
// smooth inside [lo, hi]; integrate piecewise functions segment by segment.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol = 1e-10, int max_depth = 40);

} // namespace tridist
