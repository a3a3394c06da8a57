#pragma once

#include <functional>

namespace qwalk {

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to the given
/// absolute error target. The integrands here are smooth after the arcsine
/// endpoint substitutions, so a handful of bisections suffices.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

} // namespace qwalk
