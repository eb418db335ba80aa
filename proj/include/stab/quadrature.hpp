#pragma once

#include <functional>

namespace stab {

// Numerical integration on a finite interval [a, b].
//
// integrate_smooth uses Romberg extrapolation and is the right choice for
// integrands with many continuous derivatives; it converges rapidly and
// throws QuadratureNotConverged if the requested tolerance is not met.
//
// integrate_adaptive uses adaptive Simpson subdivision with Richardson
// correction and handles integrands with isolated kinks (absolute values,
// piecewise definitions) at the cost of more evaluations.
double integrate_smooth(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12);

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10);

} // namespace stab
