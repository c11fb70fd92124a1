#pragma once

// Quadrature and bracketing helpers shared by the physics modules.

#include <functional>

namespace lightclock::numerics {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int intervals = 0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b].
/// Subdivides the interval with the largest error estimate until the summed
/// estimate is below max(abs_tol, rel_tol·|I|) or max_intervals is reached.
/// Deterministic: the same inputs always produce the same subdivision.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double rel_tol = 1e-13, double abs_tol = 1e-15,
                           int max_intervals = 2000);

/// Bisection on a bracket with f(lo)·f(hi) ≤ 0. Iterates until the bracket
/// stops shrinking in floating point (or max_iter), so the result is as tight
/// as double precision allows. Throws DomainError without a sign change.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              int max_iter = 400);

/// (f(x+h) − f(x−h)) / 2h.
double central_difference(const std::function<double(double)>& f, double x, double h);

}  // namespace lightclock::numerics
