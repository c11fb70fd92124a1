#pragma once

/**
 * First-order infinitesimal arithmetic.
 *
 * A Dual is real + eps·ε with ε² = 0. It stands in for a finite hyperreal
 * whose non-standard part is an infinitesimal of order one: the real field is
 * the standard part and eps carries the first-order coefficient. Products of
 * two infinitesimal parts are discarded by definition, so every operation here
 * is exact truncated Taylor arithmetic rather than an approximation.
 *
 * Evaluating a smooth f on Dual{x, 1} yields Dual{f(x), f'(x)}.
 */

#include <cmath>

namespace lightclock::infinitesimals {

struct Dual {
  double real = 0.0;
  double eps = 0.0;

  constexpr Dual() = default;
  constexpr Dual(double r, double e = 0.0) : real(r), eps(e) {}

  /// x + 1ε, the seed for derivative extraction.
  static constexpr Dual variable(double x) { return {x, 1.0}; }

  constexpr bool operator==(const Dual&) const = default;
};

enum class DualOp { add, sub, mul, div };

/// Truncated arithmetic on two duals. Division by a dual whose real part is
/// zero throws DomainError("infinitesimal division").
Dual dual_arith(Dual a, Dual b, DualOp op);

/// st(a): the real number infinitely close to a.
constexpr double standard_part(Dual a) { return a.real; }

/// Emulation of a ≈ b: |a − b| ≤ tol, boundary inclusive. tol must be > 0.
bool infinitely_close(double a, double b, double tol);

bool is_finite(Dual a);

constexpr Dual operator+(Dual a, Dual b) { return {a.real + b.real, a.eps + b.eps}; }
constexpr Dual operator-(Dual a, Dual b) { return {a.real - b.real, a.eps - b.eps}; }
constexpr Dual operator-(Dual a) { return {-a.real, -a.eps}; }
constexpr Dual operator*(Dual a, Dual b) {
  return {a.real * b.real, a.real * b.eps + a.eps * b.real};
}
Dual operator/(Dual a, Dual b);

inline Dual& operator+=(Dual& a, Dual b) { return a = a + b; }
inline Dual& operator-=(Dual& a, Dual b) { return a = a - b; }
inline Dual& operator*=(Dual& a, Dual b) { return a = a * b; }
inline Dual& operator/=(Dual& a, Dual b) { return a = a / b; }

// Chain rule for the elementary functions used by the physics modules.
Dual exp(Dual a);
Dual log(Dual a);
Dual sqrt(Dual a);
Dual sin(Dual a);
Dual cos(Dual a);
Dual tanh(Dual a);
Dual atanh(Dual a);
Dual pow(Dual a, double p);

/// f'(x) read off the ε-coefficient of f(x + 1ε).
template <class F>
double derivative(F&& f, double x) {
  return f(Dual::variable(x)).eps;
}

}  // namespace lightclock::infinitesimals
