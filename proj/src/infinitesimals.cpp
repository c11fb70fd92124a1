#include "lightclock/infinitesimals.hpp"

#include "lightclock/error.hpp"

namespace lightclock::infinitesimals {

Dual dual_arith(Dual a, Dual b, DualOp op) {
  switch (op) {
    case DualOp::add:
      return a + b;
    case DualOp::sub:
      return a - b;
    case DualOp::mul:
      return a * b;
    case DualOp::div:
      return a / b;
  }
  return {};
}

Dual operator/(Dual a, Dual b) {
  if (b.real == 0.0) {
    throw DomainError("infinitesimal division");
  }
  const double q = a.real / b.real;
  return {q, (a.eps * b.real - a.real * b.eps) / (b.real * b.real)};
}

bool infinitely_close(double a, double b, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("infinitely_close: tolerance must be positive");
  }
  return std::fabs(a - b) <= tol;
}

bool is_finite(Dual a) { return std::isfinite(a.real) && std::isfinite(a.eps); }

Dual exp(Dual a) {
  const double e = std::exp(a.real);
  return {e, a.eps * e};
}

Dual log(Dual a) { return {std::log(a.real), a.eps / a.real}; }

Dual sqrt(Dual a) {
  const double s = std::sqrt(a.real);
  return {s, a.eps / (2.0 * s)};
}

Dual sin(Dual a) { return {std::sin(a.real), a.eps * std::cos(a.real)}; }

Dual cos(Dual a) { return {std::cos(a.real), -a.eps * std::sin(a.real)}; }

Dual tanh(Dual a) {
  const double t = std::tanh(a.real);
  return {t, a.eps * (1.0 - t * t)};
}

Dual atanh(Dual a) { return {std::atanh(a.real), a.eps / (1.0 - a.real * a.real)}; }

Dual pow(Dual a, double p) {
  const double v = std::pow(a.real, p);
  return {v, a.eps * p * std::pow(a.real, p - 1.0)};
}

}  // namespace lightclock::infinitesimals
