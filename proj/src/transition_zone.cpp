#include "lightclock/transition_zone.hpp"

#include <cmath>

#include "lightclock/error.hpp"

namespace lightclock::transition_zone {

namespace {

void check_k(double k) {
  if (!(std::isfinite(k) && k > 0.0)) {
    throw DomainError("k must be positive");
  }
}

void check_light_speed(double c) {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
}

}  // namespace

double g_k(double x, double k) {
  // −(x − 2k)²(2x + k)/(4k⁴) in u = x/k, exact at both junctions.
  const double u = x / k;
  const double d = u - 2.0;
  return -(d * d) * (2.0 * u + 1.0) / (4.0 * k);
}

double H_k(double x, double k) {
  check_k(k);
  if (x <= 0.0) {
    return 1.0 / (x - k);
  }
  if (x <= 2.0 * k) {
    return g_k(x, k);
  }
  return 0.0;
}

double H_k_prime(double x, double k) {
  check_k(k);
  if (x <= 0.0) {
    const double d = x - k;
    return -1.0 / (d * d);
  }
  if (x <= 2.0 * k) {
    const double u = x / k;
    return -(u - 2.0) * (3.0 * u - 1.0) / (2.0 * k * k);
  }
  return 0.0;
}

std::optional<double> f_M_standardized(double R, const GravitySource& src, double c) {
  check_light_speed(c);
  if (!(R > 0.0)) {
    throw DomainError("radius must be positive");
  }
  const double r0 = src.schwarzschild_r0;
  if (R > r0) {
    return 0.0;
  }
  if (R == r0) {
    return std::nullopt;
  }
  return 1.0 / (c * (1.0 - r0 / R));
}

double black_hole_interval(double lam, double dU, double dR, double R, double theta,
                           double dtheta, double dphi, double c) {
  const double cdU = c * dU;
  const MetricPoint p{R, theta, 0.0, 0.0, dtheta, dphi};
  return lam * cdU * cdU - 2.0 * cdU * dR - line_elements::angular_term(p);
}

double transformed_interval(double lam, double f, const MetricPoint& p, double c) {
  if (lam == 0.0) {
    throw DomainError("singular surface: lambda = 0");
  }
  const double c2 = c * c;
  return lam * c2 * p.dt * p.dt - 2.0 * lam * c2 * f * p.dt * p.dR +
         (lam * c2 * f * f - 1.0 / lam) * p.dR * p.dR - line_elements::angular_term(p);
}

double standardized_interval(const GravitySource& src, const MetricPoint& p, double c) {
  const auto f = f_M_standardized(p.R, src, c);
  const double lam = 1.0 - src.schwarzschild_r0 / p.R;
  if (f && *f == 0.0) {
    return line_elements::radial_interval(lam, p, c);
  }
  // Inside r0 the dR² coefficient λc²f² − 1/λ vanishes identically; at r0 the
  // product f·dR standardizes to zero. Both give the black-hole form.
  return black_hole_interval(lam, p.dt, p.dR, p.R, p.theta, p.dtheta, p.dphi, c);
}

PartialInterval partial_interval(double lam, double k, double dU, double dR, double c) {
  check_k(k);
  check_light_speed(c);
  const double s = lam - k;
  const double cdU = c * dU;
  if (lam <= 0.0) {
    return {PartialBranch::interior, s * cdU * cdU - 2.0 * cdU * dR};
  }
  if (s == 0.0) {
    throw DomainError("transition singularity at lambda=k");
  }
  if (lam <= 2.0 * k) {
    const double w = cdU - g_k(lam, k) * dR;
    return {PartialBranch::transition, s * w * w - dR * dR / s};
  }
  return {PartialBranch::exterior, s * cdU * cdU - dR * dR / s};
}

std::array<double, 2> photon_families(double lam, double k, double c) {
  check_k(k);
  check_light_speed(c);
  const double v = c * (lam - k);
  return {v, -v};
}

}  // namespace lightclock::transition_zone
