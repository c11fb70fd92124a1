#include "lightclock/velocity_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lightclock/error.hpp"

namespace lightclock::velocity_space {

namespace {

void check_light_speed(double c) {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
}

void check_subluminal(double v, double c) {
  if (!(std::isfinite(v) && std::fabs(v) < c)) {
    throw DomainError("superluminal");
  }
}

// cosh(x) − 1 without cancellation.
double cosh_m1(double x) {
  const double s = std::sinh(0.5 * x);
  return 2.0 * s * s;
}

constexpr double kAngleTol = 1e-9;

}  // namespace

BetaGamma beta_gamma(double v, double c) {
  check_light_speed(c);
  check_subluminal(v, c);
  const double k = v / c;
  const double gamma = std::sqrt((1.0 - k) * (1.0 + k));
  return {v, 1.0 / gamma, gamma};
}

double compose_einstein(double v1, double v2, double c) {
  check_light_speed(c);
  check_subluminal(v1, c);
  check_subluminal(v2, c);
  return (v1 + v2) / (1.0 + (v1 / c) * (v2 / c));
}

VelocityTriangle solve_triangle(double omega1, double omega2, double omega3, double c) {
  check_light_speed(c);
  for (double w : {omega1, omega2, omega3}) {
    if (!(std::isfinite(w) && w >= 0.0)) {
      throw DomainError("medium velocity must be non-negative");
    }
  }
  VelocityTriangle tri;
  tri.omega1 = omega1;
  tri.omega2 = omega2;
  tri.omega3 = omega3;
  tri.c = c;

  const double a = omega1 / c;
  const double b = omega2 / c;
  const double s = omega3 / c;
  const double scale = std::max({a, b, s, 1e-300});

  if (s == 0.0) {
    throw DomainError("degenerate velocity triangle");
  }
  if (b == 0.0 || a == 0.0) {
    // P sits on F2 (b = 0) or on F1 (a = 0); the other side must equal F1F2.
    const double other = (b == 0.0) ? a : b;
    if (std::fabs(other - s) > kAngleTol * scale) {
      throw DomainError("degenerate velocity triangle");
    }
    tri.theta = 0.0;
    tri.phi = (b == 0.0) ? std::numbers::pi / 2.0 : std::numbers::pi;
    tri.p1 = (b == 0.0) ? omega3 : 0.0;
    tri.p2 = omega3 - tri.p1;
    tri.n = 0.0;
    tri.cosh_law_residual =
        std::fabs(std::cosh(a) - std::cosh(b) * std::cosh(s) -
                  std::sinh(b) * std::sinh(s) * std::cos(tri.phi)) /
        std::cosh(a);
    return tri;
  }

  const double A = cosh_m1(a);
  const double B = cosh_m1(b);
  const double C = cosh_m1(s);
  double cos_phi = (A - B - C - B * C) / (std::sinh(b) * std::sinh(s));
  if (cos_phi < -1.0 - kAngleTol || cos_phi > kAngleTol || !std::isfinite(cos_phi)) {
    throw DomainError("degenerate velocity triangle");
  }
  cos_phi = std::clamp(cos_phi, -1.0, 0.0);
  const double sin_phi = std::sqrt((1.0 - cos_phi) * (1.0 + cos_phi));
  tri.phi = std::acos(cos_phi);

  const double p2 = std::atanh(-std::tanh(b) * cos_phi);
  const double p1 = s - p2;
  if (p1 < -kAngleTol * scale) {
    throw DomainError("degenerate velocity triangle");
  }
  tri.p2 = p2 * c;
  tri.p1 = std::max(p1, 0.0) * c;

  if (sin_phi == 0.0) {
    tri.theta = 0.0;
    tri.n = 0.0;
  } else {
    const double cos_theta = std::tanh(std::max(p1, 0.0)) / std::tanh(a);
    const double sin_theta = std::sinh(b) * sin_phi / std::sinh(a);
    tri.theta = std::atan2(sin_theta, cos_theta);
    tri.n = c * std::asinh(std::sinh(b) * sin_phi);
  }
  tri.cosh_law_residual =
      std::fabs(std::cosh(a) - std::cosh(b) * std::cosh(s) - std::sinh(b) * std::sinh(s) * cos_phi) /
      std::cosh(a);
  return tri;
}

TriangleEinstein triangle_to_einstein(const VelocityTriangle& tri, double tol) {
  const double c = tri.c;
  check_light_speed(c);
  TriangleEinstein out;
  out.v1 = c * std::tanh(tri.omega1 / c);
  out.v2 = c * std::tanh(tri.omega2 / c);
  out.v3 = c * std::tanh(tri.omega3 / c);
  out.beta1 = std::cosh(tri.omega1 / c);
  out.beta2 = std::cosh(tri.omega2 / c);
  out.beta3 = std::cosh(tri.omega3 / c);
  const double cos_phi = std::cos(tri.phi);
  const double sin_phi = std::sin(tri.phi);
  out.alpha = (out.v3 / c) * (out.v2 / c) * cos_phi;
  const double one_alpha = 1.0 + out.alpha;

  out.residual_projection =
      std::fabs(out.v1 * std::cos(tri.theta) - (out.v3 + out.v2 * cos_phi) / one_alpha) / c;
  out.residual_beta = std::fabs(out.beta1 - out.beta2 * out.beta3 * one_alpha) / out.beta1;
  out.residual_normal =
      std::fabs(out.v1 * std::sin(tri.theta) - out.v2 * sin_phi / (out.beta3 * one_alpha)) / c;

  if (!(out.residual_projection <= tol && out.residual_beta <= tol && out.residual_normal <= tol)) {
    throw DomainError("triangle identity violation");
  }
  return out;
}

Event4 lorentz_transform(const Event4& e2, double v3, double c) {
  const BetaGamma bg = beta_gamma(v3, c);
  return {bg.beta * (e2.t - v3 * e2.x / (c * c)), bg.beta * (e2.x - v3 * e2.t), e2.y, e2.z};
}

TriangleEvents triangle_events(const VelocityTriangle& tri, double t2) {
  const TriangleEinstein ein = triangle_to_einstein(tri, 1e-6);
  TriangleEvents ev;
  ev.from_f2 = {t2, -ein.v2 * t2 * std::cos(tri.phi), ein.v2 * t2 * std::sin(tri.phi), 0.0};
  const double t1 = ein.beta1 * t2 / ein.beta2;
  ev.from_f1 = {t1, -ein.v1 * t1 * std::cos(tri.theta), ein.v1 * t1 * std::sin(tri.theta), 0.0};
  return ev;
}

double interval(const Event4& e, double c) {
  const double ct = c * e.t;
  return (ct - e.x) * (ct + e.x) - e.y * e.y - e.z * e.z;
}

}  // namespace lightclock::velocity_space
