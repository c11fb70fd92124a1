#include "lightclock/line_elements.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "lightclock/error.hpp"
#include "lightclock/numerics.hpp"

namespace lightclock::line_elements {

namespace {

void check_light_speed(double c) {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
}

std::string shortest(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void check_nonsingular(double lam, double R) {
  if (lam == 0.0 || !std::isfinite(lam)) {
    throw DomainError("singular surface at R=" + shortest(R));
  }
}

}  // namespace

LambdaFactor::LambdaFactor(Field v, Field d, LambdaMode mode, double c)
    : v_(std::move(v)), d_(std::move(d)), mode_(mode), c_(c) {
  check_light_speed(c);
  if (!v_ || !d_) {
    throw DomainError("lambda factor needs both velocity fields");
  }
}

LambdaFactor LambdaFactor::constant(double v, double d, LambdaMode mode, double c) {
  return LambdaFactor([v](double, double) { return v; }, [d](double, double) { return d; }, mode,
                      c);
}

LambdaFactor LambdaFactor::from_value(double lam) {
  LambdaFactor f;
  f.fixed_ = lam;
  return f;
}

double LambdaFactor::value(double R, double t) const {
  if (fixed_) {
    return *fixed_;
  }
  const double k = (v_(R, t) + d_(R, t)) / c_;
  return mode_ == LambdaMode::real ? 1.0 - k * k : 1.0 + k * k;
}

double CosmologicalConstant::geometric(double c) const {
  if (unit == LambdaUnit::per_time_squared) {
    check_light_speed(c);
    return value / (c * c);
  }
  return value;
}

GravitySource GravitySource::from_mass(double mass, double c, double G,
                                       CosmologicalConstant Lambda) {
  check_light_speed(c);
  if (!(std::isfinite(mass) && mass >= 0.0) || !(std::isfinite(G) && G > 0.0)) {
    throw DomainError("mass and G must be non-negative");
  }
  GravitySource s;
  s.mass = mass;
  s.G = G;
  s.schwarzschild_r0 = 2.0 * G * mass / (c * c);
  s.Lambda = Lambda;
  return s;
}

GravitySource GravitySource::from_schwarzschild_radius(double r0, CosmologicalConstant Lambda) {
  if (!(std::isfinite(r0) && r0 >= 0.0)) {
    throw DomainError("Schwarzschild radius must be non-negative");
  }
  GravitySource s;
  s.schwarzschild_r0 = r0;
  s.Lambda = Lambda;
  return s;
}

double GravitySource::potential_velocity(double R, double c) const {
  if (!(R > 0.0)) {
    throw DomainError("radius must be positive");
  }
  return c * std::sqrt(schwarzschild_r0 / R);
}

double angular_term(const MetricPoint& p) {
  const double s = std::sin(p.theta);
  return p.R * p.R * (s * s * p.dphi * p.dphi + p.dtheta * p.dtheta);
}

double minkowski_interval(double dt, double dx, double dy, double dz, double c) {
  const double ct = c * dt;
  return ct * ct - dx * dx - dy * dy - dz * dz;
}

double radial_interval(double lam, const MetricPoint& p, double c) {
  check_nonsingular(lam, p.R);
  const double ct = c * p.dt;
  return lam * ct * ct - p.dR * p.dR / lam - angular_term(p);
}

double radial_interval(const LambdaFactor& lam, const MetricPoint& p, double c, double t) {
  return radial_interval(lam.value(p.R, t), p, c);
}

double linear_interval(double lam, double dt, double dr, double c) {
  if (lam == 0.0 || !std::isfinite(lam)) {
    throw DomainError("singular surface: lambda = 0");
  }
  const double ct = c * dt;
  return lam * ct * ct - dr * dr / lam;
}

double schwarzschild_lambda(const GravitySource& src, double R) {
  if (!(R > src.schwarzschild_r0)) {
    throw DomainError("inside Schwarzschild surface - use transition_zone");
  }
  return 1.0 - src.schwarzschild_r0 / R;
}

double modified_schwarzschild_lambda(const GravitySource& src, double R, double c) {
  if (!(R > 0.0)) {
    throw DomainError("radius must be positive");
  }
  return 1.0 - src.schwarzschild_r0 / R - src.Lambda.geometric(c) * R * R / 3.0;
}

std::vector<double> horizon_roots(const GravitySource& src, double c) {
  const double lg = src.Lambda.geometric(c);
  if (!(std::isfinite(lg) && lg >= 0.0)) {
    throw DomainError("cosmological constant must be non-negative");
  }
  const double r0 = src.schwarzschild_r0;
  if (lg == 0.0) {
    return r0 > 0.0 ? std::vector<double>{r0} : std::vector<double>{};
  }
  const double a = lg / 3.0;
  // f(r) = a·r³ − r + r0 = −r·λ(r); f(0) = r0 ≥ 0 and f has its only
  // positive minimum at r* = 1/√(3a).
  auto f = [a, r0](double r) { return (a * r * r - 1.0) * r + r0; };
  const double r_star = 1.0 / std::sqrt(3.0 * a);
  const double f_min = f(r_star);

  auto upper_root = [&] {
    double hi = 2.0 * r_star;
    while (f(hi) <= 0.0) {
      hi *= 2.0;
    }
    return numerics::bisect(f, r_star, hi);
  };

  if (r0 == 0.0) {
    return {upper_root()};
  }
  if (std::fabs(f_min) <= 1e-12 * r0) {
    return {r_star};
  }
  if (f_min > 0.0) {
    return {};
  }
  return {numerics::bisect(f, 0.0, r_star), upper_root()};
}

double cosmological_constant_for_horizon(double r0, double R) {
  if (!(R > 0.0) || !(r0 >= 0.0)) {
    throw DomainError("radius must be positive");
  }
  return 3.0 * (1.0 - r0 / R) / (R * R);
}

double robertson_walker_interval(double a, const MetricPoint& p, double c) {
  check_light_speed(c);
  if (a == 0.0 || !std::isfinite(a)) {
    throw DomainError("expansion scale must be non-zero");
  }
  const double x = p.R / (c * a);
  const double spatial = (1.0 - x) * (1.0 + x);
  if (!(spatial > 0.0)) {
    throw DomainError("curvature singularity in spatial factor");
  }
  const double ct = c * p.dt;
  return ct * ct - p.dR * p.dR / spatial - angular_term(p);
}

ApproxInterval newtonian_first_approx(const GravitySource& src, double r, double dt, double dr,
                                      double c) {
  if (!(r > 0.0)) {
    throw DomainError("radius must be positive");
  }
  const double u = src.schwarzschild_r0 / r;
  const double ct = c * dt;
  return {(1.0 - u) * ct * ct - (1.0 + u) * dr * dr, u > 0.1};
}

double radar_coordinate_time(const GravitySource& src, double R1, double R2, double c) {
  check_light_speed(c);
  const double r0 = src.schwarzschild_r0;
  if (!(R1 > r0 && R2 > r0)) {
    throw DomainError("radius inside Schwarzschild surface");
  }
  if (R2 < R1) {
    throw DomainError("R2 must not be below R1");
  }
  if (R1 == R2) {
    return 0.0;
  }
  const double log_term = r0 == 0.0 ? 0.0 : r0 * std::log1p((R2 - R1) / (R1 - r0));
  return ((R2 - R1) + log_term) / c;
}

TransformedDifferentials infinitesimal_transform(double eta, double dRm, double dTm) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw DomainError("eta must lie in (0, 1]");
  }
  const double s = std::sqrt(1.0 - eta);
  return {dRm / eta + s * dTm, s / eta * dRm + dTm};
}

HubbleResult hubble_deceleration(const std::function<infinitesimals::Dual(infinitesimals::Dual)>& a,
                                 double t, std::optional<double> rho, double G) {
  using infinitesimals::Dual;
  auto hubble = [&a](double s) {
    const Dual v = a(Dual::variable(s));
    if (v.real == 0.0 || !std::isfinite(v.real)) {
      throw DomainError("scale factor vanishes at t");
    }
    return v.eps / v.real;
  };
  HubbleResult out;
  out.a = a(Dual(t)).real;
  out.H = hubble(t);
  const double h = 1e-3 * (t != 0.0 ? std::fabs(t) : 1.0);
  const double d1 = numerics::central_difference(hubble, t, h);
  const double d2 = numerics::central_difference(hubble, t, 0.5 * h);
  out.dH_dt = (4.0 * d2 - d1) / 3.0;
  if (out.H == 0.0) {
    throw DomainError("deceleration parameter undefined for H = 0");
  }
  out.q = -(1.0 + out.dH_dt / (out.H * out.H));
  if (rho) {
    out.friedmann_residual =
        -out.q * out.H * out.H + 4.0 * std::numbers::pi * G * *rho / 3.0;
  }
  return out;
}

double closed_universe_mass(double a, double rho) {
  return 2.0 * std::numbers::pi * std::numbers::pi * a * a * a * rho;
}

}  // namespace lightclock::line_elements
