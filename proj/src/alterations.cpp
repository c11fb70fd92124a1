#include "lightclock/alterations.hpp"

#include <cmath>

#include "lightclock/error.hpp"
#include "lightclock/numerics.hpp"

namespace lightclock::alterations {

namespace {

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw DomainError("gamma must lie in (0, 1]");
  }
}

void check_g1(double g) {
  if (!(g > 0.0 && g <= 1.0)) {
    throw DomainError("g1 must lie in (0, 1]");
  }
}

}  // namespace

double gamma_special(double v_E, double c) {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
  const double k = v_E / c;
  if (!(std::fabs(k) < 1.0)) {
    throw DomainError("superluminal");
  }
  return std::sqrt((1.0 - k) * (1.0 + k));
}

double gamma_gravitational(const GravitySource& src, double R) {
  if (!(R > src.schwarzschild_r0)) {
    throw DomainError("inside Schwarzschild surface");
  }
  return std::sqrt(1.0 - src.schwarzschild_r0 / R);
}

AlterationReport report_for_gamma(double gamma) {
  check_gamma(gamma);
  return {gamma, gamma, 1.0 / gamma, 1.0 / gamma, gamma};
}

double transverse_doppler(double nu_s, double gamma) {
  check_gamma(gamma);
  if (!(nu_s > 0.0)) {
    throw DomainError("frequency must be positive");
  }
  return gamma * nu_s;
}

double total_doppler(double nu_s, double v_E, double c) {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
  const double k = v_E / c;
  if (!(k >= 0.0 && k < 1.0)) {
    throw DomainError("total Doppler needs 0 <= v_E < c");
  }
  return nu_s * std::sqrt((1.0 - k) / (1.0 + k));
}

double decay_lifetime(double tau_s, double gamma) {
  check_gamma(gamma);
  if (!(tau_s > 0.0)) {
    throw DomainError("lifetime must be positive");
  }
  return tau_s / gamma;
}

double mass_alteration(double M_s, double gamma) {
  check_gamma(gamma);
  if (!(M_s > 0.0)) {
    throw DomainError("mass must be positive");
  }
  return M_s / gamma;
}

double separated_operator_check(const std::function<double(double)>& f, double gamma, double t_m,
                                double h) {
  check_gamma(gamma);
  auto F = [&](double t) { return f(gamma * t); };
  const double ts = gamma * t_m;
  const double fs = f(ts);
  const double Fm = F(t_m);
  if (!(fs > 0.0 && Fm > 0.0)) {
    throw DomainError("test function must be positive at the probe point");
  }
  const double delta_s = numerics::central_difference(f, ts, h) / fs;
  const double delta_m = numerics::central_difference(F, t_m, h) / Fm;
  return std::fabs(delta_s - delta_m / gamma);
}

double g1(double r_s, double r, const CosmologicalConstant& Lambda, double c) {
  const double lg = Lambda.geometric(c);
  if (!(r > 0.0)) {
    throw DomainError("radius must be positive");
  }
  if (std::isinf(r)) {
    if (lg != 0.0) {
      throw DomainError("infinite radius needs zero cosmological constant");
    }
    return 1.0;
  }
  return 1.0 - r_s / r - lg * r * r / 3.0;
}

double gravitational_clock_compare(const GravCompareInput& inp) {
  if (!(inp.r_s >= 0.0 && inp.r_P > inp.r_s && inp.r_R > inp.r_s)) {
    throw DomainError("clock radius inside Schwarzschild surface");
  }
  const double gP = g1(inp.r_s, inp.r_P, inp.Lambda_P, inp.c);
  const double gR = g1(inp.r_s, inp.r_R, inp.Lambda_R, inp.c);
  if (!(gP > 0.0 && gR > 0.0)) {
    throw DomainError("clock beyond a horizon: g1 <= 0");
  }
  return std::sqrt(gR) / std::sqrt(gP);
}

double frequency_compare(double g1_P, double g1_R, double nu_R) {
  check_g1(g1_P);
  check_g1(g1_R);
  return std::sqrt(g1_R) * nu_R / std::sqrt(g1_P);
}

double altered_light_speed(double g1, double c) {
  check_g1(g1);
  return std::sqrt(g1) * c;
}

double rate_of_change_compare(double g1_P, double g1_R, double dQ_P) {
  check_g1(g1_P);
  check_g1(g1_R);
  return std::sqrt(g1_P) / std::sqrt(g1_R) * dQ_P;
}

double accumulated_rate_compare(const std::function<double(double)>& g1_P,
                                const std::function<double(double)>& g1_R,
                                const std::function<double(double)>& rate_P, double t0,
                                double t1) {
  auto integrand = [&](double t) {
    const double gp = g1_P(t);
    const double gr = g1_R(t);
    check_g1(gp);
    check_g1(gr);
    return std::sqrt(gp / gr) * rate_P(t);
  };
  const auto res = numerics::integrate(integrand, t0, t1, 1e-12, 1e-15);
  if (!res.converged) {
    throw DomainError("accumulated rate integral did not converge");
  }
  return res.value;
}

}  // namespace lightclock::alterations
