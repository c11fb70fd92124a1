#include "lightclock/nsppm_sim.hpp"

#include <algorithm>
#include <cmath>

#include "lightclock/error.hpp"
#include "lightclock/numerics.hpp"

namespace lightclock::nsppm {

namespace {

constexpr int kCoarseCells = 512;
constexpr int kFineCells = 4096;

double max_jump(const PropagationScenario::Profile& v, double a, double b, int cells,
                double& max_abs) {
  double jump = 0.0;
  double prev = v(a);
  max_abs = std::fabs(prev);
  for (int i = 1; i <= cells; ++i) {
    const double x = (i == cells) ? b : a + (b - a) * i / cells;
    const double cur = v(x);
    if (!(std::isfinite(cur) && cur >= 0.0)) {
      throw DomainError("velocity profile must be finite and non-negative");
    }
    jump = std::max(jump, std::fabs(cur - prev));
    max_abs = std::max(max_abs, std::fabs(cur));
    prev = cur;
  }
  return jump;
}

void check_window(const PropagationScenario& sc, double lo, double hi) {
  if (!(lo >= sc.t1() && hi <= sc.b() && lo <= hi)) {
    throw DomainError("time outside scenario domain");
  }
}

}  // namespace

PropagationScenario::PropagationScenario(Profile v, double t1, double a, double b, double c)
    : v_(std::move(v)), t1_(t1), a_(a), b_(b), c_(c) {
  if (!v_) {
    throw DomainError("velocity profile missing");
  }
  if (!(std::isfinite(c) && c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
  if (!(a > 0.0 && a <= t1 && t1 < b && std::isfinite(b))) {
    throw DomainError("scenario needs 0 < a <= t1 < b");
  }
  double scale = 0.0;
  const double coarse = max_jump(v_, a, b, kCoarseCells, scale);
  const double fine = max_jump(v_, a, b, kFineCells, scale);
  if (fine > 1e-9 * std::max(scale, 1e-300) && fine > 0.5 * coarse) {
    throw DomainError("velocity profile is not continuous");
  }
}

PropagationScenario PropagationScenario::constant(double speed, double t1, double a, double b,
                                                  double c) {
  return PropagationScenario([speed](double) { return speed; }, t1, a, b, c);
}

bool PropagationScenario::is_light_speed_profile() const {
  constexpr int n = 256;
  for (int i = 0; i <= n; ++i) {
    const double x = (i == n) ? b_ : a_ + (b_ - a_) * i / n;
    if (std::fabs(v_(x) - c_) > 1e-12 * c_) {
      return false;
    }
  }
  return true;
}

double distance_profile(const PropagationScenario& sc, double t) {
  check_window(sc, sc.t1(), t);
  if (t == sc.t1()) {
    return 0.0;
  }
  const auto res =
      numerics::integrate([&sc](double x) { return sc.velocity(x) / x; }, sc.t1(), t);
  return t * res.value;
}

MediumVelocity medium_velocity(const PropagationScenario& sc, double t_start, double t_end) {
  check_window(sc, t_start, t_end);
  if (!(t_start < t_end)) {
    throw DomainError("medium velocity needs t_start < t_end");
  }
  MediumVelocity out;
  out.omega =
      numerics::integrate([&sc](double x) { return sc.velocity(x) / x; }, t_start, t_end).value;

  const double mean = out.omega / std::log(t_end / t_start);
  auto g = [&](double x) { return sc.velocity(x) - mean; };
  const double tol = 1e-12 * std::max(std::fabs(mean), 1e-300);
  constexpr int n = 256;
  double x_prev = t_start;
  double g_prev = g(x_prev);
  if (std::fabs(g_prev) <= tol) {
    out.witness = x_prev;
    return out;
  }
  for (int i = 1; i <= n; ++i) {
    const double x = (i == n) ? t_end : t_start + (t_end - t_start) * i / n;
    const double gx = g(x);
    if (std::fabs(gx) <= tol) {
      out.witness = x;
      return out;
    }
    if ((gx < 0.0) != (g_prev < 0.0)) {
      out.witness = numerics::bisect(g, x_prev, x);
      return out;
    }
    x_prev = x;
    g_prev = gx;
  }
  throw DomainError("no mean-value witness found: profile not continuous");
}

radar::RadarRecord roundtrip(const PropagationScenario& sc, double omega, double t1) {
  if (!sc.is_light_speed_profile()) {
    throw DomainError("property (*) violated");
  }
  return radar::record_from_rapidity(omega, sc.c(), t1);
}

EquilinearResult equilinear_check(const PropagationScenario& sc, double t1, double t2,
                                  double t3) {
  if (!(t1 <= t2 && t2 <= t3)) {
    throw DomainError("equilinear check needs t1 <= t2 <= t3");
  }
  auto w = [&sc](double lo, double hi) {
    return lo == hi ? 0.0 : medium_velocity(sc, lo, hi).omega;
  };
  EquilinearResult r;
  r.w1 = w(t1, t2);
  r.w2 = w(t2, t3);
  r.w3 = w(t1, t3);
  r.residual = std::fabs(r.w1 + r.w2 - r.w3);
  return r;
}

PhotonOffset parallel_photon_offset(double u, double omega, double c, double dt_emit) {
  if (!(dt_emit > 0.0)) {
    throw DomainError("emission interval must be positive");
  }
  if (!(std::isfinite(c) && c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
  return {u * std::exp(omega / c) * dt_emit, u * dt_emit};
}

std::vector<CountRow> count_trace(const clock::LightClockSpec& spec, double omega, double t1,
                                  int n_pulses, bool quantize) {
  if (n_pulses < 1) {
    throw DomainError("need at least one pulse");
  }
  const double u = spec.time_unit();
  std::vector<CountRow> rows;
  rows.reserve(static_cast<std::size_t>(n_pulses));
  double start = t1;
  for (int i = 0; i < n_pulses; ++i) {
    const radar::RadarRecord rec = radar::record_from_rapidity(omega, spec.light_speed(), start);
    double emit = rec.t1 / u;
    double ret = rec.t3 / u;
    if (quantize) {
      emit = std::nearbyint(emit);
      ret = std::nearbyint(ret);
    }
    rows.push_back({rec, {emit, 0.5 * (emit + ret), ret}});
    start = rec.t3;
  }
  return rows;
}

}  // namespace lightclock::nsppm
