#include "lightclock/radar.hpp"

#include <cmath>

#include "lightclock/error.hpp"

namespace lightclock::radar {

namespace {

void check_light_speed(double c) {
  if (!(std::isfinite(c) && c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
}

}  // namespace

void validate(const RadarRecord& rec) {
  if (!(std::isfinite(rec.t1) && std::isfinite(rec.t2) && std::isfinite(rec.t3))) {
    throw DomainError("invalid medium time");
  }
  if (!(rec.t1 > 0.0 && rec.t1 <= rec.t2 && rec.t2 <= rec.t3)) {
    throw DomainError("invalid medium time");
  }
}

RadarMeasures einstein_measures(const RadarRecord& rec, double c) {
  validate(rec);
  check_light_speed(c);
  RadarMeasures out;
  auto& e = out.einstein;
  e.t_E = 0.5 * (rec.t3 + rec.t1);
  e.r_E = 0.5 * c * (rec.t3 - rec.t1);
  if (e.r_E == 0.0) {
    e.v_E = 0.0;
    out.is_einstein_measure = false;
  } else {
    e.v_E = e.r_E / e.t_E;
  }
  e.K = e.v_E / c;
  out.t1_split = (1.0 - e.K) * e.t_E;
  out.t3_split = (1.0 + e.K) * e.t_E;
  out.t2_pred = std::sqrt((1.0 - e.K) * (1.0 + e.K)) * e.t_E;
  return out;
}

bool check_geometric_mean(const RadarRecord& rec, double tol) {
  validate(rec);
  return std::fabs(rec.t2 - std::sqrt(rec.t1 * rec.t3)) <= tol * rec.t2;
}

Rapidity rapidity_from_vE(double v_E, double c) {
  check_light_speed(c);
  const double k = std::fabs(v_E) / c;
  if (!(k < 1.0)) {
    throw DomainError("superluminal Einstein velocity");
  }
  return {c * std::atanh(k), c};
}

RadarRecord record_from_rapidity(double omega, double c, double t1) {
  check_light_speed(c);
  if (!(std::isfinite(t1) && t1 > 0.0)) {
    throw DomainError("invalid medium time");
  }
  if (!(std::isfinite(omega) && omega >= 0.0)) {
    throw DomainError("medium velocity must be non-negative");
  }
  const double k = std::exp(omega / c);
  return {t1, t1 * k, t1 * k * k};
}

}  // namespace lightclock::radar
