#include "lightclock/lightclock.hpp"

#include <algorithm>
#include <cmath>

#include "lightclock/error.hpp"

namespace lightclock::clock {

LightClockSpec::LightClockSpec(double round_trip_length, double light_speed)
    : length_(round_trip_length), light_speed_(light_speed), time_unit_(0.0) {
  if (!(std::isfinite(length_) && length_ > 0.0)) {
    throw DomainError("light-clock length must be positive");
  }
  if (!(std::isfinite(light_speed_) && light_speed_ > 0.0)) {
    throw DomainError("light speed must be positive");
  }
  time_unit_ = length_ / light_speed_;
}

CountPair::CountPair(double count_a, double count_b) : a_(count_a), b_(count_b) {
  if (!(std::isfinite(a_) && std::isfinite(b_)) || a_ < 0.0) {
    throw DomainError("counts must be finite and non-negative");
  }
  if (b_ < a_) {
    throw DomainError("count_b precedes count_a");
  }
}

double time_from_counts(const LightClockSpec& spec, const CountPair& p) {
  return spec.time_unit() * p.difference();
}

double distance_from_counts(const LightClockSpec& spec, const CountPair& p) {
  return spec.round_trip_length() * p.difference();
}

TickQuantization counts_for_length(const LightClockSpec& spec, double r) {
  if (!(std::isfinite(r) && r >= 0.0)) {
    throw DomainError("length must be finite and non-negative");
  }
  const double ticks = std::nearbyint(r / spec.round_trip_length());
  return {ticks, std::fabs(r - ticks * spec.round_trip_length())};
}

namespace {

void check_reflection(const PulseCounts& p, double tol) {
  if (!(p.emit >= 0.0 && p.emit <= p.reflect && p.reflect <= p.ret)) {
    throw DomainError("inconsistent count diagram: counts out of order");
  }
  const double scale = std::max({1.0, std::fabs(p.ret), std::fabs(p.emit)});
  if (std::fabs(p.ret - (2.0 * p.reflect - p.emit)) > tol * scale) {
    throw DomainError("inconsistent count diagram");
  }
}

}  // namespace

CountDiagramMeasures einstein_from_count_diagram(const LightClockSpec& spec,
                                                 const PulseCounts& first,
                                                 const PulseCounts& second, double tol) {
  check_reflection(first, tol);
  check_reflection(second, tol);
  if (second.emit < first.ret) {
    throw DomainError("overlapping pulses");
  }
  const double return_gap = second.ret - first.ret;
  const double emit_gap = second.emit - first.emit;
  CountDiagramMeasures out;
  out.t_E_counts = 0.5 * (return_gap + emit_gap);
  out.r_E_counts = 0.5 * (return_gap - emit_gap);
  if (!(out.t_E_counts > 0.0)) {
    throw DomainError("degenerate count diagram: zero Einstein time");
  }
  out.measures.t_E = out.t_E_counts * spec.time_unit();
  out.measures.r_E = out.r_E_counts * spec.round_trip_length();
  // c·r/t keeps v_E = c/7 exact for the integer diagram (20,40,60),(80,110,140).
  out.measures.v_E = spec.light_speed() * out.r_E_counts / out.t_E_counts;
  out.measures.K = out.r_E_counts / out.t_E_counts;
  return out;
}

}  // namespace lightclock::clock
