#pragma once

/**
 * Light-clock parameters and count arithmetic.
 *
 * Convention: round_trip_length is the full to-and-fro path L of one tick, so
 * the physical arm is L/2. With that choice one tick is u = L/c seconds and
 * L metres of light travel, and both conversions are single products.
 *
 * Counts are non-negative reals; partial ticks are allowed. counts_for_length
 * is the only place where a count is rounded to an integer.
 */

namespace lightclock::clock {

class LightClockSpec {
 public:
  /// Throws DomainError unless both arguments are finite and positive.
  LightClockSpec(double round_trip_length, double light_speed);

  double round_trip_length() const { return length_; }
  double arm_length() const { return 0.5 * length_; }
  double light_speed() const { return light_speed_; }
  /// u = L / c.
  double time_unit() const { return time_unit_; }

 private:
  double length_;
  double light_speed_;
  double time_unit_;
};

/// Counter readings A ≤ B. Throws DomainError on negative or reversed counts.
class CountPair {
 public:
  CountPair(double count_a, double count_b);

  double count_a() const { return a_; }
  double count_b() const { return b_; }
  double difference() const { return b_ - a_; }

 private:
  double a_;
  double b_;
};

struct EinsteinMeasures {
  double t_E = 0.0;  // s
  double r_E = 0.0;  // m
  double v_E = 0.0;  // m/s, directed
  double K = 0.0;    // v_E / c
};

/// Emission, reflection and return counts of one radar pulse.
struct PulseCounts {
  double emit = 0.0;
  double reflect = 0.0;
  double ret = 0.0;
};

struct CountDiagramMeasures {
  double t_E_counts = 0.0;  // ticks
  double r_E_counts = 0.0;  // length ticks (multiples of L)
  EinsteinMeasures measures;
};

struct TickQuantization {
  double ticks = 0.0;
  double residual = 0.0;  // |r − L·ticks|, at most L/2
};

double time_from_counts(const LightClockSpec& spec, const CountPair& p);
double distance_from_counts(const LightClockSpec& spec, const CountPair& p);
TickQuantization counts_for_length(const LightClockSpec& spec, double r);

/// Operational Einstein measures from two successive pulses read at the
/// origin clock:
///   t_E = ½((τ32 − τ31) + (τ12 − τ11)) ticks,
///   r_E = ½((τ32 − τ31) − (τ12 − τ11)) length ticks.
/// Each pulse must satisfy ret = 2·reflect − emit (relative tolerance tol) and
/// the second pulse may not start before the first returns.
CountDiagramMeasures einstein_from_count_diagram(const LightClockSpec& spec,
                                                 const PulseCounts& first,
                                                 const PulseCounts& second,
                                                 double tol = 1e-12);

}  // namespace lightclock::clock
