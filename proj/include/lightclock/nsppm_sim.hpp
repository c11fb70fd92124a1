#pragma once

// Medium-propagation integrator: the distance law s(t) = t·∫_{t1}^{t} v(x)/x dx,
// the medium velocity ω = ∫ v(x)/x dx, the geometric-mean round trip and the
// light-clock count trace it produces.

#include <functional>
#include <vector>

#include "lightclock/lightclock.hpp"
#include "lightclock/radar.hpp"

namespace lightclock::nsppm {

class PropagationScenario {
 public:
  using Profile = std::function<double(double)>;

  /// v must be non-negative and continuous on [a, b] with 0 < a ≤ t1 < b.
  /// Continuity is checked by sampling: the largest jump between neighbours
  /// must shrink when the grid is refined from 512 to 4096 cells.
  PropagationScenario(Profile v, double t1, double a, double b, double c);

  static PropagationScenario constant(double speed, double t1, double a, double b, double c);

  double velocity(double t) const { return v_(t); }
  double t1() const { return t1_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  /// True when v equals c at every sample point (relative 1e-12).
  bool is_light_speed_profile() const;

 private:
  Profile v_;
  double t1_;
  double a_;
  double b_;
  double c_;
};

double distance_profile(const PropagationScenario& sc, double t);

struct MediumVelocity {
  double omega = 0.0;
  /// t* ∈ [t_start, t_end] with v(t*)·ln(t_end/t_start) = ω.
  double witness = 0.0;
};

MediumVelocity medium_velocity(const PropagationScenario& sc, double t_start, double t_end);

/// Round trip under the constant light-speed property: (t1, t1e^{ω/c}, t1e^{2ω/c}).
/// Throws DomainError("property (*) violated") unless v ≡ c.
radar::RadarRecord roundtrip(const PropagationScenario& sc, double omega, double t1);

struct EquilinearResult {
  double w1 = 0.0;  // [t1, t2]
  double w2 = 0.0;  // [t2, t3]
  double w3 = 0.0;  // [t1, t3]
  double residual = 0.0;
};

EquilinearResult equilinear_check(const PropagationScenario& sc, double t1, double t2, double t3);

struct PhotonOffset {
  double hyperbolic = 0.0;  // u·e^{ω/c}·dt
  double classical = 0.0;   // u·dt
};

PhotonOffset parallel_photon_offset(double u, double omega, double c, double dt_emit);

struct CountRow {
  radar::RadarRecord medium;  // s
  clock::PulseCounts counts;  // origin-clock ticks
};

/// Successive radar pulses from the origin clock with immediate re-emission
/// (each pulse leaves when the previous one returns). Counts are t/u; the
/// reflection count is the Einstein-synchronized midpoint (τ1 + τ3)/2. With
/// quantize set, emission and return counts are rounded to whole ticks.
std::vector<CountRow> count_trace(const clock::LightClockSpec& spec, double omega, double t1,
                                  int n_pulses, bool quantize = false);

}  // namespace lightclock::nsppm
