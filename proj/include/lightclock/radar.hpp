#pragma once

// Radar (Einstein) measurement from medium times t1 ≤ t2 ≤ t3 and the
// geometric-mean law t2 = √(t1·t3), e^{ω/c} = √(t3/t1).

#include "lightclock/lightclock.hpp"

namespace lightclock::radar {

using clock::EinsteinMeasures;

/// Medium emission, reflection and return times.
struct RadarRecord {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
};

/// Medium scalar velocity; never negative.
struct Rapidity {
  double omega = 0.0;
  double c = 1.0;
};

struct RadarMeasures {
  EinsteinMeasures einstein;
  double t1_split = 0.0;  // (1 − v_E/c)·t_E
  double t3_split = 0.0;  // (1 + v_E/c)·t_E
  double t2_pred = 0.0;   // √(1 − v_E²/c²)·t_E
  /// False when r_E = 0: the emitter and reflector coincide and t_E is just
  /// the common medium time.
  bool is_einstein_measure = true;
};

/// Throws DomainError("invalid medium time") unless 0 < t1 ≤ t2 ≤ t3.
void validate(const RadarRecord& rec);

RadarMeasures einstein_measures(const RadarRecord& rec, double c);

/// |t2 − √(t1·t3)| ≤ tol·t2.
bool check_geometric_mean(const RadarRecord& rec, double tol);

/// ω = c·artanh(|v_E|/c). Throws for |v_E| ≥ c.
Rapidity rapidity_from_vE(double v_E, double c);

/// (t1, t1·e^{ω/c}, t1·e^{2ω/c}).
RadarRecord record_from_rapidity(double omega, double c, double t1);

}  // namespace lightclock::radar
