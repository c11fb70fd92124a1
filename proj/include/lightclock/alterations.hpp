#pragma once

// Physical-alteration ratios. Quantities tagged "s" are measured in the
// comparison standard (lower medium speed or deeper potential); the "m"
// side is the medium view. Callers choose the tags; nothing is auto-swapped.

#include <functional>

#include "lightclock/line_elements.hpp"

namespace lightclock::alterations {

using line_elements::CosmologicalConstant;
using line_elements::GravitySource;

struct AlterationReport {
  double gamma = 1.0;
  double frequency_ratio = 1.0;  // ν_m/ν_s = γ
  double lifetime_ratio = 1.0;   // τ_m/τ_s = 1/γ
  double mass_ratio = 1.0;       // M_m/M_s = 1/γ
  double clock_rate_ratio = 1.0; // dt_s/dt_m = γ
};

/// Two clocks at radii r_P and r_R outside r_s. Λ_P and Λ_R may differ;
/// both default to zero. r_R may be +∞ when its Λ is zero.
struct GravCompareInput {
  double r_s = 0.0;
  double r_P = 0.0;
  double r_R = 0.0;
  CosmologicalConstant Lambda_P;
  CosmologicalConstant Lambda_R;
  double c = 1.0;
};

double gamma_special(double v_E, double c);
double gamma_gravitational(const GravitySource& src, double R);

AlterationReport report_for_gamma(double gamma);

double transverse_doppler(double nu_s, double gamma);

/// ν_s·√((1 − v_E/c)/(1 + v_E/c)) for a receding source, 0 ≤ v_E < c.
double total_doppler(double nu_s, double v_E, double c);

double decay_lifetime(double tau_s, double gamma);
double mass_alteration(double M_s, double gamma);

/// With F(t) = f(γt), compares δ_m = F'/F at t_m against γ·δ_s where
/// δ_s = f'/f at γt_m; both logarithmic derivatives use central differences
/// with step h. Returns |δ_s − δ_m/γ|.
double separated_operator_check(const std::function<double(double)>& f, double gamma, double t_m,
                                double h = 1e-5);

/// g(X) = 1 − r_s/r_X − Λ_X·r_X²/3 (Λ in length⁻²).
double g1(double r_s, double r, const CosmologicalConstant& Lambda, double c);

/// Δt_R/Δt_P = √g(R)/√g(P).
double gravitational_clock_compare(const GravCompareInput& inp);

/// ν_P from √g1(P)·ν_P = √g1(R)·ν_R.
double frequency_compare(double g1_P, double g1_R, double nu_R);

/// √g1·c.
double altered_light_speed(double g1, double c);

/// R-side rate from √g1(P)·ΔQ_P = √g1(R)·ΔQ_R.
double rate_of_change_compare(double g1_P, double g1_R, double dQ_P);

/// Time-dependent potentials: integrates dQ_R = √(g1_P(t)/g1_R(t))·dQ_P over
/// [t0, t1] given the P-side rate dQ_P/dt.
double accumulated_rate_compare(const std::function<double(double)>& g1_P,
                                const std::function<double(double)>& g1_R,
                                const std::function<double(double)>& rate_P, double t0,
                                double t1);

}  // namespace lightclock::alterations
