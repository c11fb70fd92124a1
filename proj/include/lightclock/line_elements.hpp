#pragma once

/**
 * Line elements built from a potential-velocity factor
 *
 *   λ = 1 − (v + d)²/c²   (real mode)
 *   λ = 1 + (v + d)²/c²   (complex mode)
 *
 * and the evaluators that use it: chronotopic, radial (Schwarzschild family),
 * linear, Robertson-Walker, the Newtonian first approximation, coordinate
 * radar time and horizon roots.
 *
 * Lengths may be in any unit as long as c, R, r0 and Λ agree. Λ carries an
 * explicit unit tag; see CosmologicalConstant.
 */

#include <functional>
#include <optional>
#include <vector>

#include "lightclock/infinitesimals.hpp"

namespace lightclock::line_elements {

enum class LambdaMode { real, complex };

class LambdaFactor {
 public:
  using Field = std::function<double(double R, double t)>;

  /// v and d may depend on (R, t); they must be side-effect free.
  LambdaFactor(Field v, Field d, LambdaMode mode, double c);

  /// Constant-velocity factor, e.g. v = v_E with d = 0 for the linear effect
  /// or a constant d for the quasi-Schwarzschild variant.
  static LambdaFactor constant(double v, double d, LambdaMode mode, double c);

  /// A factor that always evaluates to lam.
  static LambdaFactor from_value(double lam);

  double value(double R, double t = 0.0) const;
  LambdaMode mode() const { return mode_; }

 private:
  LambdaFactor() = default;
  Field v_;
  Field d_;
  LambdaMode mode_ = LambdaMode::real;
  double c_ = 1.0;
  std::optional<double> fixed_;
};

enum class LambdaUnit {
  per_time_squared,    // Λ in s⁻²; the geometric value is Λ/c²
  per_length_squared,  // Λ already divided by c²
};

struct CosmologicalConstant {
  double value = 0.0;
  LambdaUnit unit = LambdaUnit::per_length_squared;

  /// Λ in length⁻², the coefficient in λ = 1 − r0/R − (Λ/3)R².
  double geometric(double c) const;
};

struct GravitySource {
  double mass = 0.0;                // kg (0 when built from r0)
  double G = 6.67430e-11;           // m³ kg⁻¹ s⁻²
  double schwarzschild_r0 = 0.0;    // 2GM/c²
  CosmologicalConstant Lambda;

  static GravitySource from_mass(double mass, double c, double G = 6.67430e-11,
                                 CosmologicalConstant Lambda = {});
  static GravitySource from_schwarzschild_radius(double r0, CosmologicalConstant Lambda = {});

  /// √(2GM/R) = c·√(r0/R).
  double potential_velocity(double R, double c) const;
};

struct MetricPoint {
  double R = 0.0;
  double theta = 0.0;
  double dt = 0.0;
  double dR = 0.0;
  double dtheta = 0.0;
  double dphi = 0.0;
};

/// R²(sin²θ·dφ² + dθ²).
double angular_term(const MetricPoint& p);

double minkowski_interval(double dt, double dx, double dy, double dz, double c);

/// λ(c·dt)² − dR²/λ − angular. Throws DomainError("singular surface at R=...")
/// when λ = 0.
double radial_interval(double lam, const MetricPoint& p, double c);
double radial_interval(const LambdaFactor& lam, const MetricPoint& p, double c, double t = 0.0);

/// λ(c·dt)² − dr²/λ.
double linear_interval(double lam, double dt, double dr, double c);

/// 1 − r0/R for R > r0.
double schwarzschild_lambda(const GravitySource& src, double R);

/// 1 − r0/R − (Λ/3)R² with Λ in length⁻².
double modified_schwarzschild_lambda(const GravitySource& src, double R, double c);

/// Positive radii, ascending, where the modified factor vanishes. A tangent
/// double root is reported once.
std::vector<double> horizon_roots(const GravitySource& src, double c);

/// Λ (length⁻²) that puts a horizon at R: 3(1 − r0/R)/R².
double cosmological_constant_for_horizon(double r0, double R);

/// (c·dt)² − dR²/(1 − R²/(c·a)²) − angular, with a the expansion scale in
/// seconds. Throws DomainError for a = 0 or R ≥ c|a|.
double robertson_walker_interval(double a, const MetricPoint& p, double c);

struct ApproxInterval {
  double value = 0.0;
  bool weak_field_warning = false;  // r0/r > 0.1
};

/// (1 − r0/r)(c·dt)² − (1 + r0/r)dr².
ApproxInterval newtonian_first_approx(const GravitySource& src, double r, double dt, double dr,
                                      double c);

/// Coordinate time of a radial light flight from R1 to R2:
/// c·Δt = (R2 − R1) + r0·ln((R2 − r0)/(R1 − r0)).
double radar_coordinate_time(const GravitySource& src, double R1, double R2, double c);

struct TransformedDifferentials {
  double dRs = 0.0;
  double dTs = 0.0;
};

/// dRs = dRm/η + √(1−η)·dTm, dTs = (√(1−η)/η)·dRm + dTm, for η ∈ (0, 1].
TransformedDifferentials infinitesimal_transform(double eta, double dRm, double dTm);

struct HubbleResult {
  double a = 0.0;
  double H = 0.0;
  double dH_dt = 0.0;
  double q = 0.0;
  /// −qH² − (−4πGρ/3), when a density is supplied.
  std::optional<double> friedmann_residual;
};

/// H = a'/a from the dual carrier, dH/dt by Richardson-extrapolated central
/// differences of H, and q = −(1 + H'/H²).
HubbleResult hubble_deceleration(const std::function<infinitesimals::Dual(infinitesimals::Dual)>& a,
                                 double t, std::optional<double> rho = std::nullopt,
                                 double G = 6.67430e-11);

/// 2π²a³ρ.
double closed_universe_mass(double a, double rho);

}  // namespace lightclock::line_elements
