#pragma once

/**
 * Transition-zone transformation for the radial field.
 *
 * H_k is the C¹ piecewise function
 *
 *   f_k(x) = 1/(x − k)                                  x ≤ 0
 *   g_k(x) = −x³/(2k⁴) + 7x²/(4k³) − x/k² − 1/k         0 < x ≤ 2k
 *   h_k(x) = 0                                          x > 2k
 *
 * evaluated at x = λ(R). A finite k > 0 stands in for the infinitesimal.
 *
 * Time differentials: dU is the transformed coordinate, dt = dU − f·dR.
 * Outside the zone (λ > 2k) f vanishes and dU = dt.
 */

#include <array>
#include <optional>

#include "lightclock/line_elements.hpp"

namespace lightclock::transition_zone {

using line_elements::GravitySource;
using line_elements::MetricPoint;

struct TransitionParams {
  double k = 1e-3;
};

double H_k(double x, double k);
double H_k_prime(double x, double k);

/// Middle (cubic) branch, evaluated without range checks.
double g_k(double x, double k);

/// Standard part of f_M at R: 1/(cλ) inside r0, 0 outside, and nullopt at
/// R = r0 where f_M is unbounded (its product with dR still standardizes to 0).
std::optional<double> f_M_standardized(double R, const GravitySource& src, double c);

/// λ(c·dU)² − 2c·dU·dR − R²(sin²θ·dφ² + dθ²).
double black_hole_interval(double lam, double dU, double dR, double R, double theta,
                           double dtheta, double dphi, double c);

/// λc²(dU − f·dR)² − dR²/λ − angular, expanded term by term:
/// λc²dU² − 2λc²f·dU·dR + (λc²f² − 1/λ)dR² − angular. p.dt is read as dU.
double transformed_interval(double lam, double f, const MetricPoint& p, double c);

/// Interval after standardizing f_M: the radial Schwarzschild form outside r0
/// (same code path as line_elements::radial_interval), the black-hole form at
/// and inside r0. p.dt is read as dU.
double standardized_interval(const GravitySource& src, const MetricPoint& p, double c);

enum class PartialBranch { interior, transition, exterior };

struct PartialInterval {
  PartialBranch branch = PartialBranch::exterior;
  double value = 0.0;
};

/// Radial partial line element selected by λ:
///   λ ≤ 0        interior    (λ − k)(c·dU)² − 2c·dU·dR
///   0 < λ ≤ 2k   transition  (λ − k)c²(dU − g_k(λ)·dR/c)² − dR²/(λ − k)
///   λ > 2k       exterior    (λ − k)(c·dU)² − dR²/(λ − k)
/// The branches agree at λ = 0 and λ = 2k. Throws
/// DomainError("transition singularity at lambda=k") when λ = k.
PartialInterval partial_interval(double lam, double k, double dU, double dR, double c);

/// {+c(λ − k), −c(λ − k)}.
std::array<double, 2> photon_families(double lam, double k, double c);

}  // namespace lightclock::transition_zone
