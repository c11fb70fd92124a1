#pragma once

/**
 * Hyperbolic velocity space.
 *
 * Three positions F1, F2, P recede from one another with medium velocities
 * ω3 (F1–F2), ω1 (F1–P) and ω2 (F2–P). Scaled by c these are the sides of a
 * triangle in a hyperbolic plane of curvature radius c. θ is the interior
 * angle at F1, φ the exterior angle at F2 (measured from the extension of
 * F1F2 beyond F2), and p1, p2, n the projections of F1P, F2P onto F1F2 and
 * the common normal:
 *
 *   tanh(p1/c) =  tanh(ω1/c)·cosθ,   tanh(p2/c) = −tanh(ω2/c)·cosφ,
 *   sinh(n/c)  =  sinh(ω1/c)·sinθ  =  sinh(ω2/c)·sinφ,
 *   cosh(ω1/c) =  cosh(ω2/c)cosh(ω3/c) + sinh(ω2/c)sinh(ω3/c)cosφ,
 *   p1 + p2 = ω3.
 *
 * Einstein velocities are v = c·tanh(ω/c), and β = cosh(ω/c).
 */

namespace lightclock::velocity_space {

struct BetaGamma {
  double v = 0.0;
  double beta = 1.0;   // (1 − v²/c²)^{-1/2}
  double gamma = 1.0;  // 1/beta
};

struct VelocityTriangle {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double omega3 = 0.0;
  double theta = 0.0;  // [0, π/2]
  double phi = 0.0;    // [π/2, π]
  double p1 = 0.0;
  double p2 = 0.0;
  double n = 0.0;
  double c = 1.0;
  double cosh_law_residual = 0.0;
};

/// Einstein-velocity form of the triangle with the residuals of the three
/// identities, each normalised to be dimensionless:
///   v1·cosθ = (v3 + v2·cosφ)/(1 + α),      α = v3·v2·cosφ/c²
///   β1      = β2·β3·(1 + α)
///   v1·sinθ = v2·sinφ / (β3·(1 + α))
struct TriangleEinstein {
  double v1 = 0.0;
  double v2 = 0.0;
  double v3 = 0.0;
  double alpha = 0.0;
  double beta1 = 1.0;
  double beta2 = 1.0;
  double beta3 = 1.0;
  double residual_projection = 0.0;
  double residual_beta = 0.0;
  double residual_normal = 0.0;
};

struct Event4 {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// The same event P expressed in the Einstein coordinates of F1 and of F2.
struct TriangleEvents {
  Event4 from_f1;
  Event4 from_f2;
};

BetaGamma beta_gamma(double v, double c);

/// (v1 + v2)/(1 + v1·v2/c²).
double compose_einstein(double v1, double v2, double c);

/// Solves φ from the cosine law and θ from the projection/normal relations.
/// ω2 = 0 returns the coincident case θ = 0, φ = π/2; ω1 = 0 returns θ = 0,
/// φ = π. Throws DomainError("degenerate velocity triangle") when the sides
/// admit no triangle with φ ∈ [π/2, π] and θ ∈ [0, π/2].
VelocityTriangle solve_triangle(double omega1, double omega2, double omega3, double c);

/// Throws DomainError("triangle identity violation") when any residual
/// exceeds tol.
TriangleEinstein triangle_to_einstein(const VelocityTriangle& tri, double tol = 1e-9);

/// x-aligned boost from F2 to F1 coordinates:
/// t1 = β3(t2 − v3·x2/c²), x1 = β3(x2 − v3·t2), y1 = y2, z1 = z2.
Event4 lorentz_transform(const Event4& e2, double v3, double c);

/// Coordinates of P from both positions, given the Einstein time t2 at F2.
/// The x-axis runs from F2 towards F1:
///   F2: x = −v2·t2·cosφ, y = v2·t2·sinφ
///   F1: t1 = β1·t2/β2,  x = −v1·t1·cosθ, y = v1·t1·sinθ
TriangleEvents triangle_events(const VelocityTriangle& tri, double t2);

/// c²t² − x² − y² − z².
double interval(const Event4& e, double c);

}  // namespace lightclock::velocity_space
