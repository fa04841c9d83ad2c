#pragma once

#include <array>
#include <optional>

#include "uradius/errors.hpp"

namespace uradius {

enum class RadiusMethod { closed_form_thm1, half_a2, bisection_eq11 };

/// A computed membership radius. value is a certified lower bound for the
/// true radius of the statement behind `method`; bisection results also
/// carry the final bracket and the tolerance achieved.
struct RadiusResult {
  double value = 0.0;
  RadiusMethod method = RadiusMethod::half_a2;
  std::optional<std::array<double, 2>> bracket;
  double tol = 0.0;
};

/// The quantities behind the thm1 bound at one (|a2|, r) pair: the
/// maximizer t0 of phi on [0, r], phi(t0), and phi(t0)/(1 - r^2).
struct PhiAnalysis {
  double a2_mod = 0.0;
  double r = 0.0;
  double t0 = 0.0;
  double phi_at_t0 = 0.0;
  double bound = 0.0;
};

/// phi(t) = (|a2| r^2 - (|a2| - 1 + r^2) t^2) / (|a2| - t)^2 for 0 <= t <= r.
/// Throws DomainError when a2_mod <= t (denominator sign) or t outside [0, r].
double phi(double a2_mod, double r, double t);

/// t0 = r^2 / (|a2| - 1 + r^2), the stationary point of phi.
/// Requires a2_mod > 1 and 0 < r < 1.
double phi_maximizer(double a2_mod, double r);

/// Requires 5/4 <= a2_mod <= 2 and 0 < r < 1 (thm1 hypothesis range).
PhiAnalysis analyze_phi(double a2_mod, double r);

/// sup bound for |U_g| on |z| = r:
/// (|a2| - 1 + r^2) r^2 / ((1 - r^2)(|a2| - 1)(|a2| + r^2)).
/// Strictly increasing in r; equals 1 exactly at radius_theorem1(a2_mod).
double u_bound_theorem1(double a2_mod, double r);

/// Closed form sqrt((1 - |a2| + sqrt(|a2|^2 + 2|a2| - 3)) / 2).
/// Hypothesis 5/4 <= |a2| <= 2 is enforced (DomainError outside).
RadiusResult radius_theorem1(double a2_mod);

/// The |a2|/2 radius shared by the S+ bound (any 0 < |a2| <= 2) and the
/// baseline U bound (0 < |a2| <= 1); callers annotate which hypothesis
/// they rely on.
RadiusResult radius_half_a2(double a2_mod);

/// (3r^2 - 2r^4)/(1 - r^2)^2 - ln(1 - r^2); strictly increasing on [0, 1).
/// Throws DomainError for r < 0 or r >= 1.
double thm3_lhs(double r);

/// Bisection root of thm3_lhs(r) = a2_mod^2 on (0, 1). The root is unique
/// by monotonicity; the returned bracket has width <= tol.
RadiusResult radius_theorem3(double a2_mod, double tol = 1e-12);

}  // namespace uradius
