#include "uradius/radii.hpp"

#include <cmath>
#include <limits>

namespace uradius {

namespace {

constexpr double kEndpointTol = 1e-12;  // slack at closed hypothesis endpoints
constexpr double kOneMinus = 1.0 - 1e-9;  // guard against log(0) at r = 1

void require_thm1_range(double a2_mod, const char* who) {
  if (!(a2_mod >= 1.25 - kEndpointTol && a2_mod <= 2.0 + kEndpointTol))
    throw DomainError(std::string(who) + ": hypothesis requires 5/4 <= |a2| <= 2");
}

}  // namespace

double phi(double a2_mod, double r, double t) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("phi: r must lie in (0, 1)");
  if (!(t >= 0.0 && t <= r)) throw DomainError("phi: t must lie in [0, r]");
  if (!(a2_mod > t)) throw DomainError("phi: requires |a2| > t");
  const double d = a2_mod - t;
  return (a2_mod * r * r - (a2_mod - 1.0 + r * r) * t * t) / (d * d);
}

double phi_maximizer(double a2_mod, double r) {
  if (!(a2_mod > 1.0)) throw DomainError("phi_maximizer: requires |a2| > 1");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("phi_maximizer: r must lie in (0, 1)");
  return r * r / (a2_mod - 1.0 + r * r);
}

PhiAnalysis analyze_phi(double a2_mod, double r) {
  require_thm1_range(a2_mod, "analyze_phi");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("analyze_phi: r must lie in (0, 1)");
  PhiAnalysis out;
  out.a2_mod = a2_mod;
  out.r = r;
  out.t0 = phi_maximizer(a2_mod, r);
  // phi(t0) in the simplified form; agrees with phi(a2_mod, r, t0).
  out.phi_at_t0 =
      (a2_mod - 1.0 + r * r) * r * r / ((a2_mod - 1.0) * (a2_mod + r * r));
  out.bound = out.phi_at_t0 / (1.0 - r * r);
  return out;
}

double u_bound_theorem1(double a2_mod, double r) {
  return analyze_phi(a2_mod, r).bound;
}

RadiusResult radius_theorem1(double a2_mod) {
  require_thm1_range(a2_mod, "radius_theorem1");
  const double disc = a2_mod * a2_mod + 2.0 * a2_mod - 3.0;
  const double inner = (1.0 - a2_mod + std::sqrt(disc)) / 2.0;
  RadiusResult out;
  out.value = std::sqrt(inner);
  out.method = RadiusMethod::closed_form_thm1;
  out.tol = std::numeric_limits<double>::epsilon();
  return out;
}

RadiusResult radius_half_a2(double a2_mod) {
  if (!(a2_mod > 0.0 && a2_mod <= 2.0 + kEndpointTol))
    throw DomainError("radius_half_a2: requires 0 < |a2| <= 2");
  RadiusResult out;
  out.value = a2_mod / 2.0;
  out.method = RadiusMethod::half_a2;
  out.tol = std::numeric_limits<double>::epsilon();
  return out;
}

double thm3_lhs(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("thm3_lhs: r must lie in [0, 1)");
  const double x = r * r;
  const double one_minus = 1.0 - x;
  return (3.0 * x - 2.0 * x * x) / (one_minus * one_minus) - std::log1p(-x);
}

RadiusResult radius_theorem3(double a2_mod, double tol) {
  if (!(a2_mod > 0.0 && a2_mod <= 2.0 + kEndpointTol))
    throw DomainError("radius_theorem3: requires 0 < |a2| <= 2");
  if (!(tol > 0.0)) throw DomainError("radius_theorem3: tol must be positive");
  const double target = a2_mod * a2_mod;
  double lo = 0.0;               // thm3_lhs(0) = 0 < target
  double hi = kOneMinus;
  if (thm3_lhs(hi) < target) throw NoBracket("radius_theorem3: no sign change before r = 1");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at rounding resolution
    if (thm3_lhs(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  RadiusResult out;
  out.value = 0.5 * (lo + hi);
  out.method = RadiusMethod::bisection_eq11;
  out.bracket = {{lo, hi}};
  out.tol = hi - lo;
  return out;
}

}  // namespace uradius
