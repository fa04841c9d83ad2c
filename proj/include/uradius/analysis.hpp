#pragma once

#include "uradius/series.hpp"

namespace uradius {

// The transform divides by a2; below this modulus it is treated as zero.
inline constexpr double kA2Epsilon = 1e-13;
// Pointwise evaluation treats |f(z)/z| below this as a pole of 1/f.
inline constexpr double kPoleEpsilon = 1e-13;
// Slack allowed when certifying |w(z)| <= |z| on the validation rings.
inline constexpr double kSchwarzSlack = 1e-9;
// Slack allowed on the three coefficient-sum criteria (sums compared to 1).
inline constexpr double kCriterionSlack = 1e-12;

/// Coefficients of z/f(z) = 1 + b1 z + b2 z^2 + ...  (b[0] == 1).
/// The bridge between f-space and g-space: the transform and both
/// coefficient criteria below read their data from here.
struct ReciprocalRep {
  std::vector<Complex> b;
  int order() const { return static_cast<int>(b.size()) - 1; }
};

ReciprocalRep reciprocal_rep(const NormalizedFunction& f);

/// w analytic with w(0) = 0 and |w(z)| <= |z|, certified by sampling on
/// the fixed validation rings |z| in {0.3, 0.6, 0.9} x 64 angles.
/// make() throws NotInU when the sampled bound fails.
class SchwarzFunction {
 public:
  static SchwarzFunction make(TruncatedSeries omega, Complex source_a2);

  const TruncatedSeries& omega() const { return omega_; }
  Complex source_a2() const { return source_a2_; }

 private:
  SchwarzFunction(TruncatedSeries omega, Complex source_a2)
      : omega_(std::move(omega)), source_a2_(source_a2) {}

  TruncatedSeries omega_;
  Complex source_a2_;
};

// max over the validation rings of |w(z)| - |z|; <= kSchwarzSlack passes.
double schwarz_excess(const TruncatedSeries& omega);

/// Series of U_f(z) = (z/f(z))^2 f'(z) - 1. U_f(0) = 0 for normalized f.
TruncatedSeries u_functional(const NormalizedFunction& f);

/// Pointwise U_f(z) through the f-series and its derivative (not through
/// the truncated U-series, which would compound truncation error).
/// Throws PoleAtSample when |f(z)/z| < kPoleEpsilon.
Complex u_eval(const NormalizedFunction& f, Complex z);

/// g(z) = ((z/f(z)) - 1)/(-a2), renormalized so g(0) = 0, g'(0) = 1.
/// Coefficientwise: g_n = -b_n/a2 with b_1 = -a2 making g'(0) = 1 exact.
/// Throws VanishingA2 when |a2| <= kA2Epsilon.
NormalizedFunction g_transform(const NormalizedFunction& f);
NormalizedFunction g_transform(const ReciprocalRep& rep);

/// Solves z/f(z) = 1 - a2 z - z w(z) for w and certifies the Schwarz
/// bound on the validation rings; throws NotInU when the bound fails.
SchwarzFunction extract_omega(const NormalizedFunction& f);

/// g(z) = z + (1/a2) z w(z). Throws VanishingA2 when |a2| <= kA2Epsilon.
NormalizedFunction g_from_omega(const SchwarzFunction& w, Complex a2);

// sum_{n>=2} n |a_n| and the criterion sum <= 1 (slack kCriterionSlack).
// Passing the criterion implies |U_f| < 1, |f' - 1| < 1 and |zf'/f - 1| < 1
// on the open disk.
double coef_sum(const NormalizedFunction& f);
bool coef_sum_criterion(const NormalizedFunction& f);

/// Verdict of the nonnegative-coefficient membership test
/// sum_{n>=2} (n-1) b_n <= 1 with all b_n real and >= 0.
struct SPlusCheck {
  bool member;          // both conditions hold
  bool nonneg_ok;       // all b_n (n >= 1) real and >= 0 within 1e-13
  double weighted_sum;  // sum (n-1) Re(b_n), valid when nonneg_ok
};

SPlusCheck splus_criterion(const ReciprocalRep& rep);

/// sum_{n>=2} (n-1) |b_n|^2; the caller compares against 1.
double area_theorem_bound(const ReciprocalRep& rep);

}  // namespace uradius
