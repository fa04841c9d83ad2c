#include "uradius/analysis.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace uradius {

namespace {

constexpr std::array<double, 3> kValidationRings = {0.3, 0.6, 0.9};
constexpr int kValidationAngles = 64;

}  // namespace

ReciprocalRep reciprocal_rep(const NormalizedFunction& f) {
  const TruncatedSeries z_over_f = reciprocal(divide_by_z(f.series()));
  return ReciprocalRep{z_over_f.coeffs()};
}

double schwarz_excess(const TruncatedSeries& omega) {
  double worst = -1.0;
  for (double r : kValidationRings) {
    for (int k = 0; k < kValidationAngles; ++k) {
      const double th = 2.0 * std::numbers::pi * k / kValidationAngles;
      const Complex z = r * Complex(std::cos(th), std::sin(th));
      worst = std::max(worst, std::abs(eval(omega, z)) - r);
    }
  }
  return worst;
}

SchwarzFunction SchwarzFunction::make(TruncatedSeries omega, Complex source_a2) {
  if (omega.coeff(0) != Complex(0.0, 0.0))
    throw NotInU("Schwarz function must vanish at 0");
  if (schwarz_excess(omega) > kSchwarzSlack)
    throw NotInU("sampled |w(z)| exceeds |z| on the validation rings");
  return SchwarzFunction(std::move(omega), source_a2);
}

TruncatedSeries u_functional(const NormalizedFunction& f) {
  const TruncatedSeries z_over_f = reciprocal(divide_by_z(f.series()));
  const TruncatedSeries fp = derivative(f.series());
  TruncatedSeries u = mul(mul(z_over_f, z_over_f), fp);
  std::vector<Complex> c = u.coeffs();
  c[0] -= 1.0;
  return TruncatedSeries(std::move(c));
}

Complex u_eval(const NormalizedFunction& f, Complex z) {
  const Complex p = eval(divide_by_z(f.series()), z);  // f(z)/z
  if (std::abs(p) < kPoleEpsilon) throw PoleAtSample("f(z)/z vanishes at the sample point");
  const Complex d = eval(derivative(f.series()), z);
  return d / (p * p) - 1.0;
}

NormalizedFunction g_transform(const ReciprocalRep& rep) {
  const Complex a2 = -rep.b[1];
  if (std::abs(a2) <= kA2Epsilon) throw VanishingA2("transform undefined: |a2| vanishes");
  std::vector<Complex> g(rep.b.size());
  g[0] = Complex(0.0, 0.0);
  // b_1 = -a2, so the degree-1 coefficient is identically 1; assigning it
  // directly keeps the normalization exact (complex division rounds).
  g[1] = Complex(1.0, 0.0);
  for (std::size_t n = 2; n < rep.b.size(); ++n) g[n] = -rep.b[n] / a2;
  return NormalizedFunction(TruncatedSeries(std::move(g)));
}

NormalizedFunction g_transform(const NormalizedFunction& f) {
  if (std::abs(f.a2()) <= kA2Epsilon) throw VanishingA2("transform undefined: |a2| vanishes");
  return g_transform(reciprocal_rep(f));
}

SchwarzFunction extract_omega(const NormalizedFunction& f) {
  const ReciprocalRep rep = reciprocal_rep(f);
  // z/f = 1 - a2 z - z w(z)  =>  w_0 = -(a2 + b_1) = 0,  w_n = -b_{n+1}.
  const Complex a2 = f.a2();
  const int m = rep.order() - 1;
  if (m < 1) throw DomainError("extract_omega: order too small");
  std::vector<Complex> w(static_cast<std::size_t>(m) + 1);
  w[0] = -(a2 + rep.b[1]);
  for (int n = 1; n <= m; ++n) w[n] = -rep.b[static_cast<std::size_t>(n) + 1];
  // b_1 = -a2 holds exactly by the reciprocal recurrence.
  return SchwarzFunction::make(TruncatedSeries(std::move(w)), a2);
}

NormalizedFunction g_from_omega(const SchwarzFunction& w, Complex a2) {
  if (std::abs(a2) <= kA2Epsilon) throw VanishingA2("transform undefined: |a2| vanishes");
  const TruncatedSeries& om = w.omega();
  std::vector<Complex> g(static_cast<std::size_t>(om.order()) + 2, Complex(0.0, 0.0));
  g[1] = Complex(1.0, 0.0);  // w(0) = 0, so z w(z)/a2 contributes nothing at degree 1
  for (int n = 1; n <= om.order(); ++n) g[static_cast<std::size_t>(n) + 1] = om.coeff(n) / a2;
  return NormalizedFunction(TruncatedSeries(std::move(g)));
}

double coef_sum(const NormalizedFunction& f) {
  double s = 0.0;
  for (int n = 2; n <= f.order(); ++n) s += n * std::abs(f.series().coeff(n));
  return s;
}

bool coef_sum_criterion(const NormalizedFunction& f) {
  return coef_sum(f) <= 1.0 + kCriterionSlack;
}

SPlusCheck splus_criterion(const ReciprocalRep& rep) {
  SPlusCheck out{false, true, 0.0};
  for (int n = 1; n <= rep.order(); ++n) {
    const Complex bn = rep.b[static_cast<std::size_t>(n)];
    if (std::abs(bn.imag()) > 1e-13 || bn.real() < -1e-13) {
      out.nonneg_ok = false;
      return out;
    }
    if (n >= 2) out.weighted_sum += (n - 1) * bn.real();
  }
  out.member = out.weighted_sum <= 1.0 + kCriterionSlack;
  return out;
}

double area_theorem_bound(const ReciprocalRep& rep) {
  double s = 0.0;
  for (int n = 2; n <= rep.order(); ++n) s += (n - 1) * std::norm(rep.b[static_cast<std::size_t>(n)]);
  return s;
}

}  // namespace uradius
