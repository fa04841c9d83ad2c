#include "uradius/series.hpp"

#include <algorithm>

namespace uradius {

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = a.coeff(k) + b.coeff(k);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out[k] = a.coeff(k) - b.coeff(k);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> out(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0));
  for (int i = 0; i <= n; ++i) {
    const Complex ai = a.coeff(i);
    if (ai == Complex(0.0, 0.0)) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += ai * b.coeff(j);
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  const Complex a0 = a.coeff(0);
  if (std::abs(a0) == 0.0) throw ZeroConstantTerm("reciprocal: constant term is zero");
  const int n = a.order();
  std::vector<Complex> r(static_cast<std::size_t>(n) + 1);
  r[0] = 1.0 / a0;
  // Forward substitution: sum_{k=0..m} a_k r_{m-k} = 0 for m >= 1.
  for (int m = 1; m <= n; ++m) {
    Complex acc(0.0, 0.0);
    for (int k = 1; k <= m; ++k) acc += a.coeff(k) * r[m - k];
    r[m] = -acc / a0;
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries derivative(const TruncatedSeries& a) {
  const int n = a.order();
  if (n == 0) return TruncatedSeries(0);
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out[k - 1] = static_cast<double>(k) * a.coeff(k);
  return TruncatedSeries(std::move(out));
}

Complex eval(const TruncatedSeries& a, Complex z) {
  Complex acc = a.coeff(a.order());
  for (int k = a.order() - 1; k >= 0; --k) acc = acc * z + a.coeff(k);
  return acc;
}

TruncatedSeries scale_argument(const TruncatedSeries& a, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("scale_argument: r must lie in (0, 1]");
  std::vector<Complex> out(static_cast<std::size_t>(a.order()) + 1);
  double pw = 1.0;
  for (int k = 0; k <= a.order(); ++k) {
    out[k] = a.coeff(k) * pw;
    pw *= r;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries divide_by_z(const TruncatedSeries& a) {
  if (a.order() < 1) throw DomainError("divide_by_z: need order >= 1");
  if (a.coeff(0) != Complex(0.0, 0.0)) throw DomainError("divide_by_z: constant term must be exactly 0");
  std::vector<Complex> out(a.coeffs().begin() + 1, a.coeffs().end());
  return TruncatedSeries(std::move(out));
}

TruncatedSeries multiply_by_z(const TruncatedSeries& a) {
  std::vector<Complex> out(static_cast<std::size_t>(a.order()) + 2, Complex(0.0, 0.0));
  for (int k = 0; k <= a.order(); ++k) out[k + 1] = a.coeff(k);
  return TruncatedSeries(std::move(out));
}

NormalizedFunction scale_argument(const NormalizedFunction& f, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("scale_argument: r must lie in (0, 1]");
  std::vector<Complex> out(static_cast<std::size_t>(f.order()) + 1);
  out[0] = Complex(0.0, 0.0);
  double pw = 1.0;  // r^(n-1)
  for (int k = 1; k <= f.order(); ++k) {
    out[k] = f.series().coeff(k) * pw;
    pw *= r;
  }
  return NormalizedFunction(TruncatedSeries(std::move(out)));
}

}  // namespace uradius
