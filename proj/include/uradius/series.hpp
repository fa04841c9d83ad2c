#pragma once

#include <complex>
#include <vector>

#include "uradius/errors.hpp"

namespace uradius {

using Complex = std::complex<double>;

// Default truncation degree. All the extremal functions handled by this
// toolkit are rational with low-degree numerator/denominator, so their
// coefficient tails are either exactly zero or geometrically small.
inline constexpr int kDefaultOrder = 64;

/// A power series known exactly up to degree order(): coefficient n is
/// the coefficient of z^n and there are exactly order()+1 of them.
/// Instances are immutable after construction; every operation below is
/// a pure function, so values can be shared across threads freely.
class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(int order) {
    if (order < 0) throw DomainError("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex(0.0, 0.0));
  }

  // Order is inferred as coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("series needs at least a constant term");
  }

  static TruncatedSeries constant(Complex c, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Complex>& coeffs() const { return coeffs_; }

  // Strict accessor: coefficients beyond the truncation order are unknown,
  // not zero.
  Complex coeff(int n) const {
    if (n < 0 || n > order()) throw DomainError("coefficient index outside truncation order");
    return coeffs_[static_cast<std::size_t>(n)];
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Complex> coeffs_;
};

// Coefficientwise sum/difference/product, truncated at min(order_a, order_b).
// Truncation is explicit: the result order records how far the value is known.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Series r with mul(a, r) == 1 up to the truncation order.
// Throws ZeroConstantTerm when |a_0| == 0.
TruncatedSeries reciprocal(const TruncatedSeries& a);

// Termwise derivative; order drops by one (a constant series stays order 0).
TruncatedSeries derivative(const TruncatedSeries& a);

// Horner evaluation of the truncated polynomial.
Complex eval(const TruncatedSeries& a, Complex z);

/// Series of a(rz): c_n -> c_n r^n. Requires 0 < r <= 1.
TruncatedSeries scale_argument(const TruncatedSeries& a, double r);

// a / z for series with a_0 == 0 exactly; order drops by one.
TruncatedSeries divide_by_z(const TruncatedSeries& a);

// z * a; order grows by one (every coefficient of the product is known).
TruncatedSeries multiply_by_z(const TruncatedSeries& a);

/// A series constrained to f(0) = 0 and f'(0) = 1 exactly, i.e. the
/// normalized functions f(z) = z + a2 z^2 + a3 z^3 + ...
class NormalizedFunction {
 public:
  explicit NormalizedFunction(TruncatedSeries s) : series_(std::move(s)) {
    if (series_.order() < 2) throw DomainError("normalized function needs order >= 2");
    if (series_.coeff(0) != Complex(0.0, 0.0)) throw DomainError("normalization: f(0) must be exactly 0");
    if (series_.coeff(1) != Complex(1.0, 0.0)) throw DomainError("normalization: f'(0) must be exactly 1");
  }

  const TruncatedSeries& series() const { return series_; }
  Complex a2() const { return series_.coeff(2); }
  int order() const { return series_.order(); }

 private:
  TruncatedSeries series_;
};

/// Series of (1/r) f(rz): c_n -> c_n r^(n-1), which keeps the normalization.
NormalizedFunction scale_argument(const NormalizedFunction& f, double r);

}  // namespace uradius
