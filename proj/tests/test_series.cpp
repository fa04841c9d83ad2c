#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "uradius/series.hpp"
#include "uradius/series_io.hpp"

using namespace uradius;
using testgen::Rng;

namespace {

TruncatedSeries make(std::vector<Complex> c) { return TruncatedSeries(std::move(c)); }

double max_coeff_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  REQUIRE(a.order() == b.order());
  double worst = 0.0;
  for (int n = 0; n <= a.order(); ++n) worst = std::max(worst, std::abs(a.coeff(n) - b.coeff(n)));
  return worst;
}

// Random series whose reciprocal stays well conditioned: |a_k| <= |a_0| q^k
// with q <= 0.45 bounds the reciprocal coefficients by (2q)^n / |a_0|.
TruncatedSeries random_invertible(Rng& rng, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  const double mod0 = rng.unif(0.1, 2.0);
  c[0] = rng.on_circle(mod0);
  const double q = rng.unif(0.1, 0.45);
  double decay = mod0;
  for (int k = 1; k <= order; ++k) {
    decay *= q;
    c[k] = rng.unif(0.0, 1.0) * rng.on_circle(decay);
  }
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("add: examples and min-order rule") {
  const auto a = make({{1, 0}, {1, 0}});
  const auto b = make({{1, 0}, {-1, 0}});
  const auto s = add(a, b);
  CHECK(s.order() == 1);
  CHECK(s.coeff(0) == Complex(2, 0));
  CHECK(s.coeff(1) == Complex(0, 0));

  const auto z2 = TruncatedSeries(1);  // zero series, same order
  CHECK(add(a, z2) == a);

  const auto p = make({{1, 0}, {2, 0}, {1, 0}});
  const auto q = make({{-1, 0}, {-2, 0}, {-1, 0}});
  const auto zero = add(p, q);
  for (int n = 0; n <= 2; ++n) CHECK(zero.coeff(n) == Complex(0, 0));

  CHECK(add(p, a).order() == 1);  // min(2, 1)
}

TEST_CASE("mul: examples") {
  const auto onepz = make({{1, 0}, {1, 0}, {0, 0}});
  const auto sq = mul(onepz, onepz);
  CHECK(sq.coeff(0) == Complex(1, 0));
  CHECK(sq.coeff(1) == Complex(2, 0));
  CHECK(sq.coeff(2) == Complex(1, 0));

  // (1+z) * (1 - z + z^2 - ...) == 1 up to truncation
  std::vector<Complex> alt(9);
  for (int n = 0; n <= 8; ++n) alt[n] = Complex(n % 2 ? -1.0 : 1.0, 0.0);
  const auto prod = mul(make({{1, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}),
                        TruncatedSeries(std::move(alt)));
  CHECK(prod.coeff(0) == Complex(1, 0));
  for (int n = 1; n <= 8; ++n) CHECK(std::abs(prod.coeff(n)) == 0.0);

  const auto p = make({{1, 0}, {2, 0}, {1, 0}});
  CHECK(mul(p, TruncatedSeries::constant({1, 0}, 2)) == p);
  CHECK(mul(p, TruncatedSeries::constant({1, 0}, 7)).order() == 2);  // min-order rule
}

TEST_CASE("reciprocal: examples") {
  // 1/(1+z) = 1 - z + z^2 - ...
  const auto r = reciprocal(make({{1, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}}));
  for (int n = 0; n <= 4; ++n) CHECK(r.coeff(n) == Complex(n % 2 ? -1.0 : 1.0, 0.0));

  // f/z for the Koebe function inverts to (1+z)^2; verified by the
  // multiply-back oracle and against the exact polynomial.
  const auto koebe_over_z = divide_by_z(testgen::koebe_series(16));
  const auto z_over_f = reciprocal(koebe_over_z);
  CHECK(z_over_f.coeff(0) == Complex(1, 0));
  CHECK(z_over_f.coeff(1) == Complex(2, 0));
  CHECK(z_over_f.coeff(2) == Complex(1, 0));
  for (int n = 3; n <= 15; ++n) CHECK(std::abs(z_over_f.coeff(n)) == 0.0);
  const auto back = mul(koebe_over_z, z_over_f);
  CHECK(back.coeff(0) == Complex(1, 0));
  for (int n = 1; n <= 15; ++n) CHECK(std::abs(back.coeff(n)) == 0.0);

  const auto half = reciprocal(TruncatedSeries::constant({2, 0}, 3));
  CHECK(half.coeff(0) == Complex(0.5, 0));

  CHECK_THROWS_AS(reciprocal(TruncatedSeries(4)), ZeroConstantTerm);
}

TEST_CASE("derivative: examples") {
  const auto d = derivative(make({{0, 0}, {1, 0}, {1, 0}}));
  CHECK(d.order() == 1);
  CHECK(d.coeff(0) == Complex(1, 0));
  CHECK(d.coeff(1) == Complex(2, 0));

  const auto dc = derivative(TruncatedSeries::constant({1, 0}, 0));
  CHECK(dc.order() == 0);
  CHECK(dc.coeff(0) == Complex(0, 0));

  const auto d2 = derivative(make({{0, 0}, {1, 0}, {0.5, 0}}));
  CHECK(d2.coeff(0) == Complex(1, 0));
  CHECK(d2.coeff(1) == Complex(1, 0));
}

TEST_CASE("eval: examples") {
  CHECK(eval(make({{1, 0}, {2, 0}, {1, 0}}), {0, 0}) == Complex(1, 0));
  CHECK(eval(make({{0, 0}, {1, 0}, {1, 0}}), {-0.5, 0}) == Complex(-0.25, 0));
  CHECK(eval(make({{0, 0}, {1, 0}, {0.5, 0}}), {0.5, 0}) == Complex(0.625, 0));
}

TEST_CASE("scale_argument: examples") {
  const NormalizedFunction f{make({{0, 0}, {1, 0}, {1, 0}})};
  const auto g = scale_argument(f, 0.5);
  CHECK(g.series().coeff(1) == Complex(1, 0));
  CHECK(g.series().coeff(2) == Complex(0.5, 0));

  const NormalizedFunction f3{make({{0, 0}, {1, 0}, {1, 0}, {1, 0}})};
  const auto g3 = scale_argument(f3, 0.5);
  CHECK(g3.series().coeff(2) == Complex(0.5, 0));
  CHECK(g3.series().coeff(3) == Complex(0.25, 0));

  const auto raw = make({{1, 0}, {1, 0}, {1, 0}});
  CHECK(scale_argument(raw, 1.0) == raw);
  const auto half = scale_argument(raw, 0.5);
  CHECK(half.coeff(1) == Complex(0.5, 0));
  CHECK(half.coeff(2) == Complex(0.25, 0));

  CHECK_THROWS_AS(scale_argument(raw, 0.0), DomainError);
  CHECK_THROWS_AS(scale_argument(raw, 1.5), DomainError);
  CHECK_THROWS_AS(scale_argument(raw, -0.25), DomainError);
}

TEST_CASE("property: mul/reciprocal round trip") {
  Rng rng(101);
  for (int iter = 0; iter < 200; ++iter) {
    const int order = 1 + static_cast<int>(rng.unif(0.0, 64.0));
    const auto a = random_invertible(rng, order);
    const auto round = mul(a, reciprocal(a));
    CHECK(std::abs(round.coeff(0) - Complex(1, 0)) < 1e-12);
    for (int n = 1; n <= order; ++n) CHECK(std::abs(round.coeff(n)) < 1e-12);
  }
}

TEST_CASE("property: eval respects products up to the truncation tail") {
  Rng rng(102);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Complex> ac(65), bc(65);
    for (int n = 0; n <= 64; ++n) {
      ac[n] = rng.in_disk(1.0);
      bc[n] = rng.in_disk(1.0);
    }
    const TruncatedSeries a(std::move(ac)), b(std::move(bc));
    const Complex z = rng.in_disk(0.5);
    CHECK(std::abs(eval(mul(a, b), z) - eval(a, z) * eval(b, z)) < 1e-9);
  }
}

TEST_CASE("property: derivative is linear (exact on dyadic coefficients)") {
  Rng rng(103);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Complex> ac(33), bc(33);
    for (int n = 0; n <= 32; ++n) {
      // small dyadic rationals: products with integer n stay exact
      ac[n] = Complex(std::floor(rng.unif(-8, 8)) / 16.0, std::floor(rng.unif(-8, 8)) / 16.0);
      bc[n] = Complex(std::floor(rng.unif(-8, 8)) / 16.0, std::floor(rng.unif(-8, 8)) / 16.0);
    }
    const TruncatedSeries a(std::move(ac)), b(std::move(bc));
    CHECK(derivative(add(a, b)) == add(derivative(a), derivative(b)));
  }
}

TEST_CASE("property: scale_argument composes multiplicatively") {
  Rng rng(104);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Complex> ac(65);
    for (int n = 0; n <= 64; ++n) ac[n] = rng.in_disk(1.0);
    const TruncatedSeries a(std::move(ac));
    const double r1 = rng.unif(0.1, 1.0), r2 = rng.unif(0.1, 1.0);
    const auto twice = scale_argument(scale_argument(a, r1), r2);
    const auto once = scale_argument(a, r1 * r2);
    CHECK(max_coeff_diff(twice, once) < 1e-14);
  }
}

TEST_CASE("normalization is validated exactly") {
  CHECK_THROWS_AS(NormalizedFunction{make({{0, 0}, {1, 0}})}, DomainError);          // order < 2
  CHECK_THROWS_AS(NormalizedFunction{make({{1e-18, 0}, {1, 0}, {0, 0}})}, DomainError);
  CHECK_THROWS_AS(NormalizedFunction{make({{0, 0}, {1, 1e-18}, {0, 0}})}, DomainError);
  const NormalizedFunction ok{make({{0, 0}, {1, 0}, {-2, 0}})};
  CHECK(ok.a2() == Complex(-2, 0));
}

TEST_CASE("divide_by_z / multiply_by_z") {
  const auto f = make({{0, 0}, {1, 0}, {2, 0}});
  const auto q = divide_by_z(f);
  CHECK(q.order() == 1);
  CHECK(q.coeff(0) == Complex(1, 0));
  CHECK(q.coeff(1) == Complex(2, 0));
  const auto back = multiply_by_z(q);
  CHECK(back == f);
  CHECK_THROWS_AS(divide_by_z(make({{1, 0}, {1, 0}})), DomainError);
}

TEST_CASE("series literal: parse and emit") {
  const auto s = parse_series_literal("[[0,0],[1,0],[0.5,0]]");
  CHECK(s.order() == 2);
  CHECK(s.coeff(1) == Complex(1, 0));
  CHECK(s.coeff(2) == Complex(0.5, 0));
  CHECK(emit_series_literal(s) == "[[0.0,0.0],[1.0,0.0],[0.5,0.0]]");

  const auto round = parse_series_literal(emit_series_literal(s));
  CHECK(round == s);

  CHECK_THROWS_AS(parse_series_literal("not json"), SeriesParseError);
  CHECK_THROWS_AS(parse_series_literal("[]"), SeriesParseError);
  CHECK_THROWS_AS(parse_series_literal("[[1,2,3]]"), SeriesParseError);
  CHECK_THROWS_AS(parse_series_literal("[1,2]"), SeriesParseError);

  const auto padded = with_order(s, 5);
  CHECK(padded.order() == 5);
  CHECK(padded.coeff(5) == Complex(0, 0));
  CHECK(with_order(padded, 2) == s);
}
