#include "uradius/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uradius {

namespace {

constexpr double kValidationRings[] = {0.3, 0.6, 0.9};
constexpr int kValidationAngles = 64;

// Horner over a raw coefficient vector (hot path; avoids re-wrapping).
inline Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Precomputed coefficient views for pointwise evaluation of the three
// membership quantities.
struct Evaluator {
  std::vector<Complex> f_over_z;  // coefficients of f(z)/z
  std::vector<Complex> df;        // coefficients of f'(z)

  explicit Evaluator(const NormalizedFunction& f)
      : f_over_z(divide_by_z(f.series()).coeffs()), df(derivative(f.series()).coeffs()) {}

  // Returns the modulus of the selected quantity; sets pole instead of
  // throwing so it can run inside a parallel region.
  double modulus(Quantity q, Complex z, bool& pole) const {
    const Complex d = horner(df, z);
    if (q == Quantity::FPrimeMinus1) return std::abs(d - 1.0);
    const Complex p = horner(f_over_z, z);  // f(z)/z
    if (std::abs(p) < kPoleEpsilon) {
      pole = true;
      return 0.0;
    }
    if (q == Quantity::U) return std::abs(d / (p * p) - 1.0);
    return std::abs(d / p - 1.0);  // |z f'/f - 1|
  }
};

struct BestPoint {
  double mod = -1.0;
  Complex witness{0.0, 0.0};
};

inline bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// max by modulus, ties toward the lexicographically smaller witness.
// Total order on distinct grid points, so any merge order of partial
// results yields the same reduction.
inline bool better(const BestPoint& a, const BestPoint& b) {
  if (a.mod != b.mod) return a.mod > b.mod;
  return lex_less(a.witness, b.witness);
}

MembershipReport reduce_report(const NormalizedFunction& f, Quantity q, const DiskGrid& grid,
                               bool parallel) {
  grid.validate();
  const Evaluator ev(f);
  const int n = grid.size();

  BestPoint best;
  long pole_at = -1;  // smallest flat index that hit a pole

#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
  {
    BestPoint local;
    long local_pole = -1;
#ifdef _OPENMP
#pragma omp for nowait schedule(static)
#endif
    for (int i = 0; i < n; ++i) {
      const Complex z = grid.point(i);
      bool pole = false;
      const double m = ev.modulus(q, z, pole);
      if (pole) {
        if (local_pole < 0 || i < local_pole) local_pole = i;
        continue;
      }
      const BestPoint cand{m, z};
      if (better(cand, local)) local = cand;
    }
#ifdef _OPENMP
#pragma omp critical(uradius_report_merge)
#endif
    {
      if (better(local, best)) best = local;
      if (local_pole >= 0 && (pole_at < 0 || local_pole < pole_at)) pole_at = local_pole;
    }
  }
  (void)parallel;

  if (pole_at >= 0) throw PoleAtSample("f(z)/z vanishes at a grid point");

  MembershipReport rep;
  rep.sup_modulus = best.mod;
  rep.witness = best.witness;
  rep.quantity = q;
  rep.grid = grid;
  rep.verdict = best.mod >= 1.0 ? Verdict::violated : Verdict::holds_on_grid;
  return rep;
}

// ---- univalence oracle ------------------------------------------------

struct PairCandidate {
  double score = 0.0;  // |f gap|^2 / |z gap|^2
  double gap2 = 0.0;
  int i = -1;
  int j = -1;
};

inline bool cand_less(const PairCandidate& a, const PairCandidate& b) {
  if (a.score != b.score) return a.score < b.score;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

constexpr int kTopK = 32;

void insert_candidate(std::vector<PairCandidate>& top, const PairCandidate& c) {
  auto it = std::lower_bound(top.begin(), top.end(), c, cand_less);
  if (top.size() < kTopK) {
    top.insert(it, c);
  } else if (it != top.end()) {
    top.insert(it, c);
    top.pop_back();
  }
}

UnivalenceResult oracle_impl(const NormalizedFunction& f, double radius, int n_samples,
                             bool parallel) {
  if (!(radius > 0.0 && radius < 1.0)) throw DomainError("univalence_oracle: radius must lie in (0, 1)");
  if (n_samples < 100) throw DomainError("univalence_oracle: need n_samples >= 100");

  DiskGrid grid = DiskGrid::defaults(radius);
  grid.n_radii = std::max(2, static_cast<int>(std::lround(std::sqrt(n_samples / 2.0))));
  grid.n_angles = (n_samples + grid.n_radii - 1) / grid.n_radii;
  const int n = grid.size();

  std::vector<Complex> pts(static_cast<std::size_t>(n));
  std::vector<Complex> vals(static_cast<std::size_t>(n));
  const std::vector<Complex>& fc = f.series().coeffs();
  const std::vector<Complex> dfc = derivative(f.series()).coeffs();

#ifdef _OPENMP
#pragma omp parallel for if (parallel) schedule(static)
#endif
  for (int i = 0; i < n; ++i) {
    pts[i] = grid.point(i);
    vals[i] = horner(fc, pts[i]);
  }

  const double sep2_min = kSeparationGuard * kSeparationGuard;
  std::vector<PairCandidate> top;

#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
  {
    std::vector<PairCandidate> local;
    local.reserve(kTopK + 1);
#ifdef _OPENMP
#pragma omp for nowait schedule(dynamic, 8)
#endif
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double sep2 = std::norm(pts[i] - pts[j]);
        if (sep2 <= sep2_min) continue;
        const double gap2 = std::norm(vals[i] - vals[j]);
        PairCandidate c{gap2 / sep2, gap2, i, j};
        if (local.size() < kTopK || cand_less(c, local.back())) insert_candidate(local, c);
      }
    }
#ifdef _OPENMP
#pragma omp critical(uradius_oracle_merge)
#endif
    for (const auto& c : local) insert_candidate(top, c);
  }
  (void)parallel;

  auto accept = [&](Complex z1, Complex z2) -> std::optional<CollisionWitness> {
    if (!(std::abs(z2) < radius)) return std::nullopt;
    const double zg = std::abs(z1 - z2);
    if (!(zg > kSeparationGuard)) return std::nullopt;
    const double fg = std::abs(horner(fc, z1) - horner(fc, z2));
    if (!(fg < kCollisionGap)) return std::nullopt;
    return CollisionWitness{z1, z2, fg, zg};
  };

  for (const auto& c : top) {
    // Direct hit on the sampled grid.
    if (c.gap2 < kCollisionGap * kCollisionGap) {
      if (auto w = accept(pts[c.i], pts[c.j])) return UnivalenceResult{false, w};
    }
    // Newton polish: solve f(w) = f(z1) starting from z2.
    const Complex z1 = pts[c.i];
    const Complex target = vals[c.i];
    Complex w = pts[c.j];
    for (int it = 0; it < 64; ++it) {
      const Complex h = horner(fc, w) - target;
      if (std::abs(h) < 1e-14) break;
      const Complex d = horner(dfc, w);
      if (std::abs(d) < 1e-18) break;
      w -= h / d;
      if (std::abs(w) > 2.0) break;  // diverged well outside the disk
    }
    if (auto wit = accept(z1, w)) return UnivalenceResult{false, wit};
  }
  return UnivalenceResult{true, std::nullopt};
}

}  // namespace

DiskGrid DiskGrid::defaults(double radius) {
  DiskGrid g;
  g.radius = radius;
  return g;
}

void DiskGrid::validate() const {
  if (!(radius > 0.0 && radius <= 1.0)) throw DomainError("DiskGrid: radius must lie in (0, 1]");
  if (n_radii < 1 || n_angles < 1) throw DomainError("DiskGrid: need at least one ring and one angle");
}

double DiskGrid::ring_radius(int i) const {
  const double frac = static_cast<double>(i + 1) / n_radii;
  const double outer = radius * (1.0 - kGridPullIn);
  return outer * (spacing == Spacing::uniform_r ? frac : std::sqrt(frac));
}

Complex DiskGrid::point(int flat) const {
  const int i = flat / n_angles;
  const int j = flat % n_angles;
  const double r = ring_radius(i);
  const double th = 2.0 * std::numbers::pi * j / n_angles;
  return r * Complex(std::cos(th), std::sin(th));
}

MembershipReport check_on_disk(const NormalizedFunction& f, Quantity q, const DiskGrid& grid) {
  return reduce_report(f, q, grid, /*parallel=*/true);
}

MembershipReport check_on_disk_serial(const NormalizedFunction& f, Quantity q, const DiskGrid& grid) {
  return reduce_report(f, q, grid, /*parallel=*/false);
}

UnivalenceResult univalence_oracle(const NormalizedFunction& f, double radius, int n_samples) {
  return oracle_impl(f, radius, n_samples, /*parallel=*/true);
}

UnivalenceResult univalence_oracle_serial(const NormalizedFunction& f, double radius, int n_samples) {
  return oracle_impl(f, radius, n_samples, /*parallel=*/false);
}

NormalizedFunction build_f_from_omega(const SchwarzFunction& w, Complex a2) {
  if (!(std::abs(a2) <= 2.0 + 1e-12)) throw DomainError("build_f_from_omega: requires |a2| <= 2");
  const TruncatedSeries& om = w.omega();

  // z/f = 1 - a2 z - z w(z), assembled directly (w(0) = 0 keeps degree 1 exact).
  std::vector<Complex> zf(static_cast<std::size_t>(om.order()) + 2);
  zf[0] = Complex(1.0, 0.0);
  zf[1] = -a2;
  for (int k = 1; k <= om.order(); ++k) zf[static_cast<std::size_t>(k) + 1] = -om.coeff(k);
  const TruncatedSeries z_over_f(std::move(zf));

  for (double r : kValidationRings) {
    for (int k = 0; k < kValidationAngles; ++k) {
      const double th = 2.0 * std::numbers::pi * k / kValidationAngles;
      const Complex z = r * Complex(std::cos(th), std::sin(th));
      if (std::abs(eval(z_over_f, z)) < kDenominatorFloor)
        throw ZeroDenominator("1 - a2 z - z w(z) vanishes on the validation grid");
    }
  }

  return NormalizedFunction(multiply_by_z(reciprocal(z_over_f)));
}

SharpnessReport sharpness_f1(double b) {
  if (!(b > 0.0 && b <= 2.0)) throw DomainError("sharpness_f1: requires 0 < b <= 2");

  std::vector<Complex> g1c(kDefaultOrder + 1, Complex(0.0, 0.0));
  g1c[1] = Complex(1.0, 0.0);
  g1c[2] = Complex(1.0 / b, 0.0);
  NormalizedFunction g1{TruncatedSeries(std::move(g1c))};

  const Complex crit(-b / 2.0, 0.0);
  const Complex dcrit = eval(derivative(g1.series()), crit);

  MembershipReport u_check = check_on_disk(g1, Quantity::U, DiskGrid::defaults(0.999 * b / 2.0));

  SharpnessReport rep{b, g1, crit, dcrit, u_check, 1.05 * b / 2.0, false, std::nullopt};
  if (rep.oracle_radius < 1.0) {
    rep.collision_checked = true;
    UnivalenceResult res = univalence_oracle(g1, rep.oracle_radius, 20000);
    if (!res.univalent) rep.collision = res.collision;
  }
  return rep;
}

}  // namespace uradius
