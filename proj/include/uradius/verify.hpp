#pragma once

#include <optional>

#include "uradius/analysis.hpp"
#include "uradius/radii.hpp"

namespace uradius {

// A reported collision needs |f(z1) - f(z2)| below this ...
inline constexpr double kCollisionGap = 1e-10;
// ... while the points stay at least this far apart.
inline constexpr double kSeparationGuard = 1e-6;
// build_f_from_omega rejects denominators below this on the validation grid.
inline constexpr double kDenominatorFloor = 1e-8;
// Open-disk sampling pulls the outermost ring in by this relative amount.
inline constexpr double kGridPullIn = 1e-6;

enum class Spacing { uniform_r, uniform_r_squared };

/// Sample layout for open-disk checks: n_radii rings (outermost at
/// radius*(1 - kGridPullIn)) times n_angles equispaced angles.
/// uniform_r_squared spaces the ring radii uniformly in r^2, which
/// concentrates samples near the boundary where the suprema live.
struct DiskGrid {
  double radius = 0.99;
  int n_radii = 64;
  int n_angles = 128;
  Spacing spacing = Spacing::uniform_r_squared;

  static DiskGrid defaults(double radius);

  int size() const { return n_radii * n_angles; }
  double ring_radius(int i) const;    // i in [0, n_radii)
  Complex point(int flat) const;      // flat in [0, size())
  void validate() const;              // throws DomainError on bad fields
};

enum class Quantity { U, FPrimeMinus1, ZfpOverFMinus1 };
enum class Verdict { holds_on_grid, violated };

/// Result of sampling one modulus over a disk grid. verdict is
/// `violated` exactly when sup_modulus >= 1; witness is the grid point
/// attaining the supremum (ties broken toward the lexicographically
/// smaller (re, im) pair, so the report is thread-count independent).
struct MembershipReport {
  Verdict verdict = Verdict::holds_on_grid;
  double sup_modulus = 0.0;
  Complex witness{0.0, 0.0};
  Quantity quantity = Quantity::U;
  DiskGrid grid;
};

/// Evaluates |U_f|, |f' - 1| or |zf'/f - 1| at every grid point.
/// Parallel over points; the reduction is deterministic. The `_serial`
/// twin is the reference implementation and must produce bit-identical
/// reports.
MembershipReport check_on_disk(const NormalizedFunction& f, Quantity q, const DiskGrid& grid);
MembershipReport check_on_disk_serial(const NormalizedFunction& f, Quantity q, const DiskGrid& grid);

struct CollisionWitness {
  Complex z1{0.0, 0.0};
  Complex z2{0.0, 0.0};
  double f_gap = 0.0;  // |f(z1) - f(z2)|
  double z_gap = 0.0;  // |z1 - z2|
};

struct UnivalenceResult {
  bool univalent = true;
  std::optional<CollisionWitness> collision;
};

/// Brute-force injectivity check on |z| < radius: scans all point pairs
/// of a grid with at least n_samples points, then polishes the most
/// collision-like pairs by Newton iteration on f(w) = f(z1). A collision
/// is only reported after direct re-evaluation passes the gap/separation
/// thresholds, so a `false` verdict always carries a genuine witness.
UnivalenceResult univalence_oracle(const NormalizedFunction& f, double radius, int n_samples);
UnivalenceResult univalence_oracle_serial(const NormalizedFunction& f, double radius, int n_samples);

/// f with z/f = 1 - a2 z - z w(z), truncated at order w.order() + 2 so a
/// later transform of the result lines up with g_from_omega coefficient
/// for coefficient. Requires |a2| <= 2. Throws ZeroDenominator when the
/// right-hand side vanishes on the validation rings.
NormalizedFunction build_f_from_omega(const SchwarzFunction& w, Complex a2);

/// The extremal family z/f1 = 1 + b z + z^2 (0 < b <= 2), whose transform
/// g1 = z + z^2/b pins the |a2|/2 radius: U holds up to 0.999*b/2, g1'
/// vanishes at -b/2, and injectivity fails just past b/2.
struct SharpnessReport {
  double b = 0.0;
  NormalizedFunction g1;
  Complex critical_point{0.0, 0.0};       // -b/2
  Complex gprime_at_critical{0.0, 0.0};   // exact 0 for the family
  MembershipReport u_check;               // quantity U at radius 0.999*b/2
  double oracle_radius = 0.0;             // 1.05*b/2, checked only when < 1
  bool collision_checked = false;
  std::optional<CollisionWitness> collision;
};

SharpnessReport sharpness_f1(double b);

}  // namespace uradius
