#pragma once
// Non-discreteness engine: Jorgensen, Knapp, and Shimizu tests applied to the
// reflection powers of R1R2 and R1R2R3R2^-1, plus the census sweep that
// reproduces the published verdict table.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chc/classify.hpp"
#include "chc/groups.hpp"

namespace chc {

struct ZeroDenominator : std::runtime_error {
  ZeroDenominator()
      : std::runtime_error("2cos(2pi/p) + 2cos(r pi/s) vanishes exactly") {}
};
struct NoRprime : std::runtime_error {
  NoRprime() : std::runtime_error("r'/s' undefined for this tau family") {}
};
struct AngleNotSubmultiple : std::runtime_error {
  AngleNotSubmultiple()
      : std::runtime_error("alpha is not of the form pi/q") {}
};
struct NotVerticalParabolic : std::runtime_error {
  NotVerticalParabolic()
      : std::runtime_error("(R1R2)^2 is not a vertical translation") {}
};

enum class TargetFamily { PowR1R2, PowR1R2R3R2inv };

// One mirror-pair target: the complex lines fixed by (R1R2)^s and its J-image.
struct TestTarget {
  TargetFamily family;
  long s = 0;            // reflection power
  Vec3x polar;           // exact e^{-4 i pi/3p}-eigenvector of the base element
  Vec3x polar_image;     // J * polar
  bool polar_positive = false;  // exact sign of <polar,polar>
  MinimalAngle alpha;    // minimal power angle (alpha always pi/q here)
  // Exact ingredients, kept unreduced so all decisions are cross-multiplied
  // sign tests (no cyclotomic division):
  Cyc num2;              // m^2 = |numerator|^2
  Cyc den2;              // (2cos(2pi/p) + 2cos(r pi/s))^2
  Cyc sin2;              // sin^2(alpha)
  double coshdelta = 0;  // float embed of cosh delta = sqrt(num2/den2)
  double value = 0;      // float embed of cosh delta * sin alpha
  bool ultraparallel = false;  // exact num2 > den2
};

enum class NdReason { Jorgensen, KnappAngleGap, Shimizu, SphericalGap };

struct TestVerdict {
  bool nondiscrete = false;
  NdReason reason = NdReason::Jorgensen;
  double witness = 0.0;  // the decisive numeric quantity
  std::string note;      // inconclusive detail, empty when nondiscrete
};

// Builds the target for (R1R2)^s (throws ZeroDenominator, ZeroAngle) or for
// (R1R2R3R2^-1)^{s'} (additionally throws NoRprime).  The sporadic id must be
// known so r/s and r'/s' can be looked up.
TestTarget build_target_r1r2(const TriangleGroup& G);
TestTarget build_target_r1232(const TriangleGroup& G);

// cosh delta sin alpha < 1/2.  Float decision with 1e-6 margin; anything
// within margin, and every firing verdict, is confirmed by the exact sign of
// value^2 - 1/4 in cyclotomic arithmetic.
TestVerdict jorgensen_test(const TestTarget& t);

// v = cosh delta sin alpha not an admissible Knapp value: v must equal some
// cos(pi/q') or cos(2 alpha); gaps are certified exactly.  When the mirrors
// intersect (C <= 1) the test is inconclusive unless `spherical` is set, in
// which case the same gap test runs on the spherical side.
TestVerdict knapp_test(const TestTarget& t, bool spherical = false);

// Applicable when (R1R2)^2 is a vertical translation (p = 4, |tau|^2 = 2):
// with m = |conj(tau)^2 + e^{-2 i pi/p} tau - tau|, non-discrete iff m < 1 or
// m in (1,2) avoiding every 2 cos(pi/r).
TestVerdict shimizu_test(const TriangleGroup& G);

struct CensusRow {
  long p = 0;
  std::string tau_id;
  bool hyperbolic = false;
  TestVerdict verdict;
  std::string family;  // "r1r2", "r1232", "shimizu" when a verdict fired
  std::string detail;  // per-family inconclusive notes
  bool polar_note = false;  // some target had a negative polar vector
};

// Sweeps p in [pmin, pmax] for the given sporadic ids (all 18 when empty),
// running both families and all three tests; deterministic order.
std::vector<CensusRow> census_nondiscrete(long pmin, long pmax,
                                          std::vector<std::string> tau_ids = {},
                                          bool spherical = false);

// The infinity tail: true when the Jorgensen quantity is < 1/2 for every
// hyperbolic p in [P0, 4 P0] and decreases along each congruence class of p
// (the quantity tends to 0 as p grows, but only classwise monotonically).
bool jorgensen_tail_bracketed(const std::string& tau_id, long P0);

}  // namespace chc
