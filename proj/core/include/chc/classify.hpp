#pragma once
// Classification of isometries of the complex hyperbolic plane via the trace
// discriminant, complex-reflection detection with exact rotation angles, and
// the gcd closed form for minimal power angles.

#include <optional>
#include <stdexcept>
#include <utility>

#include "chc/hermlin.hpp"

namespace chc {

struct NotUnitary : std::runtime_error {
  NotUnitary() : std::runtime_error("matrix is not in SU(H)") {}
};
struct NotAReflection : std::runtime_error {
  NotAReflection() : std::runtime_error("matrix is not a complex reflection") {}
};
struct ZeroAngle : std::runtime_error {
  ZeroAngle() : std::runtime_error("base angle is a multiple of 2 pi") {}
};

enum class IsoKind {
  Identity,
  RegularElliptic,
  SpecialElliptic,      // repeated eigenvalue, diagonalizable, point-type
  ComplexReflection,    // repeated eigenvalue, diagonalizable, line-type
  Parabolic,
  Loxodromic,
};

enum class ParabolicSubtype {
  None,
  VerticalTranslation,     // unipotent, minimal polynomial (x - l)^2
  NonVerticalTranslation,  // unipotent, minimal polynomial (x - l)^3
  ScrewParabolic,          // distinct unit eigenvalue + 2-block
};

// Rational multiple of pi in lowest terms: angle = (num/den) * pi, in (0, 2).
struct PiRational {
  long num, den;
  double value() const;
  bool operator==(const PiRational& o) const {
    return num == o.num && den == o.den;
  }
};

struct IsometryClass {
  IsoKind kind;
  ParabolicSubtype subtype = ParabolicSubtype::None;
  std::optional<PiRational> angle;  // rotation angle for reflections
  std::optional<Vec3x> polar;       // positive polar vector (mirror) if any
  bool exact = true;
};

// Exact classification (entries cyclotomic, M in SU(H) required).
IsometryClass classify(const Mat3x& M, const Mat3x& H);

// Rotation angle of a complex reflection as an exact rational multiple of pi.
PiRational reflection_angle(const Mat3x& M, const Mat3x& H);

// Smallest positive angle 2*alpha achievable as k * (a pi / p) mod 2 pi,
// with witness k; alpha = gcd(a, 2p) pi / (2p).
struct MinimalAngle {
  PiRational alpha;       // alpha as multiple of pi
  PiRational two_alpha;   // 2 alpha
  long k;                 // witness power
};
MinimalAngle minimal_power_angle(long a, long p);  // throws ZeroAngle

// The trace discriminant f = |tr|^4 - 8 Re(tr^3) + 18 |tr|^2 - 27 (exact sign).
int trace_discriminant_sign(const Mat3x& M);

}  // namespace chc
