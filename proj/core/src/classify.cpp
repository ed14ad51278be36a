#include "chc/classify.hpp"

#include <cmath>
#include <numeric>

namespace chc {

double PiRational::value() const {
  return 3.14159265358979323846 * double(num) / double(den);
}

int trace_discriminant_sign(const Mat3x& M) {
  Cyc tr = M.trace();
  Cyc t2 = tr.abs2();
  Cyc tr3 = tr * tr * tr;
  Cyc re_tr3 = (tr3 + tr3.conj()) * Rat(1, 2);
  Cyc f = t2 * t2 - re_tr3 * Rat(8) + t2 * Rat(18) - Cyc(27L);
  return f.sign();
}

namespace {

// Recognize an exact root of unity and return its angle as a reduced
// rational multiple of pi in [0, 2).  Returns false if z is not a monomial
// root of unity.
bool root_of_unity_angle(const Cyc& z, PiRational& out) {
  // Roots of unity in Q(zeta_N) are exactly the powers of zeta_lcm(2,N).
  Cyc m = z.minimized();
  long N = m.conductor();
  long M = lcm_long(2, N);
  double ang = std::arg(m.to_complex());
  const double PI = 3.14159265358979323846;
  long j = std::lround(ang * double(M) / (2 * PI));
  j %= M;
  if (j < 0) j += M;
  if (m != Cyc::root_of_unity(M, j)) return false;
  long num = 2 * j, den = M;
  long g = std::gcd(num, den);
  if (g) { num /= g; den /= g; }
  num %= 2 * den;
  if (num < 0) num += 2 * den;
  out = {num, den};
  return true;
}

bool is_scalar(const Mat3x& M, Cyc& lambda) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && !M(i, j).is_zero()) return false;
  if (M(0, 0) != M(1, 1) || M(1, 1) != M(2, 2)) return false;
  lambda = M(0, 0);
  return true;
}

bool is_zero_matrix(const Mat3x& M) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!M(i, j).is_zero()) return false;
  return true;
}

Vec3x simple_eigenvector(const Mat3x& A) {
  // Bilinear cross products of rows of A span its (1-dim) nullspace.
  Vec3x best{{Cyc(), Cyc(), Cyc()}};
  for (int i = 0; i < 3; ++i) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    Vec3x c;
    c[0] = A(r0, 1) * A(r1, 2) - A(r0, 2) * A(r1, 1);
    c[1] = A(r0, 2) * A(r1, 0) - A(r0, 0) * A(r1, 2);
    c[2] = A(r0, 0) * A(r1, 1) - A(r0, 1) * A(r1, 0);
    if (!c[0].is_zero() || !c[1].is_zero() || !c[2].is_zero()) return c;
  }
  return best;
}

Mat3x sub_scalar(const Mat3x& M, const Cyc& lam) {
  Mat3x A = M;
  for (int i = 0; i < 3; ++i) A(i, i) -= lam;
  return A;
}

}  // namespace

IsometryClass classify(const Mat3x& M, const Mat3x& H) {
  if (!preserves_form(M, H) || M.det() != Cyc(1L)) throw NotUnitary();
  IsometryClass out;
  Cyc scl;
  if (is_scalar(M, scl)) {
    out.kind = IsoKind::Identity;
    return out;
  }
  int f = trace_discriminant_sign(M);
  if (f > 0) {
    out.kind = IsoKind::Loxodromic;
    return out;
  }
  if (f < 0) {
    out.kind = IsoKind::RegularElliptic;
    return out;
  }
  // f = 0: repeated eigenvalue.  P(x) = x^3 - e1 x^2 + e2 x - e3.
  auto [e1, e2, e3] = char_poly(M);
  Cyc disc2 = e1 * e1 - e2 * Rat(3);
  if (disc2.is_zero()) {
    // Triple eigenvalue lambda = e1 / 3 (a cube root of unity in SU).
    Cyc lam = e1 * Rat(1, 3);
    Mat3x A = sub_scalar(M, lam);
    if (is_zero_matrix(A)) {
      out.kind = IsoKind::Identity;
      return out;
    }
    out.kind = IsoKind::Parabolic;
    out.subtype = is_zero_matrix(A * A)
                      ? ParabolicSubtype::VerticalTranslation
                      : ParabolicSubtype::NonVerticalTranslation;
    return out;
  }
  // Double root lambda = (e1 e2 - 9 e3) / (2 (e1^2 - 3 e2)); simple root
  // mu = e1 - 2 lambda.
  Cyc lam = (e1 * e2 - e3 * Rat(9)) * (disc2 * Rat(2)).inv();
  Cyc mu = e1 - lam * Rat(2);
  Mat3x Al = sub_scalar(M, lam), Am = sub_scalar(M, mu);
  if (!is_zero_matrix(Al * Am)) {
    out.kind = IsoKind::Parabolic;
    out.subtype = ParabolicSubtype::ScrewParabolic;
    return out;
  }
  // Diagonalizable: special elliptic.  Simple eigenvector decides the type.
  Vec3x v = simple_eigenvector(Am);
  int sgn = inner(v, v, H).sign();
  PiRational ang;
  bool have_angle = root_of_unity_angle(mu * lam.inv(), ang);
  if (sgn > 0) {
    out.kind = IsoKind::ComplexReflection;
    out.polar = v;
  } else {
    out.kind = IsoKind::SpecialElliptic;
  }
  if (have_angle) out.angle = ang;
  return out;
}

PiRational reflection_angle(const Mat3x& M, const Mat3x& H) {
  IsometryClass c = classify(M, H);
  if (c.kind != IsoKind::ComplexReflection || !c.angle)
    throw NotAReflection();
  return *c.angle;
}

MinimalAngle minimal_power_angle(long a, long p) {
  long m = 2 * p;
  long aa = a % m;
  if (aa < 0) aa += m;
  if (aa == 0) throw ZeroAngle();
  long d = std::gcd(aa, m);
  long k = 0;
  for (long t = 1; t <= m; ++t)
    if (t * aa % m == d) { k = t; break; }
  auto reduced = [](long num, long den) {
    long g = std::gcd(num, den);
    return PiRational{num / g, den / g};
  };
  return {reduced(d, m), reduced(d, p), k};
}

}  // namespace chc
