#pragma once
// 3x3 matrices over exact cyclotomic scalars or complex doubles, Hermitian
// forms, inner products, exact signature, distance, relative position of
// complex lines, and closed-form eigendecomposition for the float backend.

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "chc/cyclo.hpp"

namespace chc {

using CMat3 = Eigen::Matrix3cd;
using CVec3 = Eigen::Vector3cd;
using cplx = std::complex<double>;

struct NotNegativeVector : std::runtime_error {
  NotNegativeVector() : std::runtime_error("vector is not negative") {}
};
struct NotPositiveVector : std::runtime_error {
  NotPositiveVector() : std::runtime_error("vector is not positive") {}
};
struct DegenerateAtTolerance : std::runtime_error {
  DegenerateAtTolerance()
      : std::runtime_error("float eigenvalue within tolerance of 0") {}
};
struct RepeatedEigenvalueNoBasis : std::runtime_error {
  RepeatedEigenvalueNoBasis()
      : std::runtime_error("degenerate eigenspace at tolerance") {}
};

// Module-level float tolerance (equality tests on the float backend).
double float_epsilon();
void set_float_epsilon(double eps);

// ---------------------------------------------------------------------------
// Exact backend.

struct Vec3x {
  std::array<Cyc, 3> v;
  Cyc& operator[](int i) { return v[i]; }
  const Cyc& operator[](int i) const { return v[i]; }
  CVec3 to_complex() const;
  bool operator==(const Vec3x& o) const { return v == o.v; }
};

struct Mat3x {
  std::array<std::array<Cyc, 3>, 3> a;
  static Mat3x identity();
  static Mat3x zero();
  Cyc& operator()(int i, int j) { return a[i][j]; }
  const Cyc& operator()(int i, int j) const { return a[i][j]; }
  Mat3x operator*(const Mat3x& o) const;
  Vec3x operator*(const Vec3x& x) const;
  Mat3x operator*(const Cyc& s) const;
  Mat3x operator+(const Mat3x& o) const;
  Mat3x operator-(const Mat3x& o) const;
  Mat3x conj_transpose() const;
  Cyc trace() const;
  Cyc det() const;
  Mat3x inverse() const;  // adjugate over det (det must be nonzero)
  Mat3x pow(long k) const;  // k may be negative
  bool operator==(const Mat3x& o) const { return a == o.a; }
  CMat3 to_complex() const;
};

// <v,w> = w* H v.
Cyc inner(const Vec3x& v, const Vec3x& w, const Mat3x& H);
cplx inner(const CVec3& v, const CVec3& w, const CMat3& H);

// Sign of <v,v> (exact).
int norm_sign(const Vec3x& v, const Mat3x& H);

// Hermitian form with exact signature.
struct HermForm {
  Mat3x H;
  bool is_hermitian() const;
  // (n_plus, n_zero, n_minus), exact (Descartes on the characteristic
  // polynomial: all roots real for a Hermitian matrix).
  std::tuple<int, int, int> signature() const;
};

bool preserves_form(const Mat3x& M, const Mat3x& H);
bool preserves_form(const CMat3& M, const CMat3& H, double tol = 1e-10);

// Distance between negative points: cosh^2(rho/2) = |<x,y>|^2/(<x,x><y,y>).
double dist(const Vec3x& x, const Vec3x& y, const Mat3x& H);
double dist(const CVec3& x, const CVec3& y, const CMat3& H);

// Relative position of two complex lines given by positive polar vectors.
enum class LineRel { Intersecting, Asymptotic, Ultraparallel };
struct LinePosition {
  LineRel rel;
  double C;      // |<v1,v2>|^2 / (<v1,v1><v2,v2>)
  double theta;  // intersection angle when Intersecting (acos sqrt C)
  bool same_line = false;
};
LinePosition line_position(const Vec3x& v1, const Vec3x& v2, const Mat3x& H);

// Closed-form (Cardano) eigenvalues of a 3x3 complex matrix; eigenvectors by
// row cross products.  Intended for matrices in U(2,1); flags the
// negative-type eigenvector.
struct EigenPair {
  cplx value;
  CVec3 vector;
  bool negative_type = false;
};
std::vector<cplx> cubic_roots(cplx c2, cplx c1, cplx c0);  // x^3+c2x^2+c1x+c0
std::vector<EigenPair> eigen_unitary(const CMat3& M, const CMat3& H);

// Characteristic polynomial coefficients of an exact matrix:
// lambda^3 - e1 lambda^2 + e2 lambda - e3.
std::array<Cyc, 3> char_poly(const Mat3x& M);  // {e1, e2, e3}

}  // namespace chc
