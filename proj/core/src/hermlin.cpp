#include "chc/hermlin.hpp"

#include <cmath>

namespace chc {

namespace {
double g_eps = 1e-9;
}
double float_epsilon() { return g_eps; }
void set_float_epsilon(double eps) { g_eps = eps; }

CVec3 Vec3x::to_complex() const {
  CVec3 r;
  for (int i = 0; i < 3; ++i) r(i) = v[i].to_complex();
  return r;
}

Mat3x Mat3x::identity() {
  Mat3x m = zero();
  for (int i = 0; i < 3; ++i) m(i, i) = Cyc(1L);
  return m;
}

Mat3x Mat3x::zero() {
  Mat3x m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Cyc();
  return m;
}

Mat3x Mat3x::operator*(const Mat3x& o) const {
  Mat3x r = zero();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < 3; ++j) r(i, j) += a[i][k] * o(k, j);
    }
  return r;
}

Vec3x Mat3x::operator*(const Vec3x& x) const {
  Vec3x r;
  for (int i = 0; i < 3; ++i) {
    Cyc s;
    for (int j = 0; j < 3; ++j) s += a[i][j] * x[j];
    r[i] = s;
  }
  return r;
}

Mat3x Mat3x::operator*(const Cyc& s) const {
  Mat3x r = *this;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) *= s;
  return r;
}

Mat3x Mat3x::operator+(const Mat3x& o) const {
  Mat3x r = *this;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) += o(i, j);
  return r;
}

Mat3x Mat3x::operator-(const Mat3x& o) const {
  Mat3x r = *this;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) -= o(i, j);
  return r;
}

Mat3x Mat3x::conj_transpose() const {
  Mat3x r = zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[j][i].conj();
  return r;
}

Cyc Mat3x::trace() const { return a[0][0] + a[1][1] + a[2][2]; }

Cyc Mat3x::det() const {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3x Mat3x::inverse() const {
  Cyc d = det();
  if (d.is_zero()) throw DivisionByZero();
  Cyc dinv = d.inv();
  Mat3x adj = zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // cofactor transpose: adj(j,i)
      adj(j, i) = a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0];
    }
  return adj * dinv;
}

Mat3x Mat3x::pow(long k) const {
  Mat3x base = k >= 0 ? *this : inverse();
  long n = k >= 0 ? k : -k;
  Mat3x r = identity();
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

CMat3 Mat3x::to_complex() const {
  CMat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[i][j].to_complex();
  return m;
}

Cyc inner(const Vec3x& v, const Vec3x& w, const Mat3x& H) {
  Cyc s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += w[i].conj() * H(i, j) * v[j];
  return s;
}

cplx inner(const CVec3& v, const CVec3& w, const CMat3& H) {
  return (w.adjoint() * (H * v))(0);
}

int norm_sign(const Vec3x& v, const Mat3x& H) {
  return inner(v, v, H).sign();
}

bool HermForm::is_hermitian() const { return H == H.conj_transpose(); }

std::array<Cyc, 3> char_poly(const Mat3x& M) {
  Cyc e1 = M.trace();
  Cyc e2;
  for (int i = 0; i < 3; ++i) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    e2 += M(r0, r0) * M(r1, r1) - M(r0, r1) * M(r1, r0);
  }
  Cyc e3 = M.det();
  return {e1, e2, e3};
}

std::tuple<int, int, int> HermForm::signature() const {
  auto [e1, e2, e3] = char_poly(H);
  // lambda^3 - e1 l^2 + e2 l - e3, all roots real.  Descartes gives the exact
  // positive-root count for real-rooted polynomials (zeros skipped).
  int s1 = e1.sign(), s2 = e2.sign(), s3 = e3.sign();
  int zero_mult = 0;
  std::vector<int> coeffs = {1, -s1, s2, -s3};
  while (!coeffs.empty() && coeffs.back() == 0) {
    coeffs.pop_back();
    ++zero_mult;
  }
  int pos = 0, prev = 0;
  for (int s : coeffs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++pos;
    prev = s;
  }
  int neg = 3 - zero_mult - pos;
  return {pos, zero_mult, neg};
}

bool preserves_form(const Mat3x& M, const Mat3x& H) {
  return M.conj_transpose() * H * M == H;
}

bool preserves_form(const CMat3& M, const CMat3& H, double tol) {
  return ((M.adjoint() * H * M) - H).cwiseAbs().maxCoeff() < tol;
}

double dist(const CVec3& x, const CVec3& y, const CMat3& H) {
  double xx = std::real(inner(x, x, H));
  double yy = std::real(inner(y, y, H));
  if (xx >= 0 || yy >= 0) throw NotNegativeVector();
  double ratio = std::norm(inner(x, y, H)) / (xx * yy);
  if (ratio < 1.0) ratio = 1.0;
  return 2.0 * std::acosh(std::sqrt(ratio));
}

double dist(const Vec3x& x, const Vec3x& y, const Mat3x& H) {
  if (norm_sign(x, H) >= 0) throw NotNegativeVector();
  if (norm_sign(y, H) >= 0) throw NotNegativeVector();
  Cyc num = inner(x, y, H).abs2();
  Cyc den = inner(x, x, H) * inner(y, y, H);
  double ratio = num.to_complex().real() / den.to_complex().real();
  if (ratio < 1.0) ratio = 1.0;
  return 2.0 * std::acosh(std::sqrt(ratio));
}

LinePosition line_position(const Vec3x& v1, const Vec3x& v2, const Mat3x& H) {
  if (norm_sign(v1, H) <= 0 || norm_sign(v2, H) <= 0)
    throw NotPositiveVector();
  Cyc num = inner(v1, v2, H).abs2();
  Cyc den = inner(v1, v1, H) * inner(v2, v2, H);
  Cyc diff = num - den;
  int cmp = diff.sign();  // C - 1 sign (den > 0)
  double C = num.to_complex().real() / den.to_complex().real();
  LinePosition out;
  out.C = C;
  if (cmp > 0) {
    out.rel = LineRel::Ultraparallel;
    out.theta = 0.0;
  } else if (cmp == 0) {
    out.rel = LineRel::Asymptotic;
    out.theta = 0.0;
    // same projective line iff v2 is a scalar multiple of v1
    Cyc c01 = v1[0] * v2[1] - v1[1] * v2[0];
    Cyc c02 = v1[0] * v2[2] - v1[2] * v2[0];
    Cyc c12 = v1[1] * v2[2] - v1[2] * v2[1];
    out.same_line = c01.is_zero() && c02.is_zero() && c12.is_zero();
  } else {
    out.rel = LineRel::Intersecting;
    out.theta = std::acos(std::sqrt(std::max(0.0, std::min(1.0, C))));
  }
  return out;
}

std::vector<cplx> cubic_roots(cplx c2, cplx c1, cplx c0) {
  // Depressed cubic t^3 + p t + q with x = t - c2/3.
  cplx shift = c2 / 3.0;
  cplx p = c1 - c2 * c2 / 3.0;
  cplx q = c0 - c1 * c2 / 3.0 + 2.0 * c2 * c2 * c2 / 27.0;
  std::vector<cplx> roots;
  if (std::abs(p) < 1e-300 && std::abs(q) < 1e-300) {
    roots = {-shift, -shift, -shift};
    return roots;
  }
  cplx disc = q * q / 4.0 + p * p * p / 27.0;
  cplx s = std::sqrt(disc);
  cplx u3 = -q / 2.0 + s;
  if (std::abs(u3) < std::abs(-q / 2.0 - s)) u3 = -q / 2.0 - s;
  cplx u = std::pow(u3, 1.0 / 3.0);
  const cplx w(-0.5, std::sqrt(3.0) / 2.0);
  for (int k = 0; k < 3; ++k) {
    cplx uk = u * std::pow(w, k);
    cplx t = uk - p / (3.0 * uk);
    roots.push_back(t - shift);
  }
  return roots;
}

std::vector<EigenPair> eigen_unitary(const CMat3& M, const CMat3& H) {
  cplx tr = M.trace();
  cplx e2 = 0;
  for (int i = 0; i < 3; ++i) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    e2 += M(r0, r0) * M(r1, r1) - M(r0, r1) * M(r1, r0);
  }
  cplx d = M.determinant();
  auto roots = cubic_roots(-tr, e2, -d);
  std::vector<EigenPair> out;
  for (cplx lam : roots) {
    CMat3 A = M - lam * CMat3::Identity();
    CVec3 best = CVec3::Zero();
    double bn = -1;
    for (int i = 0; i < 3; ++i) {
      // bilinear cross product of two rows lies in the nullspace of A
      // (Eigen's complex cross() conjugates its result, so undo that)
      CVec3 r0 = A.row((i + 1) % 3).transpose();
      CVec3 r1 = A.row((i + 2) % 3).transpose();
      CVec3 c = r0.cross(r1).conjugate();
      double n = c.norm();
      if (n > bn) { bn = n; best = c; }
    }
    double scale = A.cwiseAbs().maxCoeff();
    if (bn < 1e-12 * std::max(1.0, scale * scale))
      throw RepeatedEigenvalueNoBasis();
    best /= best.norm();
    EigenPair ep;
    ep.value = lam;
    ep.vector = best;
    ep.negative_type = std::real(inner(best, best, H)) < 0;
    out.push_back(ep);
  }
  return out;
}

}  // namespace chc
