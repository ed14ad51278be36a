#include "chc/arith.hpp"

#include <numeric>

namespace chc {

namespace {

struct FormData {
  long N;     // lcm(4, 2p, 6p, conductor of tau)
  Cyc a, b;   // circulant entries: H = circ(a, b, conj b)
  Cyc cosp;   // 2 cos(2 pi / p), a generator of the real data phi_t must fix
  Cyc b2, b3re;  // |b|^2 and Re(b^3): cross-multiplied invariants of the form
};

FormData form_data(const TriangleGroup& G) {
  FormData d;
  long p = G.p();
  d.N = std::lcm(std::lcm(4L, 6 * p), G.tau().conductor());
  Cyc i = Cyc::root_of_unity(4, 1);
  d.a = i * (Cyc::root_of_unity(2 * p, -1) - Cyc::root_of_unity(2 * p, 1));
  d.b = -(i * Cyc::root_of_unity(6 * p, -1) * G.tau());
  d.cosp = two_cos(p, 1);
  d.b2 = d.b.abs2();
  d.b3re = (d.b * d.b * d.b).real_part();
  return d;
}

// phi_t induces the identity on the totally real subfield F generated by the
// form invariants iff it fixes cos(2 pi / p), |b|^2, and the rescaling
// invariants |b|^2 / a^2 and Re(b^3) / a^3 (all equalities cross-multiplied
// so no cyclotomic division is needed).
bool identity_on_F(const FormData& d, long t, const Cyc& at, const Cyc& bt) {
  if (d.cosp.galois(t) != d.cosp) return false;
  Cyc bt2 = bt.abs2();
  if (bt2 != d.b2) return false;
  if (bt2 * d.a * d.a != d.b2 * at * at) return false;
  Cyc bt3re = (bt * bt * bt).real_part();
  return bt3re * d.a * d.a * d.a == d.b3re * at * at * at;
}

std::tuple<int, int, int> conj_signature(const Cyc& at, const Cyc& bt) {
  int pos = 0, zero = 0, neg = 0;
  for (int k = 0; k < 3; ++k) {
    Cyc bw = bt * Cyc::root_of_unity(3, k);
    int s = (at + bw + bw.conj()).sign();
    if (s > 0) ++pos;
    else if (s < 0) ++neg;
    else ++zero;
  }
  return {pos, zero, neg};
}

bool is_definite(const std::tuple<int, int, int>& sig) {
  return sig == std::make_tuple(3, 0, 0) || sig == std::make_tuple(0, 0, 3);
}

Mat3x circulant(const Cyc& a, const Cyc& b) {
  Cyc c = b.conj();
  Mat3x H = Mat3x::zero();
  const Cyc* rows[3][3] = {{&a, &b, &c}, {&c, &a, &b}, {&b, &c, &a}};
  for (int r = 0; r < 3; ++r)
    for (int cc = 0; cc < 3; ++cc) H(r, cc) = *rows[r][cc];
  return H;
}

// Visits one representative t per nontrivial automorphism class (coprime to
// N, modulo conjugation t ~ N - t, identity-on-F classes skipped); stops
// early when the visitor returns false.
template <typename Visit>
void scan_orbit(const FormData& d, Visit&& visit) {
  for (long t = 2; t <= d.N / 2; ++t) {
    if (std::gcd(t, d.N) != 1) continue;
    Cyc at = d.a.galois(t), bt = d.b.galois(t);
    if (identity_on_F(d, t, at, bt)) continue;
    if (!visit(t, at, bt)) return;
  }
}

}  // namespace

GaloisOrbit galois_orbit_forms(const TriangleGroup& G) {
  FormData d = form_data(G);
  GaloisOrbit orbit;
  orbit.N = d.N;
  orbit.conjugates.push_back(
      {1, circulant(d.a, d.b), conj_signature(d.a, d.b)});
  scan_orbit(d, [&](long t, const Cyc& at, const Cyc& bt) {
    orbit.conjugates.push_back({t, circulant(at, bt), conj_signature(at, bt)});
    return true;
  });
  return orbit;
}

ArithFlag arithmeticity_flag(const GaloisOrbit& orbit) {
  for (const GaloisConjugate& c : orbit.conjugates) {
    if (c.t == 1) continue;
    if (!is_definite(c.signature)) return {false, c.t};
  }
  return {true, 0};
}

ArithFlag arithmetic_criterion(const TriangleGroup& G) {
  FormData d = form_data(G);
  ArithFlag flag{true, 0};
  scan_orbit(d, [&](long t, const Cyc& at, const Cyc& bt) {
    if (!is_definite(conj_signature(at, bt))) {
      flag = {false, t};
      return false;
    }
    return true;
  });
  return flag;
}

}  // namespace chc
