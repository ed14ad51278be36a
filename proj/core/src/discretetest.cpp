#include "chc/discretetest.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace chc {

namespace {

constexpr double kMargin = 1e-6;

const SporadicValue& catalogue_entry(const TriangleGroup& G) {
  if (!G.tau_id().empty()) return sporadic(G.tau_id());
  for (const SporadicValue& sv : sporadic_catalogue())
    if (sv.value == G.tau()) return sv;
  throw std::runtime_error("tau is not a sporadic catalogue value");
}

// cos(a pi / b) as an exact cyclotomic (half of zeta_{2b}^a + zeta_{2b}^{-a}).
Cyc cos_pi(long a, long b) { return two_cos(2 * b, a) * Rat(1, 2); }

double embed_real(const Cyc& x) { return x.to_complex().real(); }

// Exact kernel vector of M - lam*I via bilinear row cross products.
Vec3x kernel_vector(const Mat3x& M, const Cyc& lam) {
  Mat3x A = M;
  for (int i = 0; i < 3; ++i) A(i, i) -= lam;
  for (int i = 0; i < 3; ++i) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    Vec3x c;
    c[0] = A(r0, 1) * A(r1, 2) - A(r0, 2) * A(r1, 1);
    c[1] = A(r0, 2) * A(r1, 0) - A(r0, 0) * A(r1, 2);
    c[2] = A(r0, 0) * A(r1, 1) - A(r0, 1) * A(r1, 0);
    if (!c[0].is_zero() || !c[1].is_zero() || !c[2].is_zero()) return c;
  }
  throw std::runtime_error("kernel vector: matrix has full rank");
}

TestTarget finish_target(const TriangleGroup& G, TestTarget t, const Cyc& num2,
                         long r, long s) {
  long p = G.p();
  Cyc den = two_cos(p, 1) + two_cos(2 * s, r);
  if (den.is_zero()) throw ZeroDenominator();
  long a = ((r + s) * p + 2 * s) % (2 * p);
  t.alpha = minimal_power_angle(a, p);  // throws ZeroAngle
  // alpha = d pi/(2p) with d | 2p, so alpha is always pi/q in lowest terms
  long q = t.alpha.alpha.den;
  t.num2 = num2;
  t.den2 = den * den;
  t.sin2 = (Cyc(2L) - two_cos(q, 1)) * Rat(1, 4);
  t.polar_image = G.J() * t.polar;
  t.polar_positive = norm_sign(t.polar, G.H()) > 0;
  double n2 = embed_real(t.num2), d2 = embed_real(t.den2);
  t.coshdelta = std::sqrt(n2 / d2);
  t.value = t.coshdelta * std::sqrt(embed_real(t.sin2));
  t.ultraparallel = (t.num2 - t.den2).sign() > 0;
  return t;
}

}  // namespace

TestTarget build_target_r1r2(const TriangleGroup& G) {
  const SporadicValue& sv = catalogue_entry(G);
  long p = G.p();
  const Cyc& tau = G.tau();
  Cyc tb = tau.conj();
  TestTarget t;
  t.family = TargetFamily::PowR1R2;
  t.s = sv.s;
  // e^{-4 i pi/3p}-eigenvector of R1R2, as printed
  Cyc z1 = Cyc::root_of_unity(3 * p, 3 * p - 1);  // e^{-2 i pi/3p}
  Cyc z2 = Cyc::root_of_unity(3 * p, 2);          // e^{ 4 i pi/3p}
  t.polar[0] = z1 * tau * tau + z2 * tb - z1 * tb;
  t.polar[1] = z1.conj() * tb * tb + z2.conj() * tau - z1.conj() * tau;
  t.polar[2] = two_cos(p, 1) + two_cos(2 * sv.s, sv.r);
  // m = |conj(tau)^2 + e^{-2 i pi/p} tau - tau|
  Cyc u = tb * tb + Cyc::root_of_unity(p, p - 1) * tau - tau;
  return finish_target(G, std::move(t), u.abs2(), sv.r, sv.s);
}

TestTarget build_target_r1232(const TriangleGroup& G) {
  const SporadicValue& sv = catalogue_entry(G);
  if (!sv.rps) throw NoRprime();
  auto [rp, sp] = *sv.rps;
  long p = G.p();
  const Cyc& tau = G.tau();
  Cyc tb = tau.conj();
  TestTarget t;
  t.family = TargetFamily::PowR1R2R3R2inv;
  t.s = sp;
  // the printed eigenvector has a typo; use the exact kernel vector
  Mat3x base = G.R1() * G.R2() * G.R3() * G.R2().inverse();
  t.polar = kernel_vector(base, Cyc::root_of_unity(3 * p, 3 * p - 2));
  // m = |(1 - e^{2 i pi/p}) tau + |tau|^2 (conj(tau)^2 - 2 tau)
  //      + e^{-2 i pi/p} conj(tau)^2|
  Cyc zp = Cyc::root_of_unity(p, 1);
  Cyc u = (Cyc(1L) - zp) * tau + tau.abs2() * (tb * tb - tau * Rat(2)) +
          zp.conj() * tb * tb;
  return finish_target(G, std::move(t), u.abs2(), rp, sp);
}

TestVerdict jorgensen_test(const TestTarget& t) {
  TestVerdict v;
  v.witness = t.value;
  if (!t.ultraparallel) {
    v.note = "mirrors not ultraparallel";
    return v;
  }
  // v < 1/2  <=>  4 num2 sin2 - den2 < 0, exact
  bool fires_float = t.value < 0.5 - kMargin;
  bool near = std::abs(t.value - 0.5) <= kMargin;
  if (fires_float || near) {
    Cyc gap = t.num2 * t.sin2 * Rat(4) - t.den2;
    if (gap.sign() < 0) {
      v.nondiscrete = true;
      v.reason = NdReason::Jorgensen;
      return v;
    }
  }
  v.note = "value >= 1/2";
  return v;
}

namespace {

// v strictly differs (exactly) from cos(a pi / b) >= 0; when the cosine is
// negative it cannot equal v >= 0 unless v = 0.
bool exactly_differs(const TestTarget& t, long a, long b) {
  Cyc c = cos_pi(a, b);
  int cs = c.sign();
  Cyc lhs = t.num2 * t.sin2;  // v^2 * den2
  if (cs < 0) return !lhs.is_zero();
  if (cs == 0) return !lhs.is_zero();
  return lhs != t.den2 * c * c;
}

TestVerdict knapp_gap_test(const TestTarget& t, NdReason reason) {
  TestVerdict out;
  out.witness = t.value;
  if (t.value >= 1.0 - 1e-12) {
    out.note = "value >= 1";
    return out;
  }
  if (t.alpha.alpha.num != 1) throw AngleNotSubmultiple();
  long q = t.alpha.alpha.den;
  // admissible values: cos(2 alpha) = cos(2 pi / q) and cos(pi/q'), q' >= 1
  double best = std::abs(t.value - std::cos(2 * M_PI / q));
  std::vector<std::pair<long, long>> admiss = {{2, q}};  // cos(2 pi/q)
  for (long qp = 1;; ++qp) {
    double c = std::cos(M_PI / qp);
    best = std::min(best, std::abs(t.value - c));
    admiss.push_back({1, qp});
    if (c > t.value + 1e-7) break;
    if (qp > 4000) {
      out.note = "admissible scan overflow";
      return out;
    }
  }
  if (best <= 1e-8) {
    out.note = "admissible value";
    return out;
  }
  for (auto [a, b] : admiss) {
    if (!exactly_differs(t, a, b)) {
      out.note = "admissible value (exact)";
      return out;
    }
  }
  out.nondiscrete = true;
  out.reason = reason;
  return out;
}

}  // namespace

TestVerdict knapp_test(const TestTarget& t, bool spherical) {
  if (!t.ultraparallel) {
    if (spherical && t.value < 1.0 - 1e-9)
      return knapp_gap_test(t, NdReason::SphericalGap);
    TestVerdict v;
    v.witness = t.value;
    v.note = "mirrors not ultraparallel";
    return v;
  }
  return knapp_gap_test(t, NdReason::KnappAngleGap);
}

TestVerdict shimizu_test(const TriangleGroup& G) {
  auto cls = classify((G.R1() * G.R2()).pow(2), G.H());
  if (cls.kind != IsoKind::Parabolic ||
      cls.subtype != ParabolicSubtype::VerticalTranslation)
    throw NotVerticalParabolic();
  const Cyc& tau = G.tau();
  Cyc tb = tau.conj();
  Cyc u = tb * tb + Cyc::root_of_unity(G.p(), G.p() - 1) * tau - tau;
  Cyc m2 = u.abs2();
  TestVerdict v;
  double m = std::sqrt(embed_real(m2));
  v.witness = m;
  int below1 = (m2 - Cyc(1L)).sign();
  if (below1 < 0) {
    v.nondiscrete = true;
    v.reason = NdReason::Shimizu;
    return v;
  }
  if (below1 == 0 || (m2 - Cyc(4L)).sign() >= 0) {
    v.note = "m at or beyond admissible boundary";
    return v;
  }
  // m in (1, 2): non-discrete unless m = 2 cos(pi/r) for some integer r >= 3
  for (long r = 3; 2 * std::cos(M_PI / r) < m + 0.01 && r < 4000; ++r) {
    if (std::abs(2 * std::cos(M_PI / r) - m) < 1e-9 ||
        m2 == cos_pi(1, r) * cos_pi(1, r) * Rat(4)) {
      v.note = "m = 2 cos(pi/r)";
      return v;
    }
  }
  if (m < 2.0 - 1e-9) {
    v.nondiscrete = true;
    v.reason = NdReason::Shimizu;
    return v;
  }
  v.note = "m too close to 2";
  return v;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

}  // namespace

std::vector<CensusRow> census_nondiscrete(long pmin, long pmax,
                                          std::vector<std::string> tau_ids,
                                          bool spherical) {
  if (tau_ids.empty())
    for (const SporadicValue& sv : sporadic_catalogue())
      tau_ids.push_back(sv.id);
  std::vector<CensusRow> rows;
  for (const std::string& id : tau_ids) {
    const SporadicValue& sv = sporadic(id);
    for (long p = pmin; p <= pmax; ++p) {
      CensusRow row;
      row.p = p;
      row.tau_id = id;
      row.hyperbolic = herm_form_signature(p, sv.value) ==
                       std::make_tuple(2, 0, 1);
      if (!row.hyperbolic) {
        rows.push_back(std::move(row));
        continue;
      }
      TriangleGroup G(p, sv.value, id);
      std::vector<std::string> notes;
      bool decided = false;
      for (int fam = 1; fam <= 2 && !decided; ++fam) {
        if (fam == 2 && !sv.rps) continue;
        const char* fname = fam == 1 ? "r1r2" : "r1232";
        TestTarget t;
        try {
          t = fam == 1 ? build_target_r1r2(G) : build_target_r1232(G);
        } catch (const ZeroDenominator&) {
          if (fam == 1 && sv.r == 1 && sv.s == 2 && p == 4) {
            TestVerdict shv = shimizu_test(G);
            if (shv.nondiscrete) {
              row.verdict = shv;
              row.family = "shimizu";
              decided = true;
            } else {
              notes.push_back(std::string(fname) +
                              ":shimizu-inconclusive(m=" + fmt(shv.witness) +
                              ")");
            }
          } else {
            notes.push_back(std::string(fname) + ":parabolic-denominator");
          }
          continue;
        } catch (const ZeroAngle&) {
          notes.push_back(std::string(fname) + ":zero-angle");
          continue;
        }
        if (!t.polar_positive) row.polar_note = true;
        if (!t.ultraparallel) {
          if (spherical) {
            TestVerdict kv = knapp_test(t, true);
            if (kv.nondiscrete) {
              row.verdict = kv;
              row.family = fname;
              decided = true;
              continue;
            }
          }
          notes.push_back(std::string(fname) +
                          ":intersecting(v=" + fmt(t.value) + ")");
          continue;
        }
        TestVerdict jv = jorgensen_test(t);
        if (jv.nondiscrete) {
          row.verdict = jv;
          row.family = fname;
          decided = true;
          continue;
        }
        TestVerdict kv = knapp_test(t);
        if (kv.nondiscrete) {
          row.verdict = kv;
          row.family = fname;
          decided = true;
          continue;
        }
        notes.push_back(std::string(fname) + ":admissible(v=" + fmt(t.value) +
                        ")");
      }
      if (!decided) {
        std::string d;
        for (size_t i = 0; i < notes.size(); ++i)
          d += (i ? ";" : "") + notes[i];
        row.detail = d;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

bool jorgensen_tail_bracketed(const std::string& tau_id, long P0) {
  const SporadicValue& sv = sporadic(tau_id);
  // values per congruence class of p; the right invariant is d = 2p/q where
  // alpha = pi/q, i.e. the gcd of the base angle numerator with 2p (p mod 8
  // alone mixes classes for base angles other than (p-4) pi/p)
  std::map<long, std::vector<double>> classes;
  for (long p = P0; p <= 4 * P0; ++p) {
    if (herm_form_signature(p, sv.value) != std::make_tuple(2, 0, 1))
      return false;  // tail claim needs the whole range hyperbolic
    TriangleGroup G(p, sv.value, tau_id);
    TestTarget t;
    try {
      t = build_target_r1r2(G);
    } catch (const std::runtime_error&) {
      return false;
    }
    if (!t.ultraparallel || t.value >= 0.5 - kMargin) return false;
    long cls = 2 * p / t.alpha.alpha.den;  // alpha = pi/q, class key d = 2p/q
    classes[cls].push_back(t.value);
  }
  for (auto& [cls, vs] : classes)
    for (size_t i = 1; i < vs.size(); ++i)
      if (vs[i] > vs[i - 1] + 1e-12) return false;
  return true;
}

}  // namespace chc
