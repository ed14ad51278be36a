#include "chc/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace chc {

namespace {

constexpr double kPi = 3.14159265358979323846;

double proj_cross(const CVec3& u, const CVec3& v) {
  // magnitude of the cross product; Eigen's conjugation of the complex
  // cross() is irrelevant for the norm
  return u.cross(v).norm();
}

bool proj_same_point(const CVec3& u, const CVec3& v, double tol = 1e-6) {
  return proj_cross(u, v) < tol * u.norm() * v.norm();
}

cplx inner_f(const CVec3& x, const CVec3& y, const CMat3& H) {
  return (y.adjoint() * (H * x))(0);
}

// Unconjugated dot product (Eigen's dot() conjugates its left factor).
cplx dotu(const CVec3& a, const CVec3& b) {
  return (a.array() * b.array()).sum();
}

// Projective equality of two unimodular-scaled matrices: N2 == s N1 with
// |s| = 1.
bool proj_same_matrix(const CMat3& A, const CMat3& B, double tol = 1e-6) {
  int bi = 0, bj = 0;
  double bn = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (std::abs(A(i, j)) > bn) { bn = std::abs(A(i, j)); bi = i; bj = j; }
  if (bn <= 0 || std::abs(B(bi, bj)) < 1e-12) return false;
  cplx s = B(bi, bj) / A(bi, bj);
  if (std::abs(std::abs(s) - 1.0) > tol) return false;
  return (B - s * A).cwiseAbs().maxCoeff() < tol * std::max(1.0, bn);
}

bool exact_proj_same_point(const Vec3x& u, const Vec3x& v) {
  return (u[0] * v[1] - u[1] * v[0]).is_zero() &&
         (u[0] * v[2] - u[2] * v[0]).is_zero() &&
         (u[1] * v[2] - u[2] * v[1]).is_zero();
}

// Labels compare as token sequences with 1 < 2 < 3 < 1' < 2' < 3'.
std::vector<int> label_key(const std::string& w) {
  std::vector<int> k;
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == '\'') k.back() += 3;
    else k.push_back(w[i] - '1');
  }
  return k;
}

bool label_less(const std::string& a, const std::string& b) {
  std::vector<int> ka = label_key(a), kb = label_key(b);
  return std::make_pair(ka.size(), ka) < std::make_pair(kb.size(), kb);
}

// Generator alphabet in breadth-first order.
struct GenSet {
  std::vector<std::string> names;
  std::vector<CMat3> mats;
};

GenSet gen_alphabet(const TriangleGroup& G) {
  GenSet g;
  const Mat3x* R[3] = {&G.R1(), &G.R2(), &G.R3()};
  const char* nm[3] = {"1", "2", "3"};
  for (int i = 0; i < 3; ++i) {
    g.names.push_back(nm[i]);
    g.mats.push_back(R[i]->to_complex());
  }
  for (int i = 0; i < 3; ++i) {
    g.names.push_back(std::string(nm[i]) + "'");
    g.mats.push_back(R[i]->inverse().to_complex());
  }
  return g;
}

}  // namespace

PartialDomain::PartialDomain(const TriangleGroup& G, Limits lim,
                             std::optional<std::array<double, 3>> override)
    : G_(&G), lim_(lim), Hf_(G.H().to_complex()) {
  CVec3 c = G.center().to_complex();
  if (override) {
    for (int i = 0; i < 3; ++i) c(i) += (*override)[i];
  } else {
    p0x_ = G.center();
  }
  double n = std::real(inner_f(c, c, Hf_));
  if (n >= 0) throw NotNegativeVector();
  p0_ = c / std::sqrt(-n);
  row0_ = (Hf_ * p0_).conjugate();
  const Mat3x* R[3] = {&G.R1(), &G.R2(), &G.R3()};
  const char* nm[3] = {"1", "2", "3"};
  for (int i = 0; i < 3; ++i) add_word(nm[i], *R[i]);
}

int PartialDomain::add_word(const std::string& word, const Mat3x& exact) {
  int added = 0;
  Mat3x inv = exact.inverse();
  std::string invname = word.size() == 1 ? word + "'" : "(" + word + ")^-1";
  struct Cand { const std::string* w; const Mat3x* m; };
  for (Cand c : {Cand{&word, &exact}, Cand{&invname, &inv}}) {
    if (words_.size() >= lim_.max_words) break;
    CMat3 flt = c.m->to_complex();
    CVec3 q = flt * p0_;
    double nq = std::real(inner_f(q, q, Hf_));
    if (nq >= 0) continue;  // numerically unusable
    q /= std::sqrt(-nq);
    bool stab = proj_same_point(q, p0_, 1e-9);
    if (stab && p0x_) {
      // exact confirmation: gamma p0 proportional to p0
      Vec3x qe = *c.m * *p0x_;
      stab = exact_proj_same_point(qe, *p0x_);
    }
    if (stab) continue;
    bool dup = false;
    for (const WordEntry& e : words_) {
      if (!proj_same_point(q, e.q, 1e-6)) continue;
      if (p0x_) {
        Vec3x qe = *c.m * *p0x_;
        Vec3x qe2 = e.exact * *p0x_;
        if (!exact_proj_same_point(qe, qe2)) continue;  // distinct after all
      }
      dup = true;
      break;
    }
    if (dup) continue;
    words_.push_back({*c.w, *c.m, flt, q});
    rows_.push_back((Hf_ * q).conjugate());
    ++added;
  }
  return added;
}

bool PartialDomain::in_partial_domain(const CVec3& x) const {
  if (std::real(inner_f(x, x, Hf_)) >= 0) throw NotNegativeVector();
  double v0 = std::abs(dotu(row0_, x));  // |<x, p0>|
  for (const CVec3& r : rows_) {
    double v = std::abs(dotu(r, x));
    if (v < v0 * (1 - 1e-9)) return false;
  }
  return true;
}

CVec3 PartialDomain::chart_point(int a, int b, int row, int col,
                                 int grid) const {
  CMat3 M;
  M.row(0) = row0_.transpose();
  M.row(1) = rows_[a].transpose();
  M.row(2) = rows_[b].transpose();
  CMat3 Minv = M.inverse();
  cplx z1 = std::polar(1.0, (row + 0.5) * 2 * kPi / grid);
  cplx z2 = std::polar(1.0, (col + 0.5) * 2 * kPi / grid);
  return Minv.col(0) + z1 * Minv.col(1) + z2 * Minv.col(2);
}

FaceSample PartialDomain::giraud_sample(int a, int b) const {
  return giraud_sample(a, b, lim_.grid);
}

FaceSample PartialDomain::giraud_sample(int a, int b, int grid) const {
  FaceSample out;
  out.a = a;
  out.b = b;
  out.grid = grid;
  const CVec3& qa = words_[a].q;
  const CVec3& qb = words_[b].q;
  if (proj_same_point(qa, qb, 1e-9) || proj_same_point(qa, p0_, 1e-9) ||
      proj_same_point(qb, p0_, 1e-9))
    throw DegenerateTriple();
  CMat3 M;
  M.row(0) = row0_.transpose();
  M.row(1) = rows_[a].transpose();
  M.row(2) = rows_[b].transpose();
  double scale = std::pow(M.norm(), 3) / 5.196;
  if (std::abs(M.determinant()) < 1e-8 * scale) {
    out.verdict = FaceVerdict::InComplexGeodesic;
    return out;
  }
  CMat3 Minv = M.inverse();
  CVec3 c0 = Minv.col(0), c1 = Minv.col(1), c2 = Minv.col(2);
  // x(z1,z2) = c0 + z1 c1 + z2 c2; <x,x>_H expands over the torus grid
  cplx g01 = inner_f(c1, c0, Hf_);  // coeff of z1
  cplx g02 = inner_f(c2, c0, Hf_);  // coeff of z2
  cplx g12 = inner_f(c2, c1, Hf_);  // coeff of conj(z1) z2
  double gdiag = std::real(inner_f(c0, c0, Hf_)) +
                 std::real(inner_f(c1, c1, Hf_)) +
                 std::real(inner_f(c2, c2, Hf_));
  // cheap lower bound for <x,x> over the whole torus: no cell can be
  // negative when it is positive, so the face is empty without sampling
  if (gdiag - 2 * (std::abs(g01) + std::abs(g02) + std::abs(g12)) > -1e-12)
    return out;
  std::vector<cplx> z1v(grid), z2v(grid);
  for (int i = 0; i < grid; ++i) {
    z1v[i] = std::polar(1.0, (i + 0.5) * 2 * kPi / grid);
    z2v[i] = z1v[i];
  }
  std::vector<int> idx;
  idx.reserve(grid * 4);
  for (int i = 0; i < grid; ++i) {
    double rowterm = gdiag + 2 * std::real(g01 * z1v[i]);
    cplx m12 = g12 * std::conj(z1v[i]);
    for (int j = 0; j < grid; ++j) {
      double nrm = rowterm + 2 * std::real(g02 * z2v[j]) +
                   2 * std::real(m12 * z2v[j]);
      if (nrm < -1e-12) idx.push_back(i * grid + j);
    }
  }
  if (idx.size() < 2) return out;  // Empty
  for (int m = 0; m < (int)rows_.size() && idx.size() >= 2; ++m) {
    if (m == a || m == b) continue;
    cplx d0 = dotu(rows_[m], c0);
    cplx d1 = dotu(rows_[m], c1);
    cplx d2 = dotu(rows_[m], c2);
    std::vector<int> keep;
    keep.reserve(idx.size());
    for (int id : idx) {
      cplx v = d0 + z1v[id / grid] * d1 + z2v[id % grid] * d2;
      if (std::abs(v) >= 1 - 1e-9) keep.push_back(id);
    }
    idx.swap(keep);
  }
  if (idx.size() < 2) return out;
  std::vector<int> rc(grid, 0), cc(grid, 0);
  for (int id : idx) { ++rc[id / grid]; ++cc[id % grid]; }
  bool rok = false, cok = false;
  for (int i = 0; i < grid; ++i) {
    rok |= rc[i] >= 2;
    cok |= cc[i] >= 2;
  }
  if (!(rok && cok)) return out;
  out.verdict = FaceVerdict::NonEmptyGeneric;
  out.hits.reserve(idx.size());
  for (int id : idx) out.hits.push_back({id / grid, id % grid});
  return out;
}

int g_step(PartialDomain& D) {
  const auto& W = D.words();
  int n = (int)W.size();
  struct NewWord { std::string name; Mat3x exact; };
  std::vector<NewWord> fresh;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      FaceSample f = D.giraud_sample(i, j);
      if (f.verdict != FaceVerdict::NonEmptyGeneric) continue;
      Mat3x ai = W[i].exact.inverse();
      Mat3x bi = W[j].exact.inverse();
      fresh.push_back({"(" + W[i].word + ")^-1(" + W[j].word + ")",
                       ai * W[j].exact});
      fresh.push_back({"(" + W[j].word + ")^-1(" + W[i].word + ")",
                       bi * W[i].exact});
    }
  int added = 0;
  for (const NewWord& nw : fresh) added += D.add_word(nw.name, nw.exact);
  return added;
}

namespace {

ProcedureOutcome run_procedure(std::shared_ptr<PartialDomain> D) {
  const Limits lim = D->limits();
  ProcedureOutcome out;
  out.domain = D;
  std::map<std::pair<int, int>, bool> cache;  // pair -> nonempty generic
  for (int step = 0; step < lim.max_steps; ++step) {
    out.steps = step + 1;
    const auto& W = D->words();
    int n = (int)W.size();
    std::vector<std::pair<int, int>> face_pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        auto key = std::make_pair(i, j);
        auto it = cache.find(key);
        if (it != cache.end()) continue;
        FaceSample f = D->giraud_sample(i, j);
        bool ne = f.verdict == FaceVerdict::NonEmptyGeneric;
        cache[key] = ne;
        if (ne) face_pairs.push_back(key);
      }
    int added = 0;
    bool capped = false;
    for (auto [i, j] : face_pairs) {
      if (D->words().size() + 2 > lim.max_words) { capped = true; break; }
      Mat3x ai = D->words()[i].exact.inverse();
      Mat3x bi = D->words()[j].exact.inverse();
      std::string wi = D->words()[i].word, wj = D->words()[j].word;
      added += D->add_word("(" + wi + ")^-1(" + wj + ")",
                           ai * D->words()[j].exact);
      added += D->add_word("(" + wj + ")^-1(" + wi + ")",
                           bi * D->words()[i].exact);
    }
    out.word_count = D->words().size();
    if (capped) {
      out.behaviour = 'C';
      return out;
    }
    if (added == 0) {
      // closure: authoritative rescan of every pair against the closed W
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          FaceSample f = D->giraud_sample(i, j);
          if (f.verdict == FaceVerdict::NonEmptyGeneric)
            out.faces.push_back(std::move(f));
          else if (f.verdict == FaceVerdict::InComplexGeodesic)
            out.degenerate_pairs.push_back({i, j});
        }
      out.behaviour =
          (out.faces.empty() && out.degenerate_pairs.empty()) ? 'B' : 'A';
      return out;
    }
  }
  out.behaviour = 'C';  // step cap exceeded without closure
  out.word_count = D->words().size();
  return out;
}

}  // namespace

ProcedureOutcome g_procedure(const TriangleGroup& G, Limits lim,
                             std::optional<std::array<double, 3>> override) {
  return run_procedure(std::make_shared<PartialDomain>(G, lim, override));
}

ProcedureOutcome g_procedure(std::shared_ptr<PartialDomain> start) {
  return run_procedure(std::move(start));
}

std::string shortest_label(const PartialDomain& D, int index, int maxlen) {
  GenSet g = gen_alphabet(D.group());
  const CMat3& target = D.words()[index].flt;
  std::vector<std::pair<std::string, CMat3>> frontier = {
      {"", CMat3::Identity()}};
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::pair<std::string, CMat3>> next;
    next.reserve(frontier.size() * g.mats.size());
    for (const auto& [w, M] : frontier)
      for (size_t k = 0; k < g.mats.size(); ++k) {
        // avoid immediate cancellation g g^-1
        if (!w.empty()) {
          std::string last = w.substr(w.size() - 1) == "'"
                                 ? w.substr(w.size() - 2)
                                 : w.substr(w.size() - 1);
          std::string invlast = last.size() == 2 ? last.substr(0, 1)
                                                 : last + "'";
          if (g.names[k] == invlast) continue;
        }
        next.push_back({w + g.names[k], M * g.mats[k]});
        if (proj_same_matrix(next.back().second, target))
          return next.back().first;
      }
    frontier = std::move(next);
  }
  return "";
}

SideReport side_classes(const ProcedureOutcome& out) {
  if (out.behaviour != 'A') throw NotBehaviourA();
  const PartialDomain& D = *out.domain;
  std::set<int> side_set;
  for (const FaceSample& f : out.faces) {
    side_set.insert(f.a);
    side_set.insert(f.b);
  }
  SideReport rep;
  rep.sides.assign(side_set.begin(), side_set.end());
  int ns = (int)rep.sides.size();
  // union-find over sides modulo inverses and J-conjugacy
  std::vector<int> parent(ns);
  for (int i = 0; i < ns; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  CMat3 Jf = D.group().J().to_complex();
  CMat3 Jinv = Jf.inverse();
  auto orbit = [&](const CMat3& M) {
    std::vector<CMat3> o;
    CMat3 Mi = M.inverse();
    CMat3 A = M, B = Mi;
    for (int t = 0; t < 3; ++t) {
      o.push_back(A);
      o.push_back(B);
      A = Jf * A * Jinv;
      B = Jf * B * Jinv;
    }
    return o;
  };
  std::vector<std::vector<CMat3>> orbs(ns);
  for (int i = 0; i < ns; ++i) orbs[i] = orbit(D.words()[rep.sides[i]].flt);
  for (int i = 0; i < ns; ++i)
    for (int j = i + 1; j < ns; ++j) {
      if (find(i) == find(j)) continue;
      const CMat3& tj = D.words()[rep.sides[j]].flt;
      for (const CMat3& M : orbs[i])
        if (proj_same_matrix(M, tj)) {
          parent[find(j)] = find(i);
          break;
        }
    }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < ns; ++i) groups[find(i)].push_back(i);
  for (auto& [root, mem] : groups) {
    SideClass sc;
    for (int m : mem) sc.members.push_back(rep.sides[m]);
    // shortest label over the members
    for (int m : sc.members) {
      std::string lbl = shortest_label(D, m, 6);
      if (!lbl.empty() && (sc.label.empty() || label_less(lbl, sc.label)))
        sc.label = lbl;
    }
    // no generator word of length <= 6: fall back to a stable index label
    if (sc.label.empty())
      sc.label = "w" + std::to_string(*std::min_element(sc.members.begin(),
                                                        sc.members.end()));
    rep.classes.push_back(std::move(sc));
  }
  std::sort(rep.classes.begin(), rep.classes.end(),
            [](const SideClass& a, const SideClass& b) {
              return label_less(a.label, b.label);
            });
  // adjacency-fingerprint merge: classes touching the same set of other
  // classes through 2-faces describe the same face of the polyhedron
  int nc = (int)rep.classes.size();
  std::vector<int> cls_of_word(D.words().size(), -1);
  for (int c = 0; c < nc; ++c)
    for (int m : rep.classes[c].members) cls_of_word[m] = c;
  std::vector<std::vector<int>> adj(nc, std::vector<int>(nc, 0));
  for (const FaceSample& f : out.faces) {
    int ca = cls_of_word[f.a], cb = cls_of_word[f.b];
    if (ca < 0 || cb < 0) continue;
    ++adj[ca][cb];
    if (ca != cb) ++adj[cb][ca];
  }
  std::vector<int> mergeto(nc);
  for (int c = 0; c < nc; ++c) mergeto[c] = c;
  for (int c1 = 0; c1 < nc; ++c1)
    for (int c2 = c1 + 1; c2 < nc; ++c2) {
      if (mergeto[c2] != c2) continue;
      // same face-count profile towards every third class
      bool same = true;
      for (int d = 0; d < nc && same; ++d)
        if (d != c1 && d != c2) same = adj[c1][d] == adj[c2][d];
      if (same) mergeto[c2] = mergeto[c1];
    }
  std::map<int, SideClass> merged;
  for (int c = 0; c < nc; ++c) {
    SideClass& m = merged[mergeto[c]];
    if (m.label.empty()) m.label = rep.classes[mergeto[c]].label;
    m.members.insert(m.members.end(), rep.classes[c].members.begin(),
                     rep.classes[c].members.end());
  }
  for (auto& [k, sc] : merged) rep.merged.push_back(std::move(sc));
  return rep;
}

std::vector<PairingEntry> side_pairing_check(const ProcedureOutcome& out) {
  if (out.behaviour != 'A') throw NotBehaviourA();
  const PartialDomain& D = *out.domain;
  std::set<int> side_set;
  for (const FaceSample& f : out.faces) {
    side_set.insert(f.a);
    side_set.insert(f.b);
  }
  CMat3 Jf = D.group().J().to_complex();
  std::vector<PairingEntry> report;
  for (int s : side_set) {
    PairingEntry e;
    e.side = s;
    CMat3 Ainv = D.words()[s].flt.inverse();
    for (int jp = 0; jp < 3 && !e.matched; ++jp) {
      CMat3 Sig = Ainv;
      for (int t = 0; t < jp; ++t) Sig = Jf * Sig;
      CVec3 image = Sig * D.center();
      int partner = -1;
      for (int t : side_set)
        if (proj_same_point(image, D.words()[t].q)) { partner = t; break; }
      if (partner < 0) continue;
      // verify: mapped samples of this side's faces stay in F_W and land on
      // the partner's bisector
      double worst = 0;
      int tested = 0;
      for (const FaceSample& f : out.faces) {
        if (f.a != s && f.b != s) continue;
        int stride = std::max<size_t>(1, f.hits.size() / 8);
        for (size_t h = 0; h < f.hits.size() && tested < 64; h += stride) {
          CVec3 x = D.chart_point(f.a, f.b, f.hits[h].first, f.hits[h].second,
                                  f.grid);
          CVec3 y = Sig * x;
          double v0 = std::abs(inner_f(y, D.center(), D.group().H()
                                           .to_complex()));
          double vt = std::abs(inner_f(y, D.words()[partner].q,
                                       D.group().H().to_complex()));
          worst = std::max(worst, std::abs(vt - v0) / std::max(v0, 1e-12));
          ++tested;
        }
      }
      if (worst < 1e-6) {
        e.partner = partner;
        e.j_power = jp;
        e.matched = true;
        e.residual = worst;
      }
    }
    report.push_back(e);
  }
  return report;
}

namespace {

// Polar vectors of the complex line containing the coequidistant locus of
// (p0, alpha p0, beta p0) when those lie in a common complex geodesic.
std::vector<CVec3> face_polar(const PartialDomain& D, int a, int b) {
  const CMat3 H = D.group().H().to_complex();
  const CVec3& p0 = D.center();
  CVec3 qa = D.words()[a].q, qb = D.words()[b].q;
  CVec3 v1 = p0 / p0.norm();
  CVec3 v2 = qa - v1.dot(qa) * v1;  // Eigen dot conjugates the left factor
  if (v2.norm() < 1e-10) v2 = qb - v1.dot(qb) * v1;
  v2 /= v2.norm();
  CVec3 res = qb - v1.dot(qb) * v1 - v2.dot(qb) * v2;
  if (res.norm() > 1e-6 * qb.norm()) return {};
  const CVec3 pts[3] = {p0, qa, qb};
  auto coeffs = [&](const CVec3& m, std::array<cplx, 3>& out) {
    cplx mm = inner_f(m, m, H);
    if (std::abs(mm) < 1e-14) return false;
    CVec3 w = v2 - (inner_f(v2, m, H) / mm) * m;
    if (w.norm() < 1e-10) w = v1 - (inner_f(v1, m, H) / mm) * m;
    cplx ww = inner_f(w, w, H);
    if (std::abs(ww) < 1e-14) return false;
    for (int i = 0; i < 3; ++i) out[i] = inner_f(pts[i], w, H) / ww;
    return true;
  };
  auto F = [&](cplx z, double* f) {
    CVec3 m = v1 + z * v2;
    std::array<cplx, 3> bv;
    if (!coeffs(m, bv)) { f[0] = f[1] = 1e6; return; }
    f[0] = std::norm(bv[1]) - std::norm(bv[0]);
    f[1] = std::norm(bv[2]) - std::norm(bv[0]);
  };
  std::vector<CVec3> sols;
  auto accept = [&](const CVec3& mraw) {
    CVec3 m = mraw / mraw.norm();
    if (std::real(inner_f(m, m, H)) <= 1e-10) return;  // not a complex line
    for (const CVec3& s : sols)
      if (proj_cross(m, s) < 1e-7) return;
    sols.push_back(m);
  };
  for (int xi = 0; xi < 7; ++xi)
    for (int yi = 0; yi < 7; ++yi) {
      cplx z(-3.0 + xi, -3.0 + yi);
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        double f[2];
        F(z, f);
        if (std::hypot(f[0], f[1]) < 1e-13) { ok = true; break; }
        const double h = 1e-7;
        double fx[2], fy[2];
        F(z + h, fx);
        F(z + cplx(0, h), fy);
        double J00 = (fx[0] - f[0]) / h, J01 = (fy[0] - f[0]) / h;
        double J10 = (fx[1] - f[1]) / h, J11 = (fy[1] - f[1]) / h;
        double det = J00 * J11 - J01 * J10;
        if (std::abs(det) < 1e-30) break;
        double dx = (-f[0] * J11 + f[1] * J01) / det;
        double dy = (-J00 * f[1] + J10 * f[0]) / det;
        z += cplx(dx, dy);
        if (std::abs(z) > 1e6) break;
      }
      if (ok) accept(v1 + z * v2);
    }
  // the z = infinity candidate m = v2
  std::array<cplx, 3> bv;
  if (coeffs(v2, bv) && std::abs(std::norm(bv[1]) - std::norm(bv[0])) < 1e-10
      && std::abs(std::norm(bv[2]) - std::norm(bv[0])) < 1e-10)
    accept(v2);
  return sols;
}

// Short stabilizing words of the complex line with polar m, breadth-first.
std::vector<std::string> stabilizing_words(const PartialDomain& D,
                                           const CVec3& m, int maxlen = 6,
                                           size_t cap = 40) {
  GenSet g = gen_alphabet(D.group());
  std::vector<std::string> out;
  std::set<std::array<long, 3>> seen;
  std::vector<std::pair<std::string, CMat3>> frontier = {
      {"", CMat3::Identity()}};
  for (int len = 1; len <= maxlen && out.size() < cap; ++len) {
    std::vector<std::pair<std::string, CMat3>> next;
    next.reserve(frontier.size() * 6);
    for (const auto& [w, M] : frontier) {
      for (size_t k = 0; k < g.mats.size(); ++k) {
        CMat3 M2 = M * g.mats[k];
        std::string w2 = w + g.names[k];
        next.push_back({w2, M2});
        CVec3 Mm = M2 * m;
        if (proj_cross(Mm, m) / Mm.norm() < 1e-8) {
          // skip scalars and eigen-angle duplicates
          Eigen::ComplexEigenSolver<CMat3> es(M2, false);
          std::array<double, 3> ang;
          for (int i = 0; i < 3; ++i) ang[i] = std::arg(es.eigenvalues()(i));
          std::sort(ang.begin(), ang.end());
          std::array<long, 3> key;
          for (int i = 0; i < 3; ++i) key[i] = std::lround(ang[i] * 1e6);
          bool scalar = proj_same_matrix(M2, CMat3::Identity(), 1e-8);
          if (!scalar && !seen.count(key)) {
            seen.insert(key);
            out.push_back(w2);
            if (out.size() >= cap) return out;
          }
        }
      }
    }
    frontier = std::move(next);
    if (frontier.size() > 60000) break;
  }
  return out;
}

PiRational normalize_angle(PiRational a) {
  // reduce to (0, pi]: theta vs 2 pi - theta
  if (a.num > a.den) {
    long num = 2 * a.den - a.num, den = a.den;
    long g = std::gcd(num, den);
    return {num / g, den / g};
  }
  return a;
}

}  // namespace

std::vector<CycleAngle> cycle_angles(const ProcedureOutcome& out) {
  if (out.behaviour != 'A') throw NotBehaviourA();
  const PartialDomain& D = *out.domain;
  const TriangleGroup& G = D.group();
  const CMat3 Hf = G.H().to_complex();
  std::vector<CVec3> polars;
  for (auto [a, b] : out.degenerate_pairs)
    for (const CVec3& m : face_polar(D, a, b)) {
      bool dup = false;
      for (const CVec3& s : polars)
        if (proj_cross(m, s) < 1e-7) { dup = true; break; }
      if (!dup) polars.push_back(m);
    }
  std::vector<CycleAngle> result;
  for (const CVec3& m : polars) {
    bool done = false;
    for (const std::string& w : stabilizing_words(D, m)) {
      Mat3x Wx = G.word_matrix(w);
      Mat3x P = Mat3x::identity();
      long kmax = 6 * G.p() + 6;
      for (long k = 1; k <= kmax && !done; ++k) {
        P = P * Wx;
        IsometryClass c = classify(P, G.H());
        if (c.kind == IsoKind::Identity) break;  // cyclic group exhausted
        if (c.kind != IsoKind::ComplexReflection || !c.polar || !c.angle)
          continue;
        CVec3 pol = c.polar->to_complex();
        if (proj_cross(pol, m) > 1e-6 * pol.norm() * m.norm()) continue;
        CycleAngle ca;
        ca.word = k == 1 ? w : "(" + w + ")^" + std::to_string(k);
        ca.angle = normalize_angle(*c.angle);
        // 2 pi / ((n/d) pi) = 2d/n integral iff n | 2d
        ca.integral = (2 * ca.angle.den) % ca.angle.num == 0;
        // measured interior wedge around the complex line
        cplx mm = inner_f(m, m, Hf);
        CVec3 mhat = m / std::sqrt(std::real(mm));
        CVec3 x = D.center();
        x = x - (inner_f(x, mhat, Hf)) * mhat;
        double nx = std::real(inner_f(x, x, Hf));
        double wedge = 0;
        if (nx < 0) {
          x /= std::sqrt(-nx);
          const int nth = 720;
          int insides = 0;
          for (int t = 0; t < nth; ++t) {
            CVec3 y = x + 0.05 * std::polar(1.0, t * 2 * kPi / nth) * mhat;
            try {
              if (D.in_partial_domain(y)) ++insides;
            } catch (const NotNegativeVector&) {}
          }
          wedge = 2 * kPi * insides / nth;
        }
        ca.total_interior = wedge;
        result.push_back(std::move(ca));
        done = true;
      }
      if (done) break;
    }
  }
  return result;
}

PartialDomain refine(const PartialDomain& D, const std::string& g, long k) {
  const TriangleGroup& G = D.group();
  Mat3x h = G.word_matrix(g).pow(k);
  IsometryClass c = classify(h, G.H());
  if (c.kind != IsoKind::ComplexReflection || !c.angle)
    throw IrrationalAngle();
  PiRational a = normalize_angle(*c.angle);
  if (a.num > 2) throw IrrationalAngle();  // not a 2 pi / n rotation
  PartialDomain R = D;
  std::string hname = "(" + g + ")^" + std::to_string(k);
  Mat3x hinv = h.inverse();
  std::vector<WordEntry> snapshot = D.words();
  for (const WordEntry& e : snapshot) {
    Mat3x conj = h * e.exact * hinv;
    R.add_word("(" + hname + ")(" + e.word + ")(" + hname + ")^-1", conj);
  }
  return R;
}

Vec3x parabolic_fixed_vector(const Mat3x& M, const Mat3x& H) {
  auto [e1, e2, e3] = char_poly(M);
  Cyc disc2 = e1 * e1 - e2 * Rat(3);
  Cyc lam = disc2.is_zero()
                ? e1 * Rat(1, 3)
                : (e1 * e2 - e3 * Rat(9)) * (disc2 * Rat(2)).inv();
  Mat3x A = M;
  for (int i = 0; i < 3; ++i) A(i, i) -= lam;
  // rank 2: the row crosses span the kernel
  for (int i = 0; i < 3; ++i) {
    int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
    Vec3x c;
    c[0] = A(r0, 1) * A(r1, 2) - A(r0, 2) * A(r1, 1);
    c[1] = A(r0, 2) * A(r1, 0) - A(r0, 0) * A(r1, 2);
    c[2] = A(r0, 0) * A(r1, 1) - A(r0, 1) * A(r1, 0);
    if (!c[0].is_zero() || !c[1].is_zero() || !c[2].is_zero()) return c;
  }
  // rank 1 (vertical translation): kernel is 2-dimensional; the fixed null
  // direction is the radical of H restricted to it
  int ri = -1;
  for (int i = 0; i < 3 && ri < 0; ++i)
    if (!A(i, 0).is_zero() || !A(i, 1).is_zero() || !A(i, 2).is_zero()) ri = i;
  if (ri < 0) throw std::invalid_argument("matrix is scalar, not parabolic");
  Cyc r0 = A(ri, 0), r1 = A(ri, 1), r2 = A(ri, 2);
  // two independent solutions of r . u = 0 (bilinear)
  std::vector<Vec3x> basis;
  Vec3x cands[3] = {Vec3x{{-r1, r0, Cyc()}}, Vec3x{{-r2, Cyc(), r0}},
                    Vec3x{{Cyc(), -r2, r1}}};
  for (const Vec3x& u : cands) {
    if (u[0].is_zero() && u[1].is_zero() && u[2].is_zero()) continue;
    if (basis.empty()) basis.push_back(u);
    else if (basis.size() == 1 && !exact_proj_same_point(basis[0], u))
      basis.push_back(u);
  }
  if (basis.size() < 2)
    throw std::invalid_argument("kernel basis construction failed");
  Cyc G11 = inner(basis[0], basis[0], H), G21 = inner(basis[1], basis[0], H);
  Cyc G12 = inner(basis[0], basis[1], H), G22 = inner(basis[1], basis[1], H);
  Cyc x = G21, y = -G11;
  if (x.is_zero() && y.is_zero()) { x = G22; y = -G12; }
  Vec3x v;
  for (int i = 0; i < 3; ++i) v[i] = x * basis[0][i] + y * basis[1][i];
  return v;
}

std::vector<CuspItemReport> cusp_report(const TriangleGroup& G,
                                        const std::vector<CuspCandidate>& cs) {
  std::vector<CuspItemReport> out;
  for (const CuspCandidate& cand : cs) {
    CuspItemReport rep;
    rep.candidate = cand;
    for (const CuspRelation& rel : cand.relations)
      rep.relations_hold.push_back(
          G.verify_relation(rel.lhs, rel.rhs).holds);
    std::optional<Vec3x> fixed;
    for (const std::string& pw : cand.parabolic_words) {
      Mat3x M = G.word_matrix(pw);
      IsometryClass c = classify(M, G.H());
      bool ok = c.kind == IsoKind::Parabolic;
      rep.parabolic_ok.push_back(ok);
      if (ok && !fixed) fixed = parabolic_fixed_vector(M, G.H());
    }
    if (fixed) {
      bool common = inner(*fixed, *fixed, G.H()).is_zero();
      for (const std::string& gw : cand.gens) {
        Vec3x gv = G.word_matrix(gw) * *fixed;
        common = common && exact_proj_same_point(gv, *fixed);
      }
      rep.common_null_fixed = common;
    } else if (!cand.parabolic_words.empty()) {
      rep.note = "no parabolic element found";
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::string face_svg(const FaceSample& f, const PartialDomain& D) {
  const int N = f.grid;
  const double cell = 512.0 / N;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" "
         "height=\"512\" viewBox=\"0 0 512 512\">\n";
  svg << "<!-- pair (" << D.words()[f.a].word << " , " << D.words()[f.b].word
      << "), torus-angle chart, grid " << N << " -->\n";
  svg << "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
  for (auto [r, c] : f.hits)
    svg << "<rect x=\"" << r * cell << "\" y=\"" << (N - 1 - c) * cell
        << "\" width=\"" << cell << "\" height=\"" << cell
        << "\" fill=\"black\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace chc
