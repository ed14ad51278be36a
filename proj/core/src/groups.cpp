#include "chc/groups.hpp"

#include <cctype>

namespace chc {

namespace {

// tau as exponent lists over zeta_N: {conductor, exponents with coefficient 1}.
struct TauSpec {
  const char* id;
  long N;
  long e0, e1, e2;
  long r, s;
  long rp, sp;  // 0,0 when absent
};

constexpr TauSpec kTauSpecs[] = {
    {"s1", 24, 4, 1, -5, 1, 3, 1, 2},
    {"s2", 60, 10, 1, -11, 1, 5, 1, 3},
    {"s3", 60, 10, 7, -17, 3, 5, 1, 3},
    {"s4", 7, 1, 2, 4, 1, 2, 2, 3},
    {"s5", 90, 10, 13, -23, 1, 2, 2, 5},
    {"s6", 90, 10, 31, -41, 1, 2, 4, 5},
    {"s7", 126, 14, 11, -25, 1, 7, 0, 0},
    {"s8", 126, 14, 29, -43, 5, 7, 0, 0},
    {"s9", 126, 14, 47, -61, 3, 7, 0, 0},
};

}  // namespace

const std::vector<SporadicValue>& sporadic_catalogue() {
  static std::vector<SporadicValue> cat = [] {
    std::vector<SporadicValue> v;
    for (const TauSpec& t : kTauSpecs) {
      Cyc val = Cyc::root_of_unity(t.N, t.e0) + Cyc::root_of_unity(t.N, t.e1) +
                Cyc::root_of_unity(t.N, t.e2);
      SporadicValue sv;
      sv.id = t.id;
      sv.value = val;
      sv.r = t.r;
      sv.s = t.s;
      if (t.sp) sv.rps = std::make_pair(t.rp, t.sp);
      v.push_back(sv);
      sv.id = std::string(t.id) + "c";
      sv.value = val.conj();
      v.push_back(sv);
    }
    return v;
  }();
  return cat;
}

const SporadicValue& sporadic(const std::string& id) {
  for (const SporadicValue& s : sporadic_catalogue())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown sporadic id: " + id);
}

Mat3x herm_form_matrix(long p, const Cyc& tau) {
  Cyc i = Cyc::root_of_unity(4, 1);
  // a = 2 sin(psi/2) = -i zeta_2p + i zeta_2p^{-1} with psi = 2 pi / p
  Cyc a = i * (Cyc::root_of_unity(2 * p, -1) - Cyc::root_of_unity(2 * p, 1));
  // b = -i e^{-i psi/6} tau = -i zeta_6p^{-1} tau
  Cyc b = -(i * Cyc::root_of_unity(6 * p, -1) * tau);
  Cyc c = b.conj();
  Mat3x H = Mat3x::zero();
  const Cyc* rows[3][3] = {{&a, &b, &c}, {&c, &a, &b}, {&b, &c, &a}};
  for (int r = 0; r < 3; ++r)
    for (int cc = 0; cc < 3; ++cc) H(r, cc) = *rows[r][cc];
  return H;
}

std::array<Cyc, 3> herm_form_eigenvalues(long p, const Cyc& tau) {
  Cyc i = Cyc::root_of_unity(4, 1);
  Cyc a = i * (Cyc::root_of_unity(2 * p, -1) - Cyc::root_of_unity(2 * p, 1));
  Cyc b = -(i * Cyc::root_of_unity(6 * p, -1) * tau);
  std::array<Cyc, 3> out;
  for (int k = 0; k < 3; ++k) {
    Cyc bw = b * Cyc::root_of_unity(3, k);
    out[k] = a + bw + bw.conj();
  }
  return out;
}

std::tuple<int, int, int> herm_form_signature(long p, const Cyc& tau) {
  auto eigs = herm_form_eigenvalues(p, tau);
  int pos = 0, zero = 0, neg = 0;
  for (const Cyc& e : eigs) {
    int s = e.sign();
    if (s > 0) ++pos;
    else if (s < 0) ++neg;
    else ++zero;
  }
  return {pos, zero, neg};
}

std::array<Vec3x, 3> center_candidates() {
  Cyc one(1L), w = Cyc::root_of_unity(3, 1), wb = Cyc::root_of_unity(3, 2);
  return {Vec3x{{one, one, one}}, Vec3x{{one, w, wb}}, Vec3x{{one, wb, w}}};
}

TriangleGroup::TriangleGroup(long p, const Cyc& tau, std::string tau_id)
    : p_(p), tau_(tau), tau_id_(std::move(tau_id)) {
  auto sig = herm_form_signature(p, tau);
  if (sig != std::make_tuple(2, 0, 1)) throw NotHyperbolic(sig);
  H_ = herm_form_matrix(p, tau);
  // J: cyclic permutation.
  J_ = Mat3x::zero();
  J_(0, 2) = Cyc(1L);
  J_(1, 0) = Cyc(1L);
  J_(2, 1) = Cyc(1L);
  // R1 upper triangular; psi = 2 pi / p.
  Cyc e2psi3 = Cyc::root_of_unity(3 * p, 2);    // e^{2 i psi / 3}
  Cyc empsi3 = Cyc::root_of_unity(3 * p, -1);   // e^{-i psi / 3}
  Cyc epsi3 = Cyc::root_of_unity(3 * p, 1);     // e^{i psi / 3}
  R1_ = Mat3x::zero();
  R1_(0, 0) = e2psi3;
  R1_(0, 1) = tau;
  R1_(0, 2) = -(epsi3 * tau.conj());
  R1_(1, 1) = empsi3;
  R1_(2, 2) = empsi3;
  Mat3x Jinv = J_.inverse();
  R2_ = J_ * R1_ * Jinv;
  R3_ = J_ * R2_ * Jinv;
  // Center: the unique H-negative J-fixed candidate.
  bool found = false;
  for (const Vec3x& cand : center_candidates()) {
    if (norm_sign(cand, H_) < 0) {
      p0_ = cand;
      found = true;
      break;
    }
  }
  if (!found) throw NoNegativeCandidate();
}

Mat3x TriangleGroup::parse_word(const std::string& w, size_t& pos,
                                int depth) const {
  Mat3x acc = Mat3x::identity();
  while (pos < w.size()) {
    char ch = w[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) { ++pos; continue; }
    if (ch == ')') {
      if (depth == 0) throw WordParseError("unmatched ')' in " + w);
      return acc;
    }
    Mat3x atom;
    if (ch == '(') {
      ++pos;
      atom = parse_word(w, pos, depth + 1);
      if (pos >= w.size() || w[pos] != ')')
        throw WordParseError("missing ')' in " + w);
      ++pos;
    } else if (ch == '1') { atom = R1_; ++pos; }
    else if (ch == '2') { atom = R2_; ++pos; }
    else if (ch == '3') { atom = R3_; ++pos; }
    else if (ch == 'J' || ch == 'j') { atom = J_; ++pos; }
    else throw WordParseError(std::string("unexpected '") + ch + "' in " + w);
    bool inverted = false;
    long power = 1;
    while (pos < w.size()) {
      if (w[pos] == '\'') { inverted = !inverted; ++pos; }
      else if (w[pos] == '^') {
        ++pos;
        bool negp = false;
        if (pos < w.size() && (w[pos] == '-' || w[pos] == '+')) {
          negp = w[pos] == '-';
          ++pos;
        }
        if (pos >= w.size() || !std::isdigit(static_cast<unsigned char>(w[pos])))
          throw WordParseError("missing exponent in " + w);
        long k = 0;
        while (pos < w.size() &&
               std::isdigit(static_cast<unsigned char>(w[pos])))
          k = k * 10 + (w[pos++] - '0');
        power *= negp ? -k : k;
      } else break;
    }
    if (inverted) power = -power;
    acc = acc * atom.pow(power);
  }
  if (depth != 0) throw WordParseError("missing ')' in " + w);
  return acc;
}

Mat3x TriangleGroup::word_matrix(const std::string& word) const {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = cache_.find(word);
    if (it != cache_.end()) return it->second;
  }
  size_t pos = 0;
  Mat3x m = parse_word(word, pos, 0);
  std::lock_guard<std::mutex> lk(mu_);
  cache_.emplace(word, m);
  return m;
}

RelationResult TriangleGroup::verify_relation(const std::string& lhs,
                                              const std::string& rhs) const {
  Mat3x L = word_matrix(lhs);
  Mat3x R = word_matrix(rhs);
  double best_res = 1e300;
  for (int k = 0; k < 3; ++k) {
    Mat3x Rw = R * Cyc::root_of_unity(3, k);
    if (L == Rw) return {true, k, 0.0};
    double res = ((L.to_complex() - Rw.to_complex()).cwiseAbs()).maxCoeff();
    best_res = std::min(best_res, res);
  }
  return {false, 0, best_res};
}

}  // namespace chc
