#pragma once
// Construction of the triangle groups Gamma(2pi/p, tau): the catalogue of the
// 18 sporadic trace values, exact generator matrices J, R1, R2, R3 and the
// Hermitian form H_tau, center selection, word arithmetic in the generator
// alphabet, and exact (projective) relation verification.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "chc/cyclo.hpp"
#include "chc/hermlin.hpp"

namespace chc {

struct SporadicValue {
  std::string id;   // "s1".."s9" plus conjugates "s1c".."s9c"
  Cyc value;        // tau
  long r, s;        // |tau|^2 = 2 + 2 cos(r pi / s)
  std::optional<std::pair<long, long>> rps;  // r'/s' for s1..s6 families
};

const std::vector<SporadicValue>& sporadic_catalogue();
const SporadicValue& sporadic(const std::string& id);

struct NotHyperbolic : std::runtime_error {
  std::tuple<int, int, int> sig;
  explicit NotHyperbolic(std::tuple<int, int, int> s)
      : std::runtime_error("form signature is not (2,0,1)"), sig(s) {}
};
struct NoNegativeCandidate : std::runtime_error {
  NoNegativeCandidate()
      : std::runtime_error("no J-fixed candidate center is negative") {}
};
struct WordParseError : std::runtime_error {
  explicit WordParseError(const std::string& m)
      : std::runtime_error("word parse error: " + m) {}
};

struct RelationResult {
  bool holds;        // lhs == omega^k rhs exactly, omega = zeta_3
  int omega_power;   // the k that worked (0,1,2) when holds
  double residual;   // min over k of max entrywise float residual
};

class TriangleGroup {
 public:
  // Throws NotHyperbolic unless H_tau has signature (2,0,1).
  TriangleGroup(long p, const Cyc& tau, std::string tau_id = "");

  long p() const { return p_; }
  const Cyc& tau() const { return tau_; }
  const std::string& tau_id() const { return tau_id_; }
  const Mat3x& J() const { return J_; }
  const Mat3x& R1() const { return R1_; }
  const Mat3x& R2() const { return R2_; }
  const Mat3x& R3() const { return R3_; }
  const Mat3x& H() const { return H_; }
  const Vec3x& center() const { return p0_; }

  // Word grammar: generators 1,2,3,J; suffix ' for inverse; parentheses;
  // ^k powers (k possibly negative).  Examples: "(12)^3", "232'", "(1J)^5".
  Mat3x word_matrix(const std::string& word) const;

  // lhs == omega^k rhs projectively (SU scalar a cube root of unity),
  // exact cyclotomic test.  Empty word = identity.
  RelationResult verify_relation(const std::string& lhs,
                                 const std::string& rhs) const;

 private:
  Mat3x parse_word(const std::string& w, size_t& pos, int depth) const;
  long p_;
  Cyc tau_;
  std::string tau_id_;
  Mat3x J_, R1_, R2_, R3_, H_;
  Vec3x p0_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Mat3x> cache_;
};

// Builds the Hermitian form matrix H_tau for (p, tau) without the
// hyperbolicity check (used by hyperbolicity sweeps).
Mat3x herm_form_matrix(long p, const Cyc& tau);

// Eigenvalues of the circulant H_tau: a + 2 Re(b omega^k), exact.
std::array<Cyc, 3> herm_form_eigenvalues(long p, const Cyc& tau);

// Exact signature of H_tau.
std::tuple<int, int, int> herm_form_signature(long p, const Cyc& tau);

// The three J-fixed candidate centers (1,1,1), (1,w,conj w), (1,conj w,w).
std::array<Vec3x, 3> center_candidates();

}  // namespace chc
