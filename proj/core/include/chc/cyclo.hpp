#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_N): ring/field operations,
// complex conjugation, Galois action, conductor management, and certified
// floating-point embedding.
//
// Representation: an element is a sparse rational combination of the
// "tensor" basis of Q(zeta_N).  Write N = q_1 ... q_m as a product of prime
// powers.  Every exponent e mod N has CRT digits a_i = e * u_i mod q_i
// (u_i = (N/q_i)^{-1} mod q_i), and the monomial zeta_N^e is a basis element
// iff a_i < phi(q_i) for every i.  These phi(N) monomials form a Q-basis, so
// an element is zero iff its (fully reduced) term map is empty, and equality
// is term-map equality after lifting both operands to the lcm conductor.

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chc {

using Rat = mpq_class;

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("cyclotomic division by zero") {}
};
struct NotCoprime : std::runtime_error {
  NotCoprime(long t, long n)
      : std::runtime_error("galois exponent " + std::to_string(t) +
                           " not coprime to conductor " + std::to_string(n)) {}
};
struct NotReal : std::runtime_error {
  NotReal() : std::runtime_error("cyclotomic number is not real") {}
};

class Cyc {
 public:
  Cyc() : n_(1) {}
  explicit Cyc(long v) : n_(1) { if (v != 0) c_[0] = Rat(v); }
  explicit Cyc(const Rat& v) : n_(1) {
    if (v != 0) { c_[0] = v; c_[0].canonicalize(); }
  }

  // zeta_N^k (k arbitrary, reduced mod N).
  static Cyc root_of_unity(long N, long k);

  long conductor() const { return n_; }
  const std::map<long, Rat>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
  }
  Rat rational_value() const;  // pre: is_rational()

  Cyc conj() const;
  Cyc galois(long t) const;  // zeta_N -> zeta_N^t; throws NotCoprime
  bool is_real() const { return *this == conj(); }

  // Smallest-conductor representation of the same value.
  Cyc minimized() const;

  // Field inverse (norm-product over the Galois group after minimizing).
  Cyc inv() const;

  Cyc operator-() const;
  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator/(const Cyc& o) const { return *this * o.inv(); }
  Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
  Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc operator*(const Rat& r) const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

  Cyc real_part() const { return (*this + conj()) * Rat(1, 2); }
  // |x|^2 = x * conj(x), a real (in fact totally real) element.
  Cyc abs2() const { return *this * conj(); }

  // Exact sign of a real element: MPFR interval evaluation with escalating
  // precision (terminates because a nonzero element has nonzero value).
  // Returns -1, 0, +1.  Throws NotReal.
  int sign() const;

  // Floating embeddings of sum c_e exp(2 pi i e / N).
  std::complex<double> to_complex() const;
  // Decimal strings of re/im at >= prec_bits working precision.
  std::pair<std::string, std::string> embed_decimal(long prec_bits,
                                                    int sig_digits) const;

  // Coordinates in the power basis zeta^0 .. zeta^{phi(N)-1} (reduction mod
  // the N-th cyclotomic polynomial); used for serialization and as an
  // independent representation cross-check.
  std::vector<Rat> power_basis_coeffs() const;

  // Lift to a conductor M (n_ | M required).
  Cyc lifted(long M) const;

 private:
  friend class CycBasis;
  long n_;                  // conductor
  std::map<long, Rat> c_;   // canonical tensor-basis exponent -> coefficient
  void add_term(long e, const Rat& coeff);  // normalizes into the basis
  void prune();
};

inline Cyc operator*(const Rat& r, const Cyc& c) { return c * r; }

long phi(long n);
long lcm_long(long a, long b);

// Convenience: 2 cos(2 pi k / N) = zeta_N^k + zeta_N^-k.
Cyc two_cos(long N, long k);

}  // namespace chc
