#include "chc/cyclo.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <unordered_map>

#include <mpfr.h>

namespace chc {

long phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      r -= r / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

namespace {

long mod_inverse(long a, long m) {
  long t = 0, nt = 1, r = m, nr = a % m;
  if (nr < 0) nr += m;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (t < 0) t += m;
  return t;
}

// Per-conductor basis data: prime-power factorization and CRT digit helpers.
struct Basis {
  long N = 1;
  std::vector<long> q;     // prime powers q_i
  std::vector<long> p;     // primes p_i
  std::vector<long> phiq;  // phi(q_i)
  std::vector<long> pk1;   // q_i / p_i
  std::vector<long> Nq;    // N / q_i
  std::vector<long> u;     // (N/q_i)^{-1} mod q_i
};

const Basis& basis_for(long N) {
  static std::mutex mu;
  static std::unordered_map<long, Basis> cache;
  std::lock_guard<std::mutex> lk(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  Basis b;
  b.N = N;
  long n = N;
  for (long pr = 2; pr * pr <= n; ++pr) {
    if (n % pr == 0) {
      long qq = 1;
      while (n % pr == 0) { n /= pr; qq *= pr; }
      b.q.push_back(qq);
      b.p.push_back(pr);
    }
  }
  if (n > 1) { b.q.push_back(n); b.p.push_back(n); }
  for (size_t i = 0; i < b.q.size(); ++i) {
    b.pk1.push_back(b.q[i] / b.p[i]);
    b.phiq.push_back(b.q[i] - b.pk1[i]);
    b.Nq.push_back(N / b.q[i]);
    b.u.push_back(mod_inverse(b.Nq[i] % b.q[i], b.q[i]));
  }
  return cache.emplace(N, std::move(b)).first->second;
}

}  // namespace

void Cyc::prune() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0) it = c_.erase(it); else ++it;
  }
}

void Cyc::add_term(long e, const Rat& coeff) {
  if (coeff == 0) return;
  const Basis& B = basis_for(n_);
  e %= n_;
  if (e < 0) e += n_;
  for (size_t i = 0; i < B.q.size(); ++i) {
    long a = (e % B.q[i]) * (B.u[i] % B.q[i]) % B.q[i];
    if (a >= B.phiq[i]) {
      // a = (p-1)*pk1 + b; zeta^{a} = -sum_{c<p-1} zeta^{c*pk1+b} in coord i.
      long b = a - B.phiq[i];
      for (long cc = 0; cc <= B.p[i] - 2; ++cc) {
        long delta = (cc * B.pk1[i] + b) - a;
        long e2 = e + delta % n_ * (B.Nq[i] % n_) % n_;
        add_term(e2, -coeff);
      }
      return;
    }
  }
  Rat& slot = c_[e];
  slot += coeff;
  if (slot == 0) c_.erase(e);
}

Cyc Cyc::root_of_unity(long N, long k) {
  if (N < 1) throw std::invalid_argument("conductor must be positive");
  k %= N;
  if (k < 0) k += N;
  long g = std::gcd(k, N);
  if (g > 0 && k != 0) { N /= g; k /= g; }
  if (k == 0) N = 1, k = 0;
  Cyc r;
  r.n_ = N;
  r.add_term(k, Rat(1));
  return r;
}

Rat Cyc::rational_value() const {
  if (c_.empty()) return Rat(0);
  if (!is_rational()) throw std::runtime_error("not a rational element");
  return c_.begin()->second;
}

Cyc Cyc::lifted(long M) const {
  if (M == n_) return *this;
  if (M % n_ != 0) throw std::invalid_argument("lift target not a multiple");
  Cyc r;
  r.n_ = M;
  long f = M / n_;
  for (const auto& [e, co] : c_) r.add_term(e * f, co);
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& [e, co] : r.c_) co = -co;
  return r;
}

Cyc Cyc::operator+(const Cyc& o) const {
  long M = lcm_long(n_, o.n_);
  Cyc a = lifted(M), b = o.lifted(M);
  for (const auto& [e, co] : b.c_) {
    Rat& slot = a.c_[e];
    slot += co;
    if (slot == 0) a.c_.erase(e);
  }
  return a;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
  long M = lcm_long(n_, o.n_);
  Cyc a = lifted(M), b = o.lifted(M);
  Cyc r;
  r.n_ = M;
  for (const auto& [e1, c1] : a.c_)
    for (const auto& [e2, c2] : b.c_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

Cyc Cyc::operator*(const Rat& s) const {
  Rat sc = s;
  sc.canonicalize();
  if (sc == 0) return Cyc();
  Cyc r = *this;
  for (auto& [e, co] : r.c_) co *= sc;
  return r;
}

bool Cyc::operator==(const Cyc& o) const {
  long M = lcm_long(n_, o.n_);
  return lifted(M).c_ == o.lifted(M).c_;
}

Cyc Cyc::conj() const {
  Cyc r;
  r.n_ = n_;
  for (const auto& [e, co] : c_) r.add_term(n_ - e, co);
  return r;
}

Cyc Cyc::galois(long t) const {
  long tt = t % n_;
  if (tt < 0) tt += n_;
  if (std::gcd(tt, n_) != 1) throw NotCoprime(t, n_);
  Cyc r;
  r.n_ = n_;
  for (const auto& [e, co] : c_) r.add_term(e * tt, co);
  return r;
}

Cyc Cyc::minimized() const {
  Cyc r = *this;
  bool changed = true;
  while (changed && r.n_ > 1) {
    changed = false;
    const Basis& B = basis_for(r.n_);
    for (long pr : B.p) {
      bool all = true;
      for (const auto& [e, co] : r.c_)
        if (e % pr != 0) { all = false; break; }
      if (!all) continue;
      Cyc s;
      s.n_ = r.n_ / pr;
      for (const auto& [e, co] : r.c_) s.add_term(e / pr, co);
      r = std::move(s);
      changed = true;
      break;
    }
  }
  return r;
}

Cyc Cyc::inv() const {
  if (is_zero()) throw DivisionByZero();
  Cyc x = minimized();
  if (x.is_rational()) {
    Rat v = x.rational_value();
    return Cyc(Rat(1) / v);
  }
  long M = x.n_;
  Cyc prod(1L);
  for (long t = 2; t < M; ++t) {
    if (std::gcd(t, M) != 1) continue;
    prod = prod * x.galois(t);
  }
  Cyc norm = prod * x;
  if (!norm.is_rational())
    throw std::runtime_error("norm product not rational (internal error)");
  Rat nv = norm.rational_value();
  if (nv == 0) throw DivisionByZero();
  return prod * (Rat(1) / nv);
}

// ---------------------------------------------------------------------------
// Floating evaluation.

namespace {

// Evaluates sum c_e * trig(2 pi e / N) at the given precision into out.
// trig: 0 = cos, 1 = sin.
void eval_mpfr(const std::map<long, Rat>& terms, long N, int trig,
               mpfr_t out) {
  mpfr_prec_t prec = mpfr_get_prec(out);
  mpfr_t pi2, ang, tval, cf, acc;
  mpfr_inits2(prec, pi2, ang, tval, cf, acc, (mpfr_ptr) nullptr);
  mpfr_const_pi(pi2, MPFR_RNDN);
  mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDN);
  mpfr_set_zero(acc, 1);
  for (const auto& [e, co] : terms) {
    mpfr_mul_si(ang, pi2, e, MPFR_RNDN);
    mpfr_div_si(ang, ang, N, MPFR_RNDN);
    if (trig == 0) mpfr_cos(tval, ang, MPFR_RNDN);
    else mpfr_sin(tval, ang, MPFR_RNDN);
    mpfr_set_q(cf, co.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(tval, tval, cf, MPFR_RNDN);
    mpfr_add(acc, acc, tval, MPFR_RNDN);
  }
  mpfr_set(out, acc, MPFR_RNDN);
  mpfr_clears(pi2, ang, tval, cf, acc, (mpfr_ptr) nullptr);
}

double max_abs_coeff(const std::map<long, Rat>& terms) {
  double m = 1.0;
  for (const auto& [e, co] : terms) {
    double v = std::abs(co.get_d());
    if (v > m) m = v;
  }
  return m;
}

}  // namespace

int Cyc::sign() const {
  if (is_zero()) return 0;
  if (!is_real()) throw NotReal();
  double mc = max_abs_coeff(c_);
  double k = static_cast<double>(c_.size());
  for (long prec = 128; prec <= (1L << 20); prec *= 2) {
    mpfr_t v;
    mpfr_init2(v, prec);
    eval_mpfr(c_, n_, 0, v);
    double bound = (8.0 * k + 16.0) * mc * std::ldexp(1.0, int(-prec + 8));
    double vd = mpfr_get_d(v, MPFR_RNDN);
    int s = mpfr_sgn(v);
    mpfr_clear(v);
    if (std::abs(vd) > bound) return s;
  }
  throw std::runtime_error("sign(): unresolved at maximum precision");
}

std::complex<double> Cyc::to_complex() const {
  mpfr_t re, im;
  mpfr_inits2(128, re, im, (mpfr_ptr) nullptr);
  eval_mpfr(c_, n_, 0, re);
  eval_mpfr(c_, n_, 1, im);
  std::complex<double> z(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
  mpfr_clears(re, im, (mpfr_ptr) nullptr);
  return z;
}

std::pair<std::string, std::string> Cyc::embed_decimal(long prec_bits,
                                                       int sig_digits) const {
  if (prec_bits < 53) prec_bits = 53;
  mpfr_t re, im;
  mpfr_inits2(prec_bits + 32, re, im, (mpfr_ptr) nullptr);
  eval_mpfr(c_, n_, 0, re);
  eval_mpfr(c_, n_, 1, im);
  char buf[256];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", sig_digits, re);
  std::string rs = buf;
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", sig_digits, im);
  std::string is = buf;
  mpfr_clears(re, im, (mpfr_ptr) nullptr);
  return {rs, is};
}

// ---------------------------------------------------------------------------
// Power-basis coordinates via reduction mod the N-th cyclotomic polynomial.

namespace {

// Integer coefficients of Phi_n, low degree first.
const std::vector<Rat>& cyclotomic_poly(long n) {
  static std::mutex mu;
  static std::unordered_map<long, std::vector<Rat>> cache;
  std::lock_guard<std::mutex> lk(mu);
  // Iterative fill over divisors, computing Phi_d for all d | n.
  std::function<const std::vector<Rat>&(long)> get = [&](long m)
      -> const std::vector<Rat>& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // numerator x^m - 1
    std::vector<Rat> num(m + 1, Rat(0));
    num[0] = Rat(-1);
    num[m] = Rat(1);
    for (long d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const std::vector<Rat>& div = get(d);
      // exact polynomial division num /= div
      std::vector<Rat> quot(num.size() - div.size() + 1, Rat(0));
      std::vector<Rat> rem = num;
      for (long i = long(quot.size()) - 1; i >= 0; --i) {
        Rat f = rem[i + div.size() - 1] / div.back();
        quot[i] = f;
        if (f != 0)
          for (size_t j = 0; j < div.size(); ++j) rem[i + j] -= f * div[j];
      }
      num = std::move(quot);
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

}  // namespace

std::vector<Rat> Cyc::power_basis_coeffs() const {
  long d = phi(n_);
  std::vector<Rat> poly(n_, Rat(0));
  for (const auto& [e, co] : c_) poly[e] = co;
  const std::vector<Rat>& ph = cyclotomic_poly(n_);
  // reduce poly mod ph (monic of degree d)
  for (long i = n_ - 1; i >= d; --i) {
    if (poly[i] == 0) continue;
    Rat f = poly[i];
    for (long j = 0; j <= d; ++j) poly[i - d + j] -= f * ph[j];
  }
  poly.resize(d);
  return poly;
}

Cyc two_cos(long N, long k) {
  return Cyc::root_of_unity(N, k) + Cyc::root_of_unity(N, -k);
}

}  // namespace chc
