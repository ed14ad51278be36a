#include <doctest.h>

#include <chc/cyclo.hpp>

#include <complex>
#include <random>

using namespace chc;

namespace {
std::complex<double> unit(double arg) { return std::polar(1.0, arg); }
const double PI = 3.14159265358979323846;

Cyc random_cyc(std::mt19937& rng, long N, int terms) {
  Cyc a;
  std::uniform_int_distribution<long> de(0, N - 1);
  std::uniform_int_distribution<long> dc(-5, 5);
  for (int i = 0; i < terms; ++i)
    a += Cyc::root_of_unity(N, de(rng)) * Rat(dc(rng), 1 + (de(rng) % 3));
  return a;
}
}  // namespace

TEST_CASE("roots of unity embed correctly") {
  CHECK(Cyc::root_of_unity(1, 0) == Cyc(1L));
  CHECK(Cyc::root_of_unity(4, 2) == Cyc(-1L));
  auto z = Cyc::root_of_unity(6, 1).to_complex();
  CHECK(std::abs(z - std::complex<double>(0.5, std::sqrt(3.0) / 2)) < 1e-14);
  for (long N : {5L, 7L, 8L, 9L, 12L, 36L, 126L}) {
    for (long k = 0; k < N; ++k) {
      auto w = Cyc::root_of_unity(N, k).to_complex();
      CHECK(std::abs(w - unit(2 * PI * k / N)) < 1e-13);
    }
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (long N : {12L, 24L, 63L}) {
    for (int it = 0; it < 8; ++it) {
      Cyc a = random_cyc(rng, N, 3), b = random_cyc(rng, N, 3),
          c = random_cyc(rng, N, 2);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) {
        CHECK(a * a.inv() == Cyc(1L));
        CHECK(a / a == Cyc(1L));
      }
    }
  }
}

TEST_CASE("(zeta8 + zeta8^-1)^2 = 2") {
  Cyc t = Cyc::root_of_unity(8, 1) + Cyc::root_of_unity(8, -1);
  CHECK(t * t == Cyc(2L));
}

TEST_CASE("sigma4 = zeta7 + zeta7^2 + zeta7^4 and Galois action") {
  Cyc s = Cyc::root_of_unity(7, 1) + Cyc::root_of_unity(7, 2) +
          Cyc::root_of_unity(7, 4);
  auto z = s.to_complex();
  CHECK(std::abs(z - std::complex<double>(-0.5, std::sqrt(7.0) / 2)) < 1e-14);
  CHECK(s.galois(2) == s);
  CHECK(s.galois(3) == s.conj());
  CHECK(s.galois(1) == s);
  CHECK_THROWS_AS(s.galois(14), NotCoprime);
  // minimal polynomial: s^2 + s + 2 = 0
  CHECK(s * s + s + Cyc(2L) == Cyc(0L));
}

TEST_CASE("conjugation is an involution commuting with embedding") {
  std::mt19937 rng(11);
  for (int it = 0; it < 10; ++it) {
    Cyc a = random_cyc(rng, 40, 4);
    CHECK(a.conj().conj() == a);
    auto z = a.to_complex(), w = a.conj().to_complex();
    CHECK(std::abs(std::conj(z) - w) < 1e-12);
  }
}

TEST_CASE("galois_apply is a ring homomorphism") {
  std::mt19937 rng(13);
  long N = 36;
  for (long t : {5L, 7L, 11L, 13L, 25L, 35L}) {
    Cyc a = random_cyc(rng, N, 3), b = random_cyc(rng, N, 3);
    CHECK((a + b).galois(t) == a.galois(t) + b.galois(t));
    CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
  }
}

TEST_CASE("conductor unification and minimize") {
  Cyc a = Cyc::root_of_unity(6, 1);   // conductor 3 after reduction? no: 6
  Cyc b = Cyc::root_of_unity(4, 1);
  Cyc s = a * b;
  CHECK(s.conductor() % 12 == 0);
  // (zeta6 * zeta4) has order 12: minimized conductor must be 12
  CHECK(s.minimized().conductor() == 12);
  // an element of Q inside a big field minimizes to conductor 1
  Cyc two = (Cyc::root_of_unity(5, 1) + Cyc::root_of_unity(5, 2) +
             Cyc::root_of_unity(5, 3) + Cyc::root_of_unity(5, 4) + Cyc(3L));
  CHECK(two.minimized().conductor() == 1);
  CHECK(two == Cyc(2L));
}

TEST_CASE("exact sign of real elements") {
  Cyc c = two_cos(360, 1);  // 2cos(pi/180) > 0
  CHECK(c.sign() == 1);
  CHECK((-c).sign() == -1);
  CHECK(Cyc(0L).sign() == 0);
  // 2cos(2pi k/5) signs
  CHECK(two_cos(5, 1).sign() == 1);
  CHECK(two_cos(5, 2).sign() == -1);
  Cyc i4 = Cyc::root_of_unity(4, 1);
  CHECK_THROWS_AS(i4.sign(), NotReal);
  // tight comparison: 2cos(pi/7) vs the rational 1802/1000
  Cyc d = two_cos(14, 1) - Cyc(Rat(1802, 1000));
  CHECK(d.sign() == -1);
}

TEST_CASE("power basis coordinates cross-check") {
  std::mt19937 rng(5);
  for (long N : {7L, 12L, 45L}) {
    for (int it = 0; it < 4; ++it) {
      Cyc a = random_cyc(rng, N, 4);
      long M = a.conductor();
      long d = phi(M);
      auto pb = a.power_basis_coeffs();
      CHECK(long(pb.size()) == d);
      // rebuild from power basis and compare
      Cyc re;
      for (long j = 0; j < d; ++j)
        re += Cyc::root_of_unity(M, j) * pb[j];
      CHECK(re == a);
    }
  }
}

TEST_CASE("embedding precision: |sigma1|^2 = 3 exactly") {
  // sigma1 = zeta6 + zeta12^-1 * (zeta8 + zeta8^-1)
  Cyc s1 = Cyc::root_of_unity(6, 1) +
           Cyc::root_of_unity(12, -1) *
               (Cyc::root_of_unity(8, 1) + Cyc::root_of_unity(8, -1));
  auto z = s1.to_complex();
  CHECK(std::abs(z - std::complex<double>(1.72474, 0.158919)) < 1e-4);
  CHECK(s1.abs2() == Cyc(3L));
  auto [re, im] = s1.embed_decimal(128, 15);
  CHECK(re.substr(0, 7) == "1.72474");
}

TEST_CASE("embed_decimal determinism") {
  Cyc s = two_cos(28, 3);
  auto a = s.embed_decimal(256, 15);
  auto b = s.embed_decimal(256, 15);
  CHECK(a == b);
}
