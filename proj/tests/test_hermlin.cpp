#include <doctest.h>

#include <chc/groups.hpp>
#include <chc/hermlin.hpp>

#include <random>

using namespace chc;

TEST_CASE("signature: identity and diagonal forms") {
  HermForm id{Mat3x::identity()};
  CHECK(id.is_hermitian());
  CHECK(id.signature() == std::make_tuple(3, 0, 0));
  Mat3x d = Mat3x::identity();
  d(2, 2) = Cyc(-1L);
  CHECK(HermForm{d}.signature() == std::make_tuple(2, 0, 1));
  d(1, 1) = Cyc(0L);
  CHECK(HermForm{d}.signature() == std::make_tuple(1, 1, 1));
}

TEST_CASE("signature of H_tau matches hyperbolic ranges") {
  const Cyc s4c = sporadic("s4c").value;
  CHECK(herm_form_signature(5, s4c) == std::make_tuple(2, 0, 1));
  const Cyc s1c = sporadic("s1c").value;
  CHECK(herm_form_signature(5, s1c) == std::make_tuple(2, 0, 1));
  CHECK(herm_form_signature(8, s1c) != std::make_tuple(2, 0, 1));
  // congruence invariance: P* H P has the same signature for invertible P
  Mat3x H = herm_form_matrix(5, s4c);
  Mat3x P = Mat3x::identity();
  P(0, 1) = Cyc::root_of_unity(12, 5);
  P(2, 0) = Cyc(Rat(3, 2));
  Mat3x Hc = P.conj_transpose() * H * P;
  CHECK(HermForm{H}.signature() == HermForm{Hc}.signature());
}

TEST_CASE("generators preserve the form; inner is conjugate-symmetric") {
  TriangleGroup G(3, sporadic("s4c").value);
  CHECK(preserves_form(G.J(), G.H()));
  CHECK(preserves_form(G.R1(), G.H()));
  CHECK(preserves_form(G.R2(), G.H()));
  Mat3x bad = Mat3x::identity();
  bad(0, 1) = Cyc(1L);
  CHECK(!preserves_form(bad, G.H()));
  // diagonal entry of H is 2 sin(psi/2)
  Vec3x e1{{Cyc(1L), Cyc(0L), Cyc(0L)}};
  Cyc d = inner(e1, e1, G.H());
  CHECK(d.is_real());
  CHECK(std::abs(d.to_complex().real() - 2 * std::sin(3.14159265358979 / 3)) <
        1e-12);
  // conjugate symmetry on exact vectors
  Vec3x v{{Cyc(1L), Cyc::root_of_unity(7, 2), Cyc(Rat(1, 3))}};
  Vec3x w{{Cyc::root_of_unity(5, 1), Cyc(2L), Cyc(0L)}};
  CHECK(inner(v, w, G.H()) == inner(w, v, G.H()).conj());
  // center is negative
  CHECK(norm_sign(G.center(), G.H()) < 0);
}

TEST_CASE("dist: basic properties on the float backend") {
  TriangleGroup G(3, sporadic("s4c").value);
  CMat3 H = G.H().to_complex();
  CVec3 x = G.center().to_complex();
  CHECK(dist(x, x, H) == doctest::Approx(0.0));
  CHECK(dist(x, cplx(0.3, 1.7) * x, H) == doctest::Approx(0.0));
  // isometry invariance on words
  CMat3 g = G.word_matrix("121'3").to_complex();
  CMat3 h = G.word_matrix("2'31").to_complex();
  CVec3 y = g * x;
  CHECK(dist(x, y, H) ==
        doctest::Approx(dist(CVec3(h * x), CVec3(h * y), H)).epsilon(1e-9));
  // triangle inequality
  CVec3 z = G.word_matrix("32").to_complex() * x;
  CHECK(dist(x, z, H) <= dist(x, y, H) + dist(y, z, H) + 1e-9);
  CHECK_THROWS_AS(dist(CVec3(1, 0, 0), x, CMat3(CMat3::Identity())),
                  NotNegativeVector);
}

TEST_CASE("line_position basic cases") {
  Mat3x Hd = Mat3x::identity();
  Hd(2, 2) = Cyc(-1L);
  Vec3x a{{Cyc(1L), Cyc(0L), Cyc(0L)}};
  Vec3x b{{Cyc(0L), Cyc(1L), Cyc(0L)}};
  auto lp = line_position(a, b, Hd);
  CHECK(lp.rel == LineRel::Intersecting);
  CHECK(lp.C == doctest::Approx(0.0));
  CHECK(lp.theta == doctest::Approx(1.5707963268));
  auto same = line_position(a, a, Hd);
  CHECK(same.rel == LineRel::Asymptotic);
  CHECK(same.same_line);
  Vec3x neg{{Cyc(0L), Cyc(0L), Cyc(1L)}};
  CHECK_THROWS_AS(line_position(a, neg, Hd), NotPositiveVector);
}

TEST_CASE("eigen_unitary: closed forms for generators") {
  TriangleGroup G(5, sporadic("s4c").value);
  CMat3 H = G.H().to_complex();
  // J has the three cube roots of unity
  auto ej = eigen_unitary(G.J().to_complex(), H);
  cplx prod = 1;
  for (auto& e : ej) {
    CHECK(std::abs(std::abs(e.value) - 1.0) < 1e-9);
    prod *= e.value;
  }
  CHECK(std::abs(prod - cplx(1, 0)) < 1e-9);
  // R1R2 eigenvalues: {-e^{2 i pi/3p} e^{+- r i pi/s}, e^{-4 i pi/3p}}
  auto e12 = eigen_unitary((G.R1() * G.R2()).to_complex(), H);
  const double PI = 3.14159265358979323846;
  double p = 5, r = 1, s = 2;
  std::vector<cplx> expect = {
      -std::polar(1.0, 2 * PI / (3 * p) + r * PI / s),
      -std::polar(1.0, 2 * PI / (3 * p) - r * PI / s),
      std::polar(1.0, -4 * PI / (3 * p))};
  for (cplx w : expect) {
    double best = 1e9;
    for (auto& e : e12) best = std::min(best, std::abs(e.value - w));
    CHECK(best < 1e-9);
  }
  // eigenvector residuals
  CMat3 M = (G.R1() * G.R2()).to_complex();
  for (auto& e : e12)
    CHECK((M * e.vector - e.value * e.vector).norm() < 1e-9);
}

TEST_CASE("exact and float backends agree on random words") {
  TriangleGroup G(4, sporadic("s1").value);
  std::mt19937 rng(3);
  const char* gens[] = {"1", "2", "3", "1'", "2'", "3'", "J"};
  for (int it = 0; it < 6; ++it) {
    std::string w;
    for (int k = 0; k < 8; ++k) w += gens[rng() % 7];
    Mat3x M = G.word_matrix(w);
    CHECK(preserves_form(M, G.H()));
    CHECK(M.det() == Cyc(1L));
    CMat3 f = CMat3::Identity();
    size_t i = 0;
    while (i < w.size()) {
      std::string g(1, w[i]);
      if (i + 1 < w.size() && w[i + 1] == '\'') { g += '\''; ++i; }
      ++i;
      f = f * G.word_matrix(g).to_complex();
    }
    CHECK((M.to_complex() - f).cwiseAbs().maxCoeff() < 1e-9);
  }
}
