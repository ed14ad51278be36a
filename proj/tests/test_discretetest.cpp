#include <doctest.h>

#include <chc/discretetest.hpp>

#include <algorithm>
#include <map>
#include <set>

using namespace chc;

namespace {

TestTarget target(const char* id, long p, int fam) {
  TriangleGroup G(p, sporadic(id).value, id);
  return fam == 1 ? build_target_r1r2(G) : build_target_r1232(G);
}

// Published non-discreteness sets per tau, p in [2, 50] (third verdict
// column), already restricted to the hyperbolic range of each family.
std::map<std::string, std::set<long>> published_nd() {
  auto range = [](long a, long b) {
    std::set<long> s;
    for (long p = a; p <= b; ++p) s.insert(p);
    return s;
  };
  auto join = [](std::set<long> a, const std::set<long>& b) {
    a.insert(b.begin(), b.end());
    return a;
  };
  return {
      {"s1", range(7, 50)},
      {"s1c", {3, 5, 6, 7}},
      {"s2", range(6, 50)},
      {"s2c", range(6, 19)},
      {"s3", range(3, 50)},
      {"s3c", range(3, 6)},
      {"s4", {4, 5, 6}},
      {"s4c", join(join({7}, range(9, 11)), range(13, 50))},
      {"s5", join(join({7}, range(9, 11)), range(13, 50))},
      {"s5c", {4}},
      {"s6", range(3, 50)},
      {"s6c", range(3, 29)},
      {"s7", join(join({5, 6}, range(8, 13)), range(15, 50))},
      {"s7c", {}},
      {"s8", range(4, 41)},
      {"s8c", range(4, 50)},
      {"s9", range(3, 50)},
      {"s9c", range(4, 8)},
  };
}

}  // namespace

TEST_CASE("target values reproduce the published quantity tables") {
  struct Row { const char* id; long p; int fam; double expect; double tol; };
  // tolerance: one unit in the last printed digit (plus rounding slack)
  const Row rows[] = {
      {"s1", 8, 1, 0.4969, 1.5e-4},   {"s1", 12, 1, 0.8134, 1.5e-4},
      {"s1", 15, 1, 0.6510, 1.5e-4},  {"s1", 18, 1, 0.5416, 1.5e-4},
      {"s1", 21, 1, 0.4631, 1.5e-4},
      {"s4c", 7, 1, 0.4257, 1.5e-4},  {"s4c", 9, 1, 0.2650, 1.5e-4},
      {"s4c", 10, 1, 0.4423, 1.5e-4}, {"s4c", 14, 1, 0.2774, 1.5e-4},
      {"s4c", 20, 1, 0.6748, 1.5e-4}, {"s4c", 28, 1, 0.4754, 1.5e-4},
      {"s4c", 16, 1, 0.4601, 1.5e-4}, {"s4c", 24, 1, 0.2889, 1.5e-4},
      {"s5", 7, 1, 0.4977, 1.5e-4},   {"s5", 9, 1, 0.3011, 1.5e-4},
      {"s5", 10, 1, 0.4974, 1.5e-4},  {"s5", 14, 1, 0.3032, 1.5e-4},
      {"s5", 20, 1, 0.7202, 1.5e-4},  {"s5", 28, 1, 0.4988, 1.5e-4},
      {"s5", 16, 1, 0.4980, 1.5e-4},  {"s5", 24, 1, 0.3053, 1.5e-4},
      {"s2", 6, 1, 0.631, 1.5e-3},    {"s2", 7, 1, 0.516, 1.5e-3},
      {"s2", 8, 1, 0.438, 1.5e-3},    {"s2", 15, 1, 0.908, 1.5e-3},
      {"s2", 20, 1, 0.729, 1.5e-3},   {"s2", 25, 1, 0.601, 1.5e-3},
      {"s2", 30, 1, 0.508, 1.5e-3},   {"s2", 35, 1, 0.440, 1.5e-3},
      {"s2c", 6, 1, 0.5660, 1.5e-4},  {"s2c", 7, 1, 0.4713, 1.5e-4},
      {"s2c", 15, 1, 0.8718, 1.5e-4},
      {"s7", 5, 1, 0.929, 1.5e-3},    {"s7", 6, 1, 0.702, 1.5e-3},
      {"s7", 8, 1, 0.476, 1.5e-3},    {"s7", 21, 1, 0.921, 1.5e-3},
      {"s7", 28, 1, 0.739, 1.5e-3},   {"s7", 35, 1, 0.608, 1.5e-3},
      {"s7", 42, 1, 0.514, 1.5e-3},   {"s7", 49, 1, 0.444, 1.5e-3},
      {"s4", 5, 1, 0.445, 1.5e-3},    {"s4", 6, 1, 0.550, 1.5e-3},
      {"s6", 5, 1, 0.937, 1.5e-3},    {"s6c", 5, 1, 0.750, 1.5e-3},
      {"s1", 9, 2, 0.686, 1.5e-3},
      {"s1c", 3, 2, 0.982, 1.5e-3},   {"s1c", 7, 2, 0.269, 1.5e-3},
      {"s1c", 6, 2, 0.859, 1.5e-3},
      {"s2", 10, 2, 0.6181, 1.5e-4},  {"s2c", 10, 2, 0.3871, 1.5e-4},
  };
  for (const Row& r : rows) {
    CAPTURE(r.id); CAPTURE(r.p); CAPTURE(r.fam);
    TestTarget t = target(r.id, r.p, r.fam);
    CHECK(std::abs(t.value - r.expect) < r.tol);
    CHECK(t.ultraparallel);
  }
  // The published table lists 0.6510 at both p = 7 and p = 15; the p = 15
  // entry checks out but the correct p = 7 value is 0.60156 (the p = 7 cell
  // duplicates the p = 15 one).
  TestTarget t7 = target("s1", 7, 1);
  CHECK(std::abs(t7.value - 0.60156) < 1.5e-5);
}

TEST_CASE("polar vectors: sign bookkeeping for the negative cases") {
  // Most targets have positive polar vectors; these verdict-relevant ones do
  // not, and the builder records the sign instead of refusing to proceed.
  CHECK_FALSE(target("s1c", 3, 2).polar_positive);
  CHECK_FALSE(target("s3c", 3, 1).polar_positive);
  CHECK_FALSE(target("s4", 4, 2).polar_positive);
  CHECK_FALSE(target("s4", 5, 2).polar_positive);
  CHECK_FALSE(target("s6", 3, 1).polar_positive);
  CHECK_FALSE(target("s6", 3, 2).polar_positive);
  CHECK_FALSE(target("s8", 4, 1).polar_positive);
  CHECK(target("s1", 8, 1).polar_positive);
  CHECK(target("s4c", 7, 1).polar_positive);
}

TEST_CASE("polar vectors are exact eigenvectors of the base elements") {
  for (auto [id, p] : std::vector<std::pair<const char*, long>>{
           {"s1", 7}, {"s4c", 5}, {"s5", 9}, {"s2c", 10}}) {
    TriangleGroup G(p, sporadic(id).value, id);
    Cyc lam = Cyc::root_of_unity(3 * p, -2);  // e^{-4 i pi / 3p}
    for (int fam : {1, 2}) {
      TestTarget t = fam == 1 ? build_target_r1r2(G) : build_target_r1232(G);
      Mat3x base = fam == 1 ? G.R1() * G.R2()
                            : G.R1() * G.R2() * G.R3() * G.R2().inverse();
      Vec3x mv = base * t.polar;
      for (int i = 0; i < 3; ++i) CHECK(mv[i] == lam * t.polar[i]);
      // the J-image is the polar of the J-conjugate mirror
      Vec3x jv = G.J() * t.polar;
      for (int i = 0; i < 3; ++i) CHECK(t.polar_image[i] == jv[i]);
    }
  }
}

TEST_CASE("(R1R2)^s commutes with R1 and R2 exactly") {
  for (auto [id, p] : std::vector<std::pair<const char*, long>>{
           {"s1", 8}, {"s4c", 3}, {"s7", 2}, {"s9c", 5}}) {
    const SporadicValue& sv = sporadic(id);
    TriangleGroup G(p, sv.value, id);
    Mat3x M = (G.R1() * G.R2()).pow(sv.s);
    CHECK(M * G.R1() == G.R1() * M);
    CHECK(M * G.R2() == G.R2() * M);
  }
}

TEST_CASE("trace identities hold exactly in cyclotomic arithmetic") {
  // tr((R1R2)^2 (R2R3)^2) = 3 - |conj(tau)^2 + e^{-2 i pi/p} tau - tau|^2,
  // up to a cube root of unity; it holds exactly where its hypothesis does,
  // i.e. p = 4 in the |tau|^2 = 2 families where (R1R2)^2 is parabolic.
  for (const char* id : {"s4", "s4c", "s5", "s5c", "s6", "s6c"}) {
    const Cyc tau = sporadic(id).value;
    TriangleGroup G(4, tau, id);
    Cyc u = tau.conj() * tau.conj() + Cyc::root_of_unity(4, -1) * tau - tau;
    Mat3x lhs = (G.R1() * G.R2()).pow(2) * (G.R2() * G.R3()).pow(2);
    CHECK(lhs.trace() == Cyc::root_of_unity(3, 1) * (Cyc(3L) - u.abs2()));
  }
  // tr(R1R2R3R2^-1) = e^{2 i pi/3p}(2 - |tau^2 - conj tau|^2) + e^{-4 i pi/3p}
  // holds for every (p, tau).
  for (auto [id, p] : std::vector<std::pair<const char*, long>>{
           {"s1", 4}, {"s3", 7}, {"s4c", 6}, {"s5c", 4}, {"s8c", 5}}) {
    const Cyc tau = sporadic(id).value;
    TriangleGroup G(p, tau, id);
    Cyc w = tau * tau - tau.conj();
    Mat3x m = G.R1() * G.R2() * G.R3() * G.R2().inverse();
    CHECK(m.trace() == Cyc::root_of_unity(3 * p, 1) * (Cyc(2L) - w.abs2()) +
                           Cyc::root_of_unity(3 * p, -2));
  }
}

TEST_CASE("jorgensen test fires and certifies exactly") {
  auto v8 = jorgensen_test(target("s1", 8, 1));
  CHECK(v8.nondiscrete);
  CHECK(v8.reason == NdReason::Jorgensen);
  CHECK(v8.witness == doctest::Approx(0.496942).epsilon(1e-5));
  CHECK_FALSE(jorgensen_test(target("s1", 12, 1)).nondiscrete);
  CHECK(jorgensen_test(target("s1", 21, 1)).nondiscrete);
  CHECK(jorgensen_test(target("s4c", 9, 1)).nondiscrete);
}

TEST_CASE("knapp gap test: fires on gaps, exact on admissible values") {
  // s1 p = 12: v = 0.8134 sits in a gap between admissible values
  auto k12 = knapp_test(target("s1", 12, 1));
  CHECK(k12.nondiscrete);
  CHECK(k12.reason == NdReason::KnappAngleGap);
  // s6c p = 6: v equals cos(pi/5) exactly, so the test must stay silent even
  // though the float gap to the nearest admissible value is zero only exactly
  TestTarget t6 = target("s6c", 6, 1);
  CHECK_FALSE(knapp_test(t6).nondiscrete);
  Cyc target_sq = t6.num2 * t6.sin2;
  Cyc cos2 = (Cyc(2L) + two_cos(5, 1)) * Rat(1, 4);  // cos^2(pi/5)
  CHECK(target_sq == t6.den2 * cos2);
}

TEST_CASE("shimizu test at p = 4 in the parabolic family") {
  {
    TriangleGroup G(4, sporadic("s4").value, "s4");
    auto v = shimizu_test(G);
    CHECK(v.nondiscrete);
    CHECK(v.reason == NdReason::Shimizu);
    CHECK(v.witness == doctest::Approx(0.595188).epsilon(1e-5));
  }
  {
    TriangleGroup G(4, sporadic("s5c").value, "s5c");
    auto v = shimizu_test(G);
    CHECK(v.nondiscrete);
    CHECK(v.witness == doctest::Approx(0.288905).epsilon(1e-5));
  }
  // outside the |tau|^2 = 2, p = 4 case the hypothesis fails
  TriangleGroup G(5, sporadic("s4").value, "s4");
  CHECK_THROWS_AS(shimizu_test(G), NotVerticalParabolic);
}

TEST_CASE("zero denominator is detected exactly") {
  // 2cos(2pi/p) + 2cos(r pi/s) = 0 at p = 3 for r/s = 1/3 (the s1 family)
  TriangleGroup G(3, sporadic("s1").value, "s1");
  CHECK_THROWS_AS(build_target_r1r2(G), ZeroDenominator);
}

TEST_CASE("census p <= 50 against the published verdict table") {
  auto rows = census_nondiscrete(2, 50);
  std::map<std::string, std::set<long>> got;
  std::map<std::string, std::set<long>> hyp;
  for (const CensusRow& r : rows) {
    if (!r.hyperbolic) continue;
    hyp[r.tau_id].insert(r.p);
    if (r.verdict.nondiscrete) got[r.tau_id].insert(r.p);
  }
  auto expect = published_nd();
  // Families where the engine reproduces the published column exactly.
  for (const char* id :
       {"s1", "s1c", "s2", "s2c", "s4", "s4c", "s5c", "s7", "s7c"}) {
    CAPTURE(id);
    CHECK(got[id] == expect[id]);
  }
  // The remaining published rows cite a volume-2 argument this engine does
  // not implement; the engine stays (honestly) inconclusive exactly there.
  std::map<std::string, std::set<long>> missing = {
      {"s3", {3, 4, 5, 6, 7, 15}},
      {"s3c", {4, 5}},
      {"s6", {12}},
      {"s6c", {6}},
      {"s8", {5, 6, 7, 8, 9, 14}},
      {"s8c", {4, 5, 6, 7, 8, 9, 14, 21}},
      {"s9", {3, 4, 5, 7, 14}},
      {"s9c", {4, 7}},
  };
  for (const auto& [id, miss] : missing) {
    CAPTURE(id);
    std::set<long> want = expect[id];
    for (long p : miss) want.erase(p);
    // s6c at p = 3 is exactly degenerate (a Hermitian-form eigenvalue is
    // exactly zero), so the exact signature excludes it from the sweep even
    // though the published range starts at 3.
    if (std::string(id) == "s6c") want.erase(3);
    CHECK(got[id] == want);
  }
  // The engine additionally certifies (12, s5) via a Knapp gap that the
  // published table does not claim.
  std::set<long> s5_want = expect["s5"];
  s5_want.insert(12);
  CHECK(got["s5"] == s5_want);
  // Shimizu is the firing family at the parabolic-denominator points.
  for (const CensusRow& r : rows)
    if (r.p == 4 && (r.tau_id == "s4" || r.tau_id == "s5c")) {
      CHECK(r.verdict.nondiscrete);
      CHECK(r.family == "shimizu");
    }
  // Hyperbolic ranges seen by the census agree with the signature module.
  CHECK(hyp["s1c"] == std::set<long>{3, 4, 5, 6, 7});
  CHECK(hyp["s7c"] == std::set<long>{2});
}

TEST_CASE("census with the spherical variant also settles s3c") {
  auto rows = census_nondiscrete(3, 6, {"s3c"}, /*spherical=*/true);
  std::set<long> got;
  for (const CensusRow& r : rows)
    if (r.verdict.nondiscrete) got.insert(r.p);
  CHECK(got == std::set<long>{3, 4, 5, 6});
}

TEST_CASE("jorgensen tail is bracketed classwise beyond p = 50") {
  CHECK(jorgensen_tail_bracketed("s1", 51));
  CHECK(jorgensen_tail_bracketed("s4c", 51));
  // bounded hyperbolic range: the tail claim must refuse
  CHECK_FALSE(jorgensen_tail_bracketed("s1c", 51));
}
