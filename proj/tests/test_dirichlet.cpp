#include <doctest.h>

#include <chc/dirichlet.hpp>
#include <chc/presentations.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

using namespace chc;

namespace {

const TriangleGroup& g34c() {
  static TriangleGroup G(3, sporadic("s4c").value, "s4c");
  return G;
}

// Shared reference run: the full G-procedure at (3, s4c) on the default
// 200 x 200 grid (computed once, reused by several cases below).
const ProcedureOutcome& out34c() {
  static ProcedureOutcome out = [] {
    Limits lim;
    lim.grid = 200;
    lim.max_words = 1500;
    return g_procedure(g34c(), lim);
  }();
  return out;
}

}  // namespace

TEST_CASE("G-procedure at (3, s4c) reaches Behaviour A with the known domain") {
  const ProcedureOutcome& out = out34c();
  CHECK(out.behaviour == 'A');
  CHECK(out.steps == 4);
  CHECK(out.word_count == 114);
  CHECK(out.faces.size() == 138);
  CHECK(out.degenerate_pairs.size() == 12);
}

TEST_CASE("side classes at (3, s4c): 54 sides, 7 classes after merging") {
  SideReport sr = side_classes(out34c());
  CHECK(sr.sides.size() == 54);
  CHECK(sr.classes.size() == 9);
  CHECK(sr.merged.size() == 7);
  std::set<std::string> labels;
  for (const SideClass& c : sr.merged) labels.insert(c.label);
  CHECK(labels == std::set<std::string>{"1", "12", "121", "123", "121'",
                                        "1212", "121'31"});
}

TEST_CASE("every side at (3, s4c) is paired with small residual") {
  auto pairs = side_pairing_check(out34c());
  CHECK(pairs.size() == 54);
  for (const PairingEntry& e : pairs) {
    CAPTURE(e.side);
    CHECK(e.matched);
    CHECK(e.partner >= 0);
    CHECK(e.residual < 1e-6);
  }
}

TEST_CASE("cycle angles at (3, s4c) are all 2 pi / 3, integral") {
  auto cycles = cycle_angles(out34c());
  CHECK(cycles.size() == 9);
  for (const CycleAngle& c : cycles) {
    CAPTURE(c.word);
    CHECK(c.angle == PiRational{2, 3});
    CHECK(c.integral);
    CHECK(std::abs(c.total_interior - 2 * M_PI / 3) < 0.05);
  }
}

TEST_CASE("partial-domain membership: center inside, positive vectors refused") {
  const PartialDomain& D = *out34c().domain;
  CHECK(D.in_partial_domain(D.center()));
  // the mirror polar of R1 is a positive vector
  IsometryClass c = classify(g34c().R1(), g34c().H());
  REQUIRE(c.polar.has_value());
  CHECK_THROWS_AS(D.in_partial_domain(c.polar->to_complex()),
                  NotNegativeVector);
}

TEST_CASE("giraud_sample refuses a degenerate triple") {
  const PartialDomain& D = *out34c().domain;
  CHECK_THROWS_AS(D.giraud_sample(0, 0, 16), DegenerateTriple);
}

TEST_CASE("shortest_label recovers one-letter generator labels") {
  const PartialDomain& D = *out34c().domain;
  bool found = false;
  for (int i = 0; i < (int)D.words().size(); ++i)
    if (D.words()[i].word == "1") {
      CHECK(shortest_label(D, i) == "1");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("face_svg renders one rect per hit cell") {
  const ProcedureOutcome& out = out34c();
  REQUIRE(!out.faces.empty());
  const FaceSample& f = out.faces.front();
  std::string svg = face_svg(f, *out.domain);
  CHECK(svg.find("<svg") != std::string::npos);
  std::size_t rects = 0;
  for (std::size_t pos = 0; (pos = svg.find("<rect", pos)) != std::string::npos;
       ++pos)
    ++rects;
  CHECK(rects == f.hits.size());
}

TEST_CASE("refine accepts a 2 pi / n rotation and refuses a parabolic") {
  // R1 at p = 3 is a complex reflection by 2 pi / 3: a legitimate h
  PartialDomain R = refine(*out34c().domain, "1", 1);
  CHECK(R.words().size() >= out34c().domain->words().size());
  // (12)^3 at (3, s1) is parabolic, so it rotates by no angle at all
  TriangleGroup G1(3, sporadic("s1").value, "s1");
  PartialDomain D1(G1);
  CHECK_THROWS_AS(refine(D1, "12", 3), IrrationalAngle);
}

TEST_CASE("conjectured cusps verify: relations, parabolicity, common cusp") {
  for (const CuspEntry& e : conjectured_cusps()) {
    CAPTURE(e.tau_id);
    CAPTURE(e.p);
    TriangleGroup G(e.p, sporadic(e.tau_id).value, e.tau_id);
    auto reports = cusp_report(G, {e.candidate});
    REQUIRE(reports.size() == 1);
    const CuspItemReport& r = reports.front();
    for (bool ok : r.relations_hold) CHECK(ok);
    for (bool ok : r.parabolic_ok) CHECK(ok);
    CHECK(r.common_null_fixed);
  }
}

TEST_CASE("parabolic_fixed_vector is exactly null and exactly fixed") {
  struct Row { const char* id; long p; const char* word; };
  for (const Row& r : {Row{"s1", 3, "(12)^3"}, Row{"s4c", 4, "(12)^2"}}) {
    CAPTURE(r.id);
    TriangleGroup G(r.p, sporadic(r.id).value, r.id);
    Mat3x M = G.word_matrix(r.word);
    REQUIRE(classify(M, G.H()).kind == IsoKind::Parabolic);
    Vec3x v = parabolic_fixed_vector(M, G.H());
    CHECK(inner(v, v, G.H()) == Cyc(0L));
    Vec3x w = M * v;  // projectively fixed: all 2x2 minors with v vanish
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        CHECK(w[i] * v[j] == w[j] * v[i]);
  }
}
