#pragma once
// Partial Dirichlet domains and the G-procedure: bisector membership,
// Giraud-disk 2-face sampling on an N x N grid, G-step / G-closure,
// Behaviours A/B/C, side classification and pairing checks, cycle
// transformations of complex 2-faces, the refinement step, and cusp reports.

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chc/classify.hpp"
#include "chc/groups.hpp"

namespace chc {

struct NotBehaviourA : std::runtime_error {
  NotBehaviourA() : std::runtime_error("outcome is not Behaviour A") {}
};
struct DegenerateTriple : std::runtime_error {
  DegenerateTriple()
      : std::runtime_error("two of the three orbit points coincide") {}
};
struct IrrationalAngle : std::runtime_error {
  IrrationalAngle()
      : std::runtime_error(
            "cycle transformation angle is not a rational multiple of pi") {}
};

// One element of the word set W: generator word, exact matrix, float matrix,
// and the orbit point gamma p0 (normalized to <q,q> = -1).
struct WordEntry {
  std::string word;
  Mat3x exact;
  CMat3 flt;
  CVec3 q;
};

enum class FaceVerdict { NonEmptyGeneric, Empty, InComplexGeodesic };

struct FaceSample {
  int a = -1, b = -1;  // word indices of the pair (alpha, beta)
  int grid = 0;
  FaceVerdict verdict = FaceVerdict::Empty;
  std::vector<std::pair<int, int>> hits;  // (row, col) grid cells in F_W
};

struct Limits {
  int grid = 200;              // N x N sampling of the Giraud torus
  int max_steps = 12;
  std::size_t max_words = 20000;
};

class PartialDomain {
 public:
  // Center override: a real perturbation added to the float center (breaks
  // the J-symmetry); exact-backend confirmation is skipped in override mode.
  PartialDomain(const TriangleGroup& G, Limits lim = {},
                std::optional<std::array<double, 3>> center_override = {});

  const TriangleGroup& group() const { return *G_; }
  const Limits& limits() const { return lim_; }
  void set_limits(const Limits& lim) { lim_ = lim; }
  const std::vector<WordEntry>& words() const { return words_; }
  const CVec3& center() const { return p0_; }
  bool center_overridden() const { return !p0x_.has_value(); }

  // Adds word/inverse pair unless either fixes p0 or duplicates an existing
  // bisector (dedup by the orbit point gamma p0, confirmed exactly when the
  // center is exact).  Returns number of entries added.
  int add_word(const std::string& word, const Mat3x& exact);

  // d(x, p0) <= d(x, gamma p0) for all gamma in W, in cross-multiplied
  // inner-product form.  Throws NotNegativeVector.
  bool in_partial_domain(const CVec3& x) const;

  // Samples the coequidistant locus of (p0, alpha p0, beta p0).  Throws
  // DegenerateTriple when two of the orbit points coincide projectively.
  FaceSample giraud_sample(int a, int b) const;
  FaceSample giraud_sample(int a, int b, int grid) const;

  // The sampled point of a grid cell (chart: <x,p0> = 1, <x,q_a> = z1,
  // <x,q_b> = z2 with z1, z2 on the unit circle at cell-center angles).
  CVec3 chart_point(int a, int b, int row, int col, int grid) const;

 private:
  friend PartialDomain refine(const PartialDomain&, const std::string&, long);
  const TriangleGroup* G_;
  Limits lim_;
  CVec3 p0_;                     // float center, <p0,p0> = -1
  std::optional<Vec3x> p0x_;     // exact center unless overridden
  CMat3 Hf_;
  std::vector<WordEntry> words_;
  std::vector<CVec3> rows_;      // conj(H q_m) per word
  CVec3 row0_;                   // conj(H p0)
};

struct ProcedureOutcome {
  char behaviour = 'C';  // 'A' | 'B' | 'C'
  int steps = 0;
  std::size_t word_count = 0;
  std::vector<FaceSample> faces;                   // nonempty generic 2-faces
  std::vector<std::pair<int, int>> degenerate_pairs;  // complex-line pairs
  std::shared_ptr<PartialDomain> domain;
};

// Iterates W_{k+1} = G(W_k) from W0 = {R1, R2, R3 and inverses} (or from the
// given start domain) until closure (A/B) or a resource cap (C).
ProcedureOutcome g_procedure(const TriangleGroup& G, Limits lim = {},
                             std::optional<std::array<double, 3>>
                                 center_override = {});
ProcedureOutcome g_procedure(std::shared_ptr<PartialDomain> start);

// One G-step: W -> G(W).  Returns the number of new entries.
int g_step(PartialDomain& D);

struct SideClass {
  std::string label;         // shortest-word label of a representative
  std::vector<int> members;  // word indices
};

struct SideReport {
  std::vector<int> sides;            // word indices carrying >= 1 face
  std::vector<SideClass> classes;    // up to inverses and J-conjugacy
  std::vector<SideClass> merged;     // after adjacency-fingerprint merging
};

SideReport side_classes(const ProcedureOutcome& out);  // NotBehaviourA

struct PairingEntry {
  int side = -1;        // word index
  int partner = -1;     // word index of the paired side (-1 if unmatched)
  int j_power = 0;      // pairing map is J^j_power * side^{-1}
  bool matched = false;
  double residual = 0;  // worst mapped-sample membership defect
};

std::vector<PairingEntry> side_pairing_check(const ProcedureOutcome& out);

struct CycleAngle {
  std::string word;       // cycle transformation (stabilizer word, powered)
  PiRational angle;       // exact rotation angle, normalized to (0, pi]
  double total_interior;  // measured interior wedge angle at the face (rad)
  bool integral;          // 2 pi / angle is an integer
};

// One entry per complex-line 2-face class of a Behaviour A outcome.
std::vector<CycleAngle> cycle_angles(const ProcedureOutcome& out);

// W -> W u h W h^-1 with h = g^k; h must rotate by 2 pi / n exactly
// (throws IrrationalAngle otherwise).
PartialDomain refine(const PartialDomain& D, const std::string& g, long k);

struct CuspRelation {
  std::string lhs, rhs;
};

struct CuspCandidate {
  std::string name;
  std::vector<std::string> gens;
  std::vector<CuspRelation> relations;
  std::vector<std::string> parabolic_words;
};

struct CuspItemReport {
  CuspCandidate candidate;
  std::vector<bool> relations_hold;
  std::vector<bool> parabolic_ok;
  bool common_null_fixed = false;  // gens share the parabolic null fixed point
  std::string note;
};

std::vector<CuspItemReport> cusp_report(const TriangleGroup& G,
                                        const std::vector<CuspCandidate>& cs);

// Fixed null eigenvector of an exact parabolic element.
Vec3x parabolic_fixed_vector(const Mat3x& M, const Mat3x& H);

// Hit cells rendered as filled squares in chart coordinates.
std::string face_svg(const FaceSample& f, const PartialDomain& D);

// Shortest generator word (length <= maxlen) projectively equal to the given
// word entry; empty when none is found.
std::string shortest_label(const PartialDomain& D, int index, int maxlen = 6);

}  // namespace chc
