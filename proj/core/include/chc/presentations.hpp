#pragma once
// Conjectured presentations for the eleven lattice candidates and the
// conjectured cusp data: generator relations in the word grammar, cusp
// subgroup generators, and designated parabolic elements.

#include <string>
#include <vector>

#include "chc/dirichlet.hpp"

namespace chc {

struct Presentation {
  std::string tau_id;
  long p;
  std::vector<CuspRelation> relations;  // lhs = rhs (rhs empty: = identity)
};

// All eleven conjectured-lattice presentations.
const std::vector<Presentation>& conjectured_presentations();

struct CuspEntry {
  std::string tau_id;
  long p;
  CuspCandidate candidate;
};

// Conjectured cusp list: one entry per cusp row.
const std::vector<CuspEntry>& conjectured_cusps();

}  // namespace chc
