#pragma once
// Arithmeticity criterion: Galois conjugates of the Hermitian form H_tau and
// exact definiteness testing.  The trace field F is totally real; the
// criterion holds when every Galois conjugate of H_tau under an automorphism
// that moves F is definite.

#include <tuple>
#include <vector>

#include "chc/groups.hpp"

namespace chc {

struct GaloisConjugate {
  long t = 1;                       // zeta_N -> zeta_N^t
  Mat3x form;                       // entrywise image of H_tau
  std::tuple<int, int, int> signature;
};

struct GaloisOrbit {
  long N = 1;  // conductor containing all entries of H_tau
  // t = 1 first (reproducing H_tau), then one representative per
  // automorphism class: coprime residues mod N, modulo complex conjugation
  // and modulo those inducing the identity on the totally real subfield
  // relevant to (p, tau).
  std::vector<GaloisConjugate> conjugates;
};

GaloisOrbit galois_orbit_forms(const TriangleGroup& G);

struct ArithFlag {
  bool satisfies = false;  // criterion result, conditional on the lattice
                           // hypothesis of the underlying proposition
  long witness_t = 0;      // an indefinite non-identity conjugate when not
};

// Every non-identity representative definite <=> SatisfiesCriterion.
ArithFlag arithmeticity_flag(const GaloisOrbit& orbit);

// Same decision without materializing the conjugate matrices; stops at the
// first indefinite witness (used by the p-sweep).
ArithFlag arithmetic_criterion(const TriangleGroup& G);

}  // namespace chc
