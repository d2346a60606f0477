// Commutative finite rings: decomposition into local factors and the
// closed-form description of idempotent ideals that falls out of it.
//
// A finite commutative ring is a product of local rings.  The factors are
// cut out by the primitive idempotents, which are found in the semisimple
// quotient R/J and lifted through the radical by iterating e -> 3e^2 - 2e^3
// (exact here because the radical is nilpotent, and unique because
// idempotents congruent mod a nil ideal coincide in a commutative ring).
// An idempotent ideal then restricts to 0 or the whole factor on each
// factor, and equals eR for e the sum of the factor identities over its
// support.

#ifndef TTFKIT_COMMUTATIVE_HPP
#define TTFKIT_COMMUTATIVE_HPP

#include <vector>

#include "ttfkit/ideals.hpp"

namespace ttfkit {

struct LocalFactor {
  elem_t idempotent;            // primitive idempotent e cutting the factor
  FiniteRing ring;              // eR as a ring with identity e
  std::vector<elem_t> carrier;  // members of eR, ascending (factor index -> R)
  std::vector<elem_t> project;  // R -> factor index of x*e
};

struct LocalDecomposition {
  std::vector<LocalFactor> factors;  // ordered by idempotent index
};

// Throws NotCommutative for noncommutative input.  Asserts orthogonality,
// completeness (the idempotents sum to 1) and locality of every factor.
LocalDecomposition decompose_local(const FiniteRing& ring,
                                   const Caps& caps = Caps::defaults());

// Indices of the factors on which I projects to something nonzero.
std::vector<int> support(const LocalDecomposition& dec, const Ideal& i);

struct CommutativeVerdict {
  bool holds = false;               // every factor projection is 0 or the factor
  elem_t generator = -1;            // e with I = eR (valid when holds)
  std::vector<int> support;         // factor indices carrying I
  std::vector<elem_t> factor_sizes; // |R_p| per factor, decomposition order
};
// For an idempotent ideal of a commutative ring: checks that each factor
// projection is trivial or full and that I = eR for the support generator.
// A false verdict cannot occur for genuinely idempotent input; it would
// indicate a computation bug, and the harness treats it as one.
CommutativeVerdict check_commutative_theorem(const Ideal& i,
                                             const Caps& caps = Caps::defaults());

}  // namespace ttfkit

#endif  // TTFKIT_COMMUTATIVE_HPP
