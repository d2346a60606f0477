// Ideals of a finite ring as membership bitsets, plus the lattice and
// torsion-theoretic machinery built on them: generated ideals, products,
// idempotent ideals, full enumeration, and the TTF-triple classifier
// attached to an idempotent two-sided ideal.

#ifndef TTFKIT_IDEALS_HPP
#define TTFKIT_IDEALS_HPP

#include <vector>

#include "ttfkit/finring.hpp"

namespace ttfkit {

enum class Side { left, right, two_sided };

class Ideal {
 public:
  Ideal(const FiniteRing& ring, Side side, std::vector<char> membership);

  const FiniteRing& ring() const { return *ring_; }
  Side side() const { return side_; }
  bool contains(elem_t x) const { return membership_[std::size_t(x)] != 0; }
  elem_t count() const { return count_; }
  // Members in ascending index order (the canonical serialisation).
  const std::vector<elem_t>& members() const { return members_; }
  const std::vector<char>& membership() const { return membership_; }

  bool operator==(const Ideal& o) const {
    return ring_ == o.ring_ && membership_ == o.membership_;
  }
  bool is_zero() const { return count_ == 1; }
  bool is_whole_ring() const { return count_ == ring_->size(); }
  bool subset_of(const Ideal& o) const;

 private:
  const FiniteRing* ring_;
  Side side_;
  std::vector<char> membership_;
  std::vector<elem_t> members_;
  elem_t count_;
};

// Smallest ideal of the given sidedness containing the generators: the
// additive span of r*g (left), g*r (right), or r*g*s (two-sided).
Ideal ideal_generated(const FiniteRing& ring, const std::vector<elem_t>& gens, Side side);

Ideal zero_ideal(const FiniteRing& ring, Side side = Side::two_sided);
Ideal whole_ring_ideal(const FiniteRing& ring, Side side = Side::two_sided);

// Builds an ideal from an explicit member list, validating closure under
// addition and the side's multiplications.  Throws AxiomViolation otherwise.
Ideal ideal_from_members(const FiniteRing& ring, const std::vector<elem_t>& members,
                         Side side);

// Sum I + J (additive span of the union; an ideal of the common side).
Ideal ideal_sum(const Ideal& i, const Ideal& j);

// Product IJ: additive span of { x*y : x in I, y in J }.  For two-sided
// inputs the result is two-sided (asserted).
Ideal ideal_product(const Ideal& i, const Ideal& j);

bool is_idempotent_ideal(const Ideal& i);

// All ideals of the given side, as join-closure of the principal ideals.
// Sorted by ascending size, ties broken by member list lexicographically.
// Throws EnumerationCapExceeded past caps.ideal_count_cap.
std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, Side side,
                                    const Caps& caps = Caps::defaults());
std::vector<Ideal> enumerate_two_sided_ideals(const FiniteRing& ring,
                                              const Caps& caps = Caps::defaults());
std::vector<Ideal> enumerate_idempotent_ideals(const FiniteRing& ring,
                                               const Caps& caps = Caps::defaults());

// The ideal generated by the idempotent elements lying in I.  Always
// contained in I; I is generated by idempotent elements iff this equals I.
Ideal idempotent_element_closure(const Ideal& i);

// Jacobson radical as an Ideal.
Ideal radical_ideal(const FiniteRing& ring);

}  // namespace ttfkit

#endif  // TTFKIT_IDEALS_HPP
