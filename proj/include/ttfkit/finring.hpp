// Finite unital rings as explicit Cayley tables.
//
// A ring of size n stores its addition and multiplication tables as flat
// n*n arrays over element indices 0..n-1.  Index 0 is the zero element in
// every constructor's encoding.  All higher-level questions (ideals, module
// categories, finite presentability) reduce to finite searches over these
// tables, so the representation is deliberately dumb and fully materialised.
//
// Constructor encodings are bit-exact and documented per constructor:
//   zn(n)                  residue k has index k
//   gf(p)                  same as zn(p); p must be prime
//   matrix(R,k)            k*k matrices over R; entries read row-major are the
//                          digits of the index, base |R|, most significant
//                          digit first
//   upper_triangular(R,k)  same digit scheme restricted to positions (i,j)
//                          with i<=j in row-major order; e.g. over gf(2), k=2
//                          the matrix [[a,b],[0,c]] has index 4a+2b+c
//   product(R,S)           pair (r,s) has index r*|S| + s
//   quotient(R,I)          cosets of a two-sided ideal, ordered by their
//                          smallest member index; the coset of 0 is index 0

#ifndef TTFKIT_FINRING_HPP
#define TTFKIT_FINRING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ttfkit/caps.hpp"

namespace ttfkit {

class FiniteRing {
 public:
  // Validates the tables (see build_ring) and precomputes negation.
  FiniteRing(std::vector<elem_t> add, std::vector<elem_t> mul, elem_t zero,
             elem_t one, std::string label, const Caps& caps = Caps::defaults());

  elem_t size() const { return n_; }
  elem_t zero() const { return zero_; }
  elem_t one() const { return one_; }
  const std::string& label() const { return label_; }

  elem_t add(elem_t a, elem_t b) const { return add_[std::size_t(a) * n_ + b]; }
  elem_t mul(elem_t a, elem_t b) const { return mul_[std::size_t(a) * n_ + b]; }
  elem_t neg(elem_t a) const { return neg_[a]; }
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg_[b]); }

  // x is a unit iff it has a two-sided inverse.  O(n) scan, not cached.
  bool is_unit(elem_t x) const;

  // All x with x*x == x, ascending.
  std::vector<elem_t> idempotents() const;

  // Jacobson radical: { x : 1 - r*x is a unit for every r }.  In a finite
  // ring this is the largest nil ideal; members ascending.
  std::vector<elem_t> jacobson_radical() const;

  bool is_commutative() const;

  // Convenience n-fold sum of x (handles negative multiples).
  elem_t zmul(long long k, elem_t x) const;

 private:
  elem_t n_;
  elem_t zero_, one_;
  std::vector<elem_t> add_, mul_, neg_;
  std::string label_;
};

// Validates closure, associativity (both operations), commutativity of
// addition, identities, inverses, and distributivity.  Rings of size at most
// caps.axiom_exhaustive_limit are checked exhaustively; larger rings get
// caps.axiom_sample_count sampled triples plus exhaustive unary checks.
// Throws AxiomViolation with the named axiom and a witness triple.
FiniteRing build_ring(std::vector<elem_t> add, std::vector<elem_t> mul,
                      elem_t zero, elem_t one, std::string label,
                      const Caps& caps = Caps::defaults());

// The constructors from the file grammar.  All throw SizeCapExceeded when
// the result would outgrow caps.ring_size_cap or the table byte budget.
FiniteRing zn(std::uint64_t n, const Caps& caps = Caps::defaults());
FiniteRing gf(std::uint64_t p, const Caps& caps = Caps::defaults());
FiniteRing matrix_ring(const FiniteRing& base, int k, const Caps& caps = Caps::defaults());
FiniteRing upper_triangular(const FiniteRing& base, int k,
                            const Caps& caps = Caps::defaults());
FiniteRing product(const FiniteRing& r, const FiniteRing& s,
                   const Caps& caps = Caps::defaults());
// I must be a two-sided ideal given as a sorted member list (validated).
FiniteRing quotient_ring(const FiniteRing& r, const std::vector<elem_t>& ideal_members,
                         std::string label, const Caps& caps = Caps::defaults());

// Quotient plus the canonical projection and coset representatives (the
// smallest member of each coset), for computations that solve in R/I and
// lift answers back to R.
struct QuotientRing {
  FiniteRing ring;
  std::vector<elem_t> coset_of;  // element of R -> element of the quotient
  std::vector<elem_t> reps;      // element of the quotient -> its lift in R
};
QuotientRing quotient_with_projection(const FiniteRing& r,
                                      const std::vector<elem_t>& ideal_members,
                                      std::string label,
                                      const Caps& caps = Caps::defaults());

// Index of the matrix unit e(i,j) (1-based positions) in matrix_ring /
// upper_triangular encodings; base_size is |base|, k the matrix size.
elem_t matrix_unit_index(int i, int j, int k, elem_t base_size, bool upper_only);

}  // namespace ttfkit

#endif  // TTFKIT_FINRING_HPP
