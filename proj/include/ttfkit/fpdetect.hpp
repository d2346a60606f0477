// Matrix criteria for finite presentability of the Giraud subcategory
// attached to an idempotent two-sided ideal I.
//
// A matrix A over R is "detecting" relative to I when (1) it is right
// invertible modulo I (some B has 1 - A*B with all entries in I) and (2)
// every system A*X = Y with Y over I that is solvable over R is already
// solvable over I, packaged as the subgroup inclusion
// (A*R^n) intersect I^m  <=  A*(I^n).  The fix-closure criterion certifies
// that the subcategory is locally finitely presented by accumulating, over
// square matrices E with entries in I, the two-sided ideals generated by the
// rows fixed by E (X = X*E), until those sums exhaust I.

#ifndef TTFKIT_FPDETECT_HPP
#define TTFKIT_FPDETECT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ttfkit/modcat.hpp"

namespace ttfkit {

// All rows X in R^(1 x m) with X*A = 0, ascending by tuple.  A left
// submodule of the row space (closed under addition and left scaling).
std::vector<std::vector<elem_t>> left_annihilator_rows(const RMatrix& a,
                                                       const Caps& caps = Caps::defaults());

// Two-sided ideal generated by the entries of the left-annihilator rows.
// Because the annihilator is closed under left scaling, this equals the set
// of finite sums  X_1*Y_1 + ... + X_t*Y_t  with X_k*A = 0 (the direct
// definition, cross-checked by the tests).
Ideal ideal_I_A(const RMatrix& a, const Caps& caps = Caps::defaults());

// Fix(E) for square E with entries in I: the two-sided ideal generated by
// the entries of the rows with X = X*E.  Computed directly and asserted
// equal to ideal_I_A(1 - E).  Always contained in I.
Ideal fix_ideal(const RMatrix& e, const Ideal& i, const Caps& caps = Caps::defaults());

// A right inverse of A modulo I: B with 1 - A*B entrywise in I, or nullopt.
// Solved column by column in R/I by image-subgroup closure with witness
// tracking, then lifted along the canonical coset representatives.
std::optional<RMatrix> right_invertible_mod(const RMatrix& a, const Ideal& i,
                                            const Caps& caps = Caps::defaults());

struct FpVerdict {
  bool detecting = false;
  bool right_invertible = false;  // condition (1)
  bool solvability = false;       // condition (2)
  std::optional<RMatrix> right_inverse;    // witness for (1)
  std::optional<std::vector<elem_t>> gap;  // witness against (2): a column of
                                           // (A*R^n) intersect I^m outside A*I^n
};
// Both conditions above; I must be idempotent (NotIdempotent otherwise).
FpVerdict is_fp_detecting(const RMatrix& a, const Ideal& i,
                          const Caps& caps = Caps::defaults());

// I is generated by the idempotent elements it contains.
bool locally_fp_via_idempotents(const Ideal& i);

struct FixReport {
  bool certified = false;  // fix closure reached I within k_max and budget
  int k_reached = 0;       // matrix size at which the closure reached I
  Ideal fix_closure;       // accumulated sum of Fix(E)
  std::vector<RMatrix> contributing;  // matrices that strictly grew the sum
  std::vector<int> skipped_k;         // sizes skipped because |I|^(k*k) > budget
};
// Scans E in M_k(I) for k = 1..caps.k_max in lexicographic order (early
// exit once the closure reaches I).  certified=false means "unknown": the
// criterion has no effective bound on k, so a failure to certify within the
// budget decides nothing.
FixReport locally_fp_via_fix(const Ideal& i, const Caps& caps = Caps::defaults());

struct LfpReport {
  bool via_idempotents = false;
  Ideal idempotent_closure;
  FixReport fix;
  // For finite rings (always semiregular) this coincides with
  // via_idempotents; recorded separately so reports state both.
  bool enough_projectives = false;
};
LfpReport lfp_report(const Ideal& i, const Caps& caps = Caps::defaults());

// The three ingredients a hypothetical "X_I not locally fp" example needs.
// Over a finite ring every ideal is finitely presented, so the recipe's
// missing ingredient cannot occur; the conditions are still computed and
// reported for cross-checking.
struct CounterexampleReport {
  bool rho_iso = false;             // I in X_I as a right module
  bool quotient_left_flat = false;  // R/I flat as a left module
  bool trace_of_projective = false; // I generated by idempotent elements
  std::string note;
};
CounterexampleReport counterexample_conditions(const Ideal& i,
                                               const Caps& caps = Caps::defaults());

}  // namespace ttfkit

#endif  // TTFKIT_FPDETECT_HPP
