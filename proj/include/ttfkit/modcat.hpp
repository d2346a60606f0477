// Finite modules over a finite ring and the module-category machinery the
// torsion-theory criteria run on: presentations, tensor products, the
// multiplication map M (x) I -> M, flatness, projectivity, purity, traces,
// transposes and hom groups.
//
// Presentation conventions (fixed throughout):
//   * a RIGHT module presented by an m x n matrix A is R^m / A*R^n, where
//     R^m holds column tuples and (A*X)_i = sum_j a_ij x_j; generators are
//     the classes of the standard basis columns (rows of A index generators,
//     columns index relations);
//   * a LEFT module presented by the same m x n matrix A is R^n / R^m * A,
//     where R^n holds row tuples and (Y*A)_j = sum_i y_i a_ij; generators
//     are the classes of the standard basis rows (columns index generators).
// The transpose of a right module presented by A is the left module
// presented by the very same matrix, and vice versa.
//
// Carriers are canonical coset representatives: for a quotient of a tuple
// space, each class is named by its lexicographically smallest tuple, and
// classes are ordered by that representative, so element 0 is always zero
// and every construction is reproducible bit for bit.

#ifndef TTFKIT_MODCAT_HPP
#define TTFKIT_MODCAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ttfkit/abelian.hpp"
#include "ttfkit/ideals.hpp"

namespace ttfkit {

struct RMatrix {
  const FiniteRing* ring;
  int rows = 0, cols = 0;
  std::vector<elem_t> a;  // row-major, rows*cols entries

  RMatrix(const FiniteRing& r, int rows_, int cols_)
      : ring(&r), rows(rows_), cols(cols_),
        a(std::size_t(rows_) * std::size_t(cols_), r.zero()) {
    if (rows_ < 0 || cols_ < 0) throw DimensionMismatch("matrix shape");
  }
  elem_t at(int i, int j) const { return a[std::size_t(i) * cols + j]; }
  elem_t& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  bool square() const { return rows == cols; }
};

class FinModule {
 public:
  const FiniteRing& ring() const { return *ring_; }
  Side side() const { return side_; }  // left or right, never two_sided
  elem_t size() const { return size_; }
  elem_t zero() const { return 0; }

  elem_t add(elem_t x, elem_t y) const { return add_[std::size_t(x) * size_ + y]; }
  elem_t neg(elem_t x) const { return neg_[std::size_t(x)]; }
  // Right modules: act(m, r) = m*r.  Left modules: act(m, r) = r*m.
  elem_t act(elem_t m, elem_t r) const {
    return act_[std::size_t(m) * ring_->size() + r];
  }

  // Generating sequence (module generators), and for every element one
  // expression over it: m = sum_i gen_i * expr(m)[i] (right side) or
  // m = sum_i expr(m)[i] * gen_i (left side).
  const std::vector<elem_t>& gens() const { return gens_; }
  const std::vector<elem_t>& expr(elem_t m) const { return expr_[std::size_t(m)]; }

  // Presentation matrix, if this module was built from one.
  const std::optional<RMatrix>& presentation() const { return pres_; }

  const std::string& label(elem_t m) const { return labels_[std::size_t(m)]; }
  const std::string& name() const { return name_; }

  // When the carrier embeds into something (ideal modules: ring elements;
  // submodule_module: parent elements), the underlying value per element.
  // Empty otherwise.
  std::vector<elem_t> carrier_values;

  // Builder used by the free functions below; validates table shapes and
  // module axioms over the full (finite) carrier.
  FinModule(const FiniteRing& ring, Side side, std::vector<elem_t> add,
            std::vector<elem_t> act, std::vector<elem_t> gens,
            std::vector<std::vector<elem_t>> expr, std::optional<RMatrix> pres,
            std::vector<std::string> labels, std::string name,
            const Caps& caps = Caps::defaults());

 private:
  const FiniteRing* ring_;
  Side side_;
  elem_t size_;
  std::vector<elem_t> add_, act_, neg_;
  std::vector<elem_t> gens_;
  std::vector<std::vector<elem_t>> expr_;
  std::optional<RMatrix> pres_;
  std::vector<std::string> labels_;
  std::string name_;
};

// --- constructions -------------------------------------------------------

// coker of the presentation matrix, per the side conventions above.
FinModule module_from_presentation(const RMatrix& a, Side side,
                                   const Caps& caps = Caps::defaults());

// R as a module over itself.
FinModule regular_module(const FiniteRing& ring, Side side,
                         const Caps& caps = Caps::defaults());

// R / K for an ideal K of the matching side (or two-sided): the cyclic
// module presented by one row (right) or one column (left) of K-generators.
FinModule cyclic_module(const FiniteRing& ring, const Ideal& k, Side side,
                        const Caps& caps = Caps::defaults());

// An ideal as a module via its left- or right-ideal structure.  Elements are
// the members of I in ascending order; carrier_values maps them back to ring
// elements.
FinModule ideal_module(const Ideal& i, Side side, const Caps& caps = Caps::defaults());

FinModule direct_sum(const FinModule& m, const FinModule& n,
                     const Caps& caps = Caps::defaults());

// Sub-carrier spanned by `seed` under addition and the module action,
// as a sorted element list.
std::vector<elem_t> submodule_span(const FinModule& m, const std::vector<elem_t>& seed);

// Module structure on a sub-carrier (must be a span; validated).
FinModule submodule_module(const FinModule& m, const std::vector<elem_t>& carrier,
                           const Caps& caps = Caps::defaults());

// M / S for a submodule span S, with the canonical epi's element map.
struct QuotientModule {
  FinModule quotient;
  std::vector<elem_t> projection;  // element of M -> element of quotient
};
QuotientModule quotient_module(const FinModule& m, const std::vector<elem_t>& submodule,
                               const Caps& caps = Caps::defaults());

// --- module maps ---------------------------------------------------------

struct ModuleHom {
  const FinModule* src;
  const FinModule* dst;
  std::vector<elem_t> map;  // per source element

  bool is_epi() const;
  bool is_mono() const;
  bool is_iso() const { return is_epi() && is_mono(); }
};

// Extends generator images to a hom; throws AxiomViolation if the images
// violate a relation of the source.
ModuleHom hom_from_gen_images(const FinModule& src, const FinModule& dst,
                              const std::vector<elem_t>& images);

// All module homs M -> N (same ring, same side), as generator-image tuples
// in canonical (lexicographic) order; a finite abelian group under
// pointwise addition.
struct HomGroup {
  const FinModule* src;
  const FinModule* dst;
  std::vector<std::vector<elem_t>> images;

  std::size_t order() const { return images.size(); }
  ModuleHom materialize(std::size_t idx) const;
};
HomGroup hom_group(const FinModule& m, const FinModule& n,
                   const Caps& caps = Caps::defaults());

// --- presentations and tensor products -----------------------------------

// The stored presentation, or one computed from the generating sequence
// (kernel of the free cover, with a greedily minimised relation set).
RMatrix presentation_of(const FinModule& m, const Caps& caps = Caps::defaults());

// M (x)_R N for a right module M and left module N, computed as the
// cokernel of N^n -> N^m under M's presentation.  The result is a plain
// finite abelian group plus the pure-tensor map.
struct TensorProduct {
  std::uint64_t size = 0;
  std::vector<elem_t> add;            // size*size
  std::vector<std::uint64_t> reps;    // canonical rep tuple codes in N^m
  TupleSpace space;                   // N^m
  std::vector<elem_t> class_of;       // code -> class

  elem_t zero() const { return 0; }
  // Class of the pure tensor m (x) y.
  elem_t pure(const FinModule& m, elem_t melt, const FinModule& n, elem_t nelt) const;
};
TensorProduct tensor(const FinModule& m, const FinModule& n,
                     const Caps& caps = Caps::defaults());

// The multiplication map rho_M : M (x) I -> M, m (x) x |-> m*x, for a right
// module M and an ideal I usable as a left module (left or two-sided).
struct MultiplicationMap {
  TensorProduct domain;
  std::vector<elem_t> map;  // per domain class, element of M
  bool mono = false, epi = false, iso = false;
};
MultiplicationMap multiplication_map(const FinModule& m, const Ideal& i,
                                     const Caps& caps = Caps::defaults());

// Mirror map mu : K (x) N -> N for a right-usable ideal K and left module N
// (this is rho for the other side; used by flatness of left modules).
MultiplicationMap multiplication_map_left(const Ideal& k, const FinModule& n,
                                          const Caps& caps = Caps::defaults());

// --- torsion-theoretic classification -------------------------------------

// MI (right M) or IM (left M) as a sorted sub-carrier.
std::vector<elem_t> submodule_MI(const FinModule& m, const Ideal& i);

// Elements killed by I: {m : mI = 0} (right) or {m : Im = 0} (left).
std::vector<elem_t> annihilator_of_ideal(const FinModule& m, const Ideal& i);

struct TTFFlags {
  bool in_C = false;  // MI = M
  bool in_T = false;  // MI = 0
  bool in_F = false;  // ann_M(I) = 0
};
TTFFlags classify_ttf(const FinModule& m, const Ideal& i);

// rho_M is an isomorphism; I must be idempotent and two-sided (this is the
// Giraud-subcategory membership test).  M must be a right module.
bool is_in_X_I(const FinModule& m, const Ideal& i, const Caps& caps = Caps::defaults());

// --- homological predicates ------------------------------------------------

// Split epimorphism test: solves p o s = id as an additive equation system
// over the finite carrier.  Throws NotEpi when p is not surjective.
bool is_split_epi(const ModuleHom& p, const Caps& caps = Caps::defaults());

// Purity of an epimorphism of finite modules.  The target is finitely
// presented, so the Hom-lifting characterisation of purity applied to the
// target itself lifts the identity: pure epi onto a finite module == split
// epi.  Kept as its own entry point to make call sites say what they mean.
bool is_pure_epi(const ModuleHom& p, const Caps& caps = Caps::defaults());

// Splitness of the canonical free cover R^g ->> M.
bool is_projective(const FinModule& m, const Caps& caps = Caps::defaults());

// Ideal-wise flatness test: for every left ideal L (right module M) resp.
// right ideal K (left module M), the multiplication map into M is injective.
bool is_flat(const FinModule& m, const Caps& caps = Caps::defaults());

// Trace ideal of a set of right modules: the sum of the images of all module
// homs M -> R.  Asserts the result is two-sided.
Ideal trace_ideal(const FiniteRing& ring, const std::vector<const FinModule*>& mods,
                  const Caps& caps = Caps::defaults());

// Transpose: the same presentation matrix read on the other side.  Satisfies
// the four-term exact sequence checked by the test suite.
FinModule transpose(const FinModule& m, const Caps& caps = Caps::defaults());

}  // namespace ttfkit

#endif  // TTFKIT_MODCAT_HPP
