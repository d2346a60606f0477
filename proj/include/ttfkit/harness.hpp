// Front end: the ring/ideal/module spec-file parser, the per-(ring, ideal)
// analysis pipeline, JSON/text report emission, and the built-in example
// gallery with oracle-verified fixtures.
//
// Spec files are UTF-8, line-based, one declaration per line; `#` starts a
// comment.  Names must be declared before use.
//
//   ring <name> = zn(<n>) | gf(<p>) | matrix(<ring>,<k>)
//               | upper_triangular(<ring>,<k>) | product(<ring>,<ring>)
//               | quotient(<ring>,<ideal>) | tables(<path>)
//   ideal <name> in <ring> = generated [<elt>, ...] | jacobson
//                          | members [<elt>, ...]
//   module <name> over <ring> side <left|right> presented [[<elt>,...],...]
//
// An <elt> is a decimal element index, or e(i,j) (1-based) for rings built
// by matrix/upper_triangular.  The raw-table file format for `tables` is:
// a first line `size zero one`, then `size` rows of the addition table and
// `size` rows of the multiplication table, whitespace-separated indices.
// Declared ideals are two-sided (validated).

#ifndef TTFKIT_HARNESS_HPP
#define TTFKIT_HARNESS_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ttfkit/commutative.hpp"
#include "ttfkit/fpdetect.hpp"

namespace ttfkit {

// Parsed environment.  Rings live in node-stable maps; ideals and modules
// hold pointers into them, so the environment moves but never copies.
struct ParsedSpec {
  std::vector<std::string> ring_order;
  std::map<std::string, FiniteRing> rings;
  std::vector<std::string> ideal_order;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, std::string> ideal_ring;  // ideal name -> ring name
  std::vector<std::string> module_order;
  std::map<std::string, FinModule> modules;

  ParsedSpec() = default;
  ParsedSpec(ParsedSpec&&) = default;
  ParsedSpec& operator=(ParsedSpec&&) = default;
  ParsedSpec(const ParsedSpec&) = delete;
  ParsedSpec& operator=(const ParsedSpec&) = delete;

  const FiniteRing& ring(const std::string& name) const;  // UnknownName
  const Ideal& ideal(const std::string& name) const;      // UnknownName
};

// `base_dir` resolves relative tables(<path>) arguments (the CLI passes the
// spec file's directory).  Throws ParseError / UnknownName.
ParsedSpec parse_spec(const std::string& text, const std::string& base_dir = ".",
                      const Caps& caps = Caps::defaults());
ParsedSpec parse_spec_file(const std::string& path, const Caps& caps = Caps::defaults());

// --- analysis pipeline -----------------------------------------------------

struct CyclicTTFRow {
  std::vector<elem_t> k_members;  // the right ideal K defining R/K
  TTFFlags flags;
};

struct AnalysisReport {
  int schema_version = 1;
  std::string ring_label;
  elem_t ring_size = 0;
  std::string ideal_name;
  std::vector<elem_t> ideal_members;
  bool idempotent = false;
  // Everything below is filled only for idempotent ideals.
  std::vector<CyclicTTFRow> ttf;  // cyclic right modules R/K, K enumerated
  std::optional<LfpReport> lfp;
  bool enough_projectives = false;
  std::optional<CounterexampleReport> counterexample;
  bool commutative_applicable = false;
  std::optional<CommutativeVerdict> commutative;
  // Wall-clock time; reported by the text format only, never in JSON, so
  // repeated runs stay byte-identical.
  double elapsed_seconds = 0.0;
};

// Runs the full pipeline; the ideal must be two-sided.  Errors from any
// stage are rethrown with the stage name prefixed.
AnalysisReport analyze(const FiniteRing& ring, const Ideal& ideal,
                       const std::string& ideal_name,
                       const Caps& caps = Caps::defaults());

std::string report_to_json(const AnalysisReport& r);  // deterministic bytes
std::string report_to_text(const AnalysisReport& r);

// --- gallery ---------------------------------------------------------------

// Expected verdicts for one named ideal of a gallery ring.  Every field is
// re-derived by an independent brute-force oracle in verify mode.
struct GalleryFixture {
  std::string ideal_name;
  std::vector<elem_t> members;
  bool idempotent = false;
  // Valid only when idempotent:
  bool via_idempotents = false;
  int fix_k = -1;              // expected fix-closure k_reached
  elem_t generator = -1;       // commutative rings only; -1 otherwise
};

struct GalleryEntry {
  std::string name;         // short stable key, e.g. "zn6"
  std::string constructor;  // display form of how the ring is built
  std::shared_ptr<FiniteRing> ring;
  std::vector<GalleryFixture> fixtures;  // one per two-sided ideal, canonical order
  int idempotent_count = -1;  // expected number of idempotent two-sided ideals
};

std::vector<GalleryEntry> build_gallery(const Caps& caps = Caps::defaults());

// Re-derives every fixture of every entry with brute-force oracles (and,
// for rings of size <= 16, checks the enumerated two-sided ideal lattice
// against the all-additive-subgroups filter).  Returns the number of
// mismatches; each is reported on `out` naming entry/ideal/field.
int verify_gallery(const std::vector<GalleryEntry>& entries, std::ostream& out,
                   const Caps& caps = Caps::defaults());

// report mode: emits one AnalysisReport per (ring, ideal) pair on `out` in
// gallery order.  verify additionally runs verify_gallery and cross-checks
// fixtures against the reports.  Returns a CLI exit status (0 ok,
// 1 mismatch).
int run_gallery(bool verify, const std::string& format, std::ostream& out,
                const Caps& caps = Caps::defaults());

}  // namespace ttfkit

#endif  // TTFKIT_HARNESS_HPP
