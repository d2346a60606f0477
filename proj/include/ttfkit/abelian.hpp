// Small finite-abelian-group toolkit: mixed-radix tuple spaces, subgroup
// closures, canonical coset representatives, and an additive equation solver
// with witness tracking.  Everything downstream (modules, tensor products,
// matrix criteria) is a finite subgroup computation in one of these spaces.

#ifndef TTFKIT_ABELIAN_HPP
#define TTFKIT_ABELIAN_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ttfkit/caps.hpp"

namespace ttfkit {

// Tuples of fixed width over slots 0..base-1, encoded as integers with the
// FIRST slot most significant, so ascending codes equal lexicographic order
// on tuples (and code 0 is the all-zero tuple).
struct TupleSpace {
  std::uint64_t base = 1;
  int width = 0;
  std::uint64_t total = 1;

  TupleSpace() = default;
  // Throws SizeCapExceeded when base^width exceeds cap.
  TupleSpace(std::uint64_t base_, int width_, std::uint64_t cap);

  std::vector<elem_t> decode(std::uint64_t code) const {
    std::vector<elem_t> t(static_cast<std::size_t>(width));
    for (int i = width; i-- > 0;) {
      t[std::size_t(i)] = elem_t(code % base);
      code /= base;
    }
    return t;
  }
  std::uint64_t encode(const std::vector<elem_t>& t) const {
    std::uint64_t code = 0;
    for (elem_t v : t) code = code * base + std::uint64_t(v);
    return code;
  }
  // Slotwise combination under an arbitrary addition on slot values.
  std::uint64_t combine(std::uint64_t a, std::uint64_t b,
                        const std::function<elem_t(elem_t, elem_t)>& add) const;
};

// Additive closure of `gens` inside a tuple space whose slot addition is
// `add`.  Returns the sorted member list (always contains 0).
std::vector<std::uint64_t> subgroup_closure(
    const TupleSpace& ts, const std::vector<std::uint64_t>& gens,
    const std::function<elem_t(elem_t, elem_t)>& add);

// Canonical quotient of a tuple space by a subgroup: every code is mapped to
// a class index, classes are represented by their lexicographically smallest
// member and ordered by it (class 0 is the subgroup itself).
struct CosetTable {
  std::vector<elem_t> class_of;        // size ts.total
  std::vector<std::uint64_t> reps;     // per class, ascending
};
CosetTable coset_table(const TupleSpace& ts, const std::vector<std::uint64_t>& subgroup,
                       const std::function<elem_t(elem_t, elem_t)>& add);

// Breadth-first closure of the subgroup generated by `gens` values, keeping
// for every reachable value one witness: the corresponding sum of payloads.
// Deterministic: generators are applied in the given order from a FIFO
// frontier, so the first witness found is always the same.  Keys and
// payloads are raw element vectors combined slotwise by the two additions.
class WitnessClosure {
 public:
  using Vec = std::vector<elem_t>;
  using SlotAdd = std::function<elem_t(elem_t, elem_t)>;

  // node_cap bounds the visited set (throws SizeCapExceeded beyond it).
  WitnessClosure(std::vector<std::pair<Vec, Vec>> gens, SlotAdd value_add,
                 SlotAdd payload_add, Vec zero_value, Vec zero_payload,
                 std::uint64_t node_cap);

  bool contains(const Vec& value) const { return table_.count(value) != 0; }
  // Witness for a reachable value (throws UnknownName if unreachable).
  const Vec& witness(const Vec& value) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::map<Vec, Vec> table_;
};

}  // namespace ttfkit

#endif  // TTFKIT_ABELIAN_HPP
