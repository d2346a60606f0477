#include "ttfkit/ideals.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ttfkit {

namespace {

// Additive closure of a seed set inside the ring, as a membership vector.
std::vector<char> additive_closure(const FiniteRing& r, std::vector<char> in) {
  std::deque<elem_t> work;
  in[std::size_t(r.zero())] = 1;
  for (elem_t x = 0; x < r.size(); ++x)
    if (in[std::size_t(x)]) work.push_back(x);
  std::vector<elem_t> have(work.begin(), work.end());
  while (!work.empty()) {
    elem_t x = work.front();
    work.pop_front();
    for (std::size_t i = 0; i < have.size(); ++i) {
      elem_t s = r.add(x, have[i]);
      if (!in[std::size_t(s)]) {
        in[std::size_t(s)] = 1;
        have.push_back(s);
        work.push_back(s);
      }
    }
  }
  return in;
}

const char* side_name(Side s) {
  switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    default: return "two-sided";
  }
}

}  // namespace

Ideal::Ideal(const FiniteRing& ring, Side side, std::vector<char> membership)
    : ring_(&ring), side_(side), membership_(std::move(membership)) {
  if (membership_.size() != std::size_t(ring.size()))
    throw DimensionMismatch("ideal membership vector size");
  count_ = 0;
  for (elem_t x = 0; x < ring.size(); ++x)
    if (membership_[std::size_t(x)]) {
      members_.push_back(x);
      ++count_;
    }
}

bool Ideal::subset_of(const Ideal& o) const {
  if (ring_ != o.ring_) throw RingMismatch("subset_of");
  for (elem_t m : members_)
    if (!o.contains(m)) return false;
  return true;
}

Ideal ideal_generated(const FiniteRing& ring, const std::vector<elem_t>& gens, Side side) {
  std::vector<char> in(std::size_t(ring.size()), 0);
  for (elem_t g : gens) {
    if (g < 0 || g >= ring.size()) throw DimensionMismatch("generator out of range");
    // The additive span of these products is already closed under the side's
    // scalar multiplications, so one additive closure finishes the job.
    switch (side) {
      case Side::left:
        for (elem_t r = 0; r < ring.size(); ++r) in[std::size_t(ring.mul(r, g))] = 1;
        break;
      case Side::right:
        for (elem_t r = 0; r < ring.size(); ++r) in[std::size_t(ring.mul(g, r))] = 1;
        break;
      case Side::two_sided:
        for (elem_t r = 0; r < ring.size(); ++r)
          for (elem_t s = 0; s < ring.size(); ++s)
            in[std::size_t(ring.mul(ring.mul(r, g), s))] = 1;
        break;
    }
  }
  return Ideal(ring, side, additive_closure(ring, std::move(in)));
}

Ideal zero_ideal(const FiniteRing& ring, Side side) {
  std::vector<char> in(std::size_t(ring.size()), 0);
  in[std::size_t(ring.zero())] = 1;
  return Ideal(ring, side, std::move(in));
}

Ideal whole_ring_ideal(const FiniteRing& ring, Side side) {
  return Ideal(ring, side, std::vector<char>(std::size_t(ring.size()), 1));
}

Ideal ideal_from_members(const FiniteRing& ring, const std::vector<elem_t>& members,
                         Side side) {
  std::vector<char> in(std::size_t(ring.size()), 0);
  for (elem_t m : members) {
    if (m < 0 || m >= ring.size()) throw DimensionMismatch("member out of range");
    in[std::size_t(m)] = 1;
  }
  if (!in[std::size_t(ring.zero())])
    throw AxiomViolation("ideal contains zero", ring.zero(), -1, -1);
  Ideal cand(ring, side, in);
  for (elem_t x : cand.members()) {
    for (elem_t y : cand.members())
      if (!cand.contains(ring.add(x, y)))
        throw AxiomViolation("ideal closed under addition", x, y, -1);
    for (elem_t r = 0; r < ring.size(); ++r) {
      if (side != Side::right && !cand.contains(ring.mul(r, x)))
        throw AxiomViolation("ideal closed under left multiplication", r, x, -1);
      if (side != Side::left && !cand.contains(ring.mul(x, r)))
        throw AxiomViolation("ideal closed under right multiplication", x, r, -1);
    }
  }
  return cand;
}

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  if (&i.ring() != &j.ring()) throw RingMismatch("ideal_sum");
  if (i.side() != j.side())
    throw SideMismatch(std::string("ideal_sum: ") + side_name(i.side()) + " vs " +
                       side_name(j.side()));
  std::vector<char> in = i.membership();
  for (elem_t m : j.members()) in[std::size_t(m)] = 1;
  return Ideal(i.ring(), i.side(), additive_closure(i.ring(), std::move(in)));
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  if (&i.ring() != &j.ring()) throw RingMismatch("ideal_product");
  const FiniteRing& r = i.ring();
  std::vector<char> in(std::size_t(r.size()), 0);
  for (elem_t x : i.members())
    for (elem_t y : j.members()) in[std::size_t(r.mul(x, y))] = 1;
  Ideal prod(r, i.side(), additive_closure(r, std::move(in)));
  if (i.side() == Side::two_sided && j.side() == Side::two_sided) {
    // Closure of the span under outer multiplications is automatic; assert it.
    for (elem_t m : prod.members())
      for (elem_t s = 0; s < r.size(); ++s)
        if (!prod.contains(r.mul(s, m)) || !prod.contains(r.mul(m, s)))
          throw AxiomViolation("ideal product two-sided", s, m, -1);
  }
  return prod;
}

bool is_idempotent_ideal(const Ideal& i) {
  return ideal_product(i, i) == i;
}

std::vector<Ideal> enumerate_ideals(const FiniteRing& ring, Side side, const Caps& caps) {
  // Every ideal is a finite sum of principal ideals, so the join-closure of
  // the principal ideals is the full lattice.
  std::map<std::vector<char>, std::size_t> seen;
  std::vector<Ideal> out;
  auto push = [&](Ideal&& cand) {
    if (seen.emplace(cand.membership(), out.size()).second) {
      out.push_back(std::move(cand));
      if (out.size() > caps.ideal_count_cap)
        throw EnumerationCapExceeded("ideal enumeration over " +
                                     std::to_string(caps.ideal_count_cap));
      return true;
    }
    return false;
  };
  push(zero_ideal(ring, side));
  for (elem_t x = 0; x < ring.size(); ++x)
    push(ideal_generated(ring, {x}, side));
  // Worklist join closure: new ideals are joined against everything found.
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      push(ideal_sum(out[a], out[b]));
  std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x.members() < y.members();
  });
  return out;
}

std::vector<Ideal> enumerate_two_sided_ideals(const FiniteRing& ring, const Caps& caps) {
  return enumerate_ideals(ring, Side::two_sided, caps);
}

std::vector<Ideal> enumerate_idempotent_ideals(const FiniteRing& ring, const Caps& caps) {
  std::vector<Ideal> all = enumerate_two_sided_ideals(ring, caps);
  std::vector<Ideal> out;
  for (auto& i : all)
    if (is_idempotent_ideal(i)) out.push_back(std::move(i));
  return out;
}

Ideal idempotent_element_closure(const Ideal& i) {
  std::vector<elem_t> gens;
  const FiniteRing& r = i.ring();
  for (elem_t x : i.members())
    if (r.mul(x, x) == x) gens.push_back(x);
  Ideal closure = ideal_generated(r, gens, i.side());
  if (!closure.subset_of(i))
    throw AxiomViolation("idempotent closure inside ideal", -1, -1, -1);
  return closure;
}

Ideal radical_ideal(const FiniteRing& ring) {
  std::vector<char> in(std::size_t(ring.size()), 0);
  for (elem_t x : ring.jacobson_radical()) in[std::size_t(x)] = 1;
  return Ideal(ring, Side::two_sided, std::move(in));
}

}  // namespace ttfkit
