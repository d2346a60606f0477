#include "ttfkit/abelian.hpp"

#include <algorithm>
#include <deque>

namespace ttfkit {

TupleSpace::TupleSpace(std::uint64_t base_, int width_, std::uint64_t cap)
    : base(base_), width(width_), total(1) {
  if (base_ == 0) throw DimensionMismatch("tuple space over empty base");
  for (int i = 0; i < width_; ++i) {
    if (total > cap / base_)  // total*base would pass cap (or overflow)
      throw SizeCapExceeded("tuple space " + std::to_string(base_) + "^" +
                            std::to_string(width_) + " over cap " + std::to_string(cap));
    total *= base_;
  }
}

std::uint64_t TupleSpace::combine(std::uint64_t a, std::uint64_t b,
                                  const std::function<elem_t(elem_t, elem_t)>& add) const {
  std::uint64_t out = 0;
  std::uint64_t place = total / (base ? base : 1);
  // Peel digits most-significant first so the output keeps the encoding.
  std::uint64_t ra = a, rb = b;
  for (int i = 0; i < width; ++i) {
    elem_t da = elem_t(ra / place), db = elem_t(rb / place);
    ra %= place;
    rb %= place;
    out = out * base + std::uint64_t(add(da, db));
    place /= base;
    if (place == 0) place = 1;
  }
  return out;
}

std::vector<std::uint64_t> subgroup_closure(
    const TupleSpace& ts, const std::vector<std::uint64_t>& gens,
    const std::function<elem_t(elem_t, elem_t)>& add) {
  std::vector<char> in(std::size_t(ts.total), 0);
  in[0] = 1;
  std::vector<std::uint64_t> members{0};
  std::deque<std::uint64_t> work{0};
  // Closing under "add one generator" reaches every finite sum; inverses come
  // along for free in a finite group.
  while (!work.empty()) {
    std::uint64_t x = work.front();
    work.pop_front();
    for (std::uint64_t g : gens) {
      std::uint64_t y = ts.combine(x, g, add);
      if (!in[std::size_t(y)]) {
        in[std::size_t(y)] = 1;
        members.push_back(y);
        work.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

CosetTable coset_table(const TupleSpace& ts, const std::vector<std::uint64_t>& subgroup,
                       const std::function<elem_t(elem_t, elem_t)>& add) {
  CosetTable ct;
  ct.class_of.assign(std::size_t(ts.total), -1);
  for (std::uint64_t t = 0; t < ts.total; ++t) {
    if (ct.class_of[std::size_t(t)] >= 0) continue;
    elem_t cls = elem_t(ct.reps.size());
    ct.reps.push_back(t);  // smallest member: we sweep codes in ascending order
    for (std::uint64_t s : subgroup)
      ct.class_of[std::size_t(ts.combine(t, s, add))] = cls;
  }
  return ct;
}

WitnessClosure::WitnessClosure(std::vector<std::pair<Vec, Vec>> gens, SlotAdd value_add,
                               SlotAdd payload_add, Vec zero_value, Vec zero_payload,
                               std::uint64_t node_cap) {
  auto vec_add = [](const Vec& a, const Vec& b, const SlotAdd& add) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = add(a[i], b[i]);
    return out;
  };
  table_.emplace(zero_value, zero_payload);
  std::deque<const Vec*> work;
  work.push_back(&table_.begin()->first);
  while (!work.empty()) {
    Vec value = *work.front();
    Vec payload = table_.at(value);
    work.pop_front();
    for (const auto& [gv, gp] : gens) {
      Vec nv = vec_add(value, gv, value_add);
      if (table_.count(nv)) continue;
      auto it = table_.emplace(nv, vec_add(payload, gp, payload_add)).first;
      if (table_.size() > node_cap)
        throw SizeCapExceeded("witness closure over " + std::to_string(node_cap) + " nodes");
      work.push_back(&it->first);
    }
  }
}

const WitnessClosure::Vec& WitnessClosure::witness(const Vec& value) const {
  auto it = table_.find(value);
  if (it == table_.end()) throw UnknownName("witness for unreachable value");
  return it->second;
}

}  // namespace ttfkit
