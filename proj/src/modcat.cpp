#include "ttfkit/modcat.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

namespace ttfkit {

namespace {

std::function<elem_t(elem_t, elem_t)> ring_add(const FiniteRing& r) {
  return [&r](elem_t a, elem_t b) { return r.add(a, b); };
}

std::string tuple_label(const std::vector<elem_t>& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

void check_module_budget(std::uint64_t size, std::uint64_t ring_size, const Caps& caps) {
  if (size > caps.module_cap)
    throw SizeCapExceeded("module carrier " + std::to_string(size) + " over cap " +
                          std::to_string(caps.module_cap));
  std::uint64_t bytes = (size * size + size * ring_size) * sizeof(elem_t);
  if (bytes > caps.table_bytes_cap)
    throw SizeCapExceeded("module tables need " + std::to_string(bytes) + " bytes");
}

}  // namespace

FinModule::FinModule(const FiniteRing& ring, Side side, std::vector<elem_t> add_tab,
                     std::vector<elem_t> act_tab, std::vector<elem_t> gen_list,
                     std::vector<std::vector<elem_t>> expr_list, std::optional<RMatrix> pres,
                     std::vector<std::string> labels, std::string name, const Caps& caps)
    : ring_(&ring), side_(side), add_(std::move(add_tab)), act_(std::move(act_tab)),
      gens_(std::move(gen_list)), expr_(std::move(expr_list)), pres_(std::move(pres)),
      labels_(std::move(labels)), name_(std::move(name)) {
  if (side_ == Side::two_sided) throw SideMismatch("module side must be left or right");
  std::uint64_t n2 = add_.size();
  elem_t n = 0;
  while (std::uint64_t(n) * n < n2) ++n;
  if (std::uint64_t(n) * n != n2 || n == 0)
    throw DimensionMismatch("module addition table must be square");
  size_ = n;
  check_module_budget(std::uint64_t(n), std::uint64_t(ring.size()), caps);
  if (act_.size() != std::size_t(n) * ring.size())
    throw DimensionMismatch("module action table shape");
  if (expr_.size() != std::size_t(n) || labels_.size() != std::size_t(n))
    throw DimensionMismatch("module metadata shape");

  neg_.assign(std::size_t(n), -1);
  for (elem_t x = 0; x < n; ++x) {
    if (add(x, 0) != x) throw AxiomViolation("module additive identity", x, -1, -1);
    for (elem_t y = 0; y < n; ++y) {
      if (add(x, y) != add(y, x)) throw AxiomViolation("module addition commutative", x, y, -1);
      if (add(x, y) == 0 && neg_[std::size_t(x)] < 0) neg_[std::size_t(x)] = y;
    }
    if (neg_[std::size_t(x)] < 0) throw AxiomViolation("module additive inverse", x, -1, -1);
    if (act(x, ring.one()) != x) throw AxiomViolation("module unital action", x, -1, -1);
  }
  for (elem_t r = 0; r < ring.size(); ++r)
    if (act(elem_t(0), r) != 0) throw AxiomViolation("module zero action", r, -1, -1);

  // Compatibility axioms.  Exhaustive within a budget, sampled (fixed seed)
  // beyond it -- the axioms are certain by construction for everything this
  // library builds, so sampling only guards against table corruption.
  std::uint64_t triples = std::uint64_t(n) * ring.size() * ring.size();
  auto check_mr = [&](elem_t m, elem_t r, elem_t s) {
    if (act(m, ring.add(r, s)) != add(act(m, r), act(m, s)))
      throw AxiomViolation("module action distributes over ring addition", m, r, s);
    // Right: m*(r*s) = (m*r)*s.  Left, where act(m,r) = r*m: (r*s)*m = r*(s*m).
    elem_t rhs = side_ == Side::right ? act(act(m, r), s) : act(act(m, s), r);
    if (act(m, ring.mul(r, s)) != rhs)
      throw AxiomViolation("module action associative", m, r, s);
  };
  auto check_mm = [&](elem_t m, elem_t mm, elem_t r) {
    if (act(add(m, mm), r) != add(act(m, r), act(mm, r)))
      throw AxiomViolation("module action distributes over module addition", m, mm, r);
  };
  if (triples <= 50000000ull) {
    for (elem_t m = 0; m < n; ++m)
      for (elem_t r = 0; r < ring.size(); ++r) {
        for (elem_t s = 0; s < ring.size(); ++s) check_mr(m, r, s);
        for (elem_t mm = 0; mm < n; ++mm) check_mm(m, mm, r);
      }
  } else {
    std::mt19937_64 rng(0x3c611u);
    for (int i = 0; i < 1000000; ++i) {
      check_mr(elem_t(rng() % n), elem_t(rng() % ring.size()), elem_t(rng() % ring.size()));
      check_mm(elem_t(rng() % n), elem_t(rng() % n), elem_t(rng() % ring.size()));
    }
  }

  // Generator expressions must reproduce every element.
  for (elem_t m = 0; m < n; ++m) {
    if (expr_[std::size_t(m)].size() != gens_.size())
      throw DimensionMismatch("expression width");
    elem_t acc = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      acc = add(acc, act(gens_[i], expr_[std::size_t(m)][i]));
    if (acc != m) throw AxiomViolation("generator expression", m, -1, -1);
  }
}

namespace {

// Shared builder: module structure on the canonical quotient of R^width by a
// subgroup (codes in a TupleSpace over the ring).
FinModule quotient_of_tuples(const FiniteRing& ring, Side side, const TupleSpace& ts,
                             const std::vector<std::uint64_t>& subgroup,
                             std::optional<RMatrix> pres, const std::string& name,
                             const Caps& caps) {
  CosetTable ct = coset_table(ts, subgroup, ring_add(ring));
  const std::uint64_t n = ct.reps.size();
  check_module_budget(n, std::uint64_t(ring.size()), caps);

  std::vector<std::vector<elem_t>> rep_tuples(n);
  for (std::uint64_t c = 0; c < n; ++c) rep_tuples[c] = ts.decode(ct.reps[c]);

  std::vector<elem_t> add(n * n), act(n * std::uint64_t(ring.size()));
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y)
      add[x * n + y] =
          ct.class_of[std::size_t(ts.combine(ct.reps[x], ct.reps[y], ring_add(ring)))];
    for (elem_t r = 0; r < ring.size(); ++r) {
      std::vector<elem_t> t = rep_tuples[x];
      for (elem_t& v : t) v = side == Side::right ? ring.mul(v, r) : ring.mul(r, v);
      act[x * std::uint64_t(ring.size()) + std::uint64_t(r)] =
          ct.class_of[std::size_t(ts.encode(t))];
    }
  }

  std::vector<elem_t> gens(std::size_t(ts.width));
  for (int i = 0; i < ts.width; ++i) {
    std::vector<elem_t> e(std::size_t(ts.width), ring.zero());
    e[std::size_t(i)] = ring.one();
    gens[std::size_t(i)] = ct.class_of[std::size_t(ts.encode(e))];
  }
  std::vector<std::vector<elem_t>> expr(n);
  std::vector<std::string> labels(n);
  for (std::uint64_t c = 0; c < n; ++c) {
    expr[c] = rep_tuples[c];
    labels[c] = tuple_label(rep_tuples[c]);
  }
  return FinModule(ring, side, std::move(add), std::move(act), std::move(gens),
                   std::move(expr), std::move(pres), std::move(labels), name, caps);
}

}  // namespace

FinModule module_from_presentation(const RMatrix& a, Side side, const Caps& caps) {
  const FiniteRing& ring = *a.ring;
  if (side == Side::two_sided) throw SideMismatch("presentation side");
  const int width = side == Side::right ? a.rows : a.cols;
  TupleSpace ts(std::uint64_t(ring.size()), width, caps.module_cap);
  // Relation subgroup: columns (right) or rows (left) under all scalings.
  std::vector<std::uint64_t> gens;
  if (side == Side::right) {
    for (int j = 0; j < a.cols; ++j)
      for (elem_t r = 0; r < ring.size(); ++r) {
        std::vector<elem_t> t(std::size_t(a.rows));
        for (int i = 0; i < a.rows; ++i) t[std::size_t(i)] = ring.mul(a.at(i, j), r);
        gens.push_back(ts.encode(t));
      }
  } else {
    for (int i = 0; i < a.rows; ++i)
      for (elem_t r = 0; r < ring.size(); ++r) {
        std::vector<elem_t> t(std::size_t(a.cols));
        for (int j = 0; j < a.cols; ++j) t[std::size_t(j)] = ring.mul(r, a.at(i, j));
        gens.push_back(ts.encode(t));
      }
  }
  std::vector<std::uint64_t> sub = subgroup_closure(ts, gens, ring_add(ring));
  std::ostringstream name;
  name << (side == Side::right ? "coker_r[" : "coker_l[") << a.rows << "x" << a.cols << "]";
  return quotient_of_tuples(ring, side, ts, sub, a, name.str(), caps);
}

FinModule regular_module(const FiniteRing& ring, Side side, const Caps& caps) {
  RMatrix a(ring, side == Side::right ? 1 : 0, side == Side::right ? 0 : 1);
  FinModule m = module_from_presentation(a, side, caps);
  return m;
}

FinModule cyclic_module(const FiniteRing& ring, const Ideal& k, Side side,
                        const Caps& caps) {
  if (&k.ring() != &ring) throw RingMismatch("cyclic_module");
  if (side == Side::two_sided) throw SideMismatch("cyclic module side");
  if (k.side() != Side::two_sided && k.side() != side)
    throw SideMismatch("cyclic module over an ideal of the wrong side");
  // Greedy module-generating set for K keeps the presentation small.
  std::vector<elem_t> kgens;
  {
    Ideal span = zero_ideal(ring, side);
    for (elem_t x : k.members()) {
      if (span.contains(x)) continue;
      kgens.push_back(x);
      std::vector<elem_t> g = kgens;
      span = ideal_generated(ring, g, side);
    }
  }
  RMatrix a(ring, side == Side::right ? 1 : int(kgens.size()),
            side == Side::right ? int(kgens.size()) : 1);
  for (std::size_t t = 0; t < kgens.size(); ++t) {
    if (side == Side::right) a.at(0, int(t)) = kgens[t];
    else a.at(int(t), 0) = kgens[t];
  }
  return module_from_presentation(a, side, caps);
}

FinModule ideal_module(const Ideal& i, Side side, const Caps& caps) {
  const FiniteRing& ring = i.ring();
  if (side == Side::two_sided) throw SideMismatch("ideal module side");
  if (i.side() != Side::two_sided && i.side() != side)
    throw SideMismatch("ideal lacks the requested module structure");
  const std::vector<elem_t>& mem = i.members();
  const std::uint64_t n = mem.size();
  std::vector<elem_t> pos(std::size_t(ring.size()), -1);
  for (std::uint64_t t = 0; t < n; ++t) pos[std::size_t(mem[t])] = elem_t(t);

  std::vector<elem_t> add(n * n), act(n * std::uint64_t(ring.size()));
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y)
      add[x * n + y] = pos[std::size_t(ring.add(mem[x], mem[y]))];
    for (elem_t r = 0; r < ring.size(); ++r)
      act[x * std::uint64_t(ring.size()) + std::uint64_t(r)] =
          pos[std::size_t(side == Side::right ? ring.mul(mem[x], r) : ring.mul(r, mem[x]))];
  }

  // Greedy module generators over the carrier.
  std::vector<elem_t> gens;
  {
    std::vector<char> in_span(std::size_t(n), 0);
    in_span[0] = 1;
    auto respan = [&]() {
      std::fill(in_span.begin(), in_span.end(), 0);
      std::deque<elem_t> work;
      in_span[0] = 1;
      work.push_back(0);
      std::vector<elem_t> have{0};
      for (elem_t g : gens)
        for (elem_t r = 0; r < ring.size(); ++r) {
          elem_t v = act[std::size_t(g) * ring.size() + r];
          if (!in_span[std::size_t(v)]) {
            in_span[std::size_t(v)] = 1;
            work.push_back(v);
            have.push_back(v);
          }
        }
      while (!work.empty()) {
        elem_t x = work.front();
        work.pop_front();
        for (std::size_t h = 0; h < have.size(); ++h) {
          elem_t s = add[std::size_t(x) * n + have[h]];
          if (!in_span[std::size_t(s)]) {
            in_span[std::size_t(s)] = 1;
            have.push_back(s);
            work.push_back(s);
          }
        }
      }
    };
    for (std::uint64_t x = 0; x < n; ++x)
      if (!in_span[std::size_t(x)]) {
        gens.push_back(elem_t(x));
        respan();
      }
  }

  // Expressions by breadth-first search from zero.
  std::vector<std::vector<elem_t>> expr(n);
  {
    std::vector<char> seen(std::size_t(n), 0);
    expr[0].assign(gens.size(), ring.zero());
    seen[0] = 1;
    std::deque<elem_t> work{0};
    while (!work.empty()) {
      elem_t x = work.front();
      work.pop_front();
      for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (elem_t r = 0; r < ring.size(); ++r) {
          elem_t y = add[std::size_t(x) * n +
                         act[std::size_t(gens[gi]) * ring.size() + r]];
          if (!seen[std::size_t(y)]) {
            seen[std::size_t(y)] = 1;
            expr[std::size_t(y)] = expr[std::size_t(x)];
            expr[std::size_t(y)][gi] = ring.add(expr[std::size_t(y)][gi], r);
            work.push_back(y);
          }
        }
    }
  }

  std::vector<std::string> labels(n);
  for (std::uint64_t t = 0; t < n; ++t) labels[t] = std::to_string(mem[t]);
  std::ostringstream name;
  name << "ideal<" << (side == Side::right ? "r" : "l") << ">#" << i.count();
  FinModule m(ring, side, std::move(add), std::move(act), std::move(gens),
              std::move(expr), std::nullopt, std::move(labels), name.str(), caps);
  m.carrier_values = mem;
  return m;
}

FinModule direct_sum(const FinModule& m, const FinModule& n, const Caps& caps) {
  if (&m.ring() != &n.ring()) throw RingMismatch("direct_sum");
  if (m.side() != n.side()) throw SideMismatch("direct_sum");
  const FiniteRing& ring = m.ring();
  const std::uint64_t sz = std::uint64_t(m.size()) * n.size();
  check_module_budget(sz, std::uint64_t(ring.size()), caps);
  auto pack = [&](elem_t a, elem_t b) { return elem_t(std::uint64_t(a) * n.size() + b); };
  std::vector<elem_t> add(sz * sz), act(sz * std::uint64_t(ring.size()));
  std::vector<std::vector<elem_t>> expr(sz);
  std::vector<std::string> labels(sz);
  const std::size_t gm = m.gens().size(), gn = n.gens().size();
  for (elem_t a = 0; a < m.size(); ++a)
    for (elem_t b = 0; b < n.size(); ++b) {
      elem_t x = pack(a, b);
      for (elem_t a2 = 0; a2 < m.size(); ++a2)
        for (elem_t b2 = 0; b2 < n.size(); ++b2)
          add[std::size_t(x) * sz + pack(a2, b2)] = pack(m.add(a, a2), n.add(b, b2));
      for (elem_t r = 0; r < ring.size(); ++r)
        act[std::size_t(x) * ring.size() + r] = pack(m.act(a, r), n.act(b, r));
      expr[std::size_t(x)].reserve(gm + gn);
      expr[std::size_t(x)] = m.expr(a);
      expr[std::size_t(x)].insert(expr[std::size_t(x)].end(), n.expr(b).begin(),
                                  n.expr(b).end());
      labels[std::size_t(x)] = m.label(a) + "|" + n.label(b);
    }
  std::vector<elem_t> gens;
  for (elem_t g : m.gens()) gens.push_back(pack(g, 0));
  for (elem_t g : n.gens()) gens.push_back(pack(0, g));
  return FinModule(ring, m.side(), std::move(add), std::move(act), std::move(gens),
                   std::move(expr), std::nullopt, std::move(labels),
                   m.name() + "+" + n.name(), caps);
}

std::vector<elem_t> submodule_span(const FinModule& m, const std::vector<elem_t>& seed) {
  std::vector<char> in(std::size_t(m.size()), 0);
  in[0] = 1;
  std::vector<elem_t> have{0};
  std::deque<elem_t> work;
  for (elem_t s : seed)
    for (elem_t r = 0; r < m.ring().size(); ++r) {
      elem_t v = m.act(s, r);
      if (!in[std::size_t(v)]) {
        in[std::size_t(v)] = 1;
        have.push_back(v);
        work.push_back(v);
      }
    }
  while (!work.empty()) {
    elem_t x = work.front();
    work.pop_front();
    for (std::size_t h = 0; h < have.size(); ++h) {
      elem_t s = m.add(x, have[h]);
      if (!in[std::size_t(s)]) {
        in[std::size_t(s)] = 1;
        have.push_back(s);
        work.push_back(s);
      }
    }
    for (elem_t r = 0; r < m.ring().size(); ++r) {
      elem_t s = m.act(x, r);
      if (!in[std::size_t(s)]) {
        in[std::size_t(s)] = 1;
        have.push_back(s);
        work.push_back(s);
      }
    }
  }
  std::sort(have.begin(), have.end());
  return have;
}

FinModule submodule_module(const FinModule& m, const std::vector<elem_t>& carrier,
                           const Caps& caps) {
  std::vector<elem_t> span_check = submodule_span(m, carrier);
  if (span_check != carrier)
    throw AxiomViolation("carrier is not a submodule", -1, -1, -1);
  const FiniteRing& ring = m.ring();
  const std::uint64_t n = carrier.size();
  std::vector<elem_t> pos(std::size_t(m.size()), -1);
  for (std::uint64_t t = 0; t < n; ++t) pos[std::size_t(carrier[t])] = elem_t(t);
  std::vector<elem_t> add(n * n), act(n * std::uint64_t(ring.size()));
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y)
      add[x * n + y] = pos[std::size_t(m.add(carrier[x], carrier[y]))];
    for (elem_t r = 0; r < ring.size(); ++r)
      act[x * ring.size() + std::uint64_t(r)] = pos[std::size_t(m.act(carrier[x], r))];
  }
  // Reuse the ideal_module generator/expression logic by building through a
  // temporary FinModule is circular; do the greedy + BFS inline instead.
  std::vector<elem_t> gens;
  std::vector<std::vector<elem_t>> expr(n);
  {
    std::vector<char> in_span(std::size_t(n), 0);
    std::vector<char> seen(std::size_t(n), 0);
    auto respan_and_expr = [&]() {
      std::fill(in_span.begin(), in_span.end(), 0);
      std::fill(seen.begin(), seen.end(), 0);
      in_span[0] = seen[0] = 1;
      expr[0].assign(gens.size(), ring.zero());
      std::deque<elem_t> work{0};
      while (!work.empty()) {
        elem_t x = work.front();
        work.pop_front();
        for (std::size_t gi = 0; gi < gens.size(); ++gi)
          for (elem_t r = 0; r < ring.size(); ++r) {
            elem_t y = add[std::size_t(x) * n + act[std::size_t(gens[gi]) * ring.size() + r]];
            if (!seen[std::size_t(y)]) {
              seen[std::size_t(y)] = in_span[std::size_t(y)] = 1;
              expr[std::size_t(y)] = expr[std::size_t(x)];
              expr[std::size_t(y)][gi] = ring.add(expr[std::size_t(y)][gi], r);
              work.push_back(y);
            }
          }
      }
    };
    respan_and_expr();
    for (std::uint64_t x = 0; x < n; ++x)
      if (!in_span[std::size_t(x)]) {
        gens.push_back(elem_t(x));
        respan_and_expr();
      }
  }
  std::vector<std::string> labels(n);
  for (std::uint64_t t = 0; t < n; ++t) labels[t] = m.label(carrier[t]);
  FinModule out(ring, m.side(), std::move(add), std::move(act), std::move(gens),
                std::move(expr), std::nullopt, std::move(labels),
                "sub#" + std::to_string(n) + "(" + m.name() + ")", caps);
  out.carrier_values = carrier;
  return out;
}

QuotientModule quotient_module(const FinModule& m, const std::vector<elem_t>& submodule,
                               const Caps& caps) {
  std::vector<elem_t> span_check = submodule_span(m, submodule);
  if (span_check != submodule)
    throw AxiomViolation("quotient by a non-submodule", -1, -1, -1);
  const FiniteRing& ring = m.ring();
  std::vector<elem_t> class_of(std::size_t(m.size()), -1);
  std::vector<elem_t> reps;
  for (elem_t x = 0; x < m.size(); ++x) {
    if (class_of[std::size_t(x)] >= 0) continue;
    elem_t cls = elem_t(reps.size());
    reps.push_back(x);
    for (elem_t s : submodule) class_of[std::size_t(m.add(x, s))] = cls;
  }
  const std::uint64_t n = reps.size();
  std::vector<elem_t> add(n * n), act(n * std::uint64_t(ring.size()));
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y)
      add[x * n + y] = class_of[std::size_t(m.add(reps[x], reps[y]))];
    for (elem_t r = 0; r < ring.size(); ++r)
      act[x * ring.size() + std::uint64_t(r)] = class_of[std::size_t(m.act(reps[x], r))];
  }
  std::vector<elem_t> gens;
  for (elem_t g : m.gens()) gens.push_back(class_of[std::size_t(g)]);
  std::vector<std::vector<elem_t>> expr(n);
  std::vector<std::string> labels(n);
  for (std::uint64_t c = 0; c < n; ++c) {
    expr[c] = m.expr(reps[c]);
    labels[c] = "[" + m.label(reps[c]) + "]";
  }
  QuotientModule q{FinModule(ring, m.side(), std::move(add), std::move(act),
                             std::move(gens), std::move(expr), std::nullopt,
                             std::move(labels), m.name() + "/sub", caps),
                   std::move(class_of)};
  return q;
}

// --- module maps ----------------------------------------------------------

bool ModuleHom::is_epi() const {
  std::vector<char> hit(std::size_t(dst->size()), 0);
  std::size_t count = 0;
  for (elem_t v : map)
    if (!hit[std::size_t(v)]) {
      hit[std::size_t(v)] = 1;
      ++count;
    }
  return count == std::size_t(dst->size());
}

bool ModuleHom::is_mono() const {
  std::size_t zeros = 0;
  for (elem_t v : map)
    if (v == 0) ++zeros;
  return zeros == 1;
}

ModuleHom hom_from_gen_images(const FinModule& src, const FinModule& dst,
                              const std::vector<elem_t>& images) {
  if (&src.ring() != &dst.ring()) throw RingMismatch("hom_from_gen_images");
  if (src.side() != dst.side()) throw SideMismatch("hom_from_gen_images");
  if (images.size() != src.gens().size())
    throw DimensionMismatch("generator image count");
  ModuleHom h{&src, &dst, std::vector<elem_t>(std::size_t(src.size()), 0)};
  for (elem_t m = 0; m < src.size(); ++m) {
    elem_t acc = 0;
    const std::vector<elem_t>& e = src.expr(m);
    for (std::size_t i = 0; i < images.size(); ++i)
      acc = dst.add(acc, dst.act(images[i], e[i]));
    h.map[std::size_t(m)] = acc;
  }
  // Well-definedness shows up as a violated law on the full table.
  for (elem_t x = 0; x < src.size(); ++x) {
    for (elem_t y = 0; y < src.size(); ++y)
      if (h.map[std::size_t(src.add(x, y))] !=
          dst.add(h.map[std::size_t(x)], h.map[std::size_t(y)]))
        throw AxiomViolation("hom additive", x, y, -1);
    for (elem_t r = 0; r < src.ring().size(); ++r)
      if (h.map[std::size_t(src.act(x, r))] != dst.act(h.map[std::size_t(x)], r))
        throw AxiomViolation("hom equivariant", x, r, -1);
  }
  return h;
}

ModuleHom HomGroup::materialize(std::size_t idx) const {
  return hom_from_gen_images(*src, *dst, images[idx]);
}

HomGroup hom_group(const FinModule& m, const FinModule& n, const Caps& caps) {
  if (&m.ring() != &n.ring()) throw RingMismatch("hom_group");
  if (m.side() != n.side()) throw SideMismatch("hom_group");
  RMatrix pres = presentation_of(m, caps);
  // Relation tuples (length = #generators) that the images must annihilate.
  std::vector<std::vector<elem_t>> rels;
  if (m.side() == Side::right) {
    for (int j = 0; j < pres.cols; ++j) {
      std::vector<elem_t> x(std::size_t(pres.rows));
      for (int i = 0; i < pres.rows; ++i) x[std::size_t(i)] = pres.at(i, j);
      rels.push_back(std::move(x));
    }
  } else {
    for (int i = 0; i < pres.rows; ++i) {
      std::vector<elem_t> x(std::size_t(pres.cols));
      for (int j = 0; j < pres.cols; ++j) x[std::size_t(j)] = pres.at(i, j);
      rels.push_back(std::move(x));
    }
  }
  const std::size_t g = m.gens().size();
  TupleSpace ts(std::uint64_t(n.size()), int(g), caps.module_cap);
  HomGroup out{&m, &n, {}};
  for (std::uint64_t code = 0; code < ts.total; ++code) {
    std::vector<elem_t> images = ts.decode(code);
    bool ok = true;
    for (const auto& x : rels) {
      elem_t acc = 0;
      for (std::size_t i = 0; i < g && ok; ++i) acc = n.add(acc, n.act(images[i], x[i]));
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.images.push_back(std::move(images));
  }
  return out;
}

// --- presentations and tensors ---------------------------------------------

RMatrix presentation_of(const FinModule& m, const Caps& caps) {
  if (m.presentation()) return *m.presentation();
  const FiniteRing& ring = m.ring();
  const std::size_t g = m.gens().size();
  TupleSpace ts(std::uint64_t(ring.size()), int(g), caps.module_cap);
  // Kernel of the free cover R^g ->> M.
  std::vector<std::uint64_t> kernel;
  for (std::uint64_t code = 0; code < ts.total; ++code) {
    std::vector<elem_t> x = ts.decode(code);
    elem_t acc = 0;
    for (std::size_t i = 0; i < g; ++i) acc = m.add(acc, m.act(m.gens()[i], x[i]));
    if (acc == 0) kernel.push_back(code);
  }
  // Greedy module-generating subset of the kernel.
  std::vector<std::uint64_t> chosen;
  std::vector<char> in_span(std::size_t(ts.total), 0);
  auto respan = [&]() {
    std::vector<std::uint64_t> gens;
    for (std::uint64_t c : chosen)
      for (elem_t r = 0; r < ring.size(); ++r) {
        std::vector<elem_t> t = ts.decode(c);
        for (elem_t& v : t)
          v = m.side() == Side::right ? ring.mul(v, r) : ring.mul(r, v);
        gens.push_back(ts.encode(t));
      }
    std::fill(in_span.begin(), in_span.end(), 0);
    for (std::uint64_t v : subgroup_closure(ts, gens, ring_add(ring)))
      in_span[std::size_t(v)] = 1;
  };
  respan();
  for (std::uint64_t code : kernel)
    if (!in_span[std::size_t(code)]) {
      chosen.push_back(code);
      respan();
    }
  // Right: generators are rows, relations are columns.  Left: transposed.
  RMatrix a(ring, m.side() == Side::right ? int(g) : int(chosen.size()),
            m.side() == Side::right ? int(chosen.size()) : int(g));
  for (std::size_t t = 0; t < chosen.size(); ++t) {
    std::vector<elem_t> x = ts.decode(chosen[t]);
    for (std::size_t i = 0; i < g; ++i) {
      if (m.side() == Side::right) a.at(int(i), int(t)) = x[i];
      else a.at(int(t), int(i)) = x[i];
    }
  }
  return a;
}

TensorProduct tensor(const FinModule& m, const FinModule& n, const Caps& caps) {
  if (&m.ring() != &n.ring()) throw RingMismatch("tensor");
  if (m.side() != Side::right || n.side() != Side::left)
    throw SideMismatch("tensor takes (right module, left module)");
  RMatrix a = presentation_of(m, caps);
  TupleSpace ts(std::uint64_t(n.size()), a.rows, caps.module_cap);
  // Image subgroup A*N^n inside N^m, generated column by column.
  std::vector<std::uint64_t> gens;
  for (int j = 0; j < a.cols; ++j)
    for (elem_t y = 0; y < n.size(); ++y) {
      std::vector<elem_t> t(std::size_t(a.rows));
      for (int i = 0; i < a.rows; ++i) t[std::size_t(i)] = n.act(y, a.at(i, j));
      gens.push_back(ts.encode(t));
    }
  auto nadd = [&n](elem_t x, elem_t y) { return n.add(x, y); };
  std::vector<std::uint64_t> sub = subgroup_closure(ts, gens, nadd);
  CosetTable ct = coset_table(ts, sub, nadd);
  TensorProduct t;
  t.space = ts;
  t.size = ct.reps.size();
  t.reps = std::move(ct.reps);
  t.class_of = std::move(ct.class_of);
  std::uint64_t bytes = t.size * t.size * sizeof(elem_t);
  if (bytes > caps.table_bytes_cap || t.size > caps.module_cap)
    throw SizeCapExceeded("tensor product carrier");
  t.add.assign(std::size_t(t.size * t.size), 0);
  for (std::uint64_t x = 0; x < t.size; ++x)
    for (std::uint64_t y = 0; y < t.size; ++y)
      t.add[std::size_t(x * t.size + y)] =
          t.class_of[std::size_t(ts.combine(t.reps[x], t.reps[y], nadd))];
  return t;
}

elem_t TensorProduct::pure(const FinModule& m, elem_t melt, const FinModule& n,
                           elem_t nelt) const {
  const std::vector<elem_t>& e = m.expr(melt);
  std::vector<elem_t> t(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) t[i] = n.act(nelt, e[i]);
  return class_of[std::size_t(space.encode(t))];
}

MultiplicationMap multiplication_map(const FinModule& m, const Ideal& i, const Caps& caps) {
  if (&m.ring() != &i.ring()) throw RingMismatch("multiplication_map");
  if (m.side() != Side::right) throw SideMismatch("multiplication_map wants a right module");
  if (i.side() == Side::right)
    throw SideMismatch("multiplication_map needs a left-usable ideal");
  FinModule n = ideal_module(i, Side::left, caps);
  MultiplicationMap mm{tensor(m, n, caps), {}, false, false, false};
  mm.map.assign(std::size_t(mm.domain.size), 0);
  // Class of (y_1..y_m) maps to sum_i gen_i * y_i in M.
  for (std::uint64_t c = 0; c < mm.domain.size; ++c) {
    std::vector<elem_t> t = mm.domain.space.decode(mm.domain.reps[c]);
    elem_t acc = 0;
    for (std::size_t k = 0; k < t.size(); ++k)
      acc = m.add(acc, m.act(m.gens()[k], n.carrier_values[std::size_t(t[k])]));
    mm.map[std::size_t(c)] = acc;
  }
  std::size_t zeros = 0;
  std::vector<char> hit(std::size_t(m.size()), 0);
  std::size_t count = 0;
  for (elem_t v : mm.map) {
    if (v == 0) ++zeros;
    if (!hit[std::size_t(v)]) {
      hit[std::size_t(v)] = 1;
      ++count;
    }
  }
  mm.mono = zeros == 1;
  mm.epi = count == std::size_t(m.size());
  mm.iso = mm.mono && mm.epi;
  return mm;
}

MultiplicationMap multiplication_map_left(const Ideal& k, const FinModule& n,
                                          const Caps& caps) {
  if (&k.ring() != &n.ring()) throw RingMismatch("multiplication_map_left");
  if (n.side() != Side::left) throw SideMismatch("multiplication_map_left wants a left module");
  if (k.side() == Side::left)
    throw SideMismatch("multiplication_map_left needs a right-usable ideal");
  FinModule km = ideal_module(k, Side::right, caps);
  MultiplicationMap mm{tensor(km, n, caps), {}, false, false, false};
  mm.map.assign(std::size_t(mm.domain.size), 0);
  for (std::uint64_t c = 0; c < mm.domain.size; ++c) {
    std::vector<elem_t> t = mm.domain.space.decode(mm.domain.reps[c]);
    elem_t acc = 0;
    for (std::size_t s = 0; s < t.size(); ++s)
      acc = n.add(acc, n.act(t[s], km.carrier_values[std::size_t(km.gens()[s])]));
    mm.map[std::size_t(c)] = acc;
  }
  std::size_t zeros = 0;
  std::vector<char> hit(std::size_t(n.size()), 0);
  std::size_t count = 0;
  for (elem_t v : mm.map) {
    if (v == 0) ++zeros;
    if (!hit[std::size_t(v)]) {
      hit[std::size_t(v)] = 1;
      ++count;
    }
  }
  mm.mono = zeros == 1;
  mm.epi = count == std::size_t(n.size());
  mm.iso = mm.mono && mm.epi;
  return mm;
}

// --- torsion-theoretic classification --------------------------------------

std::vector<elem_t> submodule_MI(const FinModule& m, const Ideal& i) {
  if (&m.ring() != &i.ring()) throw RingMismatch("submodule_MI");
  if (i.side() != Side::two_sided) throw SideMismatch("submodule_MI wants a two-sided ideal");
  std::vector<elem_t> seed;
  for (elem_t g : m.gens())
    for (elem_t x : i.members()) seed.push_back(m.act(g, x));
  return submodule_span(m, seed);
}

std::vector<elem_t> annihilator_of_ideal(const FinModule& m, const Ideal& i) {
  if (&m.ring() != &i.ring()) throw RingMismatch("annihilator_of_ideal");
  std::vector<elem_t> out;
  for (elem_t x = 0; x < m.size(); ++x) {
    bool killed = true;
    for (elem_t v : i.members())
      if (m.act(x, v) != 0) {
        killed = false;
        break;
      }
    if (killed) out.push_back(x);
  }
  return out;
}

TTFFlags classify_ttf(const FinModule& m, const Ideal& i) {
  TTFFlags f;
  std::vector<elem_t> mi = submodule_MI(m, i);
  f.in_C = mi.size() == std::size_t(m.size());
  f.in_T = mi.size() == 1;
  f.in_F = annihilator_of_ideal(m, i).size() == 1;
  return f;
}

bool is_in_X_I(const FinModule& m, const Ideal& i, const Caps& caps) {
  if (i.side() != Side::two_sided) throw SideMismatch("is_in_X_I wants a two-sided ideal");
  if (!is_idempotent_ideal(i)) throw NotIdempotent("is_in_X_I");
  return multiplication_map(m, i, caps).iso;
}

// --- homological predicates -------------------------------------------------

bool is_split_epi(const ModuleHom& p, const Caps& caps) {
  const FinModule& y = *p.src;
  const FinModule& z = *p.dst;
  if (!p.is_epi()) throw NotEpi("is_split_epi");
  // Solve p(s(z_j)) = z_j with s respecting Z's relations, as an additive
  // equation over ker(p)^g: s(z_j) = v_j + w_j with p(v_j) = z_j fixed and
  // w_j ranging over ker(p).
  const std::size_t g = z.gens().size();
  std::vector<elem_t> v(g, -1);
  for (std::size_t j = 0; j < g; ++j)
    for (elem_t cand = 0; cand < y.size(); ++cand)
      if (p.map[std::size_t(cand)] == z.gens()[j]) {
        v[j] = cand;  // first preimage in carrier order: canonical choice
        break;
      }
  std::vector<elem_t> kernel;
  for (elem_t x = 0; x < y.size(); ++x)
    if (p.map[std::size_t(x)] == 0) kernel.push_back(x);

  RMatrix pres = presentation_of(z, caps);
  std::vector<std::vector<elem_t>> rels;
  if (z.side() == Side::right) {
    for (int j = 0; j < pres.cols; ++j) {
      std::vector<elem_t> x(std::size_t(pres.rows));
      for (int i = 0; i < pres.rows; ++i) x[std::size_t(i)] = pres.at(i, j);
      rels.push_back(std::move(x));
    }
  } else {
    for (int i = 0; i < pres.rows; ++i) {
      std::vector<elem_t> x(std::size_t(pres.cols));
      for (int j = 0; j < pres.cols; ++j) x[std::size_t(j)] = pres.at(i, j);
      rels.push_back(std::move(x));
    }
  }
  const std::size_t t = rels.size();
  if (t == 0) return true;  // free target: the preimages already split it

  // Target: for each relation X, sum_j w_j x_j = -(sum_j v_j x_j).
  WitnessClosure::Vec target(t);
  for (std::size_t ti = 0; ti < t; ++ti) {
    elem_t acc = 0;
    for (std::size_t j = 0; j < g; ++j) acc = y.add(acc, y.act(v[j], rels[ti][j]));
    target[ti] = y.neg(acc);
  }
  std::vector<std::pair<WitnessClosure::Vec, WitnessClosure::Vec>> gens;
  for (elem_t k : kernel) {
    if (k == 0) continue;
    for (std::size_t j = 0; j < g; ++j) {
      WitnessClosure::Vec value(t), payload(g, 0);
      for (std::size_t ti = 0; ti < t; ++ti) value[ti] = y.act(k, rels[ti][j]);
      payload[j] = k;
      gens.emplace_back(std::move(value), std::move(payload));
    }
  }
  auto yadd = [&y](elem_t a, elem_t b) { return y.add(a, b); };
  WitnessClosure wc(std::move(gens), yadd, yadd, WitnessClosure::Vec(t, 0),
                    WitnessClosure::Vec(g, 0), 1u << 22);
  (void)caps;
  return wc.contains(target);
}

bool is_pure_epi(const ModuleHom& p, const Caps& caps) {
  return is_split_epi(p, caps);
}

bool is_projective(const FinModule& m, const Caps& caps) {
  RMatrix free_pres(m.ring(), m.side() == Side::right ? int(m.gens().size()) : 0,
                    m.side() == Side::right ? 0 : int(m.gens().size()));
  FinModule free = module_from_presentation(free_pres, m.side(), caps);
  ModuleHom cover = hom_from_gen_images(free, m, m.gens());
  return is_split_epi(cover, caps);
}

bool is_flat(const FinModule& m, const Caps& caps) {
  const FiniteRing& ring = m.ring();
  if (m.side() == Side::right) {
    for (const Ideal& l : enumerate_ideals(ring, Side::left, caps))
      if (!multiplication_map(m, l, caps).mono) return false;
  } else {
    for (const Ideal& k : enumerate_ideals(ring, Side::right, caps))
      if (!multiplication_map_left(k, m, caps).mono) return false;
  }
  return true;
}

Ideal trace_ideal(const FiniteRing& ring, const std::vector<const FinModule*>& mods,
                  const Caps& caps) {
  FinModule reg = regular_module(ring, Side::right, caps);
  std::vector<char> in(std::size_t(ring.size()), 0);
  in[std::size_t(ring.zero())] = 1;
  for (const FinModule* m : mods) {
    if (m->side() != Side::right) throw SideMismatch("trace_ideal wants right modules");
    HomGroup h = hom_group(*m, reg, caps);
    // reg's carrier is R itself: element index == ring element.
    for (const auto& images : h.images)
      for (elem_t yi : images)
        for (elem_t r = 0; r < ring.size(); ++r) in[std::size_t(ring.mul(yi, r))] = 1;
  }
  // Additive closure, then the two-sidedness assertion.
  std::vector<elem_t> seed;
  for (elem_t x = 0; x < ring.size(); ++x)
    if (in[std::size_t(x)]) seed.push_back(x);
  TupleSpace ts(std::uint64_t(ring.size()), 1, caps.module_cap);
  std::vector<std::uint64_t> codes;
  for (elem_t s : seed) codes.push_back(std::uint64_t(s));
  std::vector<std::uint64_t> span = subgroup_closure(ts, codes, ring_add(ring));
  std::vector<char> membership(std::size_t(ring.size()), 0);
  for (std::uint64_t v : span) membership[std::size_t(v)] = 1;
  Ideal tr(ring, Side::two_sided, std::move(membership));
  for (elem_t x : tr.members())
    for (elem_t r = 0; r < ring.size(); ++r)
      if (!tr.contains(ring.mul(r, x)) || !tr.contains(ring.mul(x, r)))
        throw AxiomViolation("trace ideal two-sided", r, x, -1);
  return tr;
}

FinModule transpose(const FinModule& m, const Caps& caps) {
  RMatrix a = presentation_of(m, caps);
  return module_from_presentation(a, m.side() == Side::right ? Side::left : Side::right,
                                  caps);
}

}  // namespace ttfkit
