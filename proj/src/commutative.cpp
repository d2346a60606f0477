#include "ttfkit/commutative.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

namespace ttfkit {

namespace {

elem_t carrier_index(const std::vector<elem_t>& carrier, elem_t x) {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), x);
  if (it == carrier.end() || *it != x)
    throw Error("element escaped a local factor carrier");
  return elem_t(it - carrier.begin());
}

// Newton step for idempotents: preserves the class mod any nil ideal and
// squares the defect x^2 - x, so it reaches an idempotent in O(log |R|)
// steps once the class is idempotent modulo the radical.
elem_t lift_idempotent(const FiniteRing& r, elem_t x) {
  for (int step = 0; step < 64; ++step) {
    if (r.mul(x, x) == x) return x;
    elem_t x2 = r.mul(x, x);
    elem_t x3 = r.mul(x2, x);
    x = r.sub(r.zmul(3, x2), r.zmul(2, x3));
  }
  throw Error("idempotent lifting did not converge");
}

}  // namespace

LocalDecomposition decompose_local(const FiniteRing& ring, const Caps& caps) {
  if (!ring.is_commutative()) throw NotCommutative(ring.label());
  LocalDecomposition dec;
  if (ring.size() == 1) return dec;  // zero ring: empty product

  QuotientRing q = quotient_with_projection(ring, ring.jacobson_radical(),
                                            ring.label() + "/J", caps);

  // Primitive idempotents of the semisimple quotient: nonzero e whose only
  // sub-idempotents (f with fe = f) are 0 and e.
  std::vector<elem_t> prim;
  std::vector<elem_t> idem = q.ring.idempotents();
  for (elem_t e : idem) {
    if (e == q.ring.zero()) continue;
    bool primitive = true;
    for (elem_t f : idem) {
      if (f == q.ring.zero() || f == e) continue;
      if (q.ring.mul(f, e) == f) {
        primitive = false;
        break;
      }
    }
    if (primitive) prim.push_back(e);
  }

  std::vector<elem_t> lifted;
  for (elem_t e : prim) lifted.push_back(lift_idempotent(ring, q.reps[e]));
  std::sort(lifted.begin(), lifted.end());

  // Orthogonal and complete: e_i e_j is an idempotent inside the nilpotent
  // radical for i != j, hence zero, and 1 - sum is likewise zero.
  elem_t sum = ring.zero();
  for (std::size_t a = 0; a < lifted.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b)
      if (ring.mul(lifted[a], lifted[b]) != ring.zero())
        throw Error("lifted idempotents are not orthogonal");
    sum = ring.add(sum, lifted[a]);
  }
  if (sum != ring.one()) throw Error("lifted idempotents do not sum to 1");

  for (elem_t e : lifted) {
    std::vector<elem_t> carrier;
    carrier.reserve(std::size_t(ring.size()));
    for (elem_t x = 0; x < ring.size(); ++x) carrier.push_back(ring.mul(x, e));
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

    elem_t m = elem_t(carrier.size());
    std::vector<elem_t> add(std::size_t(m) * std::size_t(m));
    std::vector<elem_t> mul(std::size_t(m) * std::size_t(m));
    for (elem_t a = 0; a < m; ++a)
      for (elem_t b = 0; b < m; ++b) {
        add[std::size_t(a) * m + b] =
            carrier_index(carrier, ring.add(carrier[a], carrier[b]));
        mul[std::size_t(a) * m + b] =
            carrier_index(carrier, ring.mul(carrier[a], carrier[b]));
      }
    FiniteRing factor(std::move(add), std::move(mul), 0,
                      carrier_index(carrier, e),
                      ring.label() + "*e" + std::to_string(e), caps);
    if (factor.idempotents().size() != 2)
      throw Error("local factor has a nontrivial idempotent");

    std::vector<elem_t> project;
    project.reserve(std::size_t(ring.size()));
    for (elem_t x = 0; x < ring.size(); ++x)
      project.push_back(carrier_index(carrier, ring.mul(x, e)));
    dec.factors.push_back(LocalFactor{e, std::move(factor), std::move(carrier),
                                      std::move(project)});
  }
  return dec;
}

std::vector<int> support(const LocalDecomposition& dec, const Ideal& i) {
  std::vector<int> out;
  for (std::size_t j = 0; j < dec.factors.size(); ++j) {
    const LocalFactor& f = dec.factors[j];
    bool nonzero = false;
    for (elem_t m : i.members())
      if (f.project[m] != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) out.push_back(int(j));
  }
  return out;
}

CommutativeVerdict check_commutative_theorem(const Ideal& i, const Caps& caps) {
  const FiniteRing& r = i.ring();
  if (!is_idempotent_ideal(i)) throw NotIdempotent(r.label());
  LocalDecomposition dec = decompose_local(r, caps);

  CommutativeVerdict v;
  for (const LocalFactor& f : dec.factors)
    v.factor_sizes.push_back(f.ring.size());
  v.support = support(dec, i);
  // On each local factor an idempotent ideal is zero or everything; a
  // proper nonzero projection disproves the dichotomy.
  for (int j : v.support) {
    const LocalFactor& f = dec.factors[j];
    std::vector<char> hit(f.carrier.size(), 0);
    for (elem_t m : i.members()) hit[std::size_t(f.project[m])] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      v.holds = false;
      v.generator = -1;
      return v;
    }
  }

  elem_t e = r.zero();
  for (int j : v.support) e = r.add(e, dec.factors[j].idempotent);
  Ideal gen = ideal_generated(r, {e}, i.side());
  v.holds = (gen == i);
  v.generator = v.holds ? e : -1;
  return v;
}

}  // namespace ttfkit
