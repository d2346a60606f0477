#include "ttfkit/finring.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace ttfkit {

Caps Caps::defaults() {
  Caps c;
  if (const char* env = std::getenv("TTFKIT_CAP_BYTES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) c.table_bytes_cap = v;
  }
  return c;
}

namespace {

void check_table_budget(std::uint64_t n, const Caps& caps, const char* what) {
  if (n > caps.ring_size_cap)
    throw SizeCapExceeded(std::string(what) + ": size " + std::to_string(n) +
                          " over ring cap " + std::to_string(caps.ring_size_cap));
  std::uint64_t bytes = 2ull * n * n * sizeof(elem_t);
  if (bytes > caps.table_bytes_cap)
    throw SizeCapExceeded(std::string(what) + ": tables need " + std::to_string(bytes) +
                          " bytes, cap " + std::to_string(caps.table_bytes_cap));
}

}  // namespace

FiniteRing::FiniteRing(std::vector<elem_t> add, std::vector<elem_t> mul, elem_t zero,
                       elem_t one, std::string label, const Caps& caps)
    : zero_(zero), one_(one), add_(std::move(add)), mul_(std::move(mul)),
      label_(std::move(label)) {
  std::uint64_t n2 = add_.size();
  elem_t n = elem_t(0);
  while (std::uint64_t(n) * n < n2) ++n;
  if (std::uint64_t(n) * n != n2 || mul_.size() != n2 || n == 0)
    throw DimensionMismatch("ring tables must be square and equally sized");
  n_ = n;
  check_table_budget(std::uint64_t(n_), caps, "ring");
  if (zero_ != 0)
    throw AxiomViolation("zero element must have index 0", zero_, -1, -1);
  if (one_ < 0 || one_ >= n_)
    throw AxiomViolation("one out of range", one_, -1, -1);
  for (elem_t v : add_)
    if (v < 0 || v >= n_) throw AxiomViolation("addition closure", v, -1, -1);
  for (elem_t v : mul_)
    if (v < 0 || v >= n_) throw AxiomViolation("multiplication closure", v, -1, -1);
  neg_.assign(std::size_t(n_), -1);
  for (elem_t a = 0; a < n_; ++a) {
    for (elem_t b = 0; b < n_; ++b)
      if (add_[std::size_t(a) * n_ + b] == zero_) {
        neg_[std::size_t(a)] = b;
        break;
      }
    if (neg_[std::size_t(a)] < 0)
      throw AxiomViolation("additive inverse", a, -1, -1);
  }
}

bool FiniteRing::is_unit(elem_t x) const {
  // Finite rings have no one-sided units: x*y == 1 forces y*x == 1 (left
  // multiplication by x is injective iff surjective on a finite set).  We
  // still confirm both sides.
  for (elem_t y = 0; y < n_; ++y)
    if (mul(x, y) == one_ && mul(y, x) == one_) return true;
  return false;
}

std::vector<elem_t> FiniteRing::idempotents() const {
  std::vector<elem_t> out;
  for (elem_t x = 0; x < n_; ++x)
    if (mul(x, x) == x) out.push_back(x);
  return out;
}

std::vector<elem_t> FiniteRing::jacobson_radical() const {
  std::vector<elem_t> out;
  for (elem_t x = 0; x < n_; ++x) {
    bool in = true;
    for (elem_t r = 0; r < n_ && in; ++r)
      if (!is_unit(sub(one_, mul(r, x)))) in = false;
    if (in) out.push_back(x);
  }
  return out;
}

bool FiniteRing::is_commutative() const {
  for (elem_t a = 0; a < n_; ++a)
    for (elem_t b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

elem_t FiniteRing::zmul(long long k, elem_t x) const {
  elem_t acc = zero_;
  elem_t v = k >= 0 ? x : neg(x);
  unsigned long long m = k >= 0 ? (unsigned long long)k : (unsigned long long)(-k);
  while (m) {
    if (m & 1) acc = add(acc, v);
    v = add(v, v);
    m >>= 1;
  }
  return acc;
}

FiniteRing build_ring(std::vector<elem_t> add, std::vector<elem_t> mul, elem_t zero,
                      elem_t one, std::string label, const Caps& caps) {
  FiniteRing r(std::move(add), std::move(mul), zero, one, std::move(label), caps);
  const elem_t n = r.size();

  // Unary and binary axioms are always exhaustive.
  for (elem_t a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a) throw AxiomViolation("additive identity", a, -1, -1);
    if (r.mul(a, r.one()) != a) throw AxiomViolation("right unital", a, -1, -1);
    if (r.mul(r.one(), a) != a) throw AxiomViolation("left unital", a, -1, -1);
  }
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b)
      if (r.add(a, b) != r.add(b, a))
        throw AxiomViolation("addition commutative", a, b, -1);

  auto check_triple = [&](elem_t a, elem_t b, elem_t c) {
    if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
      throw AxiomViolation("addition associative", a, b, c);
    if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
      throw AxiomViolation("multiplication associative", a, b, c);
    if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
      throw AxiomViolation("left distributive", a, b, c);
    if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
      throw AxiomViolation("right distributive", a, b, c);
  };

  if (std::uint64_t(n) <= caps.axiom_exhaustive_limit) {
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b)
        for (elem_t c = 0; c < n; ++c) check_triple(a, b, c);
  } else {
    // Sampled triple checks with a fixed seed keep validation deterministic.
    std::mt19937_64 rng(0x7746b15u);
    for (std::uint64_t i = 0; i < caps.axiom_sample_count; ++i)
      check_triple(elem_t(rng() % n), elem_t(rng() % n), elem_t(rng() % n));
  }
  return r;
}

FiniteRing zn(std::uint64_t n, const Caps& caps) {
  if (n == 0) throw DimensionMismatch("zn(0)");
  check_table_budget(n, caps, "zn");
  const elem_t m = elem_t(n);
  std::vector<elem_t> add(n * n), mul(n * n);
  for (elem_t a = 0; a < m; ++a)
    for (elem_t b = 0; b < m; ++b) {
      add[std::size_t(a) * m + b] = elem_t((std::uint64_t(a) + b) % n);
      mul[std::size_t(a) * m + b] = elem_t((std::uint64_t(a) * b) % n);
    }
  return build_ring(std::move(add), std::move(mul), 0, n == 1 ? 0 : 1,
                    "zn(" + std::to_string(n) + ")", caps);
}

FiniteRing gf(std::uint64_t p, const Caps& caps) {
  if (p < 2) throw NotPrime("gf(" + std::to_string(p) + ")");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw NotPrime("gf(" + std::to_string(p) + ")");
  // A prime field is zn(p) with a different label.
  const elem_t m = elem_t(p);
  std::vector<elem_t> add(p * p), mul(p * p);
  for (elem_t a = 0; a < m; ++a)
    for (elem_t b = 0; b < m; ++b) {
      add[std::size_t(a) * m + b] = elem_t((std::uint64_t(a) + b) % p);
      mul[std::size_t(a) * m + b] = elem_t((std::uint64_t(a) * b) % p);
    }
  return build_ring(std::move(add), std::move(mul), 0, 1,
                    "gf(" + std::to_string(p) + ")", caps);
}

namespace {

// Positions of stored entries for k x k matrices: all of them (row-major) or
// the upper triangle only.
std::vector<std::pair<int, int>> stored_positions(int k, bool upper_only) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (!upper_only || i <= j) pos.emplace_back(i, j);
  return pos;
}

struct MatrixEncoding {
  const FiniteRing* base;
  int k;
  std::vector<std::pair<int, int>> pos;  // most significant digit first
  std::uint64_t count;                   // |base|^#pos

  // digits[t] = entry at pos[t]
  std::vector<elem_t> decode(std::uint64_t idx) const {
    std::vector<elem_t> digits(pos.size());
    for (std::size_t t = pos.size(); t-- > 0;) {
      digits[t] = elem_t(idx % base->size());
      idx /= base->size();
    }
    return digits;
  }
  std::uint64_t encode(const std::vector<elem_t>& digits) const {
    std::uint64_t idx = 0;
    for (elem_t d : digits) idx = idx * base->size() + std::uint64_t(d);
    return idx;
  }
  // Full k x k entry grid (1-based lookup via at()).
  std::vector<elem_t> grid(const std::vector<elem_t>& digits) const {
    std::vector<elem_t> g(std::size_t(k) * k, base->zero());
    for (std::size_t t = 0; t < pos.size(); ++t)
      g[std::size_t(pos[t].first - 1) * k + (pos[t].second - 1)] = digits[t];
    return g;
  }
};

FiniteRing build_matrix_like(const FiniteRing& base, int k, bool upper_only,
                             const std::string& label, const Caps& caps) {
  if (k < 1) throw DimensionMismatch(label + ": k must be positive");
  MatrixEncoding enc{&base, k, stored_positions(k, upper_only), 1};
  for (std::size_t t = 0; t < enc.pos.size(); ++t) {
    if (enc.count > caps.ring_size_cap) throw SizeCapExceeded(label);
    enc.count *= std::uint64_t(base.size());
  }
  check_table_budget(enc.count, caps, label.c_str());

  const std::uint64_t n = enc.count;
  std::vector<elem_t> add(n * n), mul(n * n);
  std::vector<std::vector<elem_t>> grids(n);
  for (std::uint64_t x = 0; x < n; ++x) grids[x] = enc.grid(enc.decode(x));
  auto at = [&](const std::vector<elem_t>& g, int i, int j) -> elem_t {
    return g[std::size_t(i - 1) * k + (j - 1)];
  };
  std::vector<elem_t> digits(enc.pos.size());
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      const auto& gx = grids[x];
      const auto& gy = grids[y];
      for (std::size_t t = 0; t < enc.pos.size(); ++t) {
        auto [i, j] = enc.pos[t];
        digits[t] = base.add(at(gx, i, j), at(gy, i, j));
      }
      add[x * n + y] = elem_t(enc.encode(digits));
      for (std::size_t t = 0; t < enc.pos.size(); ++t) {
        auto [i, j] = enc.pos[t];
        elem_t s = base.zero();
        for (int l = 1; l <= k; ++l)
          s = base.add(s, base.mul(at(gx, i, l), at(gy, l, j)));
        digits[t] = s;
      }
      mul[x * n + y] = elem_t(enc.encode(digits));
    }
  // Identity matrix: digit = 1 at diagonal positions.
  for (std::size_t t = 0; t < enc.pos.size(); ++t)
    digits[t] = enc.pos[t].first == enc.pos[t].second ? base.one() : base.zero();
  elem_t one = elem_t(enc.encode(digits));
  return build_ring(std::move(add), std::move(mul), 0, one, label, caps);
}

}  // namespace

FiniteRing matrix_ring(const FiniteRing& base, int k, const Caps& caps) {
  return build_matrix_like(base, k, false,
                           "matrix(" + base.label() + "," + std::to_string(k) + ")", caps);
}

FiniteRing upper_triangular(const FiniteRing& base, int k, const Caps& caps) {
  return build_matrix_like(base, k, true,
                           "upper_triangular(" + base.label() + "," + std::to_string(k) + ")",
                           caps);
}

elem_t matrix_unit_index(int i, int j, int k, elem_t base_size, bool upper_only) {
  auto pos = stored_positions(k, upper_only);
  std::uint64_t idx = 0;
  bool found = false;
  for (auto [pi, pj] : pos) {
    idx *= std::uint64_t(base_size);
    if (pi == i && pj == j) { idx += 1; found = true; }
  }
  if (!found) throw DimensionMismatch("e(" + std::to_string(i) + "," + std::to_string(j) +
                                      ") is not a stored position");
  return elem_t(idx);
}

FiniteRing product(const FiniteRing& r, const FiniteRing& s, const Caps& caps) {
  std::uint64_t n = std::uint64_t(r.size()) * s.size();
  std::string label = "product(" + r.label() + "," + s.label() + ")";
  check_table_budget(n, caps, label.c_str());
  std::vector<elem_t> add(n * n), mul(n * n);
  auto pack = [&](elem_t a, elem_t b) { return elem_t(std::uint64_t(a) * s.size() + b); };
  for (elem_t a1 = 0; a1 < r.size(); ++a1)
    for (elem_t b1 = 0; b1 < s.size(); ++b1)
      for (elem_t a2 = 0; a2 < r.size(); ++a2)
        for (elem_t b2 = 0; b2 < s.size(); ++b2) {
          std::size_t row = std::size_t(pack(a1, b1)) * n + pack(a2, b2);
          add[row] = pack(r.add(a1, a2), s.add(b1, b2));
          mul[row] = pack(r.mul(a1, a2), s.mul(b1, b2));
        }
  return build_ring(std::move(add), std::move(mul), 0, pack(r.one(), s.one()), label, caps);
}

FiniteRing quotient_ring(const FiniteRing& r, const std::vector<elem_t>& ideal_members,
                         std::string label, const Caps& caps) {
  return quotient_with_projection(r, ideal_members, std::move(label), caps).ring;
}

QuotientRing quotient_with_projection(const FiniteRing& r,
                                      const std::vector<elem_t>& ideal_members,
                                      std::string label, const Caps& caps) {
  // Validate: sorted member list forming a two-sided ideal containing 0.
  if (ideal_members.empty() || ideal_members.front() != r.zero())
    throw DimensionMismatch("quotient: ideal must contain 0 first");
  std::vector<char> in(std::size_t(r.size()), 0);
  for (elem_t x : ideal_members) {
    if (x < 0 || x >= r.size()) throw DimensionMismatch("quotient: member out of range");
    in[std::size_t(x)] = 1;
  }
  for (elem_t x : ideal_members) {
    for (elem_t y : ideal_members)
      if (!in[std::size_t(r.add(x, y))])
        throw AxiomViolation("quotient ideal closed under addition", x, y, -1);
    for (elem_t s = 0; s < r.size(); ++s) {
      if (!in[std::size_t(r.mul(s, x))])
        throw AxiomViolation("quotient ideal closed under left multiplication", s, x, -1);
      if (!in[std::size_t(r.mul(x, s))])
        throw AxiomViolation("quotient ideal closed under right multiplication", x, s, -1);
    }
  }

  // Cosets are canonically represented by their smallest member and ordered by it.
  std::vector<elem_t> coset_of(std::size_t(r.size()), -1);
  std::vector<elem_t> rep;
  for (elem_t x = 0; x < r.size(); ++x) {
    if (coset_of[std::size_t(x)] >= 0) continue;
    elem_t id = elem_t(rep.size());
    rep.push_back(x);
    for (elem_t m : ideal_members) coset_of[std::size_t(r.add(x, m))] = id;
  }
  std::uint64_t n = rep.size();
  check_table_budget(n, caps, "quotient");
  std::vector<elem_t> add(n * n), mul(n * n);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b) {
      add[a * n + b] = coset_of[std::size_t(r.add(rep[a], rep[b]))];
      mul[a * n + b] = coset_of[std::size_t(r.mul(rep[a], rep[b]))];
    }
  return QuotientRing{build_ring(std::move(add), std::move(mul), 0,
                                 coset_of[std::size_t(r.one())], std::move(label), caps),
                      std::move(coset_of), std::move(rep)};
}

}  // namespace ttfkit
