#include "doctest.h"

#include <algorithm>
#include <vector>

#include "ttfkit/ideals.hpp"

using namespace ttfkit;

namespace {

// Independent oracle: every subset of a ring of size <= 16 that contains 0,
// is closed under addition, and is closed under the side's multiplications.
// Returned in the library's canonical order (size, then member list lex).
std::vector<std::vector<elem_t>> subset_ideals(const FiniteRing& r, Side side) {
  const elem_t n = r.size();
  REQUIRE(n <= 16);
  std::vector<std::vector<elem_t>> out;
  for (unsigned mask = 1; mask < (1u << n); mask += 2) {  // bit 0 = zero element
    auto has = [&](elem_t x) { return (mask >> x) & 1u; };
    bool ok = true;
    for (elem_t a = 0; a < n && ok; ++a) {
      if (!has(a)) continue;
      for (elem_t b = 0; b < n && ok; ++b) {
        if (has(b) && !has(r.add(a, b))) ok = false;
        if (!ok) break;
        if ((side == Side::left || side == Side::two_sided) && !has(r.mul(b, a)))
          ok = false;
        if ((side == Side::right || side == Side::two_sided) && !has(r.mul(a, b)))
          ok = false;
      }
    }
    if (!ok) continue;
    std::vector<elem_t> members;
    for (elem_t x = 0; x < n; ++x)
      if (has(x)) members.push_back(x);
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<elem_t>> member_lists(const std::vector<Ideal>& v) {
  std::vector<std::vector<elem_t>> out;
  for (const Ideal& i : v) out.push_back(i.members());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// generated ideals
// ---------------------------------------------------------------------------

TEST_CASE("ideal_generated worked examples") {
  FiniteRing z6 = zn(6);
  CHECK(ideal_generated(z6, {4}, Side::two_sided).members() ==
        std::vector<elem_t>{0, 2, 4});
  CHECK(ideal_generated(z6, {}, Side::two_sided).members() == std::vector<elem_t>{0});

  // Sidedness matters in upper_triangular(gf(2),2): e22 = index 1.
  FiniteRing t = upper_triangular(gf(2), 2);
  CHECK(ideal_generated(t, {1}, Side::right).members() == std::vector<elem_t>{0, 1});
  CHECK(ideal_generated(t, {1}, Side::left).members() ==
        std::vector<elem_t>{0, 1, 2, 3});
  CHECK(ideal_generated(t, {1}, Side::two_sided).members() ==
        std::vector<elem_t>{0, 1, 2, 3});
}

TEST_CASE("ideal_from_members validates closure") {
  FiniteRing z6 = zn(6);
  CHECK(ideal_from_members(z6, {0, 2, 4}, Side::two_sided).count() == 3);
  CHECK_THROWS_AS(ideal_from_members(z6, {0, 1}, Side::two_sided), AxiomViolation);

  // {0, e22} is a right ideal but not a left one (e12*e22 = e12).
  FiniteRing t = upper_triangular(gf(2), 2);
  CHECK(ideal_from_members(t, {0, 1}, Side::right).count() == 2);
  CHECK_THROWS_AS(ideal_from_members(t, {0, 1}, Side::two_sided), AxiomViolation);
  CHECK_THROWS_AS(ideal_from_members(t, {0, 1}, Side::left), AxiomViolation);
}

TEST_CASE("zero and whole-ring ideals") {
  FiniteRing z4 = zn(4);
  Ideal z = zero_ideal(z4);
  Ideal w = whole_ring_ideal(z4);
  CHECK(z.is_zero());
  CHECK_FALSE(z.is_whole_ring());
  CHECK(w.is_whole_ring());
  CHECK(z.subset_of(w));
  CHECK_FALSE(w.subset_of(z));
  CHECK(is_idempotent_ideal(z));
  CHECK(is_idempotent_ideal(w));
}

// ---------------------------------------------------------------------------
// sums, products, idempotency
// ---------------------------------------------------------------------------

TEST_CASE("ideal sums and products in zn(12)") {
  FiniteRing z12 = zn(12);
  Ideal i4 = ideal_generated(z12, {4}, Side::two_sided);   // {0,4,8}
  Ideal i6 = ideal_generated(z12, {6}, Side::two_sided);   // {0,6}
  Ideal i3 = ideal_generated(z12, {3}, Side::two_sided);   // {0,3,6,9}
  Ideal i2 = ideal_generated(z12, {2}, Side::two_sided);

  CHECK(ideal_sum(i4, i6).members() == std::vector<elem_t>{0, 2, 4, 6, 8, 10});
  CHECK(ideal_product(i4, i3).members() == std::vector<elem_t>{0});  // 12 | products
  CHECK(ideal_product(i2, i2) == i4);
  CHECK(ideal_product(i3, whole_ring_ideal(z12)) == i3);  // I*R = I
}

TEST_CASE("ideal product squares") {
  FiniteRing z4 = zn(4);
  Ideal j = ideal_from_members(z4, {0, 2}, Side::two_sided);
  CHECK(ideal_product(j, j).members() == std::vector<elem_t>{0});  // 2*2 = 0
  CHECK_FALSE(is_idempotent_ideal(j));

  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);
  CHECK(ideal_product(i, i) == i);  // 2*2=4, 4+4=2
  CHECK(is_idempotent_ideal(i));
}

TEST_CASE("cross-ring operands are rejected") {
  FiniteRing z4 = zn(4);
  FiniteRing z6 = zn(6);
  Ideal a = whole_ring_ideal(z4);
  Ideal b = whole_ring_ideal(z6);
  CHECK_THROWS_AS(ideal_sum(a, b), RingMismatch);
  CHECK_THROWS_AS(ideal_product(a, b), RingMismatch);
  CHECK_THROWS_AS((void)a.subset_of(b), RingMismatch);
}

// ---------------------------------------------------------------------------
// enumeration against the subset oracle
// ---------------------------------------------------------------------------

TEST_CASE("enumerate_ideals equals the subset filter on small rings") {
  std::vector<FiniteRing> rings;
  rings.push_back(zn(4));
  rings.push_back(zn(6));
  rings.push_back(zn(12));
  rings.push_back(upper_triangular(gf(2), 2));
  rings.push_back(matrix_ring(gf(2), 2));
  rings.push_back(product(zn(2), zn(3)));
  rings.push_back(quotient_ring(zn(12), {0, 4, 8}, "zn(12)/(4)"));

  for (const FiniteRing& r : rings) {
    CAPTURE(r.label());
    for (Side side : {Side::left, Side::right, Side::two_sided}) {
      auto fast = member_lists(enumerate_ideals(r, side));
      auto brute = subset_ideals(r, side);
      CHECK(fast == brute);
    }
  }
}

TEST_CASE("two-sided lattice sizes and canonical order") {
  CHECK(enumerate_two_sided_ideals(zn(4)).size() == 3);
  CHECK(enumerate_two_sided_ideals(matrix_ring(gf(2), 2)).size() == 2);  // simple

  // upper_triangular(gf(2),2): 0, span(e12), span(e12,e22), span(e11,e12), R,
  // listed by ascending size with lexicographic tie-break.
  auto lists = member_lists(enumerate_two_sided_ideals(upper_triangular(gf(2), 2)));
  std::vector<std::vector<elem_t>> expected{
      {0}, {0, 2}, {0, 1, 2, 3}, {0, 2, 4, 6}, {0, 1, 2, 3, 4, 5, 6, 7}};
  CHECK(lists == expected);
}

TEST_CASE("enumerate_idempotent_ideals") {
  auto z4 = member_lists(enumerate_idempotent_ideals(zn(4)));
  CHECK(z4 == std::vector<std::vector<elem_t>>{{0}, {0, 1, 2, 3}});

  auto z6 = member_lists(enumerate_idempotent_ideals(zn(6)));
  CHECK(z6 == std::vector<std::vector<elem_t>>{
                  {0}, {0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});

  CHECK(enumerate_idempotent_ideals(upper_triangular(gf(2), 2)).size() == 4);
  CHECK(enumerate_idempotent_ideals(matrix_ring(gf(2), 2)).size() == 2);
}

TEST_CASE("enumeration respects the ideal-count cap") {
  Caps tight = Caps::defaults();
  tight.ideal_count_cap = 2;
  CHECK_THROWS_AS(enumerate_ideals(zn(6), Side::two_sided, tight),
                  EnumerationCapExceeded);
}

// ---------------------------------------------------------------------------
// idempotent-element closure and the radical
// ---------------------------------------------------------------------------

TEST_CASE("idempotent_element_closure worked examples") {
  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);
  CHECK(idempotent_element_closure(i) == i);  // 4 is idempotent and generates

  FiniteRing z4 = zn(4);
  Ideal j = ideal_from_members(z4, {0, 2}, Side::two_sided);
  CHECK(idempotent_element_closure(j).is_zero());  // nil ideal, no idempotents

  FiniteRing t = upper_triangular(gf(2), 2);
  Ideal i2 = ideal_from_members(t, {0, 1, 2, 3}, Side::two_sided);
  CHECK(idempotent_element_closure(i2) == i2);  // via e22
}

TEST_CASE("idempotent_element_closure is a contained idempotent ideal") {
  std::vector<FiniteRing> rings;
  rings.push_back(zn(4));
  rings.push_back(zn(6));
  rings.push_back(zn(12));
  rings.push_back(upper_triangular(gf(2), 2));
  rings.push_back(matrix_ring(gf(2), 2));
  for (const FiniteRing& r : rings) {
    CAPTURE(r.label());
    for (const Ideal& i : enumerate_two_sided_ideals(r)) {
      Ideal c = idempotent_element_closure(i);
      CHECK(c.subset_of(i));
      CHECK(is_idempotent_ideal(c));
    }
  }
}

TEST_CASE("radical_ideal agrees with the element computation") {
  for (const FiniteRing& r :
       {zn(4), zn(6), zn(12), upper_triangular(gf(2), 2), matrix_ring(gf(2), 2)}) {
    CAPTURE(r.label());
    Ideal j = radical_ideal(r);
    CHECK(j.members() == r.jacobson_radical());
    CHECK(j.side() == Side::two_sided);
  }
}
