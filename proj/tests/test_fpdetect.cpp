#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ttfkit/fpdetect.hpp"

using namespace ttfkit;

namespace {

RMatrix mat1(const FiniteRing& r, elem_t x) {
  RMatrix a(r, 1, 1);
  a.at(0, 0) = x;
  return a;
}

RMatrix mat22(const FiniteRing& r, elem_t a, elem_t b, elem_t c, elem_t d) {
  RMatrix m(r, 2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

// Row-times-matrix over the ring: (X*A)_j = sum_i x_i a_ij.
std::vector<elem_t> row_times(const FiniteRing& r, const std::vector<elem_t>& x,
                              const RMatrix& a) {
  std::vector<elem_t> out(std::size_t(a.cols), r.zero());
  for (int j = 0; j < a.cols; ++j)
    for (int i = 0; i < a.rows; ++i)
      out[std::size_t(j)] = r.add(out[std::size_t(j)], r.mul(x[std::size_t(i)], a.at(i, j)));
  return out;
}

// Brute-force left annihilator: sweep every tuple in R^m.
std::set<std::vector<elem_t>> brute_left_ann(const RMatrix& a) {
  const FiniteRing& r = *a.ring;
  std::set<std::vector<elem_t>> out;
  std::vector<elem_t> x(std::size_t(a.rows), 0);
  while (true) {
    auto prod = row_times(r, x, a);
    if (std::all_of(prod.begin(), prod.end(), [](elem_t v) { return v == 0; }))
      out.insert(x);
    int i = a.rows - 1;
    for (; i >= 0; --i) {
      if (++x[std::size_t(i)] < r.size()) break;
      x[std::size_t(i)] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

// Matrix product and 1 - A*B, for validating right-inverse witnesses.
RMatrix mat_mul(const RMatrix& a, const RMatrix& b) {
  const FiniteRing& r = *a.ring;
  REQUIRE(a.cols == b.rows);
  RMatrix out(r, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < b.cols; ++k) {
      elem_t acc = r.zero();
      for (int j = 0; j < a.cols; ++j) acc = r.add(acc, r.mul(a.at(i, j), b.at(j, k)));
      out.at(i, k) = acc;
    }
  return out;
}

bool one_minus_in_ideal(const RMatrix& ab, const Ideal& i) {
  const FiniteRing& r = *ab.ring;
  REQUIRE(ab.square());
  for (int x = 0; x < ab.rows; ++x)
    for (int y = 0; y < ab.cols; ++y) {
      elem_t idv = (x == y) ? r.one() : r.zero();
      if (!i.contains(r.sub(idv, ab.at(x, y)))) return false;
    }
  return true;
}

// Does A*X = y have a solution with X ranging over tuples of `pool`^n?
bool solvable_from_pool(const RMatrix& a, const std::vector<elem_t>& y,
                        const std::vector<elem_t>& pool) {
  const FiniteRing& r = *a.ring;
  std::vector<std::size_t> pick(std::size_t(a.cols), 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < a.rows && ok; ++i) {
      elem_t acc = r.zero();
      for (int j = 0; j < a.cols; ++j)
        acc = r.add(acc, r.mul(a.at(i, j), pool[pick[std::size_t(j)]]));
      ok = acc == y[std::size_t(i)];
    }
    if (ok) return true;
    int j = a.cols - 1;
    for (; j >= 0; --j) {
      if (++pick[std::size_t(j)] < pool.size()) break;
      pick[std::size_t(j)] = 0;
    }
    if (j < 0) return false;
  }
}

std::vector<elem_t> all_elements(const FiniteRing& r) {
  std::vector<elem_t> v(std::size_t(r.size()));
  for (elem_t x = 0; x < r.size(); ++x) v[std::size_t(x)] = x;
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// annihilator rows and I_A
// ---------------------------------------------------------------------------

TEST_CASE("left_annihilator_rows worked examples") {
  FiniteRing t = upper_triangular(gf(2), 2);
  // x*e11 zeroes everything but the a-component, so l.ann([e11]) is I2.
  auto rows = left_annihilator_rows(mat1(t, 4));
  std::set<std::vector<elem_t>> got(rows.begin(), rows.end());
  std::set<std::vector<elem_t>> want{{0}, {1}, {2}, {3}};
  CHECK(got == want);

  FiniteRing z6 = zn(6);
  RMatrix id2(z6, 2, 2);
  id2.at(0, 0) = id2.at(1, 1) = z6.one();
  CHECK(left_annihilator_rows(id2) ==
        std::vector<std::vector<elem_t>>{{0, 0}});

  CHECK(left_annihilator_rows(mat1(z6, 0)).size() == 6);  // everything kills 0
}

TEST_CASE("left_annihilator_rows equals the brute-force sweep") {
  FiniteRing z6 = zn(6);
  FiniteRing t = upper_triangular(gf(2), 2);
  std::vector<RMatrix> mats;
  mats.push_back(mat1(z6, 3));
  mats.push_back(mat22(z6, 2, 3, 4, 0));
  mats.push_back(mat1(t, 4));
  mats.push_back(mat22(t, 2, 1, 4, 0));
  for (const RMatrix& a : mats) {
    auto rows = left_annihilator_rows(a);
    std::set<std::vector<elem_t>> got(rows.begin(), rows.end());
    CHECK(got == brute_left_ann(a));
    // Closed under addition and left scaling.
    const FiniteRing& r = *a.ring;
    for (const auto& x : rows) {
      for (const auto& y : rows) {
        std::vector<elem_t> s(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) s[i] = r.add(x[i], y[i]);
        CHECK(got.count(s) == 1);
      }
      for (elem_t c = 0; c < r.size(); ++c) {
        std::vector<elem_t> s(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) s[i] = r.mul(c, x[i]);
        CHECK(got.count(s) == 1);
      }
    }
  }
}

TEST_CASE("ideal_I_A worked examples") {
  FiniteRing z6 = zn(6);
  CHECK(ideal_I_A(mat1(z6, 3)).members() == std::vector<elem_t>{0, 2, 4});
  RMatrix id1 = mat1(z6, z6.one());
  CHECK(ideal_I_A(id1).is_zero());

  FiniteRing t = upper_triangular(gf(2), 2);
  CHECK(ideal_I_A(mat1(t, 4)).members() == std::vector<elem_t>{0, 1, 2, 3});
}

TEST_CASE("ideal_I_A matches the sum-of-products definition") {
  // Direct definition: all finite sums X*Y with X*A = 0, i.e. the additive
  // span of the single products sum_i x_i y_i.
  FiniteRing z6 = zn(6);
  FiniteRing t = upper_triangular(gf(2), 2);
  std::vector<RMatrix> mats;
  mats.push_back(mat1(z6, 3));
  mats.push_back(mat1(z6, 2));
  mats.push_back(mat22(z6, 2, 3, 4, 0));
  mats.push_back(mat1(t, 4));
  mats.push_back(mat1(t, 2));
  mats.push_back(mat22(t, 1, 2, 0, 4));
  for (const RMatrix& a : mats) {
    const FiniteRing& r = *a.ring;
    std::set<elem_t> prods;
    for (const auto& x : brute_left_ann(a)) {
      // Y sweeps all of R^m.
      std::vector<elem_t> y(x.size(), 0);
      while (true) {
        elem_t acc = r.zero();
        for (std::size_t i = 0; i < x.size(); ++i) acc = r.add(acc, r.mul(x[i], y[i]));
        prods.insert(acc);
        int i = int(x.size()) - 1;
        for (; i >= 0; --i) {
          if (++y[std::size_t(i)] < r.size()) break;
          y[std::size_t(i)] = 0;
        }
        if (i < 0) break;
      }
    }
    // Additive span of the products.
    std::set<elem_t> span = prods;
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<elem_t> cur(span.begin(), span.end());
      for (elem_t u : cur)
        for (elem_t v : cur)
          if (span.insert(r.add(u, v)).second) grew = true;
    }
    std::vector<elem_t> expected(span.begin(), span.end());
    CHECK(ideal_I_A(a).members() == expected);
  }
}

// ---------------------------------------------------------------------------
// Fix(E)
// ---------------------------------------------------------------------------

TEST_CASE("fix_ideal worked examples") {
  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);
  CHECK(fix_ideal(mat1(z6, 4), i).members() == std::vector<elem_t>{0, 2, 4});
  CHECK(fix_ideal(mat1(z6, 0), i).is_zero());  // Fix(0) = {0}

  FiniteRing t = upper_triangular(gf(2), 2);
  Ideal i2 = ideal_from_members(t, {0, 1, 2, 3}, Side::two_sided);
  CHECK(fix_ideal(mat1(t, 1), i2).members() == std::vector<elem_t>{0, 1, 2, 3});

  CHECK_THROWS_AS(fix_ideal(mat1(z6, 1), i), EntriesNotInIdeal);
  CHECK_THROWS_AS(fix_ideal(mat22(z6, 2, 4, 3, 0), i), EntriesNotInIdeal);
}

TEST_CASE("fix_ideal equals ideal_I_A of the complement") {
  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);
  FiniteRing t = upper_triangular(gf(2), 2);
  Ideal i2 = ideal_from_members(t, {0, 1, 2, 3}, Side::two_sided);

  auto check_over = [](const Ideal& ideal) {
    const FiniteRing& r = ideal.ring();
    for (elem_t e : ideal.members()) {
      RMatrix em(r, 1, 1);
      em.at(0, 0) = e;
      RMatrix comp(r, 1, 1);
      comp.at(0, 0) = r.sub(r.one(), e);
      CHECK(fix_ideal(em, ideal) == ideal_I_A(comp));
    }
    // One 2x2 case per ideal: E = diag(e, e) for the largest member.
    elem_t e = ideal.members().back();
    RMatrix em(r, 2, 2);
    em.at(0, 0) = em.at(1, 1) = e;
    RMatrix comp(r, 2, 2);
    comp.at(0, 0) = comp.at(1, 1) = r.sub(r.one(), e);
    comp.at(0, 1) = comp.at(1, 0) = r.zero();
    CHECK(fix_ideal(em, ideal) == ideal_I_A(comp));
  };
  check_over(i);
  check_over(i2);
}

// ---------------------------------------------------------------------------
// right inverses modulo I
// ---------------------------------------------------------------------------

TEST_CASE("right_invertible_mod worked examples") {
  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);

  auto b = right_invertible_mod(mat1(z6, 3), i);
  REQUIRE(b.has_value());
  CHECK(one_minus_in_ideal(mat_mul(mat1(z6, 3), *b), i));

  CHECK_FALSE(right_invertible_mod(mat1(z6, 0), i).has_value());  // 1 not in I
  CHECK(right_invertible_mod(mat1(z6, 0), whole_ring_ideal(z6)).has_value());

  FiniteRing t = upper_triangular(gf(2), 2);
  Ideal i2 = ideal_from_members(t, {0, 1, 2, 3}, Side::two_sided);
  auto bt = right_invertible_mod(mat1(t, 4), i2);
  REQUIRE(bt.has_value());  // 1 - e11 = e22 in I2
  CHECK(one_minus_in_ideal(mat_mul(mat1(t, 4), *bt), i2));

  // 2x2 identity is right invertible modulo anything.
  RMatrix id2(z6, 2, 2);
  id2.at(0, 0) = id2.at(1, 1) = z6.one();
  auto b2 = right_invertible_mod(id2, i);
  REQUIRE(b2.has_value());
  CHECK(one_minus_in_ideal(mat_mul(id2, *b2), i));
}

// ---------------------------------------------------------------------------
// fp-detecting matrices
// ---------------------------------------------------------------------------

TEST_CASE("is_fp_detecting worked examples") {
  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);

  FpVerdict v = is_fp_detecting(mat1(z6, 3), i);
  CHECK(v.detecting);
  CHECK(v.right_invertible);
  CHECK(v.solvability);
  REQUIRE(v.right_inverse.has_value());
  CHECK(one_minus_in_ideal(mat_mul(mat1(z6, 3), *v.right_inverse), i));
  CHECK_FALSE(v.gap.has_value());

  // 2 has no right inverse mod {0,2,4} (1 - 2b is odd), so not detecting.
  FpVerdict w = is_fp_detecting(mat1(z6, 2), i);
  CHECK_FALSE(w.detecting);
  CHECK_FALSE(w.right_invertible);

  FiniteRing t = upper_triangular(gf(2), 2);
  Ideal i2 = ideal_from_members(t, {0, 1, 2, 3}, Side::two_sided);
  CHECK(is_fp_detecting(mat1(t, 4), i2).detecting);

  FiniteRing z4 = zn(4);
  Ideal nil = ideal_from_members(z4, {0, 2}, Side::two_sided);
  CHECK_THROWS_AS(is_fp_detecting(mat1(z4, 0), nil), NotIdempotent);
}

TEST_CASE("stable-unit family: 1 - eta is detecting for eta in I") {
  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);
  for (elem_t eta : i.members())
    CHECK(is_fp_detecting(mat1(z6, z6.sub(z6.one(), eta)), i).detecting);

  FiniteRing t = upper_triangular(gf(2), 2);
  Ideal i2 = ideal_from_members(t, {0, 1, 2, 3}, Side::two_sided);
  for (elem_t eta : i2.members())
    CHECK(is_fp_detecting(mat1(t, t.sub(t.one(), eta)), i2).detecting);

  // k = 2: 1 - eta for eta in M_2(I), sampled corners.
  for (elem_t x : i2.members())
    for (elem_t y : i2.members()) {
      RMatrix eta = mat22(t, x, y, t.zero(), x);
      RMatrix a(t, 2, 2);
      a.at(0, 0) = t.sub(t.one(), eta.at(0, 0));
      a.at(0, 1) = t.sub(t.zero(), eta.at(0, 1));
      a.at(1, 0) = t.sub(t.zero(), eta.at(1, 0));
      a.at(1, 1) = t.sub(t.one(), eta.at(1, 1));
      CHECK(is_fp_detecting(a, i2).detecting);
    }
}

TEST_CASE("fp verdict invariants on a matrix sweep") {
  // detecting == right_invertible && solvability; any reported gap must be a
  // genuine witness: A*X = gap solvable over R but not over I.
  struct Case {
    FiniteRing ring;
    std::vector<elem_t> members;
  };
  std::vector<Case> cases;
  cases.push_back({zn(6), {0, 2, 4}});
  cases.push_back({upper_triangular(gf(2), 2), {0, 1, 2, 3}});
  cases.push_back({upper_triangular(gf(2), 2), {0, 2, 4, 6}});

  std::mt19937 rng(20240817u);
  for (const Case& c : cases) {
    const FiniteRing& r = c.ring;
    Ideal i = ideal_from_members(r, c.members, Side::two_sided);
    std::vector<RMatrix> sample;
    for (elem_t x = 0; x < r.size(); ++x) sample.push_back(mat1(r, x));
    for (int s = 0; s < 200; ++s)
      sample.push_back(mat22(r, elem_t(rng() % unsigned(r.size())),
                             elem_t(rng() % unsigned(r.size())),
                             elem_t(rng() % unsigned(r.size())),
                             elem_t(rng() % unsigned(r.size()))));
    for (const RMatrix& a : sample) {
      FpVerdict v = is_fp_detecting(a, i);
      CHECK(v.detecting == (v.right_invertible && v.solvability));
      CHECK(v.right_invertible == v.right_inverse.has_value());
      if (v.right_inverse)
        CHECK(one_minus_in_ideal(mat_mul(a, *v.right_inverse), i));
      CHECK(v.solvability == !v.gap.has_value());
      if (v.gap) {
        for (elem_t y : *v.gap) CHECK(i.contains(y));
        CHECK(solvable_from_pool(a, *v.gap, all_elements(r)));
        CHECK_FALSE(solvable_from_pool(a, *v.gap, i.members()));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// local finite presentability
// ---------------------------------------------------------------------------

TEST_CASE("locally_fp_via_idempotents worked examples") {
  FiniteRing z6 = zn(6);
  CHECK(locally_fp_via_idempotents(
      ideal_from_members(z6, {0, 2, 4}, Side::two_sided)));
  CHECK(locally_fp_via_idempotents(whole_ring_ideal(z6)));

  FiniteRing t = upper_triangular(gf(2), 2);
  CHECK(locally_fp_via_idempotents(
      ideal_from_members(t, {0, 2, 4, 6}, Side::two_sided)));  // via e11
}

TEST_CASE("locally_fp_via_fix worked examples") {
  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);
  FixReport rep = locally_fp_via_fix(i);
  CHECK(rep.certified);
  CHECK(rep.k_reached == 1);  // E = [4] suffices
  CHECK(rep.fix_closure == i);
  REQUIRE(!rep.contributing.empty());
  for (const RMatrix& e : rep.contributing)
    for (elem_t x : e.a) CHECK(i.contains(x));

  FiniteRing t = upper_triangular(gf(2), 2);
  Ideal i2 = ideal_from_members(t, {0, 1, 2, 3}, Side::two_sided);
  FixReport rep2 = locally_fp_via_fix(i2);
  CHECK(rep2.certified);
  CHECK(rep2.k_reached == 1);  // E = [e22]

  // The zero ideal is the empty sum.
  FixReport rep0 = locally_fp_via_fix(zero_ideal(z6));
  CHECK(rep0.certified);
  CHECK(rep0.k_reached == 0);
  CHECK(rep0.fix_closure.is_zero());
  CHECK(rep0.contributing.empty());
}

TEST_CASE("locally_fp_via_fix reports unknown under an exhausted budget") {
  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);
  Caps tight = Caps::defaults();
  tight.matrix_budget = 2;  // below |I| = 3, so even k = 1 is skipped
  FixReport rep = locally_fp_via_fix(i, tight);
  CHECK_FALSE(rep.certified);
  CHECK(rep.skipped_k == std::vector<int>{1, 2});
  CHECK(rep.fix_closure.is_zero());
}

TEST_CASE("lfp_report aggregates and nests the closures") {
  std::vector<FiniteRing> rings;
  rings.push_back(zn(6));
  rings.push_back(zn(12));
  rings.push_back(upper_triangular(gf(2), 2));
  for (const FiniteRing& r : rings) {
    CAPTURE(r.label());
    for (const Ideal& i : enumerate_idempotent_ideals(r)) {
      LfpReport rep = lfp_report(i);
      CHECK(rep.via_idempotents);
      CHECK(rep.enough_projectives == rep.via_idempotents);
      CHECK(rep.idempotent_closure.subset_of(rep.fix.fix_closure));
      CHECK(rep.fix.fix_closure.subset_of(i));
      CHECK(rep.fix.certified);
    }
  }
}

TEST_CASE("counterexample_conditions") {
  FiniteRing t = upper_triangular(gf(2), 2);
  Ideal i2 = ideal_from_members(t, {0, 1, 2, 3}, Side::two_sided);
  CounterexampleReport c = counterexample_conditions(i2);
  CHECK(c.rho_iso);
  CHECK(c.quotient_left_flat);
  CHECK(c.trace_of_projective);
  CHECK_FALSE(c.note.empty());

  FiniteRing z6 = zn(6);
  CounterexampleReport whole = counterexample_conditions(whole_ring_ideal(z6));
  CHECK(whole.rho_iso);
  CHECK(whole.quotient_left_flat);
  CHECK(whole.trace_of_projective);

  CounterexampleReport zero = counterexample_conditions(zero_ideal(z6));
  CHECK(zero.rho_iso);
  CHECK(zero.quotient_left_flat);
  CHECK(zero.trace_of_projective);

  FiniteRing z4 = zn(4);
  Ideal nil = ideal_from_members(z4, {0, 2}, Side::two_sided);
  CHECK_THROWS_AS(counterexample_conditions(nil), NotIdempotent);
  CHECK_THROWS_AS(locally_fp_via_fix(nil), NotIdempotent);
  CHECK_THROWS_AS(locally_fp_via_idempotents(nil), NotIdempotent);
}
