#include "doctest.h"

#include <vector>

#include "ttfkit/commutative.hpp"

using namespace ttfkit;

// ---------------------------------------------------------------------------
// local decomposition
// ---------------------------------------------------------------------------

TEST_CASE("decompose_local of zn(6)") {
  FiniteRing z6 = zn(6);
  LocalDecomposition dec = decompose_local(z6);
  REQUIRE(dec.factors.size() == 2);  // CRT: Z/2 x Z/3

  // Factors are ordered by idempotent index: 3 cuts Z/2, 4 cuts Z/3.
  CHECK(dec.factors[0].idempotent == 3);
  CHECK(dec.factors[0].carrier == std::vector<elem_t>{0, 3});
  CHECK(dec.factors[0].ring.size() == 2);
  CHECK(dec.factors[1].idempotent == 4);
  CHECK(dec.factors[1].carrier == std::vector<elem_t>{0, 2, 4});
  CHECK(dec.factors[1].ring.size() == 3);

  // Orthogonal, and summing to 1.
  CHECK(z6.mul(3, 4) == 0);
  CHECK(z6.add(3, 4) == z6.one());

  // Projections: project[x] indexes x*e within the carrier.
  for (const LocalFactor& f : dec.factors)
    for (elem_t x = 0; x < z6.size(); ++x)
      CHECK(f.carrier[std::size_t(f.project[std::size_t(x)])] ==
            z6.mul(x, f.idempotent));

  // Each factor is local: only trivial idempotents.
  for (const LocalFactor& f : dec.factors)
    CHECK(f.ring.idempotents().size() == 2);
}

TEST_CASE("decompose_local of zn(12)") {
  FiniteRing z12 = zn(12);
  LocalDecomposition dec = decompose_local(z12);
  REQUIRE(dec.factors.size() == 2);  // Z/4 x Z/3
  CHECK(dec.factors[0].idempotent == 4);
  CHECK(dec.factors[0].carrier == std::vector<elem_t>{0, 4, 8});
  CHECK(dec.factors[1].idempotent == 9);
  CHECK(dec.factors[1].carrier == std::vector<elem_t>{0, 3, 6, 9});
  CHECK(z12.mul(4, 9) == 0);
  CHECK(z12.add(4, 9) == z12.one());
  for (const LocalFactor& f : dec.factors)
    CHECK(f.ring.idempotents().size() == 2);
}

TEST_CASE("local rings decompose as themselves") {
  FiniteRing z4 = zn(4);
  LocalDecomposition dec = decompose_local(z4);
  REQUIRE(dec.factors.size() == 1);  // only idempotents 0, 1
  CHECK(dec.factors[0].idempotent == z4.one());
  CHECK(dec.factors[0].ring.size() == 4);

  CHECK(decompose_local(gf(2)).factors.size() == 1);
  CHECK(decompose_local(zn(1)).factors.empty());  // zero ring: empty product
}

TEST_CASE("factor sizes multiply to the ring size") {
  for (const FiniteRing& r : {zn(4), zn(6), zn(12), zn(30)}) {
    LocalDecomposition dec = decompose_local(r);
    std::uint64_t prod = 1;
    for (const LocalFactor& f : dec.factors) prod *= std::uint64_t(f.ring.size());
    CHECK(prod == std::uint64_t(r.size()));
  }
}

TEST_CASE("decompose_local rejects noncommutative rings") {
  CHECK_THROWS_AS(decompose_local(upper_triangular(gf(2), 2)), NotCommutative);
  CHECK_THROWS_AS(decompose_local(matrix_ring(gf(2), 2)), NotCommutative);
}

// ---------------------------------------------------------------------------
// support
// ---------------------------------------------------------------------------

TEST_CASE("support of ideals in zn(6)") {
  FiniteRing z6 = zn(6);
  LocalDecomposition dec = decompose_local(z6);

  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);
  CHECK(support(dec, i) == std::vector<int>{1});  // lives on the Z/3 factor

  Ideal j = ideal_from_members(z6, {0, 3}, Side::two_sided);
  CHECK(support(dec, j) == std::vector<int>{0});

  CHECK(support(dec, whole_ring_ideal(z6)) == std::vector<int>{0, 1});
  CHECK(support(dec, zero_ideal(z6)).empty());
}

// ---------------------------------------------------------------------------
// the commutative theorem at finite scale
// ---------------------------------------------------------------------------

TEST_CASE("check_commutative_theorem worked examples") {
  FiniteRing z6 = zn(6);
  Ideal i = ideal_from_members(z6, {0, 2, 4}, Side::two_sided);
  CommutativeVerdict v = check_commutative_theorem(i);
  CHECK(v.holds);
  CHECK(v.generator == 4);
  CHECK(v.support == std::vector<int>{1});
  CHECK(v.factor_sizes == std::vector<elem_t>{2, 3});

  Ideal j = ideal_from_members(z6, {0, 3}, Side::two_sided);
  CommutativeVerdict vj = check_commutative_theorem(j);
  CHECK(vj.holds);
  CHECK(vj.generator == 3);
  CHECK(vj.support == std::vector<int>{0});

  CommutativeVerdict vr = check_commutative_theorem(whole_ring_ideal(z6));
  CHECK(vr.holds);
  CHECK(vr.generator == z6.one());

  CommutativeVerdict v0 = check_commutative_theorem(zero_ideal(z6));
  CHECK(v0.holds);
  CHECK(v0.generator == 0);
  CHECK(v0.support.empty());
}

TEST_CASE("check_commutative_theorem over zn(12)") {
  FiniteRing z12 = zn(12);
  Ideal i4 = ideal_from_members(z12, {0, 4, 8}, Side::two_sided);
  CommutativeVerdict v4 = check_commutative_theorem(i4);
  CHECK(v4.holds);
  CHECK(v4.generator == 4);
  CHECK(v4.factor_sizes == std::vector<elem_t>{3, 4});

  Ideal i3 = ideal_from_members(z12, {0, 3, 6, 9}, Side::two_sided);
  CommutativeVerdict v3 = check_commutative_theorem(i3);
  CHECK(v3.holds);
  CHECK(v3.generator == 9);  // 9*9 = 81 = 9 mod 12
}

TEST_CASE("the returned generator regenerates the ideal") {
  for (const FiniteRing& r : {zn(6), zn(12), zn(30)}) {
    CAPTURE(r.label());
    for (const Ideal& i : enumerate_idempotent_ideals(r)) {
      CommutativeVerdict v = check_commutative_theorem(i);
      CHECK(v.holds);
      REQUIRE(v.generator >= 0);
      CHECK(r.mul(v.generator, v.generator) == v.generator);
      CHECK(ideal_generated(r, {v.generator}, Side::two_sided) == i);
      // Support is stable under squaring the ideal (I*I = I here).
      LocalDecomposition dec = decompose_local(r);
      CHECK(support(dec, ideal_product(i, i)) == support(dec, i));
    }
  }
}

TEST_CASE("guards") {
  FiniteRing z4 = zn(4);
  Ideal nil = ideal_from_members(z4, {0, 2}, Side::two_sided);
  CHECK_THROWS_AS(check_commutative_theorem(nil), NotIdempotent);

  FiniteRing t = upper_triangular(gf(2), 2);
  Ideal i2 = ideal_from_members(t, {0, 1, 2, 3}, Side::two_sided);
  CHECK_THROWS_AS(check_commutative_theorem(i2), NotCommutative);
}
