#include <algorithm>
#include <iostream>

#include "ttfkit/harness.hpp"

namespace ttfkit {

namespace {

// ---- brute-force oracles ---------------------------------------------------
// Deliberately dumb re-derivations of every fixture value: fixed-point set
// closures straight from the definitions, sharing nothing with the library
// code paths beyond the Cayley tables themselves.

// Fixed point of a set under addition and both one-sided multiplications.
std::vector<elem_t> oracle_two_sided_closure(const FiniteRing& r,
                                             const std::vector<elem_t>& seed) {
  std::vector<char> in(std::size_t(r.size()), 0);
  in[std::size_t(r.zero())] = 1;
  for (elem_t x : seed) in[std::size_t(x)] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (elem_t a = 0; a < r.size(); ++a) {
      if (!in[std::size_t(a)]) continue;
      for (elem_t b = 0; b < r.size(); ++b) {
        if (in[std::size_t(b)] && !in[std::size_t(r.add(a, b))]) {
          in[std::size_t(r.add(a, b))] = 1;
          grew = true;
        }
        if (!in[std::size_t(r.mul(a, b))]) {
          in[std::size_t(r.mul(a, b))] = 1;
          grew = true;
        }
        if (!in[std::size_t(r.mul(b, a))]) {
          in[std::size_t(r.mul(b, a))] = 1;
          grew = true;
        }
      }
    }
  }
  std::vector<elem_t> out;
  for (elem_t x = 0; x < r.size(); ++x)
    if (in[std::size_t(x)]) out.push_back(x);
  return out;
}

// All two-sided ideals of a ring of size <= 16, by literally filtering every
// subset of the carrier.
std::vector<std::vector<elem_t>> oracle_two_sided_ideals(const FiniteRing& r) {
  int n = int(r.size());
  std::vector<std::vector<elem_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain zero
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (int b = 0; b < n && ok; ++b) {
        if (mask >> b & 1u)
          if (!(mask >> r.add(elem_t(a), elem_t(b)) & 1u)) ok = false;
        if (!(mask >> r.mul(elem_t(a), elem_t(b)) & 1u)) ok = false;
        if (!(mask >> r.mul(elem_t(b), elem_t(a)) & 1u)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<elem_t> members;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1u) members.push_back(elem_t(a));
    out.push_back(std::move(members));
  }
  return out;
}

// Additive span of all pairwise products equals the set itself.
bool oracle_idempotent(const FiniteRing& r, const std::vector<elem_t>& members) {
  std::vector<char> in(std::size_t(r.size()), 0);
  in[std::size_t(r.zero())] = 1;
  for (elem_t a : members)
    for (elem_t b : members) in[std::size_t(r.mul(a, b))] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (elem_t a = 0; a < r.size(); ++a)
      for (elem_t b = 0; b < r.size(); ++b)
        if (in[std::size_t(a)] && in[std::size_t(b)] &&
            !in[std::size_t(r.add(a, b))]) {
          in[std::size_t(r.add(a, b))] = 1;
          grew = true;
        }
  }
  std::vector<elem_t> span;
  for (elem_t x = 0; x < r.size(); ++x)
    if (in[std::size_t(x)]) span.push_back(x);
  return span == members;
}

bool oracle_via_idempotents(const FiniteRing& r, const std::vector<elem_t>& members) {
  std::vector<elem_t> idem;
  for (elem_t x : members)
    if (r.mul(x, x) == x) idem.push_back(x);
  return oracle_two_sided_closure(r, idem) == members;
}

// Fix-closure at k = 1, straight from the definition: for each e in I,
// the rows fixed by [e] are { x : x*e = x }; their two-sided span summed
// over e must already be I.  Returns 0 for the zero ideal, 1 when the k=1
// sweep reaches I, -1 otherwise.
int oracle_fix_k(const FiniteRing& r, const std::vector<elem_t>& members) {
  if (members.size() == 1) return 0;
  std::vector<elem_t> fixed;
  for (elem_t e : members)
    for (elem_t x = 0; x < r.size(); ++x)
      if (r.mul(x, e) == x) fixed.push_back(x);
  return oracle_two_sided_closure(r, fixed) == members ? 1 : -1;
}

bool oracle_generator(const FiniteRing& r, const std::vector<elem_t>& members,
                      elem_t e) {
  if (e < 0 || e >= r.size()) return false;
  if (!std::binary_search(members.begin(), members.end(), e)) return false;
  if (r.mul(e, e) != e) return false;
  return oracle_two_sided_closure(r, {e}) == members;
}

// ---- gallery construction --------------------------------------------------

FiniteRing make_gf4(const Caps& caps) {
  // F_4 = F_2[a]/(a^2+a+1) with elements 0,1,a,a+1 at indices 0..3:
  // addition is XOR, multiplication follows a^2 = a+1.
  std::vector<elem_t> add(16), mul(16);
  const elem_t m[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  for (elem_t a = 0; a < 4; ++a)
    for (elem_t b = 0; b < 4; ++b) {
      add[std::size_t(a) * 4 + b] = a ^ b;
      mul[std::size_t(a) * 4 + b] = m[a][b];
    }
  return build_ring(std::move(add), std::move(mul), 0, 1, "gf(4)", caps);
}

GalleryEntry entry(std::string name, std::string ctor, FiniteRing r,
                   std::vector<GalleryFixture> fx, int idem_count) {
  GalleryEntry e;
  e.name = std::move(name);
  e.constructor = std::move(ctor);
  e.ring = std::make_shared<FiniteRing>(std::move(r));
  e.fixtures = std::move(fx);
  e.idempotent_count = idem_count;
  return e;
}

}  // namespace

std::vector<GalleryEntry> build_gallery(const Caps& caps) {
  std::vector<GalleryEntry> g;
  FiniteRing f2 = gf(2, caps);
  FiniteRing f3 = gf(3, caps);

  g.push_back(entry("zn4", "zn(4)", zn(4, caps),
                    {{"I0", {0}, true, true, 0, 0},
                     {"I1", {0, 2}, false, false, -1, -1},
                     {"I2", {0, 1, 2, 3}, true, true, 1, 1}},
                    2));
  g.push_back(entry("zn6", "zn(6)", zn(6, caps),
                    {{"I0", {0}, true, true, 0, 0},
                     {"I1", {0, 3}, true, true, 1, 3},
                     {"I2", {0, 2, 4}, true, true, 1, 4},
                     {"I3", {0, 1, 2, 3, 4, 5}, true, true, 1, 1}},
                    4));
  g.push_back(entry("zn12", "zn(12)", zn(12, caps),
                    {{"I0", {0}, true, true, 0, 0},
                     {"I1", {0, 6}, false, false, -1, -1},
                     {"I2", {0, 4, 8}, true, true, 1, 4},
                     {"I3", {0, 3, 6, 9}, true, true, 1, 9},
                     {"I4", {0, 2, 4, 6, 8, 10}, false, false, -1, -1},
                     {"I5", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, true, true, 1, 1}},
                    4));
  g.push_back(entry("gf4", "tables(gf(4))", make_gf4(caps),
                    {{"I0", {0}, true, true, 0, 0},
                     {"I1", {0, 1, 2, 3}, true, true, 1, 1}},
                    2));
  g.push_back(entry("t2f2", "upper_triangular(gf(2),2)", upper_triangular(f2, 2, caps),
                    {{"I0", {0}, true, true, 0, -1},
                     {"I1", {0, 2}, false, false, -1, -1},
                     {"I2", {0, 1, 2, 3}, true, true, 1, -1},
                     {"I3", {0, 2, 4, 6}, true, true, 1, -1},
                     {"I4", {0, 1, 2, 3, 4, 5, 6, 7}, true, true, 1, -1}},
                    4));
  g.push_back(entry("t2f3", "upper_triangular(gf(3),2)", upper_triangular(f3, 2, caps),
                    {{"I0", {0}, true, true, 0, -1},
                     {"I1", {0, 3, 6}, false, false, -1, -1},
                     {"I2", {0, 1, 2, 3, 4, 5, 6, 7, 8}, true, true, 1, -1},
                     {"I3", {0, 3, 6, 9, 12, 15, 18, 21, 24}, true, true, 1, -1},
                     {"I4", {0,  1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13,
                             14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26},
                      true, true, 1, -1}},
                    4));
  g.push_back(entry("m2f2", "matrix(gf(2),2)", matrix_ring(f2, 2, caps),
                    {{"I0", {0}, true, true, 0, -1},
                     {"I1", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
                      true, true, 1, -1}},
                    2));
  g.push_back(entry("z2xz3", "product(zn(2),zn(3))", product(zn(2, caps), zn(3, caps), caps),
                    {{"I0", {0}, true, true, 0, 0},
                     {"I1", {0, 3}, true, true, 1, 3},
                     {"I2", {0, 1, 2}, true, true, 1, 1},
                     {"I3", {0, 1, 2, 3, 4, 5}, true, true, 1, 4}},
                    4));
  {
    FiniteRing z12 = zn(12, caps);
    FiniteRing q = quotient_ring(z12, {0, 4, 8}, "zn(12)/(4)", caps);
    g.push_back(entry("zn12q4", "quotient(zn(12),[4])", std::move(q),
                      {{"I0", {0}, true, true, 0, 0},
                       {"I1", {0, 2}, false, false, -1, -1},
                       {"I2", {0, 1, 2, 3}, true, true, 1, 1}},
                      2));
  }
  return g;
}

int verify_gallery(const std::vector<GalleryEntry>& entries, std::ostream& out,
                   const Caps& caps) {
  int mismatches = 0;
  auto bad = [&](const std::string& entry_name, const std::string& ideal_name,
                 const std::string& field, const std::string& detail) {
    ++mismatches;
    out << "fixture mismatch: " << entry_name
        << (ideal_name.empty() ? "" : "/" + ideal_name) << " " << field << ": "
        << detail << "\n";
  };

  for (const GalleryEntry& e : entries) {
    const FiniteRing& r = *e.ring;

    // Library enumeration must list exactly the fixed ideals, in order.
    std::vector<std::vector<elem_t>> lib;
    for (const Ideal& i : enumerate_two_sided_ideals(r, caps)) lib.push_back(i.members());
    std::vector<std::vector<elem_t>> fixed;
    for (const GalleryFixture& f : e.fixtures) fixed.push_back(f.members);
    if (lib != fixed)
      bad(e.name, "", "ideal-lattice",
          "enumerated two-sided ideals differ from fixtures");

    // Small rings: the lattice again, against the all-subsets filter.
    if (r.size() <= 16) {
      std::vector<std::vector<elem_t>> brute = oracle_two_sided_ideals(r);
      std::sort(brute.begin(), brute.end());
      std::vector<std::vector<elem_t>> lib_sorted = lib;
      std::sort(lib_sorted.begin(), lib_sorted.end());
      if (brute != lib_sorted)
        bad(e.name, "", "ideal-lattice",
            "all-subsets filter disagrees with enumeration");
    }

    int idem = 0;
    for (const GalleryFixture& f : e.fixtures) {
      bool oi = oracle_idempotent(r, f.members);
      if (oi) ++idem;
      if (oi != f.idempotent)
        bad(e.name, f.ideal_name, "idempotent",
            std::string("oracle says ") + (oi ? "true" : "false"));
      if (!f.idempotent) continue;

      bool ov = oracle_via_idempotents(r, f.members);
      if (ov != f.via_idempotents)
        bad(e.name, f.ideal_name, "via_idempotents",
            std::string("oracle says ") + (ov ? "true" : "false"));
      int ok = oracle_fix_k(r, f.members);
      if (ok != f.fix_k)
        bad(e.name, f.ideal_name, "fix_k",
            "oracle says " + std::to_string(ok) + ", fixture says " +
                std::to_string(f.fix_k));
      if (r.is_commutative()) {
        if (!oracle_generator(r, f.members, f.generator))
          bad(e.name, f.ideal_name, "generator",
              std::to_string(f.generator) + " does not generate the ideal");
      } else if (f.generator != -1) {
        bad(e.name, f.ideal_name, "generator",
            "noncommutative ring with a generator fixture");
      }
    }
    if (idem != e.idempotent_count)
      bad(e.name, "", "idempotent_count",
          "oracle counts " + std::to_string(idem) + ", fixture says " +
              std::to_string(e.idempotent_count));
  }
  return mismatches;
}

int run_gallery(bool verify, const std::string& format, std::ostream& out,
                const Caps& caps) {
  std::vector<GalleryEntry> entries = build_gallery(caps);
  int mismatches = 0;
  if (verify) mismatches += verify_gallery(entries, std::cerr, caps);

  for (const GalleryEntry& e : entries) {
    if (format == "text")
      out << "== " << e.name << " = " << e.constructor << " ==\n";
    for (const GalleryFixture& f : e.fixtures) {
      Ideal i = ideal_from_members(*e.ring, f.members, Side::two_sided);
      AnalysisReport rep = analyze(*e.ring, i, e.name + "/" + f.ideal_name, caps);
      if (verify) {
        auto bad = [&](const std::string& field) {
          ++mismatches;
          std::cerr << "fixture mismatch: " << e.name << "/" << f.ideal_name
                    << " " << field << ": report disagrees with fixture\n";
        };
        if (rep.idempotent != f.idempotent) bad("idempotent");
        if (rep.idempotent) {
          if (rep.lfp->via_idempotents != f.via_idempotents) bad("via_idempotents");
          if (!rep.lfp->fix.certified || rep.lfp->fix.k_reached != f.fix_k)
            bad("fix_k");
          if (rep.commutative_applicable &&
              (!rep.commutative->holds || rep.commutative->generator != f.generator))
            bad("generator");
        }
      }
      if (format == "json")
        out << report_to_json(rep) << "\n";
      else
        out << report_to_text(rep) << "\n";
    }
  }
  return mismatches == 0 ? 0 : 1;
}

}  // namespace ttfkit
