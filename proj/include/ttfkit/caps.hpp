// Resource caps and error taxonomy shared by every ttfkit component.
//
// Everything in this library is an exhaustive finite computation, so the
// only thing standing between a misbehaving input and an out-of-memory kill
// is an explicit cap.  All caps live here, have documented defaults, and are
// overridable per call (the CLI exposes them as flags).  TTFKIT_CAP_BYTES in
// the environment overrides the table-memory cap.

#ifndef TTFKIT_CAPS_HPP
#define TTFKIT_CAPS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ttfkit {

// Element index inside a ring or module carrier.  Index 0 is always the zero
// element of whatever carrier it indexes.
using elem_t = std::int32_t;

struct Caps {
  // Max element count for a constructed ring.
  std::uint64_t ring_size_cap = 65536;
  // Max element count for a module carrier (and for any enumerated tuple
  // space R^m or N^m a computation has to sweep).
  std::uint64_t module_cap = 65536;
  // Max number of ideals an enumeration may produce.
  std::uint64_t ideal_count_cap = 4096;
  // Max number of k x k matrices scanned per size k in the fix-closure
  // certification loop.
  std::uint64_t matrix_budget = 1u << 20;
  // Largest matrix size k tried by the fix-closure loop.
  int k_max = 2;
  // Ring axioms are checked exhaustively up to this size; above it, sampled.
  std::uint64_t axiom_exhaustive_limit = 512;
  // Number of sampled (a,b,c) triples for axiom checks on large rings.
  std::uint64_t axiom_sample_count = 1000000;
  // Byte budget for materialised Cayley/action tables.
  std::uint64_t table_bytes_cap = 1ull << 30;

  // Defaults, with TTFKIT_CAP_BYTES applied if set.
  static Caps defaults();
};

// Base class: every ttfkit failure is one of the named conditions below.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A Cayley table failed a ring axiom.  Carries the axiom name and the
// offending element triple (unused slots are -1).
struct AxiomViolation : Error {
  std::string axiom;
  elem_t a, b, c;
  AxiomViolation(const std::string& ax, elem_t a_, elem_t b_, elem_t c_)
      : Error("axiom violation: " + ax + " at (" + std::to_string(a_) + "," +
              std::to_string(b_) + "," + std::to_string(c_) + ")"),
        axiom(ax), a(a_), b(b_), c(c_) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& w) : Error("dimension mismatch: " + w) {}
};

struct SizeCapExceeded : Error {
  explicit SizeCapExceeded(const std::string& w) : Error("size cap exceeded: " + w) {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& w) : Error("not prime: " + w) {}
};

// Two operands live over different rings.
struct RingMismatch : Error {
  explicit RingMismatch(const std::string& w) : Error("ring mismatch: " + w) {}
};

struct EnumerationCapExceeded : Error {
  explicit EnumerationCapExceeded(const std::string& w)
      : Error("enumeration cap exceeded: " + w) {}
};

struct NotIdempotent : Error {
  explicit NotIdempotent(const std::string& w) : Error("ideal not idempotent: " + w) {}
};

struct SideMismatch : Error {
  explicit SideMismatch(const std::string& w) : Error("side mismatch: " + w) {}
};

struct NotEpi : Error {
  explicit NotEpi(const std::string& w) : Error("map is not an epimorphism: " + w) {}
};

struct EntriesNotInIdeal : Error {
  explicit EntriesNotInIdeal(const std::string& w)
      : Error("matrix entries not in ideal: " + w) {}
};

struct NotCommutative : Error {
  explicit NotCommutative(const std::string& w) : Error("ring not commutative: " + w) {}
};

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("parse error at line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct UnknownName : Error {
  explicit UnknownName(const std::string& w) : Error("unknown name: " + w) {}
};

}  // namespace ttfkit

#endif  // TTFKIT_CAPS_HPP
