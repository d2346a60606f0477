#include <cctype>
#include <fstream>
#include <sstream>

#include "ttfkit/harness.hpp"

namespace ttfkit {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !std::isdigit(static_cast<unsigned char>(s[0]));
}

// Splits "head(arg1,arg2)" into head and raw args; args keep inner spaces.
struct Call {
  std::string head;
  std::vector<std::string> args;
};
Call parse_call(int line, const std::string& s) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw ParseError(line, "expected <constructor>(...), got '" + s + "'");
  Call c;
  c.head = trim(s.substr(0, open));
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  if (!trim(inner).empty()) {
    std::string cur;
    int depth = 0;
    for (char ch : inner) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        c.args.push_back(trim(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    c.args.push_back(trim(cur));
  }
  return c;
}

std::uint64_t parse_uint(int line, const std::string& s) {
  if (s.empty()) throw ParseError(line, "expected a number");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(line, "expected a number, got '" + s + "'");
  return std::stoull(s);
}

// Per-ring construction info needed to resolve e(i,j) element literals.
struct RingMeta {
  bool matrix_like = false;
  bool upper_only = false;
  int k = 0;
  elem_t base_size = 0;
};

struct Parser {
  const std::string& base_dir;
  const Caps& caps;
  ParsedSpec env;
  std::map<std::string, RingMeta> meta;

  const FiniteRing& ring_or_throw(int line, const std::string& name) {
    auto it = env.rings.find(name);
    if (it == env.rings.end())
      throw ParseError(line, "unknown ring '" + name + "'");
    return it->second;
  }

  elem_t element_literal(int line, const FiniteRing& r, const std::string& rname,
                         const std::string& tok) {
    if (tok.rfind("e(", 0) == 0) {
      const RingMeta& m = meta.at(rname);
      if (!m.matrix_like)
        throw ParseError(line, "e(i,j) literals need a matrix-type ring, '" +
                                   rname + "' is not one");
      Call c = parse_call(line, tok);
      if (c.args.size() != 2) throw ParseError(line, "e(i,j) takes two indices");
      int i = int(parse_uint(line, c.args[0]));
      int j = int(parse_uint(line, c.args[1]));
      if (i < 1 || j < 1 || i > m.k || j > m.k || (m.upper_only && i > j))
        throw ParseError(line, "matrix unit " + tok + " out of range");
      return matrix_unit_index(i, j, m.k, m.base_size, m.upper_only);
    }
    std::uint64_t v = parse_uint(line, tok);
    if (v >= std::uint64_t(r.size()))
      throw ParseError(line, "element index " + tok + " out of range for '" +
                                 rname + "' (size " +
                                 std::to_string(r.size()) + ")");
    return elem_t(v);
  }

  // "[a, b, c]" -> tokens; empty list allowed.
  std::vector<std::string> bracket_list(int line, const std::string& s) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
      throw ParseError(line, "expected [ ... ], got '" + s + "'");
    std::string inner = t.substr(1, t.size() - 2);
    std::vector<std::string> out;
    if (trim(inner).empty()) return out;
    std::string cur;
    int depth = 0;
    for (char ch : inner) {
      if (ch == '(' || ch == '[') ++depth;
      if (ch == ')' || ch == ']') --depth;
      if (ch == ',' && depth == 0) {
        out.push_back(trim(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    out.push_back(trim(cur));
    return out;
  }

  void declare_name(int line, const std::string& name) {
    if (!is_name(name)) throw ParseError(line, "bad name '" + name + "'");
    if (env.rings.count(name) || env.ideals.count(name) || env.modules.count(name))
      throw ParseError(line, "duplicate name '" + name + "'");
  }

  FiniteRing tables_from_file(int line, const std::string& arg) {
    std::string path = arg;
    if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
    std::ifstream in(path);
    if (!in) throw ParseError(line, "cannot open tables file '" + arg + "'");
    std::uint64_t n = 0;
    long long z = -1, o = -1;
    if (!(in >> n >> z >> o))
      throw ParseError(line, "tables file '" + arg + "': bad header");
    if (n == 0 || n > caps.ring_size_cap)
      throw ParseError(line, "tables file '" + arg + "': bad size");
    if (z < 0 || o < 0 || std::uint64_t(z) >= n || std::uint64_t(o) >= n)
      throw ParseError(line, "tables file '" + arg + "': zero/one out of range");
    std::vector<elem_t> add(n * n), mul(n * n);
    for (auto* tab : {&add, &mul})
      for (auto& v : *tab) {
        long long x;
        if (!(in >> x) || x < 0 || std::uint64_t(x) >= n)
          throw ParseError(line, "tables file '" + arg + "': bad entry");
        v = elem_t(x);
      }
    return build_ring(std::move(add), std::move(mul), elem_t(z), elem_t(o),
                      "tables(" + arg + ")", caps);
  }

  void ring_line(int line, const std::string& rest) {
    auto eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected '=' in ring line");
    std::string name = trim(rest.substr(0, eq));
    declare_name(line, name);
    Call c = parse_call(line, trim(rest.substr(eq + 1)));
    RingMeta m;
    auto want = [&](std::size_t k) {
      if (c.args.size() != k)
        throw ParseError(line, c.head + " takes " + std::to_string(k) +
                                   " argument(s)");
    };
    std::optional<FiniteRing> r;
    if (c.head == "zn") {
      want(1);
      r = zn(parse_uint(line, c.args[0]), caps);
    } else if (c.head == "gf") {
      want(1);
      r = gf(parse_uint(line, c.args[0]), caps);
    } else if (c.head == "matrix" || c.head == "upper_triangular") {
      want(2);
      const FiniteRing& base = ring_or_throw(line, c.args[0]);
      int k = int(parse_uint(line, c.args[1]));
      m.matrix_like = true;
      m.upper_only = (c.head == "upper_triangular");
      m.k = k;
      m.base_size = base.size();
      r = m.upper_only ? upper_triangular(base, k, caps) : matrix_ring(base, k, caps);
    } else if (c.head == "product") {
      want(2);
      r = product(ring_or_throw(line, c.args[0]), ring_or_throw(line, c.args[1]), caps);
    } else if (c.head == "quotient") {
      want(2);
      const FiniteRing& base = ring_or_throw(line, c.args[0]);
      auto it = env.ideals.find(c.args[1]);
      if (it == env.ideals.end())
        throw ParseError(line, "unknown ideal '" + c.args[1] + "'");
      if (&it->second.ring() != &base)
        throw ParseError(line, "ideal '" + c.args[1] + "' is not an ideal of '" +
                                   c.args[0] + "'");
      r = quotient_ring(base, it->second.members(),
                        base.label() + "/" + c.args[1], caps);
    } else if (c.head == "tables") {
      want(1);
      r = tables_from_file(line, c.args[0]);
    } else {
      throw ParseError(line, "unknown ring constructor '" + c.head + "'");
    }
    env.rings.emplace(name, std::move(*r));
    env.ring_order.push_back(name);
    meta.emplace(name, m);
  }

  void ideal_line(int line, const std::string& rest) {
    std::istringstream ss(rest);
    std::string name, kw_in, rname;
    ss >> name >> kw_in >> rname;
    if (kw_in != "in") throw ParseError(line, "expected 'ideal <name> in <ring> = ...'");
    declare_name(line, name);
    const FiniteRing& r = ring_or_throw(line, rname);
    std::string tail;
    std::getline(ss, tail);
    tail = trim(tail);
    if (tail.empty() || tail[0] != '=')
      throw ParseError(line, "expected '=' in ideal line");
    tail = trim(tail.substr(1));

    std::optional<Ideal> ideal;
    try {
      if (tail == "jacobson") {
        ideal = radical_ideal(r);
      } else if (tail.rfind("generated", 0) == 0) {
        std::vector<elem_t> gens;
        for (const auto& t : bracket_list(line, trim(tail.substr(9))))
          gens.push_back(element_literal(line, r, rname, t));
        ideal = ideal_generated(r, gens, Side::two_sided);
      } else if (tail.rfind("members", 0) == 0) {
        std::vector<elem_t> mem;
        for (const auto& t : bracket_list(line, trim(tail.substr(7))))
          mem.push_back(element_literal(line, r, rname, t));
        ideal = ideal_from_members(r, mem, Side::two_sided);
      } else {
        throw ParseError(line, "expected 'generated [...]', 'jacobson' or 'members [...]'");
      }
    } catch (const AxiomViolation& e) {
      throw ParseError(line, std::string("invalid ideal: ") + e.what());
    }
    env.ideals.emplace(name, std::move(*ideal));
    env.ideal_order.push_back(name);
    env.ideal_ring.emplace(name, rname);
  }

  void module_line(int line, const std::string& rest) {
    std::istringstream ss(rest);
    std::string name, kw_over, rname, kw_side, side_tok, kw_pres;
    ss >> name >> kw_over >> rname >> kw_side >> side_tok >> kw_pres;
    if (kw_over != "over" || kw_side != "side" || kw_pres != "presented")
      throw ParseError(line,
                       "expected 'module <name> over <ring> side <left|right> presented [[...]]'");
    declare_name(line, name);
    const FiniteRing& r = ring_or_throw(line, rname);
    Side side;
    if (side_tok == "left") side = Side::left;
    else if (side_tok == "right") side = Side::right;
    else throw ParseError(line, "side must be left or right, got '" + side_tok + "'");

    std::string tail;
    std::getline(ss, tail);
    std::vector<std::string> rows = bracket_list(line, trim(tail));
    int nrows = int(rows.size());
    std::vector<std::vector<elem_t>> entries;
    int ncols = -1;
    for (const auto& row : rows) {
      std::vector<elem_t> er;
      for (const auto& t : bracket_list(line, row))
        er.push_back(element_literal(line, r, rname, t));
      if (ncols < 0) ncols = int(er.size());
      else if (int(er.size()) != ncols)
        throw ParseError(line, "ragged presentation matrix");
      entries.push_back(std::move(er));
    }
    if (nrows == 0 || ncols <= 0)
      throw ParseError(line, "presentation matrix must have at least one row and column");
    RMatrix a(r, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
      for (int j = 0; j < ncols; ++j) a.at(i, j) = entries[std::size_t(i)][std::size_t(j)];
    env.modules.emplace(name, module_from_presentation(a, side, caps));
    env.module_order.push_back(name);
  }
};

}  // namespace

const FiniteRing& ParsedSpec::ring(const std::string& name) const {
  auto it = rings.find(name);
  if (it == rings.end()) throw UnknownName("ring '" + name + "'");
  return it->second;
}

const Ideal& ParsedSpec::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw UnknownName("ideal '" + name + "'");
  return it->second;
}

ParsedSpec parse_spec(const std::string& text, const std::string& base_dir,
                      const Caps& caps) {
  Parser p{base_dir, caps, {}, {}};
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    std::string s = trim(raw);
    if (s.empty()) continue;
    std::istringstream ss(s);
    std::string kw;
    ss >> kw;
    std::string rest;
    std::getline(ss, rest);
    try {
      if (kw == "ring") p.ring_line(line, trim(rest));
      else if (kw == "ideal") p.ideal_line(line, trim(rest));
      else if (kw == "module") p.module_line(line, trim(rest));
      else throw ParseError(line, "unknown declaration '" + kw + "'");
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      // Construction failures surface as parse errors at the offending line.
      throw ParseError(line, e.what());
    }
  }
  return std::move(p.env);
}

ParsedSpec parse_spec_file(const std::string& path, const Caps& caps) {
  std::ifstream in(path);
  if (!in) throw UnknownName("spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string dir = ".";
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos) dir = path.substr(0, slash);
  return parse_spec(buf.str(), dir, caps);
}

}  // namespace ttfkit
