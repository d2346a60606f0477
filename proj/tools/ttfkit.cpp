// Command-line front end.  Exit codes: 0 success, 1 property or fixture
// violation, 2 input/usage error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ttfkit/harness.hpp"

namespace {

using ttfkit::Caps;
using ttfkit::elem_t;
using njson = nlohmann::ordered_json;

struct CommonOpts {
  std::string ring_file;
  std::string ideal_name;
  std::string format = "text";
  int kmax = Caps::defaults().k_max;
  std::uint64_t budget = Caps::defaults().matrix_budget;
};

Caps caps_from(const CommonOpts& o) {
  Caps c = Caps::defaults();
  c.k_max = o.kmax;
  c.matrix_budget = o.budget;
  return c;
}

njson members_json(const std::vector<elem_t>& v) {
  njson a = njson::array();
  for (elem_t x : v) a.push_back(x);
  return a;
}

// The ideals to analyze when --ideal is absent: every declared ideal, else
// every two-sided ideal of the last declared ring.
std::vector<std::pair<std::string, ttfkit::Ideal>> select_ideals(
    const ttfkit::ParsedSpec& env, const std::string& ideal_name, const Caps& caps) {
  std::vector<std::pair<std::string, ttfkit::Ideal>> out;
  if (!ideal_name.empty()) {
    out.emplace_back(ideal_name, env.ideal(ideal_name));
    return out;
  }
  if (!env.ideal_order.empty()) {
    for (const std::string& n : env.ideal_order) out.emplace_back(n, env.ideal(n));
    return out;
  }
  if (env.ring_order.empty()) throw ttfkit::UnknownName("no ring declared");
  const ttfkit::FiniteRing& r = env.ring(env.ring_order.back());
  int idx = 0;
  for (const ttfkit::Ideal& i : ttfkit::enumerate_two_sided_ideals(r, caps))
    out.emplace_back("I" + std::to_string(idx++), i);
  return out;
}

const ttfkit::FiniteRing& ring_of(const ttfkit::ParsedSpec& env,
                                  const std::pair<std::string, ttfkit::Ideal>& p) {
  return p.second.ring();
}

int cmd_analyze(const CommonOpts& o) {
  Caps caps = caps_from(o);
  ttfkit::ParsedSpec env = ttfkit::parse_spec_file(o.ring_file, caps);
  for (const auto& p : select_ideals(env, o.ideal_name, caps)) {
    ttfkit::AnalysisReport rep =
        ttfkit::analyze(ring_of(env, p), p.second, p.first, caps);
    if (o.format == "json")
      std::cout << ttfkit::report_to_json(rep) << "\n";
    else
      std::cout << ttfkit::report_to_text(rep) << "\n";
  }
  return 0;
}

int cmd_enumerate(const CommonOpts& o, bool idempotent_only) {
  Caps caps = caps_from(o);
  ttfkit::ParsedSpec env = ttfkit::parse_spec_file(o.ring_file, caps);
  if (env.ring_order.empty()) throw ttfkit::UnknownName("no ring declared");
  const ttfkit::FiniteRing& r = env.ring(env.ring_order.back());
  std::vector<ttfkit::Ideal> ideals = ttfkit::enumerate_two_sided_ideals(r, caps);

  if (o.format == "json") {
    njson arr = njson::array();
    for (const ttfkit::Ideal& i : ideals) {
      bool idem = ttfkit::is_idempotent_ideal(i);
      if (idempotent_only && !idem) continue;
      njson e;
      e["members"] = members_json(i.members());
      e["idempotent"] = idem;
      arr.push_back(e);
    }
    njson doc;
    doc["schema_version"] = 1;
    doc["ring"] = njson{{"label", r.label()}, {"size", r.size()}};
    doc["ideals"] = arr;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "ring " << r.label() << " (size " << r.size() << ")\n";
    for (const ttfkit::Ideal& i : ideals) {
      bool idem = ttfkit::is_idempotent_ideal(i);
      if (idempotent_only && !idem) continue;
      std::cout << "  {";
      for (std::size_t k = 0; k < i.members().size(); ++k)
        std::cout << (k ? "," : "") << i.members()[k];
      std::cout << "}" << (idem ? "  idempotent" : "") << "\n";
    }
  }
  return 0;
}

int cmd_check_lfp(const CommonOpts& o) {
  Caps caps = caps_from(o);
  ttfkit::ParsedSpec env = ttfkit::parse_spec_file(o.ring_file, caps);
  ttfkit::LfpReport rep = ttfkit::lfp_report(env.ideal(o.ideal_name), caps);

  njson fix;
  fix["certified"] = rep.fix.certified;
  fix["k_reached"] = rep.fix.k_reached;
  fix["closure"] = members_json(rep.fix.fix_closure.members());
  njson contrib = njson::array();
  for (const ttfkit::RMatrix& m : rep.fix.contributing) {
    njson e;
    e["k"] = m.rows;
    e["entries"] = members_json(m.a);
    contrib.push_back(e);
  }
  fix["contributing"] = contrib;
  fix["skipped_k"] = rep.fix.skipped_k;

  njson doc;
  doc["schema_version"] = 1;
  doc["ideal"] = njson{{"name", o.ideal_name},
                       {"members", members_json(env.ideal(o.ideal_name).members())}};
  doc["via_idempotents"] = rep.via_idempotents;
  doc["idempotent_closure"] = members_json(rep.idempotent_closure.members());
  doc["fix"] = fix;
  doc["enough_projectives"] = rep.enough_projectives;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int cmd_check_commutative(const CommonOpts& o) {
  Caps caps = caps_from(o);
  ttfkit::ParsedSpec env = ttfkit::parse_spec_file(o.ring_file, caps);
  ttfkit::CommutativeVerdict v =
      ttfkit::check_commutative_theorem(env.ideal(o.ideal_name), caps);

  njson doc;
  doc["schema_version"] = 1;
  doc["ideal"] = njson{{"name", o.ideal_name},
                       {"members", members_json(env.ideal(o.ideal_name).members())}};
  doc["holds"] = v.holds;
  doc["generator"] = v.generator;
  doc["support"] = v.support;
  doc["factor_sizes"] = members_json(v.factor_sizes);
  std::cout << doc.dump(2) << "\n";
  return v.holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-ring toolkit: TTF triples, fp-detecting matrices, and "
               "local finite presentability of Giraud subcategories"};
  app.require_subcommand(1);
  CommonOpts opt;
  bool idempotent_only = false;
  bool verify = false;

  auto add_common = [&](CLI::App* sub, bool need_ring, bool need_ideal) {
    auto* ring = sub->add_option("--ring", opt.ring_file, "ring spec file");
    if (need_ring) ring->required();
    auto* ideal = sub->add_option("--ideal", opt.ideal_name, "ideal name from the spec file");
    if (need_ideal) ideal->required();
    sub->add_option("--kmax", opt.kmax, "largest fix-closure matrix size");
    sub->add_option("--budget", opt.budget, "matrix-enumeration budget per size");
    sub->add_option("--format", opt.format, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full analysis of (ring, ideal) pairs");
  add_common(analyze, true, false);
  CLI::App* enumerate = app.add_subcommand("enumerate-ideals", "list two-sided ideals");
  add_common(enumerate, true, false);
  enumerate->add_flag("--idempotent-only", idempotent_only, "only idempotent ideals");
  CLI::App* lfp = app.add_subcommand("check-lfp", "fix-closure certification report");
  add_common(lfp, true, true);
  CLI::App* comm = app.add_subcommand("check-commutative",
                                      "local-factor decomposition check");
  add_common(comm, true, true);
  CLI::App* gallery = app.add_subcommand("gallery", "built-in example gallery");
  gallery->add_flag("--verify", verify, "re-derive fixtures with brute-force oracles");
  gallery->add_option("--format", opt.format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(opt);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(opt, idempotent_only);
    if (app.got_subcommand(lfp)) return cmd_check_lfp(opt);
    if (app.got_subcommand(comm)) return cmd_check_commutative(opt);
    if (app.got_subcommand(gallery))
      return ttfkit::run_gallery(verify, opt.format, std::cout);
  } catch (const ttfkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
