#include <chrono>
#include <sstream>

#include "json.hpp"
#include "ttfkit/harness.hpp"

namespace ttfkit {

namespace {

using njson = nlohmann::ordered_json;

// Rethrows any toolkit error with the pipeline stage prepended, so a failure
// deep in a computation names where the pipeline was.
template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(std::string("stage ") + name + ": " + e.what());
  }
}

njson members_json(const std::vector<elem_t>& v) {
  njson a = njson::array();
  for (elem_t x : v) a.push_back(x);
  return a;
}

njson lfp_json(const LfpReport& l) {
  njson fix;
  fix["certified"] = l.fix.certified;
  fix["k_reached"] = l.fix.k_reached;
  fix["closure"] = members_json(l.fix.fix_closure.members());
  njson contrib = njson::array();
  for (const RMatrix& m : l.fix.contributing) {
    njson e;
    e["k"] = m.rows;
    e["entries"] = members_json(m.a);
    contrib.push_back(e);
  }
  fix["contributing"] = contrib;
  fix["skipped_k"] = l.fix.skipped_k;

  njson out;
  out["via_idempotents"] = l.via_idempotents;
  out["idempotent_closure"] = members_json(l.idempotent_closure.members());
  out["fix"] = fix;
  out["enough_projectives"] = l.enough_projectives;
  return out;
}

}  // namespace

AnalysisReport analyze(const FiniteRing& ring, const Ideal& ideal,
                       const std::string& ideal_name, const Caps& caps) {
  auto t0 = std::chrono::steady_clock::now();
  if (&ideal.ring() != &ring) throw RingMismatch("analyze: ideal over a different ring");
  if (ideal.side() != Side::two_sided)
    throw SideMismatch("analyze needs a two-sided ideal");

  AnalysisReport rep;
  rep.ring_label = ring.label();
  rep.ring_size = ring.size();
  rep.ideal_name = ideal_name;
  rep.ideal_members = ideal.members();
  rep.idempotent = stage("idempotency", [&] { return is_idempotent_ideal(ideal); });

  if (rep.idempotent) {
    stage("ttf-classification", [&] {
      for (const Ideal& k : enumerate_ideals(ring, Side::right, caps)) {
        FinModule m = cyclic_module(ring, k, Side::right, caps);
        rep.ttf.push_back(CyclicTTFRow{k.members(), classify_ttf(m, ideal)});
      }
      return 0;
    });
    rep.lfp = stage("local-fp", [&] { return lfp_report(ideal, caps); });
    rep.enough_projectives = rep.lfp->enough_projectives;
    rep.counterexample = stage("counterexample-conditions",
                               [&] { return counterexample_conditions(ideal, caps); });
    rep.commutative_applicable = ring.is_commutative();
    if (rep.commutative_applicable)
      rep.commutative = stage("commutative-theorem",
                              [&] { return check_commutative_theorem(ideal, caps); });
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string report_to_json(const AnalysisReport& r) {
  njson j;
  j["schema_version"] = r.schema_version;
  j["ring"] = njson{{"label", r.ring_label}, {"size", r.ring_size}};
  j["ideal"] = njson{{"name", r.ideal_name}, {"members", members_json(r.ideal_members)}};
  j["idempotent"] = r.idempotent;
  if (r.idempotent) {
    njson rows = njson::array();
    for (const CyclicTTFRow& row : r.ttf) {
      njson e;
      e["k_members"] = members_json(row.k_members);
      e["in_C"] = row.flags.in_C;
      e["in_T"] = row.flags.in_T;
      e["in_F"] = row.flags.in_F;
      rows.push_back(e);
    }
    j["ttf"] = rows;
    j["lfp"] = lfp_json(*r.lfp);
    j["counterexample_conditions"] =
        njson{{"rho_iso", r.counterexample->rho_iso},
              {"quotient_left_flat", r.counterexample->quotient_left_flat},
              {"trace_of_projective", r.counterexample->trace_of_projective},
              {"note", r.counterexample->note}};
    njson comm;
    comm["applicable"] = r.commutative_applicable;
    if (r.commutative_applicable) {
      comm["holds"] = r.commutative->holds;
      comm["generator"] = r.commutative->generator;
      comm["support"] = r.commutative->support;
      comm["factor_sizes"] = members_json(r.commutative->factor_sizes);
    }
    j["commutative"] = comm;
  }
  return j.dump(2);
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  auto list = [](const std::vector<elem_t>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  out << "ring " << r.ring_label << " (size " << r.ring_size << ")\n";
  out << "ideal " << r.ideal_name << " = " << list(r.ideal_members) << "\n";
  out << "  idempotent: " << yn(r.idempotent) << "\n";
  if (r.idempotent) {
    out << "  ttf over cyclic right modules R/K:\n";
    for (const CyclicTTFRow& row : r.ttf)
      out << "    K=" << list(row.k_members) << "  C:" << yn(row.flags.in_C)
          << " T:" << yn(row.flags.in_T) << " F:" << yn(row.flags.in_F) << "\n";
    out << "  locally fp via idempotent elements: " << yn(r.lfp->via_idempotents)
        << "  (closure " << list(r.lfp->idempotent_closure.members()) << ")\n";
    out << "  fix closure: "
        << (r.lfp->fix.certified
                ? "certified at k=" + std::to_string(r.lfp->fix.k_reached)
                : "unknown (not certified within budget)")
        << "  (closure " << list(r.lfp->fix.fix_closure.members()) << ")\n";
    out << "  enough projectives: " << yn(r.enough_projectives) << "\n";
    out << "  counterexample conditions: rho iso " << yn(r.counterexample->rho_iso)
        << ", R/I left flat " << yn(r.counterexample->quotient_left_flat)
        << ", trace of projective " << yn(r.counterexample->trace_of_projective) << "\n";
    out << "    " << r.counterexample->note << "\n";
    if (r.commutative_applicable) {
      out << "  commutative theorem: holds " << yn(r.commutative->holds)
          << ", generator " << r.commutative->generator << ", support [";
      for (std::size_t i = 0; i < r.commutative->support.size(); ++i)
        out << (i ? "," : "") << r.commutative->support[i];
      out << "], factor sizes " << list(r.commutative->factor_sizes) << "\n";
    }
  }
  out << "  elapsed_ms: " << std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::duration<double>(r.elapsed_seconds))
                                 .count()
      << "\n";
  return out.str();
}

}  // namespace ttfkit
