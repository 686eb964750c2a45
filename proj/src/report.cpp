#include "kahler3/report.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "kahler3/algebraic.hpp"
#include "kahler3/base.hpp"

namespace kahler3 {

using nlohmann::json;

namespace {

const char* rank_status_name(RankStatus s) {
  switch (s) {
    case RankStatus::exact: return "exact";
    case RankStatus::bounded: return "bounded";
    default: return "undecided";
  }
}

const char* growth_method_name(GrowthMethod m) {
  switch (m) {
    case GrowthMethod::cyclotomic: return "cyclotomic";
    case GrowthMethod::dominant_real: return "dominant-real";
    default: return "composed-exact";
  }
}

json tool_stamp() { return json{{"name", kToolName}, {"version", kToolVersion}}; }

json skeleton() {
  json body;
  body["schema"] = kReportSchema;
  body["tool"] = tool_stamp();
  return body;
}

}  // namespace

json json_of(const Int& z) { return z.get_str(); }

json json_of(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json json_of(const IntPoly& p) {
  json a = json::array();
  for (const Int& c : p.c) a.push_back(json_of(c));
  return a;
}

json json_of(const RatMatrix& m) {
  json entries = json::array();
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) entries.push_back(json_of(m.at(i, j)));
  return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

json json_of(const RealAlgebraic& x) {
  return json{{"minpoly", json_of(x.minpoly)},
              {"approx", to_double(x)},
              {"certified", true}};
}

json json_of(const JordanReport& jr) {
  json factors = json::array();
  for (const FactorBlocks& f : jr.factors) {
    json blocks = json::array();
    for (const auto& [size, count] : f.blocks) blocks.push_back(json::array({size, count}));
    factors.push_back(json{{"poly", json_of(f.poly)},
                           {"degree", f.degree},
                           {"blocks", blocks},
                           {"max_block", f.max_block}});
  }
  return json{{"dimension", jr.dimension}, {"max_block", jr.max_block}, {"factors", factors}};
}

json json_of(const ModuliSet& ms) {
  json entries = json::array();
  for (const ModulusEntry& e : ms.entries)
    entries.push_back(json{{"mod2", json_of(e.mod2)},
                           {"multiplicity", e.multiplicity},
                           {"provenance", e.provenance}});
  json out{{"entries", entries}, {"total_multiplicity", ms.total_multiplicity()}};
  if (ms.plane) {
    out["plane"] = json{{"m1", json_of(ms.plane->m1)},
                        {"m2", json_of(ms.plane->m2)},
                        {"m3", json_of(ms.plane->m3)}};
  } else {
    out["plane"] = nullptr;
  }
  return out;
}

json json_of(const WeightLattice& wl) {
  json weights = json::array();
  for (const auto& w : wl.weights) {
    json row = json::array();
    for (const Rat& c : w) row.push_back(json_of(c));
    weights.push_back(row);
  }
  json out{{"rank", wl.rank},
           {"status", rank_status_name(wl.status)},
           {"exponent_bound", wl.exponent_bound},
           {"basis", wl.basis},
           {"weights", weights},
           {"coords_pow2_denominators", wl.coords_pow2_denominators}};
  if (wl.relation)
    out["relation"] = json::array({wl.relation->first, wl.relation->second});
  else
    out["relation"] = nullptr;
  return out;
}

json json_of(const DynamicalDegrees& dd) {
  return json{{"lambda1", json_of(dd.lambda1)},
              {"lambda2", json_of(dd.lambda2)},
              {"entropy", json{{"log_of", json_of(dd.entropy_log_arg)},
                               {"approx", std::log(to_double(dd.entropy_log_arg))}}}};
}

json json_of(const VerificationReport& vr) {
  json out{{"theorem", vr.theorem},
           {"status", check_status_name(vr.status)},
           {"detail", vr.detail}};
  if (!vr.block_sizes.empty()) out["block_sizes"] = vr.block_sizes;
  if (vr.order) out["order"] = *vr.order;
  if (!vr.entries.empty()) {
    json entries = json::array();
    for (const ModulusCertificate& c : vr.entries)
      entries.push_back(json{{"mod2", json_of(c.mod2)},
                             {"N", c.halving_steps},
                             {"target", c.target},
                             {"chain_ok", c.chain_ok},
                             {"multiplicity", c.multiplicity}});
    out["entries"] = entries;
  }
  if (vr.orbit.degree > 0)
    out["orbit"] = json{{"factor", json_of(vr.orbit.factor)},
                        {"degree", vr.orbit.degree},
                        {"root_targets", vr.orbit.root_targets}};
  if (!vr.classification.empty()) out["classification"] = vr.classification;
  if (vr.subcase != 0) out["subcase"] = vr.subcase;
  if (vr.k_pairs >= 0) out["k_pairs"] = vr.k_pairs;
  if (vr.bullet != 0) out["bullet"] = vr.bullet;
  if (!vr.inverse_classification.empty()) out["inverse_classification"] = vr.inverse_classification;
  if (vr.inverse_subcase != 0) out["inverse_subcase"] = vr.inverse_subcase;
  if (vr.inverse_k_pairs >= 0) out["inverse_k_pairs"] = vr.inverse_k_pairs;
  if (vr.inverse_bullet != 0) out["inverse_bullet"] = vr.inverse_bullet;
  if (vr.dominant) out["dominant"] = json_of(*vr.dominant);
  return out;
}

json json_of(const GaloisOrbitReport& gr) {
  json factors = json::array();
  for (const auto& f : gr.factors)
    factors.push_back(json{{"poly", json_of(f.poly)},
                           {"degree", f.degree},
                           {"has_lambda1", f.has_lambda1},
                           {"has_lambda2inv", f.has_lambda2inv},
                           {"has_lambda1inv_lambda2", f.has_lambda1inv_lambda2}});
  return json{{"q_squarefree", gr.q_squarefree}, {"degrees", gr.degrees}, {"factors", factors}};
}

json json_of(const GrowthFit& gf) {
  return json{{"rho_fit", gf.rho_fit}, {"k_fit", gf.k_fit}, {"certified", false}};
}

json json_of(const GrowthPrediction& gp) {
  return json{{"rho", json_of(gp.rho)},
              {"k", gp.k},
              {"method", growth_method_name(gp.method)},
              {"certified", true}};
}

AnalysisReport analyze_torus(const TorusSpec& t, const AnalyzeOptions& opt) {
  AnalysisReport r;
  r.body = skeleton();

  if (t.source == TorusSource::poly)
    r.body["input"] = json{{"kind", "poly"}, {"coeffs", json_of(t.poly)}};
  else
    r.body["input"] = json{{"kind", "matrix3"}, {"matrix", json_of(t.matrix3)}};
  r.body["torus"] = json{{"det6", json_of(t.det6)}};

  r.body["dynamical_degrees"] = json_of(dynamical_degrees(t));
  const ModuliSet ms = moduli_set(t);
  r.body["moduli"] = json_of(ms);
  r.body["weight_lattice"] = json_of(weight_rank(ms, 32));
  if (t.source == TorusSource::poly)
    r.body["galois"] = json_of(galois_orbit_report(t.poly));
  r.body["jordan"] = json_of(jordan_structure(induced_action(t, 2)));
  if (t.source == TorusSource::matrix3)
    r.body["h11"] = json{{"jordan", json_of(jordan_structure(t.h11_action))},
                         {"growth_exponent", predicted_growth(t.h11_action).k}};

  json checks = json::array();
  checks.push_back(json_of(check_theorem_A(t)));
  checks.push_back(json_of(check_theorem_B(t, opt.halving_bound)));
  checks.push_back(json_of(check_theorem_C(t)));
  r.body["verifications"] = checks;
  return r;
}

AnalysisReport analyze_matrix(const RatMatrix& m, const AnalyzeOptions& opt) {
  AnalysisReport r;
  r.body = skeleton();
  r.body["input"] = json{{"kind", "matrix"}, {"matrix", json_of(m)}};
  r.body["jordan"] = json_of(jordan_structure(m));
  r.body["growth"] = json{{"predicted", json_of(predicted_growth(m))},
                          {"fit", json_of(growth_fit(m, opt.growth_nmax))}};
  r.body["verifications"] = json::array();
  return r;
}

std::string serialize_report(const AnalysisReport& r, bool pretty) {
  return pretty ? r.body.dump(2) : r.body.dump();
}

AnalysisReport parse_report(const std::string& text) {
  AnalysisReport r;
  try {
    r.body = json::parse(text);
  } catch (const json::exception& e) {
    throw k3_error(errc::parse_error, std::string("report is not valid JSON: ") + e.what());
  }
  if (!r.body.is_object() || !r.body.contains("schema") || r.body["schema"] != kReportSchema)
    throw k3_error(errc::parse_error, "report schema version is missing or unsupported");
  return r;
}

namespace {

// Readable decimal for a serialized algebraic value.
std::string approx_str(const json& alg) {
  std::ostringstream os;
  os.precision(12);
  os << alg.at("approx").get<double>();
  return os.str();
}

std::string poly_str(const json& coeffs) {
  std::string s = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ", ";
    s += coeffs[i].get<std::string>();
  }
  return s + "]";
}

}  // namespace

std::string render_markdown(const AnalysisReport& r) {
  const json& b = r.body;
  std::ostringstream os;
  os << "# kahler3 analysis\n\n";
  os << "schema " << b.at("schema").get<std::string>() << ", tool "
     << b.at("tool").at("name").get<std::string>() << " "
     << b.at("tool").at("version").get<std::string>() << "\n\n";

  if (b.contains("input")) {
    const json& in = b.at("input");
    os << "## Input\n\n";
    os << "- kind: " << in.at("kind").get<std::string>() << "\n";
    if (in.contains("coeffs"))
      os << "- coefficients (lowest first): " << poly_str(in.at("coeffs")) << "\n";
    if (in.contains("matrix"))
      os << "- matrix: " << in.at("matrix").at("rows").get<int>() << "x"
         << in.at("matrix").at("cols").get<int>() << "\n";
    os << "\n";
  }

  if (b.contains("dynamical_degrees")) {
    const json& dd = b.at("dynamical_degrees");
    os << "## Dynamical degrees\n\n";
    os << "- lambda1 = " << approx_str(dd.at("lambda1")) << " (minpoly "
       << poly_str(dd.at("lambda1").at("minpoly")) << ")\n";
    os << "- lambda2 = " << approx_str(dd.at("lambda2")) << "\n";
    os << "- entropy = log(" << approx_str(dd.at("entropy").at("log_of")) << ") = "
       << dd.at("entropy").at("approx").get<double>() << "\n\n";
  }

  if (b.contains("moduli")) {
    os << "## Squared-modulus classes\n\n";
    os << "| mod2 | multiplicity | provenance |\n|---|---|---|\n";
    for (const json& e : b.at("moduli").at("entries"))
      os << "| " << approx_str(e.at("mod2")) << " | " << e.at("multiplicity").get<int>()
         << " | " << e.at("provenance").get<std::string>() << " |\n";
    os << "\n";
  }

  if (b.contains("weight_lattice")) {
    const json& wl = b.at("weight_lattice");
    os << "## Weight lattice\n\n";
    os << "- rank " << wl.at("rank").get<int>() << " ("
       << wl.at("status").get<std::string>() << ")";
    if (!wl.at("relation").is_null())
      os << ", relation exponents " << wl.at("relation")[0].get<long>() << ":"
         << wl.at("relation")[1].get<long>();
    os << "\n\n";
  }

  if (b.contains("galois")) {
    const json& g = b.at("galois");
    os << "## Degree-2 factor orbits\n\n";
    os << "- squarefree: " << (g.at("q_squarefree").get<bool>() ? "yes" : "no") << "\n";
    os << "- factor degrees:";
    for (const json& d : g.at("degrees")) os << " " << d.get<int>();
    os << "\n\n";
  }

  if (b.contains("jordan")) {
    const json& j = b.at("jordan");
    os << "## Jordan structure\n\n";
    os << "- dimension " << j.at("dimension").get<int>() << ", largest block "
       << j.at("max_block").get<int>() << "\n";
    os << "| factor degree | blocks (size x count) |\n|---|---|\n";
    for (const json& f : j.at("factors")) {
      os << "| " << f.at("degree").get<int>() << " | ";
      bool first = true;
      for (const json& bc : f.at("blocks")) {
        if (!first) os << ", ";
        first = false;
        os << bc[0].get<int>() << "x" << bc[1].get<int>();
      }
      os << " |\n";
    }
    os << "\n";
  }

  if (b.contains("growth")) {
    const json& g = b.at("growth");
    os << "## Growth\n\n";
    os << "- predicted: rho = " << approx_str(g.at("predicted").at("rho")) << ", k = "
       << g.at("predicted").at("k").get<int>() << " ("
       << g.at("predicted").at("method").get<std::string>() << ")\n";
    os << "- fitted: rho = " << g.at("fit").at("rho_fit").get<double>() << ", k = "
       << g.at("fit").at("k_fit").get<double>() << "\n\n";
  }

  if (b.contains("verifications") && !b.at("verifications").empty()) {
    os << "## Verifications\n\n";
    os << "| theorem | status | detail |\n|---|---|---|\n";
    for (const json& v : b.at("verifications"))
      os << "| " << v.at("theorem").get<std::string>() << " | "
         << v.at("status").get<std::string>() << " | " << v.at("detail").get<std::string>()
         << " |\n";
    os << "\n";
  }
  return os.str();
}

int report_exit_status(const AnalysisReport& r) {
  bool undecided = false;
  if (r.body.contains("verifications")) {
    for (const json& v : r.body.at("verifications")) {
      const std::string s = v.at("status").get<std::string>();
      if (s == "fail") return 2;
      if (s == "undecided") undecided = true;
    }
  }
  return undecided ? 3 : 0;
}

}  // namespace kahler3
