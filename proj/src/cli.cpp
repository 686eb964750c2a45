// kahler3 — command-line front end: analyze torus automorphisms, run the
// frozen fixture corpus, hunt coefficient boxes, classify lattice
// isometries, and cross-check growth rates numerically.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kahler3/algebraic.hpp"
#include "kahler3/growth.hpp"
#include "kahler3/jordan.hpp"
#include "kahler3/report.hpp"
#include "kahler3/spectra.hpp"
#include "kahler3/torus.hpp"
#include "kahler3/verify.hpp"
#include "fixture_expected.hpp"

using json = nlohmann::json;
using namespace kahler3;

namespace {

// ---------------------------------------------------------------------------
// input parsing
// ---------------------------------------------------------------------------

std::string slurp_if_file(const std::string& arg) {
  std::ifstream in(arg);
  if (!in.good()) return arg;
  std::ostringstream os;
  os << in.rdbuf();
  std::string s = os.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

Int int_from_json(const json& v, const char* what) {
  if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw k3_error(errc::parse_error, std::string(what) + " must be an integer or decimal string");
}

Rat rat_from_string(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw k3_error(errc::parse_error, "bad rational literal: " + s);
  }
}

// Shorthand polynomial grammar (documented in the README):
//   poly   := [sign] term (sign term)*
//   term   := integer | integer '*'? var ['^' integer] | var ['^' integer]
//   var    := 'T' | 't' | 'x' | 'X'
IntPoly parse_poly_shorthand(const std::string& text) {
  std::vector<Int> coeffs;
  auto bump = [&coeffs](size_t e, const Int& c) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, Int(0));
    coeffs[e] += c;
  };
  size_t i = 0;
  const size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> std::optional<std::string> {
    skip_ws();
    std::string digits;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    if (digits.empty()) return std::nullopt;
    return digits;
  };
  bool any_term = false;
  skip_ws();
  while (i < n) {
    long sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
    } else if (any_term) {
      throw k3_error(errc::parse_error,
                     std::string("expected '+' or '-' before term at position ") +
                         std::to_string(i));
    }
    skip_ws();
    const std::optional<std::string> num = read_uint();
    Int coef = num ? Int(*num) : Int(1);
    coef *= sign;
    skip_ws();
    if (i < n && text[i] == '*') {
      ++i;
      skip_ws();
    }
    size_t exp = 0;
    if (i < n && (text[i] == 'T' || text[i] == 't' || text[i] == 'x' || text[i] == 'X')) {
      ++i;
      exp = 1;
      skip_ws();
      if (i < n && text[i] == '^') {
        ++i;
        const std::optional<std::string> e = read_uint();
        if (!e) throw k3_error(errc::parse_error, "'^' must be followed by a nonnegative integer");
        if (e->size() > 4) throw k3_error(errc::parse_error, "exponent out of range: " + *e);
        exp = static_cast<size_t>(std::stoul(*e));
      }
    } else if (!num) {
      throw k3_error(errc::parse_error,
                     std::string("expected a coefficient or variable at position ") +
                         std::to_string(i));
    }
    bump(exp, coef);
    any_term = true;
    skip_ws();
  }
  if (!any_term) throw k3_error(errc::parse_error, "empty polynomial");
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  IntPoly p;
  p.c = coeffs;
  return p;
}

IntPoly parse_poly_input(const std::string& arg) {
  const std::string text = slurp_if_file(arg);
  if (!text.empty() && text.front() == '[') {
    json v;
    try {
      v = json::parse(text);
    } catch (const json::exception& e) {
      throw k3_error(errc::parse_error, std::string("bad polynomial JSON: ") + e.what());
    }
    if (!v.is_array() || v.empty())
      throw k3_error(errc::parse_error, "polynomial JSON must be a nonempty coefficient array");
    IntPoly p;
    for (const json& c : v) p.c.push_back(int_from_json(c, "coefficient"));
    while (p.c.size() > 1 && p.c.back() == 0) p.c.pop_back();
    return p;
  }
  return parse_poly_shorthand(text);
}

RatMatrix parse_matrix_input(const std::string& arg) {
  const std::string text = slurp_if_file(arg);
  json v;
  try {
    v = json::parse(text);
  } catch (const json::exception& e) {
    throw k3_error(errc::parse_error, std::string("bad matrix JSON: ") + e.what());
  }
  auto entry = [](const json& e) -> Rat {
    if (e.is_number_integer()) return Rat(static_cast<long>(e.get<long long>()));
    if (e.is_string()) return rat_from_string(e.get<std::string>());
    throw k3_error(errc::parse_error, "matrix entries must be integers or rational strings");
  };
  if (v.is_object()) {  // report-style {"rows","cols","entries"}
    if (!v.contains("rows") || !v.contains("cols") || !v.contains("entries"))
      throw k3_error(errc::parse_error, "matrix object needs rows, cols, entries");
    const size_t rows = v["rows"].get<size_t>(), cols = v["cols"].get<size_t>();
    const json& es = v["entries"];
    if (!es.is_array() || es.size() != rows * cols)
      throw k3_error(errc::parse_error, "matrix entries length must equal rows*cols");
    RatMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = entry(es[i * cols + j]);
    return m;
  }
  if (!v.is_array() || v.empty() || !v[0].is_array() || v[0].empty())
    throw k3_error(errc::parse_error, "matrix JSON must be a nonempty array of rows");
  const size_t rows = v.size(), cols = v[0].size();
  RatMatrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!v[i].is_array() || v[i].size() != cols)
      throw k3_error(errc::parse_error, "matrix rows must all have the same length");
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = entry(v[i][j]);
  }
  return m;
}

// ---------------------------------------------------------------------------
// shared output helpers
// ---------------------------------------------------------------------------

int status_exit(CheckStatus s) {
  switch (s) {
    case CheckStatus::fail: return 2;
    case CheckStatus::undecided: return 3;
    default: return 0;
  }
}

void emit(const json& doc, const std::string& format, const std::string& md) {
  if (format == "md")
    std::cout << md;
  else
    std::cout << doc.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// corpus rows
// ---------------------------------------------------------------------------

struct CorpusRow {
  std::string name;
  bool ok = false;
  std::string note;
};

RatMatrix mat3_of(const int (&m)[3][3]) {
  RatMatrix out(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) out.at(i, j) = m[i][j];
  return out;
}

RatMatrix jordan_cell(const Rat& v, size_t n) {
  RatMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    m.at(i, i) = v;
    if (i + 1 < n) m.at(i, i + 1) = 1;
  }
  return m;
}

RatMatrix block_diag(const std::vector<RatMatrix>& blocks, size_t total) {
  RatMatrix m = RatMatrix::identity(total);
  size_t off = 0;
  for (const RatMatrix& b : blocks) {
    for (size_t i = 0; i < b.rows; ++i)
      for (size_t j = 0; j < b.cols; ++j) m.at(off + i, off + j) = b.at(i, j);
    off += b.rows;
  }
  return m;
}

CorpusRow run_poly_fixture(const fx::PolyFixture& f, bool corrupt) {
  CorpusRow row{f.name, false, ""};
  std::vector<long> cv(f.coeffs, f.coeffs + 7);
  const TorusSpec t = torus_from_poly(IntPoly::from_longs(cv));

  std::vector<int> want_degrees(f.factor_degrees, f.factor_degrees + f.n_factors);
  if (corrupt && !want_degrees.empty()) want_degrees[0] += 1;  // deliberate self-test damage
  const GaloisOrbitReport g = galois_orbit_report(t.poly);
  if (g.q_squarefree != f.q2_squarefree) {
    row.note = "squarefree flag mismatch";
    return row;
  }
  if (f.q2_squarefree && g.degrees != want_degrees) {
    std::ostringstream os;
    os << "factor degrees differ: got {";
    for (size_t i = 0; i < g.degrees.size(); ++i) os << (i ? "," : "") << g.degrees[i];
    os << "} want {";
    for (size_t i = 0; i < want_degrees.size(); ++i) os << (i ? "," : "") << want_degrees[i];
    os << "}";
    row.note = os.str();
    return row;
  }

  const DynamicalDegrees dd = dynamical_degrees(t);
  const double l1 = std::strtod(f.lambda1, nullptr);
  if (std::abs(to_double(dd.lambda1) - l1) > 1e-12 * std::max(1.0, l1)) {
    row.note = "lambda1 drifted from the frozen value";
    return row;
  }

  const VerificationReport rb = check_theorem_B(t, 8);
  if (rb.status != CheckStatus::pass) {
    row.note = std::string("halving-chain check: ") + check_status_name(rb.status);
    return row;
  }
  if (static_cast<int>(rb.entries.size()) != f.n_classes) {
    row.note = "modulus class count mismatch";
    return row;
  }
  for (int k = 0; k < f.n_classes; ++k) {
    const ModulusCertificate& c = rb.entries[static_cast<size_t>(k)];
    const auto& e = f.classes[k];
    if (c.halving_steps != e.halving_steps || c.target != e.target ||
        c.chain_ok != e.chain_ok || c.multiplicity != e.mult ||
        std::abs(to_double(c.mod2) - std::strtod(e.mod2, nullptr)) > 1e-9) {
      row.note = std::string("modulus class ") + std::to_string(k) + " disagrees";
      return row;
    }
  }

  const VerificationReport rc = check_theorem_C(t);
  if (rc.status != CheckStatus::pass) {
    row.note = std::string("conjugate-orbit check: ") + check_status_name(rc.status);
    return row;
  }
  if (rc.orbit.degree != f.lambda1_factor_degree || rc.classification != f.pattern ||
      rc.subcase != f.subcase || rc.k_pairs != f.k_pairs || rc.bullet != f.bullet) {
    row.note = "conjugate-orbit classification disagrees";
    return row;
  }
  row.ok = true;
  return row;
}

CorpusRow run_matrix3_fixture(const fx::Matrix3Fixture& f) {
  CorpusRow row{f.name, false, ""};
  const TorusSpec t = torus_from_matrix3(mat3_of(f.m));
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j)
      if (t.h11_action.at(i, j) != f.h11[i][j]) {
        row.note = "degree-(1,1) action differs from the frozen matrix";
        return row;
      }
  const std::vector<int> want9(f.blocks9, f.blocks9 + f.n_blocks9);
  if (jordan_structure(t.h11_action).all_blocks() != want9) {
    row.note = "9-dim block sizes disagree";
    return row;
  }
  const std::vector<int> want15(f.blocks15, f.blocks15 + f.n_blocks15);
  const VerificationReport ra = check_theorem_A(t);
  if (ra.status != CheckStatus::pass || ra.block_sizes != want15) {
    row.note = "15-dim block-bound check disagrees";
    return row;
  }
  if (predicted_growth(t.h11_action).k != f.growth_exponent9) {
    row.note = "9-dim growth exponent disagrees";
    return row;
  }
  const auto u = unipotency_order(mat3_of(f.m));
  if (f.unipotent9 != (u && *u == 1)) {
    row.note = "unipotency flag disagrees";
    return row;
  }
  row.ok = true;
  return row;
}

CorpusRow run_surface_fixture(const fx::SurfaceFixture& f) {
  CorpusRow row{std::string("surface-") + f.name, false, ""};
  const size_t n = static_cast<size_t>(f.n);
  RatMatrix g(n, n), q(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      g.at(i, j) = f.g[i][j];
      q.at(i, j) = f.q[i][j];
    }
  const VerificationReport r = classify_surface_isometry(g, q);
  if (r.classification != f.cls || r.status != CheckStatus::pass) {
    row.note = std::string("classified as ") + r.classification;
    return row;
  }
  if (std::string(f.cls) == "loxodromic") {
    if (!r.dominant || r.orbit.degree != f.dominant_degree ||
        std::abs(to_double(*r.dominant) - std::strtod(f.lambda, nullptr)) > 1e-12) {
      row.note = "dominant eigenvalue data disagrees";
      return row;
    }
  } else if (std::string(f.cls) == "parabolic") {
    const std::vector<int> want(f.blocks, f.blocks + f.n_blocks);
    if (r.block_sizes != want) {
      row.note = "unipotent block sizes disagree";
      return row;
    }
  }
  row.ok = true;
  return row;
}

CorpusRow run_mixed_fixture() {
  CorpusRow row{"mixed-synthetic", false, ""};
  const Rat half = make_rat(1, 2);
  const RatMatrix m = block_diag({jordan_cell(Rat(2), 2), jordan_cell(half, 2),
                                  jordan_cell(Rat(2), 1), jordan_cell(half, 1)},
                                 15);
  const VerificationReport r = check_mixed_case(m, from_long(2), from_long(2));
  if (std::string(check_status_name(r.status)) != fx::kMixedExpectedStatus) {
    row.note = std::string("status ") + check_status_name(r.status) + ", want " +
               fx::kMixedExpectedStatus;
    return row;
  }
  row.ok = true;
  return row;
}

CorpusRow run_hodge_fixture() {
  CorpusRow row{"hodge-signature", false, ""};
  for (int i = 0; i < fx::kNumMatrix3Fixtures; ++i) {
    const TorusSpec t = torus_from_matrix3(mat3_of(fx::kMatrix3Fixtures[i].m));
    const HodgeSignature hs = hodge_form_signature(t);
    if (hs.block11.positive != fx::kHodgeSig11[0] || hs.block11.negative != fx::kHodgeSig11[1] ||
        hs.block11.zero != fx::kHodgeSig11[2] || hs.block20.positive != fx::kHodgeSig20[0] ||
        hs.block20.negative != fx::kHodgeSig20[1] || hs.block20.zero != fx::kHodgeSig20[2] ||
        hs.orthogonal != fx::kHodgeOrthogonal) {
      row.note = std::string("signature mismatch on ") + fx::kMatrix3Fixtures[i].name;
      return row;
    }
  }
  row.ok = true;
  return row;
}

CorpusRow run_hunt_fixture(const char* name, const HuntCriteria& crit, int bound,
                           const int (*table)[7], int rows) {
  CorpusRow row{name, false, ""};
  const std::vector<IntPoly> hits = hunt_polynomials(crit, bound, 1000000);
  if (static_cast<int>(hits.size()) != rows) {
    row.note = "hit count " + std::to_string(hits.size()) + ", want " + std::to_string(rows);
    return row;
  }
  std::vector<std::vector<long>> got, want;
  for (const IntPoly& p : hits) {
    std::vector<long> key;
    for (const Int& c : p.c) key.push_back(c.get_si());
    got.push_back(key);
  }
  for (int i = 0; i < rows; ++i) want.emplace_back(std::vector<long>(table[i], table[i] + 7));
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) {
    row.note = "hit set differs from the frozen table";
    return row;
  }
  row.ok = true;
  return row;
}

int cmd_corpus(const std::string& only, bool self_test) {
  std::vector<std::pair<std::string, std::function<CorpusRow()>>> jobs;
  for (int i = 0; i < fx::kNumPolyFixtures; ++i) {
    const auto* f = &fx::kPolyFixtures[i];
    jobs.emplace_back(f->name, [f, self_test] {
      return run_poly_fixture(*f, self_test && std::string(f->name) == "S15");
    });
  }
  for (int i = 0; i < fx::kNumMatrix3Fixtures; ++i) {
    const auto* f = &fx::kMatrix3Fixtures[i];
    jobs.emplace_back(f->name, [f] { return run_matrix3_fixture(*f); });
  }
  for (int i = 0; i < static_cast<int>(std::size(fx::kSurfaceFixtures)); ++i) {
    const auto* f = &fx::kSurfaceFixtures[i];
    jobs.emplace_back(std::string("surface-") + f->name, [f] { return run_surface_fixture(*f); });
  }
  jobs.emplace_back("mixed-synthetic", [] { return run_mixed_fixture(); });
  jobs.emplace_back("hodge-signature", [] { return run_hodge_fixture(); });
  jobs.emplace_back("hunt-q-irreducible", [] {
    HuntCriteria c;
    c.p_irreducible = c.q2_irreducible = true;
    return run_hunt_fixture("hunt-q-irreducible", c, 1, fx::kHuntQIrreducibleBound1,
                            fx::kNumHuntQIrreducibleBound1);
  });
  jobs.emplace_back("hunt-unit-pair", [] {
    HuntCriteria c;
    c.p_irreducible = true;
    c.unit_modulus_roots = 2;
    return run_hunt_fixture("hunt-unit-pair", c, 2, fx::kHuntTwoUnitModulusBound2,
                            fx::kNumHuntTwoUnitModulusBound2);
  });

  std::vector<std::pair<std::string, std::function<CorpusRow()>>> selected;
  for (auto& j : jobs)
    if (only.empty() || j.first.find(only) != std::string::npos) selected.push_back(std::move(j));
  if (selected.empty()) {
    std::cerr << "no fixtures matched\n";
    return 1;
  }
  std::sort(selected.begin(), selected.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<CorpusRow> rows;
  size_t width = 0;
  for (const auto& j : selected) {
    rows.push_back(j.second());
    width = std::max(width, j.first.size());
  }
  int failures = 0;
  for (const CorpusRow& r : rows) {
    std::cout << r.name << std::string(width + 2 - r.name.size(), ' ')
              << (r.ok ? "PASS" : "FAIL");
    if (!r.note.empty()) std::cout << "  " << r.note;
    std::cout << "\n";
    if (!r.ok) ++failures;
  }
  std::cout << rows.size() - failures << "/" << rows.size() << " fixtures match\n";

  if (self_test) {
    // The harness is healthy exactly when the deliberately damaged row is
    // the one and only failure.
    bool s15_failed = false;
    for (const CorpusRow& r : rows)
      if (r.name == "S15") s15_failed = !r.ok;
    const bool healthy = s15_failed && failures == 1;
    std::cout << (healthy ? "self-test ok: corrupted expectation was caught\n"
                          : "self-test FAILED: corruption was not isolated\n");
    return healthy ? 0 : 2;
  }
  return failures == 0 ? 0 : 2;
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& poly_arg, const std::string& m3_arg,
                const std::string& mat_arg, const std::string& format, int nmax) {
  AnalyzeOptions opt;
  if (nmax >= 0) opt.halving_bound = nmax;
  AnalysisReport rep;
  if (!poly_arg.empty())
    rep = analyze_torus(torus_from_poly(parse_poly_input(poly_arg)), opt);
  else if (!m3_arg.empty())
    rep = analyze_torus(torus_from_matrix3(parse_matrix_input(m3_arg)), opt);
  else
    rep = analyze_matrix(parse_matrix_input(mat_arg), opt);
  emit(rep.body, format, render_markdown(rep));
  return report_exit_status(rep);
}

int cmd_growth(const std::string& poly_arg, const std::string& m3_arg,
               const std::string& mat_arg, const std::string& format, int nmax) {
  RatMatrix m(0, 0);
  if (!poly_arg.empty())
    m = induced_action(torus_from_poly(parse_poly_input(poly_arg)), 2);
  else if (!m3_arg.empty())
    m = induced_action(torus_from_matrix3(parse_matrix_input(m3_arg)), 2);
  else
    m = parse_matrix_input(mat_arg);
  const GrowthPrediction pred = predicted_growth(m);
  const GrowthFit fit = growth_fit(m, nmax);
  const json doc{{"schema", kReportSchema},
                 {"predicted", json_of(pred)},
                 {"fit", json_of(fit)}};
  std::ostringstream md;
  md << "# growth\n\n- predicted: rho = " << to_double(pred.rho) << ", k = " << pred.k
     << "\n- fitted: rho = " << fit.rho_fit << ", k = " << fit.k_fit << "\n";
  emit(doc, format, md.str());
  return 0;
}

int cmd_hunt(const std::string& preset, bool p_irr, bool q2_irr, bool real_root,
             int unit_roots, int bound, long budget) {
  HuntCriteria crit;
  crit.p_irreducible = p_irr;
  crit.q2_irreducible = q2_irr;
  crit.require_real_root = real_root;
  if (unit_roots >= 0) crit.unit_modulus_roots = unit_roots;
  if (!preset.empty()) {
    if (preset == "q-irreducible") {
      crit.p_irreducible = crit.q2_irreducible = true;
    } else if (preset == "unit-pair") {
      crit.p_irreducible = true;
      crit.unit_modulus_roots = 2;
    } else {
      throw k3_error(errc::parse_error,
                     "unknown preset (expected q-irreducible or unit-pair): " + preset);
    }
  }
  long count = 0;
  hunt_polynomials(crit, bound, budget, [&count](const IntPoly& p) {
    json coeffs = json::array();
    for (const Int& c : p.c) coeffs.push_back(c.get_str());
    std::cout << json{{"coeffs", coeffs}}.dump() << "\n";
    ++count;
  });
  std::cerr << count << " hits\n";
  return 0;
}

int cmd_classify_surface(const std::string& g_arg, const std::string& q_arg,
                         const std::string& format) {
  const RatMatrix g = parse_matrix_input(g_arg);
  const RatMatrix q = parse_matrix_input(q_arg);
  const VerificationReport r = classify_surface_isometry(g, q);
  std::ostringstream md;
  md << "# surface isometry\n\n- classification: " << r.classification
     << "\n- status: " << check_status_name(r.status) << "\n- " << r.detail << "\n";
  emit(json_of(r), format, md.str());
  return status_exit(r.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectral analysis of torus automorphisms and lattice isometries"};
  app.require_subcommand(1);

  std::string poly_arg, m3_arg, mat_arg, form_arg, format = "json", only, preset;
  int nmax = -1, bound = 1, unit_roots = -1;
  long budget = 1000000;
  bool self_test = false, p_irr = false, q2_irr = false, real_root = false;
  unsigned precision = 0;

  auto add_inputs = [&](CLI::App* cmd, bool need_one) {
    auto* p = cmd->add_option("--poly", poly_arg,
                              "degree-6 polynomial: shorthand, JSON coefficients, or a file");
    auto* m3 = cmd->add_option("--matrix3", m3_arg, "3x3 integer matrix (JSON rows or a file)");
    auto* mm = cmd->add_option("--matrix", mat_arg, "square rational matrix (JSON rows or a file)");
    p->excludes(m3)->excludes(mm);
    m3->excludes(mm);
    if (need_one) cmd->require_option(1);
    (void)p;
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full exact pipeline on one input");
  add_inputs(analyze, true);
  analyze->add_option("--format", format, "json (default) or md")
      ->check(CLI::IsMember({"json", "md"}));
  analyze->add_option("--nmax", nmax, "halving-chain search depth (default 8)");
  analyze->add_option("--precision", precision, "override the precision-escalation cap in bits");

  CLI::App* corpus = app.add_subcommand("corpus", "run every frozen fixture and diff");
  corpus->add_option("--only", only, "run only fixtures whose name contains this substring");
  corpus->add_flag("--self-test", self_test,
                   "damage one expectation on purpose and require the harness to catch it");
  corpus->add_option("--precision", precision, "override the precision-escalation cap in bits");

  CLI::App* hunt = app.add_subcommand("hunt", "search a coefficient box, stream hits as NDJSON");
  hunt->add_option("--preset", preset, "q-irreducible | unit-pair");
  hunt->add_flag("--p-irreducible", p_irr, "require the degree-6 polynomial irreducible");
  hunt->add_flag("--q2-irreducible", q2_irr, "require the degree-15 polynomial irreducible");
  hunt->add_flag("--require-real-root", real_root, "demand a real root (always empty)");
  hunt->add_option("--unit-modulus", unit_roots, "exact number of roots on the unit circle");
  hunt->add_option("--bound", bound, "coefficient box half-width (default 1)");
  hunt->add_option("--budget", budget, "certified-analysis budget (default 1000000)");
  hunt->add_option("--precision", precision, "override the precision-escalation cap in bits");

  CLI::App* surf = app.add_subcommand("classify-surface",
                                      "loxodromic/parabolic/elliptic trichotomy");
  surf->add_option("--matrix", mat_arg, "integer isometry g (JSON rows or a file)")->required();
  surf->add_option("--form", form_arg, "integer symmetric form q it preserves")->required();
  surf->add_option("--format", format, "json (default) or md")
      ->check(CLI::IsMember({"json", "md"}));

  CLI::App* growth = app.add_subcommand("growth", "numeric growth fit vs exact prediction");
  add_inputs(growth, true);
  growth->add_option("--nmax", nmax, "power-sample bound (default 500)");
  growth->add_option("--format", format, "json (default) or md")
      ->check(CLI::IsMember({"json", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (precision > 0) {
    const std::string v = std::to_string(precision);
    setenv("KAHLER3_PRECISION_CAP", v.c_str(), 1);
  }

  try {
    if (*analyze) return cmd_analyze(poly_arg, m3_arg, mat_arg, format, nmax);
    if (*corpus) return cmd_corpus(only, self_test);
    if (*hunt) return cmd_hunt(preset, p_irr, q2_irr, real_root, unit_roots, bound, budget);
    if (*surf) return cmd_classify_surface(mat_arg, form_arg, format);
    if (*growth) return cmd_growth(poly_arg, m3_arg, mat_arg, format, nmax < 0 ? 500 : nmax);
  } catch (const k3_error& e) {
    std::cout << json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}}.dump(2)
              << "\n";
    switch (e.code()) {
      case errc::undecided:
      case errc::precision_exhausted:
        return 3;
      case errc::invariant_violation:
        return 2;
      default:
        return 1;
    }
  }
  return 0;
}
