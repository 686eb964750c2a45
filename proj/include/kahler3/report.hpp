#ifndef KAHLER3_REPORT_HPP
#define KAHLER3_REPORT_HPP

// JSON report documents for the command-line tool: a schema-versioned,
// losslessly round-trippable rendering of the analysis pipeline. All
// bignum values (coefficients, matrix entries, exact numbers) are decimal
// strings so no reader ever silently rounds them; structural integers
// (degrees, multiplicities, ranks, block sizes) are JSON numbers.

#include <json.hpp>

#include <string>

#include "kahler3/growth.hpp"
#include "kahler3/jordan.hpp"
#include "kahler3/spectra.hpp"
#include "kahler3/torus.hpp"
#include "kahler3/verify.hpp"

namespace kahler3 {

inline constexpr const char* kReportSchema = "v1";
inline constexpr const char* kToolName = "kahler3";
inline constexpr const char* kToolVersion = "1.0.0";

// A finished report document. Equality is structural equality of the JSON
// body, which is what the round-trip guarantee is stated against.
struct AnalysisReport {
  nlohmann::json body;
  bool operator==(const AnalysisReport& o) const { return body == o.body; }
};

struct AnalyzeOptions {
  int halving_bound = 8;   // search depth for the halving-chain checker
  int growth_nmax = 500;   // sample bound for the numeric growth fit
};

// JSON views of the library types (shared by reports and the CLI).
nlohmann::json json_of(const Int& z);
nlohmann::json json_of(const Rat& q);
nlohmann::json json_of(const IntPoly& p);
nlohmann::json json_of(const RatMatrix& m);
nlohmann::json json_of(const RealAlgebraic& x);
nlohmann::json json_of(const JordanReport& jr);
nlohmann::json json_of(const ModuliSet& ms);
nlohmann::json json_of(const WeightLattice& wl);
nlohmann::json json_of(const DynamicalDegrees& dd);
nlohmann::json json_of(const VerificationReport& vr);
nlohmann::json json_of(const GaloisOrbitReport& gr);
nlohmann::json json_of(const GrowthFit& gf);
nlohmann::json json_of(const GrowthPrediction& gp);

// Full pipeline on a torus input: construction echo, exact spectra, Jordan
// structure of the degree-2 action, factor orbits, and every applicable
// structural checker.
AnalysisReport analyze_torus(const TorusSpec& t, const AnalyzeOptions& opt = {});

// Pipeline on a raw square rational matrix: Jordan structure, the exact
// growth prediction, and the numeric growth fit as a cross-check.
AnalysisReport analyze_matrix(const RatMatrix& m, const AnalyzeOptions& opt = {});

// Serialization. parse_report validates the schema version and throws
// parse_error on malformed input or a schema mismatch.
std::string serialize_report(const AnalysisReport& r, bool pretty = true);
AnalysisReport parse_report(const std::string& text);

// Markdown rendering of the same content, for --format md.
std::string render_markdown(const AnalysisReport& r);

// Exit-code aggregation over the "verifications" array: 2 if any check
// failed, else 3 if any is undecided, else 0.
int report_exit_status(const AnalysisReport& r);

}  // namespace kahler3

#endif
