#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sosperfect/combinatorics.hpp"
#include "sosperfect/experiment.hpp"
#include "sosperfect/graph.hpp"
#include "sosperfect/polynomials.hpp"
#include "sosperfect/theta_bounds.hpp"

namespace sosperfect::report {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Process exit codes shared by the CLI and the report builders.
enum ExitCode : int { kVerified = 0, kFailed = 1, kInconclusive = 2, kResourceCap = 3, kUsage = 4 };

/// 12 significant digits; infinities and NaN become the strings "inf",
/// "-inf" and "nan".
json real(double v);
double parse_real(const json& j);
json matrix_json(const linalg::Matrix& m);
linalg::Matrix parse_matrix(const json& j);

json graph_json(const Graph& g);
Graph parse_graph(const json& j);

json to_json(const ThetaResult& t, bool with_matrix = false);
json to_json(const BoundLadder& b);
json to_json(const PerfectnessVerdict& v);
json to_json(const SosPerfectVerdict& v);
json to_json(const HyperplaneCertificate& c);
json to_json(const PartitionableCertificate& c);
json to_json(const TauCertificate& c);
json to_json(const GammaCertificate& c);
json to_json(const RhoResult& r);
json to_json(const SosDecomposition& d, const std::string& kind);
json to_json(const AimpResult& a);
json to_json(const QuarticSquareForm& p);
json to_json(const ExperimentSummary& s);

struct AnalyzeOptions {
  bool chi = false;
  bool perfect = false;
  bool certify = false;
  bool aimp = false;
  double tol = 1e-7;
  std::uint64_t seed = 1;
  /// Extra analyses skip graphs larger than this (on top of their own caps).
  int max_n = 200;
};

/// Everything `analyze` reports; built by analyze() and serialised by to_json.
struct AnalysisReport {
  Graph graph;
  AnalyzeOptions options;
  BoundLadder ladder;
  std::optional<PerfectnessVerdict> spgt;
  std::optional<PerfectnessVerdict> definition;
  std::optional<SosPerfectVerdict> sos_perfect;
  std::optional<json> certificates;
  std::optional<AimpResult> aimp;
  std::vector<std::pair<std::string, std::string>> skipped;  // (item, reason)
  bool hit_resource_cap = false;
  json timings = json::object();

  int exit_code() const;
};

AnalysisReport analyze(const Graph& g, const AnalyzeOptions& opts);
json to_json(const AnalysisReport& r);

/// Certificate bundle for the sos verdict on p_G: a separating hyperplane
/// when not sos; otherwise an exact decomposition for complete or bipartite
/// graphs, else the dual bound matrix showing theta' <= omega + margin.
/// Also carries the tau, gamma, rho and (if any) partitionable certificates.
json certificates_json(const Graph& g, const SdpOptions& opts, std::uint64_t seed, int samples = 1000);

struct RecheckResult {
  bool ok = true;
  std::vector<std::string> checked;
  std::vector<std::string> failures;
};
/// Recomputes every certificate residual found under "certificates" using
/// only the JSON document (graph included).
RecheckResult recheck(const json& doc);

/// Adds "schema", "tool_version" and a content "hash" (FNV-1a 64 of the
/// compact dump with "hash" and "timings" removed).
void finalize(json& doc);
std::string content_hash(const json& doc);

}  // namespace sosperfect::report
