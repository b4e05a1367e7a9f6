#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "sosperfect/experiment.hpp"
#include "sosperfect/generators.hpp"
#include "sosperfect/report.hpp"

using namespace sosperfect;
using report::json;

TEST(Json, Reals) {
  EXPECT_EQ(report::real(std::sqrt(5.0)).dump(), "2.2360679775");
  EXPECT_EQ(report::real(1.0 / 3).get<double>(), 0.333333333333);
  EXPECT_EQ(report::real(INFINITY), "inf");
  EXPECT_EQ(report::real(-INFINITY), "-inf");
  EXPECT_EQ(report::real(NAN), "nan");
  EXPECT_TRUE(std::isinf(report::parse_real(json("inf"))));
  EXPECT_TRUE(std::isnan(report::parse_real(json("nan"))));
  EXPECT_EQ(report::parse_real(json(2.5)), 2.5);
  EXPECT_THROW(report::parse_real(json("seven")), std::invalid_argument);
}

TEST(Json, GraphAndMatrixRoundTrip) {
  for (const Graph& g : fixtures::random_corpus(10, 1, 12, 2)) {
    json j = report::graph_json(g);
    EXPECT_EQ(report::parse_graph(j), g);
    EXPECT_EQ(j.at("m").get<std::size_t>(), g.size());
  }
  linalg::Matrix m(2, 2);
  m << 0.25, -1, -1, 3;
  EXPECT_EQ(report::parse_matrix(report::matrix_json(m)), m);
  EXPECT_THROW(report::parse_matrix(json::parse("[[1,2],[3]]")), std::invalid_argument);
}

TEST(Json, QuarticForm) {
  json j = report::to_json(build_p_g(complete(2)));
  EXPECT_EQ(j.at("M").at(0).at(1), "-1");
  EXPECT_EQ(j.at("text"), "1 * x0^2 x0^2\n-2 * x0^2 x1^2\n1 * x1^2 x1^2\n");
}

TEST(Hash, IgnoresTimingsAndIsDeterministic) {
  report::AnalyzeOptions o;
  json a = report::to_json(report::analyze(cycle(5), o));
  json b = report::to_json(report::analyze(cycle(5), o));
  report::finalize(a);
  report::finalize(b);
  EXPECT_EQ(a.at("hash"), b.at("hash"));
  EXPECT_EQ(a.at("schema"), 1);
  b["timings"]["total"] = 12345.0;
  EXPECT_EQ(report::content_hash(b), a.at("hash").get<std::string>());
  b["ladder"]["omega"] = 3;
  EXPECT_NE(report::content_hash(b), a.at("hash").get<std::string>());
  a.erase("timings");
  b = a;
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Analyze, C5) {
  report::AnalyzeOptions o;
  o.chi = o.perfect = o.certify = o.aimp = true;
  report::AnalysisReport r = report::analyze(cycle(5), o);
  EXPECT_EQ(r.exit_code(), report::kVerified);
  json j = report::to_json(r);
  EXPECT_EQ(j.at("ladder").at("omega"), 2);
  EXPECT_EQ(j.at("ladder").at("chi"), 3);
  EXPECT_NEAR(j.at("ladder").at("theta_prime").at("value").get<double>(), std::sqrt(5.0), 1e-5);
  EXPECT_EQ(j.at("ladder").at("sos_verdict"), "not_sos");
  EXPECT_EQ(j.at("perfect_spgt_scan").at("perfect"), false);
  EXPECT_EQ(j.at("perfect_definition_scan").at("perfect"), false);
  EXPECT_EQ(j.at("sos_perfect").at("result"), "not_sos_perfect");
  EXPECT_TRUE(j.at("certificates").contains("hyperplane"));
  EXPECT_TRUE(j.at("skipped").empty());
}

TEST(Analyze, K5AndC5WithTriangle) {
  report::AnalyzeOptions o;
  o.chi = o.perfect = true;
  json k = report::to_json(report::analyze(complete(5), o));
  EXPECT_EQ(k.at("ladder").at("omega"), 5);
  EXPECT_EQ(k.at("ladder").at("chi"), 5);
  EXPECT_EQ(k.at("ladder").at("tau"), 5);
  EXPECT_NEAR(k.at("ladder").at("theta_prime").at("value").get<double>(), 5, 1e-5);
  EXPECT_NEAR(k.at("ladder").at("theta").at("value").get<double>(), 5, 1e-5);
  EXPECT_NEAR(k.at("ladder").at("gamma").get<double>(), 5, 1e-9);
  EXPECT_EQ(k.at("ladder").at("rho").get<double>(), 5);
  EXPECT_EQ(k.at("perfect_spgt_scan").at("perfect"), true);
  json r = report::to_json(report::analyze(fixtures::c5_with_triangle(), o));
  EXPECT_EQ(r.at("ladder").at("sos_verdict"), "sos");
  EXPECT_EQ(r.at("perfect_spgt_scan").at("perfect"), false);
}

TEST(Analyze, ResourceCaps) {
  report::AnalyzeOptions o;
  o.chi = o.perfect = o.aimp = true;
  report::AnalysisReport r = report::analyze(cycle(27), o);
  EXPECT_EQ(r.exit_code(), report::kResourceCap);
  EXPECT_EQ(r.skipped.size(), 5u);
  json j = report::to_json(r);
  EXPECT_EQ(j.at("exit_code"), report::kResourceCap);
  EXPECT_TRUE(j.at("ladder").contains("theta_prime"));
  o.max_n = 4;
  EXPECT_EQ(report::analyze(cycle(5), o).skipped.size(), 5u);
}

TEST(Certify, RecheckPasses) {
  SdpOptions opts;
  for (const Graph& g : {cycle(5), complete(4), complete_bipartite(3, 2), fixtures::c5_with_triangle(),
                         complement(cycle(7)), cycle_power(10, 2)}) {
    json doc = {{"graph", report::graph_json(g)}, {"certificates", report::certificates_json(g, opts, 1, 200)}};
    report::RecheckResult r = report::recheck(json::parse(doc.dump()));
    EXPECT_TRUE(r.ok) << doc.at("graph").dump() << " " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_GE(r.checked.size(), 4u);
  }
}

TEST(Certify, Kinds) {
  SdpOptions opts;
  json c5 = report::certificates_json(cycle(5), opts, 1, 100);
  EXPECT_NEAR(c5.at("hyperplane").at("inner_product").get<double>(), 2 - std::sqrt(5.0), 1e-3);
  EXPECT_FALSE(c5.at("partitionable").is_null());
  json k4 = report::certificates_json(complete(4), opts, 1, 100);
  EXPECT_EQ(k4.at("decomposition").at("kind"), "telescoping");
  json k32 = report::certificates_json(complete_bipartite(3, 2), opts, 1, 100);
  EXPECT_EQ(k32.at("decomposition").at("kind"), "bipartite");
  json r = report::certificates_json(fixtures::c5_with_triangle(), opts, 1, 100);
  EXPECT_TRUE(r.contains("dual_bound"));
}

TEST(Certify, RecheckDetectsTampering) {
  SdpOptions opts;
  auto tamper = [&](const Graph& g, auto edit) {
    json doc = {{"graph", report::graph_json(g)}, {"certificates", report::certificates_json(g, opts, 1, 100)}};
    edit(doc["certificates"]);
    return report::recheck(doc).ok;
  };
  EXPECT_FALSE(tamper(cycle(5), [](json& c) { c["hyperplane"]["inner_product"] = 0.5; }));
  EXPECT_FALSE(tamper(cycle(5), [](json& c) { c["hyperplane"]["X"][0][2] = 0.1; }));
  EXPECT_FALSE(tamper(cycle(5), [](json& c) { c["partitionable"]["lower_bound"] = 2.3; }));
  EXPECT_FALSE(tamper(cycle(5), [](json& c) { c["tau"]["value"] = 2; }));
  EXPECT_FALSE(tamper(cycle(5), [](json& c) { c["gamma"]["value"] = 2.5; }));
  EXPECT_FALSE(tamper(cycle(5), [](json& c) { c["rho"]["obstruction"] = {0, 1, 2}; }));
  EXPECT_FALSE(tamper(complete(4), [](json& c) { c["decomposition"]["terms"][0]["coefficient"] = "1"; }));
  EXPECT_FALSE(tamper(fixtures::c5_with_triangle(), [](json& c) { c["dual_bound"]["B"][0][0] = 10.0; }));
  EXPECT_FALSE(report::recheck(json::object()).ok);
}

TEST(Experiment, Trivial) {
  ExperimentSummary e0 = run_experiment(12, 0.0, 5, 3);
  EXPECT_EQ(e0.count_noninteger_theta_prime, 0);
  for (const auto& r : e0.records) {
    EXPECT_TRUE(r.integer);
    EXPECT_NEAR(r.theta_lower, 1.0, 1e-4);
  }
  ExperimentSummary e1 = run_experiment(12, 1.0, 5, 3);
  EXPECT_EQ(e1.count_noninteger_theta_prime, 0);
  for (const auto& r : e1.records) EXPECT_NEAR(r.theta_upper, 12.0, 1e-4);
  EXPECT_THROW(run_experiment(10, 0.5, 0, 1), std::invalid_argument);
  EXPECT_THROW(run_experiment(10, 1.5, 3, 1), std::invalid_argument);
}

TEST(Experiment, DeterministicAcrossExecutions) {
  ExperimentSummary a = run_experiment(15, 0.5, 12, 42, {}, Execution::serial);
  ExperimentSummary b = run_experiment(15, 0.5, 12, 42, {}, Execution::parallel);
  EXPECT_EQ(report::to_json(a).dump(), report::to_json(b).dump());
  EXPECT_LE(a.count_noninteger_theta_prime, a.trials);
  for (const auto& r : a.records) {
    EXPECT_EQ(r.seed, 42u ^ static_cast<std::uint64_t>(r.index));
    EXPECT_EQ(r.edges, static_cast<int>(gnp_random(15, 0.5, r.seed).size()));
    EXPECT_FALSE(r.non_integer && r.integer);
    if (r.certified_not_sos) EXPECT_GT(r.theta_lower, r.omega);
  }
}
