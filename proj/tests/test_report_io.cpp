#include <doctest.h>

#include <nlohmann/json.hpp>

#include "wzcheck/report_io.hpp"

using namespace wzcheck;

namespace {

Report sample_report() {
  RunConfig cfg;
  cfg.claim_ids = {"thm1", "lemma26a"};
  cfg.p_min = 5;
  cfg.p_max = 7;
  cfg.identity_n_max = 2;
  return run_suite(cfg);
}

}  // namespace

TEST_CASE("parse_format") {
  CHECK(parse_format("text") == OutputFormat::Text);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("yaml"), ConfigError);
  CHECK_THROWS_AS(parse_format(""), ConfigError);
}

TEST_CASE("csv_field quotes per RFC 4180") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("line\r\nbreak") == "\"line\r\nbreak\"");
  CHECK(csv_field("") == "");
}

TEST_CASE("json report shape") {
  Report r = sample_report();
  nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j["config"]["claims"] == nlohmann::json({"thm1", "lemma26a"}));
  CHECK(j["config"]["p_min"] == 5);
  CHECK(j["config"]["p_max"] == 7);
  REQUIRE(j["outcomes"].is_array());
  REQUIRE(!j["outcomes"].empty());
  for (const auto& o : j["outcomes"]) {
    CHECK(o.size() == 8);
    CHECK(o.contains("claim"));
    CHECK(o.contains("p"));
    CHECK(o.contains("holds"));
    CHECK(o.contains("lhs"));
    CHECK(o.contains("rhs"));
    CHECK(o.contains("modulus"));
    CHECK(o.contains("diff_valuation"));
    CHECK(o.contains("path"));
  }
  // identity outcomes carry "inf", congruence outcomes an integer
  const auto& identity = j["outcomes"][0];
  CHECK(identity["claim"] == "lemma26a");
  CHECK(identity["diff_valuation"] == "inf");
  CHECK(identity["modulus"] == "exact");
  const auto& thm = j["outcomes"][2];
  CHECK(thm["claim"] == "thm1");
  CHECK(thm["diff_valuation"].is_number_integer());
  CHECK(j["summary"]["pass"] == r.pass);
  CHECK(j["summary"]["per_claim"].size() == 2);
  CHECK(j["timing"]["worker_count"] == 1);
}

TEST_CASE("empty claim selection is rendered as \"all\"") {
  RunConfig cfg;
  cfg.p_min = 5;
  cfg.p_max = 5;
  cfg.identity_n_max = 1;
  Report r = run_suite(cfg);
  nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j["config"]["claims"] == "all");
}

TEST_CASE("dropping the timing block removes nothing else") {
  Report r = sample_report();
  nlohmann::json with = nlohmann::json::parse(to_json(r, true));
  nlohmann::json without = nlohmann::json::parse(to_json(r, false));
  CHECK(without.find("timing") == without.end());
  with.erase("timing");
  CHECK(with == without);
}

TEST_CASE("json output round-trips through a parser") {
  std::string s = to_json(sample_report());
  CHECK(nlohmann::ordered_json::parse(s).dump(2) + "\n" == s);
}

TEST_CASE("csv output") {
  Report r = sample_report();
  std::string csv = to_csv(r);
  CHECK(csv.rfind("claim,p,holds,lhs,rhs,modulus,diff_valuation,path\r\n", 0) == 0);
  size_t rows = 0;
  for (size_t i = 0; (i = csv.find("\r\n", i)) != std::string::npos; i += 2) ++rows;
  CHECK(rows == r.outcomes.size() + 1);
}

TEST_CASE("text output carries the summary") {
  Report r = sample_report();
  std::string text = to_text(r);
  CHECK(text.find("thm1") != std::string::npos);
  CHECK(text.find("total: pass=") != std::string::npos);
  CHECK(text.find("FALSE") == std::string::npos);
}
