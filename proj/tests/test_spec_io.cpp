#include "doctest.h"

#include <sstream>

#include "wlpkit/errors.hpp"
#include "wlpkit/report.hpp"
#include "wlpkit/spec_io.hpp"

using namespace wlpkit;

TEST_CASE("parsing ideal specifications") {
  const auto spec = parse_spec(R"({"vars": 3, "generators": [
      {"power_of_linear": {"coeffs": "general", "exp": 2}},
      {"power_of_linear": {"coeffs": [1, -2, "30000000000000000000000"], "exp": 3}},
      {"form": {"degree": 2, "terms": [[[1, 1, 0], 4], [[0, 0, 2], -1]]}},
      {"general_form": {"degree": 3}}]})");
  CHECK(spec.r == 3);
  REQUIRE(spec.generators.size() == 4);
  CHECK_FALSE(std::get<LinearPower>(spec.generators[0]).form);
  CHECK(std::get<LinearPower>(spec.generators[1]).form->coefficients[2] == BigInt("30000000000000000000000"));
  const auto& f = std::get<HomogeneousForm>(spec.generators[2]);
  CHECK(f.coefficient(ExponentVector{1, 1, 0}) == 4);
  CHECK(f.coefficient(ExponentVector{0, 0, 2}) == -1);
  CHECK(std::get<GeneralForm>(spec.generators[3]).degree == 3);
}

TEST_CASE("specifications round-trip through JSON") {
  const auto spec = parse_spec(R"({"vars": 2, "generators": [
      {"power_of_linear": {"coeffs": [1, 1], "exp": 2}},
      {"form": {"degree": 3, "terms": [[[3, 0], 1], [[0, 3], 1]]}}]})");
  const auto again = parse_spec(spec_to_json(spec).dump());
  CHECK(again.canonical() == spec.canonical());
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_spec("{\"vars\": 3,\n \"generators\": [ {\"form\": 1,}\n]}");
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 29);
  }
}

TEST_CASE("semantic errors name the offending field") {
  auto message = [](const char* text) {
    try {
      parse_spec(text);
    } catch (const SpecParseError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"generators": []})").find("vars") != std::string::npos);
  CHECK(message(R"({"vars": 2, "generators": []})").find("/generators") != std::string::npos);
  CHECK(message(R"({"vars": 2, "generators": [{"power_of_linear": {"coeffs": [1], "exp": 2}}]})")
            .find("/generators/0/power_of_linear/coeffs") != std::string::npos);
  CHECK(message(R"({"vars": 2, "generators": [{"power_of_linear": {"coeffs": [0, 0], "exp": 2}}]})")
            .find("zero") != std::string::npos);
  CHECK(message(R"({"vars": 2, "generators": [{"form": {"degree": 2, "terms": [[[1, 0], 1]]}}]})")
            .find("sum to 1") != std::string::npos);
  CHECK(message(R"({"vars": 2, "generators": [{"cube": {}}]})").find("unknown generator kind") != std::string::npos);
  CHECK(message(R"({"vars": 2, "generators": [{"power_of_linear": {"coeffs": ["1x", 0], "exp": 2}}]})")
            .find("decimal") != std::string::npos);
}

TEST_CASE("reading from a stream") {
  std::istringstream in(R"({"vars": 1, "generators": [{"power_of_linear": {"coeffs": [1], "exp": 4}}]})");
  const auto spec = read_spec(in);
  CHECK(hilbert_function(spec).values == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("report envelopes") {
  EngineConfig cfg;
  cfg.seed = 3;
  const auto spec = IdealSpec::monomial_ci({2, 2, 2});
  const auto report = wlp_report(wlp_test(spec, cfg), cfg);
  CHECK(report["meta"]["seed"] == 3);
  CHECK(report["meta"]["primes"].size() == 3);
  CHECK(report["verdict"] == "holds");
  CHECK(report["certified"] == true);
  CHECK(report["records"].size() == 4);
  CHECK(report["records"][0]["i"] == 1);
  CHECK(report.dump() == wlp_report(wlp_test(spec, cfg), cfg).dump());

  const auto h = hilbert_report(spec, hilbert_function(spec, cfg), cfg, matching_oracle(spec));
  CHECK(h["summary"]["oracle"] == "hf_square_ci");
  CHECK(h["summary"]["oracle_matches"] == true);
  CHECK(matching_oracle(IdealSpec::general_powers(5, std::vector<unsigned>(6, 2)))->name == "hf_acm_squares");
  CHECK_FALSE(matching_oracle(IdealSpec::general_powers(3, {2, 2, 3})));
  CHECK(bigint_json(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(bigint_json(BigInt(-5)) == -5);
}
