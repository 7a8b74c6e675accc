#include "doctest.h"
#include "json.hpp"
#include "mlfw/suites.hpp"

using namespace mlfw;

TEST_CASE("range and list parsing") {
  CHECK(parse_range("2..9").lo == 2);
  CHECK(parse_range("2..9").hi == 9);
  CHECK(parse_range("5").lo == 5);
  CHECK(parse_range("5").hi == 5);
  CHECK_THROWS_AS(parse_range("9..2"), UsageError);
  CHECK_THROWS_AS(parse_range("a..b"), UsageError);
  CHECK(parse_list("3,5,7") == std::vector<std::uint32_t>{3, 5, 7});
  CHECK_THROWS_AS(parse_list(""), UsageError);
  CHECK_THROWS_AS(parse_list("3,,5"), UsageError);
}

TEST_CASE("configuration guards") {
  RunConfig c;
  c.suite = "sp-quotient";
  c.g = Range{3, 3};
  c.moduli = {9};
  try {
    validate(c);
    FAIL("accepted");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("--allow-large") != std::string::npos);
  }
  c.allow_large = true;
  CHECK_NOTHROW(validate(c));

  RunConfig bad;
  bad.suite = "words";
  bad.d = Range{1, 3};
  CHECK_THROWS_AS(validate(bad), UsageError);
  bad = RunConfig{};
  bad.suite = "nope";
  CHECK_THROWS_AS(validate(bad), UsageError);
  bad = RunConfig{};
  bad.primes = {4};
  CHECK_THROWS_AS(validate(bad), UsageError);
}

TEST_CASE("reports are deterministic and complete") {
  RunConfig c;
  c.suite = "trace-kernel";
  const auto a = run_suite(c), b = run_suite(c);
  CHECK(a.passed());
  CHECK(a.records.size() == 8);
  CHECK(a.to_json() == b.to_json());
  const auto doc = nlohmann::json::parse(a.to_json());
  CHECK(doc["config"]["seed"] == 42);
  CHECK(doc["records"].size() == 8);
  CHECK_FALSE(doc["records"][0].contains("runtime_ms"));

  c.timings = true;
  const auto t = nlohmann::json::parse(run_suite(c).to_json());
  CHECK(t["records"][0].contains("runtime_ms"));
}

TEST_CASE("words suite") {
  RunConfig c;
  c.suite = "words";
  const auto r = run_suite(c);
  CHECK(r.passed());
  CHECK(r.records.size() == 8);
  CHECK(r.summary().find("verdict: pass") != std::string::npos);
}
