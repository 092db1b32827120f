#include <stdexcept>

#include "doctest.h"
#include "hyperlattice/errors.h"
#include "hyperlattice/suites.h"

using namespace hyperlattice;

TEST_CASE("config defaults") {
  const Config c;
  CHECK(c.n == 2);
  CHECK(c.window_size() == 3);
  CHECK(c.scales == 2);
  CHECK(c.grid == std::vector<Rational>{0, 1, 2});
  CHECK(c.oracle_max_dim == 4096);
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("config file overlays defaults") {
  const auto j = nlohmann::json::parse(R"({"n": 3, "window": {"size": 5}, "grid": ["1/2", 1], "t": "3/2"})");
  const Config c = Config::from_json(j, Config{});
  CHECK(c.n == 3);
  CHECK(c.half_width == 2);
  CHECK(c.grid == std::vector<Rational>{Rational(1, 2), 1});
  CHECK(c.boost_t == Rational(3, 2));
  CHECK(c.scales == 2);
  CHECK(Config::from_json(nlohmann::json::parse(R"({"window": {"half_width": 0}})"), c).window_size() == 1);
  CHECK_THROWS_AS(Config::from_json(nlohmann::json::parse(R"({"window": {"size": 4}})"), c), std::invalid_argument);
  const Config back = Config::from_json(nlohmann::json::parse(c.to_json().dump()), Config{});
  CHECK(back.to_json() == c.to_json());
}

TEST_CASE("config validation") {
  Config c;
  c.triple = {3, 4, 6};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = Config{};
  c.grid = {2, 1};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = Config{};
  c.metric = "other";
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(parse_rational_list("0,1/2,-3") == std::vector<Rational>{0, Rational(1, 2), -3});
  CHECK(parse_integer_list("5,-3") == std::vector<long long>{5, -3});
  CHECK_THROWS(parse_integer_list("5x"));
}

TEST_CASE("report records") {
  Report r;
  r.suite = "demo";
  r.check("ok", "anchor", {{"x", 1}}, [] { return same("1", "1"); });
  r.check("bad", "anchor", {}, [] { return same("1", "2"); });
  r.check("throws", "anchor", {}, []() -> Outcome { throw std::runtime_error("boom"); });
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 2);
  CHECK_FALSE(r.ok());
  CHECK(r.results[1].witness == "2");
  CHECK(r.results[2].got == "error");
  CHECK(r.results[2].witness == "boom");
  const auto j = r.to_json(false);
  CHECK(j["results"][0].contains("witness") == false);
  CHECK(j["results"][1]["inputs"].is_object());
  CHECK(j["results"][0].contains("elapsed_ms") == false);
  CHECK(j["summary"]["failed"] == 2);
  CHECK(r.to_json(true)["results"][0].contains("elapsed_ms"));
}

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.back() == "all");
  CHECK(names.size() == 16);
  CHECK_THROWS_AS(run_suite("nope", Config{}), UnknownSuite);
  const Report r = run_suite("equivalence", Config{});
  CHECK(r.ok());
  CHECK(r.results.size() >= 5);
  CHECK(run_suite("lorentz", Config{}).to_json(false) == run_suite("lorentz", Config{}).to_json(false));
}
