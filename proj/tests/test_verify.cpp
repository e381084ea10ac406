#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <utility>

#include <gersten/verify.hpp>

#include "helpers.hpp"

using namespace gersten;
using tst::thrown;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.count = 3;
  cfg.level = 1;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK(thrown([] { validate_config(SuiteConfig{}); }) == std::nullopt);
  SuiteConfig cfg;
  cfg.count = 0;
  CHECK(thrown([&] { validate_config(cfg); }) == ErrorCode::ConfigInvalid);
  cfg = SuiteConfig{};
  cfg.max_dim = 0;
  CHECK(thrown([&] { validate_config(cfg); }) == ErrorCode::ConfigInvalid);
  cfg = SuiteConfig{};
  cfg.max_val = -2;
  CHECK(thrown([&] { validate_config(cfg); }) == ErrorCode::ConfigInvalid);
  cfg = SuiteConfig{};
  cfg.level = 4;
  CHECK(thrown([&] { validate_config(cfg); }) == ErrorCode::ConfigInvalid);
  cfg = SuiteConfig{};
  cfg.format = "yaml";
  CHECK(thrown([&] { validate_config(cfg); }) == ErrorCode::ConfigInvalid);
  cfg = SuiteConfig{};
  cfg.sabotage = "bogus";
  CHECK(thrown([&] { validate_config(cfg); }) == ErrorCode::ConfigInvalid);
  cfg = SuiteConfig{};
  cfg.ring = "Z@6";
  CHECK(thrown([&] { validate_config(cfg); }) == ErrorCode::ConfigInvalid);
}

TEST_CASE("suite registry is sorted and complete") {
  std::vector<std::string> anchors = suite_anchors();
  CHECK(anchors.size() == 29);
  CHECK(std::is_sorted(anchors.begin(), anchors.end()));
}

TEST_CASE("all suites pass on both rings") {
  for (const char* ring : {"Z@5", "Q[t]@t"}) {
    SuiteConfig cfg = small_config();
    cfg.ring = ring;
    Report rep = run_all_suites(cfg);
    CHECK(rep.all_passed());
    CHECK(rep.checks.size() == 29);
    for (const CheckResult& c : rep.checks) {
      CHECK(c.failures == 0);
      CHECK(c.instances >= 1);
      CHECK(c.counterexample.is_null());
    }
  }
}

TEST_CASE("reports are deterministic") {
  SuiteConfig cfg = small_config();
  Report a = run_all_suites(cfg);
  Report b = run_all_suites(cfg);
  CHECK(render_json(a) == render_json(b));
  cfg.format = "markdown";
  Report c = run_all_suites(cfg);
  CHECK(render(c) == render_markdown(c));
  CHECK(render_markdown(a) == render_markdown(c));

  SuiteConfig other = small_config();
  other.seed = 43;
  Report d = run_all_suites(other);
  CHECK(render_json(a) != render_json(d));
}

TEST_CASE("sabotage flags fail exactly their target suite") {
  const std::pair<const char*, const char*> cases[] = {
      {"ut-sign", "triangulation-formula"},
      {"star-order", "star-composition"},
      {"r-sign", "cone-contraction"},
  };
  for (const auto& [flag, target] : cases) {
    SuiteConfig cfg = small_config();
    cfg.count = 6;
    cfg.sabotage = flag;
    Report rep = run_all_suites(cfg);
    CHECK_FALSE(rep.all_passed());
    for (const CheckResult& c : rep.checks) {
      if (c.anchor == target) {
        CHECK(c.failures > 0);
        REQUIRE_FALSE(c.counterexample.is_null());
        CHECK(c.counterexample["anchor"] == target);
        CHECK(c.counterexample["seed"] == cfg.seed);
        CHECK(c.counterexample.contains("instance"));
        CHECK(c.counterexample.contains("error"));
        CHECK(c.counterexample["data"].is_object());
      } else {
        CHECK(c.failures == 0);
      }
    }
  }
}

TEST_CASE("counterexamples replay from their recorded seed") {
  SuiteConfig cfg = small_config();
  cfg.count = 6;
  cfg.sabotage = "r-sign";
  Report rep = run_all_suites(cfg);
  const CheckResult* hit = nullptr;
  for (const CheckResult& c : rep.checks)
    if (c.anchor == "cone-contraction") hit = &c;
  REQUIRE(hit != nullptr);
  REQUIRE_FALSE(hit->counterexample.is_null());
  // the recorded instance data names the complex the failure was built from
  CHECK(hit->counterexample["data"].contains("x"));
  ChainComplex x = io::complex_from_json(hit->counterexample["data"]["x"]);
  CHECK_FALSE(x == ChainComplex::zero(x.domain()));

  Report again = run_all_suites(cfg);
  for (const CheckResult& c : again.checks)
    if (c.anchor == "cone-contraction")
      CHECK(c.counterexample.dump() == hit->counterexample.dump());
}

TEST_CASE("rendered output carries the verdict") {
  SuiteConfig cfg = small_config();
  Report rep = run_all_suites(cfg);
  std::string js = render_json(rep);
  io::Json parsed = io::parse_text(js);
  CHECK(parsed["passed"] == true);
  CHECK(parsed["checks"].size() == 29);
  CHECK(parsed["config"]["ring"] == "Z@5");

  std::string md = render_markdown(rep);
  CHECK(md.find("| pass |") != std::string::npos);
  CHECK(md.find("overall: pass") != std::string::npos);

  cfg.sabotage = "ut-sign";
  cfg.count = 6;
  Report bad = run_all_suites(cfg);
  std::string mdbad = render_markdown(bad);
  CHECK(mdbad.find("overall: fail") != std::string::npos);
  CHECK(mdbad.find("## counterexamples") != std::string::npos);
}
