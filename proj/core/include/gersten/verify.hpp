#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gersten/json_io.hpp"

namespace gersten {

struct SuiteConfig {
  std::string ring = "Z@5";
  std::uint64_t seed = 42;
  int count = 200;   // instances per suite (heavy suites divide this down)
  int max_dim = 4;   // rank / block dimension bound
  int max_val = 3;   // valuation bound
  std::string format = "json";  // json | markdown
  int level = 3;                // simplicial truncation depth, 1..3
  std::string sabotage;         // "", ut-sign, star-order, r-sign
};

void validate_config(const SuiteConfig& cfg);  // throws ConfigInvalid

struct CheckResult {
  std::string anchor;
  int instances = 0;
  int failures = 0;
  bool passed = true;
  io::Json counterexample;  // null unless failures > 0; holds the first one
  long millis = 0;          // informational only, never rendered into the report
};

struct Report {
  SuiteConfig config;
  std::vector<CheckResult> checks;  // sorted by anchor
  bool all_passed() const;
  long total_millis() const;
};

/* sorted anchors of every suite run_all_suites executes */
std::vector<std::string> suite_anchors();

/* Every suite, sequentially, with per-instance generators seeded as
 * derive_seed(config.seed, anchor, instance); output depends only on
 * (seed, config). */
Report run_all_suites(const SuiteConfig& cfg);

std::string render_json(const Report& r);
std::string render_markdown(const Report& r);
std::string render(const Report& r);  // dispatch on config.format

}  // namespace gersten
