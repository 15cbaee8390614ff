#pragma once

// Runtime checks of every identity the library relies on, grouped into suites.
// A failing suite carries its first counterexample; advisory suites are
// reported but do not count as failures.

#include "sigmakl/coxeter.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sigmakl {

struct SuiteResult {
  std::string name;
  std::size_t count = 0;  // instances checked
  bool passed = true;
  bool advisory = false;
  bool skipped = false;
  std::string note;  // skip reason or counterexample
};

enum class Toggle { Auto, On, Off };

struct VerifyOptions {
  int jobs = 1;
  Toggle cells = Toggle::Auto;
  std::size_t cell_cap = 400;
  std::uint64_t seed = 20240607;
  int random_samples = 40;
  // Above this order the W-indexed suites (classical KL, characters) are skipped.
  std::size_t group_cap = 5000;
};

std::vector<SuiteResult> run_verification(const CoxeterSystem& sys, const VerifyOptions& opt = {});

/// True when no non-advisory suite failed.
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace sigmakl
