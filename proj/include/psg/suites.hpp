#pragma once

// Named verification suites: each enumerates a configured instance space,
// asserts one structural law on every instance, and reports counts. The
// runner may fan items out across worker threads; reports are byte-stable
// and independent of the thread count.

#include <string>
#include <vector>

#include "json.hpp"

#include "psg/action.hpp"
#include "psg/setact.hpp"

namespace psg {

struct SuiteReport {
  std::string suite;
  int instances = 0;
  int passes = 0;
  int skipped = 0;      // instances outside the law's hypotheses
  int guard_skips = 0;  // must be zero in acceptance configurations
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool holds() const { return failures.empty() && guard_skips == 0; }
};

// The coefficient-ring catalog used by the sweeps, with display names.
std::vector<std::pair<std::string, FiniteAlgebra>> catalog_rings();

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite; jobs >= 1 selects the worker count (output-invariant).
SuiteReport run_suite(const std::string& name, const Guards& guards, int jobs);

nlohmann::json suite_report_json(const SuiteReport& r);
std::string suite_report_text(const SuiteReport& r);

}  // namespace psg
