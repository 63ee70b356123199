#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace homcollapse {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

/// Per-proposition summary.
struct PropositionResult {
  std::string proposition;
  int n = 0;
  std::size_t cells_checked = 0;
  std::size_t failures = 0;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CheckResult> checks;
  std::vector<PropositionResult> propositions;
  nlohmann::json counters = nlohmann::json::object();
  double wall_time_seconds = 0.0;

  void add(std::string name, bool ok, std::string detail = {});
  void skip(std::string name, std::string reason);
  bool passed() const;
  std::size_t failure_count() const;

  /// Everything except wall time is deterministic; wall time lives under
  /// "timing" so that diffs can ignore it.
  nlohmann::json to_json() const;
  /// Throws InvalidArgument on malformed input.
  static VerificationReport from_json(const nlohmann::json& j);
};

struct SuiteOptions {
  int n = 3;
  std::size_t max_cells = 0;   // 0: library default
  std::size_t max_chains = 0;  // 0: library default
  unsigned jobs = 1;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"links",    "collapse",    "homology", "fixedset",
                                                 "boundary", "nonmanifold", "all"};
  return names;
}

/// Runs one named suite. Cap overruns become skipped checks; anything else
/// unexpected becomes a failed check.
VerificationReport run_suite(const std::string& suite, const SuiteOptions& options);

/// Combined view of several reports: passes iff every input passes. Throws
/// InvalidArgument on an empty list.
VerificationReport merge_reports(const std::vector<VerificationReport>& reports);

/// Plain-text table of a merged report.
std::string summary_table(const VerificationReport& report);

}  // namespace homcollapse
