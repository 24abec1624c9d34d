// Golden cases and the runner behind `nilpot check`.

#ifndef NILPOT_SUITE_HPP
#define NILPOT_SUITE_HPP

#include "nilpot/document.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilpot {

struct Golden {
  std::optional<std::int64_t> schur;
  std::optional<std::int64_t> exterior;
  std::optional<std::int64_t> tensor;
  std::optional<std::int64_t> corank;
  std::optional<bool> capable;
};

struct SuiteCase {
  std::string name;
  std::string group;
  std::function<LieAlgebra()> build;
  Golden golden;
};

struct CaseResult {
  std::string name;
  std::string group;
  std::string family;  // describe() of the classification, or a reason
  std::vector<CheckLine> lines;
  std::vector<std::string> notes;
  std::string error;  // nonempty if the case could not be evaluated

  bool passed() const;
};

struct GroupTally {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct SuiteSummary {
  std::vector<CaseResult> cases;  // sorted by name
  std::map<std::string, GroupTally> groups;
  std::size_t checks = 0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0; }
};

/// Catalog multipliers and squares, Heisenberg and abelian families, sums
/// with abelian summands and the non-capable stems.
std::vector<SuiteCase> builtin_suite();

/// One case per *.json algebra document in `dir`, sorted by file name.
/// Throws DocumentError on an unreadable or malformed file.
std::vector<SuiteCase> directory_suite(const std::filesystem::path& dir);

/// {"case name": {"schur": 7, "capable": false, ...}, ...}. Throws
/// DocumentError for unknown cases or keys.
void apply_golden_overrides(std::vector<SuiteCase>& suite, const nlohmann::json& overrides);

/// Cases run in parallel (`threads` = 0: hardware concurrency); the
/// summary does not depend on completion order.
SuiteSummary run_suite(const std::vector<SuiteCase>& suite, const CrossCheckOptions& options,
                       unsigned threads = 0);

std::string render_summary(const SuiteSummary& summary, bool verbose = false);

}  // namespace nilpot

#endif  // NILPOT_SUITE_HPP
