#pragma once

#include "twistkit/catalog.hpp"
#include "twistkit/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistkit {

enum class CheckStatus { pass, fail, discrepancy_documented };
std::string check_status_name(CheckStatus s);

struct CheckResult {
  int id = 0;
  std::string name;
  std::string anchor;  // short tag for the statement being reproduced
  CheckStatus status = CheckStatus::fail;
  std::string summary;
  Json payload;
  double seconds = 0;  // wall time; kept out of the JSON so reports compare byte for byte
  double limit_seconds = 0;  // 0 = no limit
};

struct RunReport {
  std::string group_source;
  std::vector<CheckResult> checks;
  bool ok() const;  // no check has status fail
  Json to_json(bool with_timings = false) const;
  std::string to_text() const;
};

struct VerifyOptions {
  /// Directory with bundled group files; std::nullopt uses the builtin records.
  std::optional<std::string> groups_dir;
  std::size_t workers = 1;
  /// Workers for the second run of the determinism check.
  std::size_t parallel_workers = 4;
  std::uint64_t seed = 20240611;
};

/// The bundled group names in report order.
const std::vector<std::string>& bundled_group_names();

/// Loads the bundled groups from `dir/<name>.json` (or the builtins) and checks the
/// computed fingerprints against both the file and the builtin record.
struct BundledGroups {
  std::vector<LoadedGroup> groups;
  std::vector<std::string> errors;
  const LoadedGroup* find(const std::string& name) const;
};
BundledGroups load_bundled_groups(const std::optional<std::string>& dir);

/// Runs every check in order. Cross-oracle disagreements surface as InternalError.
RunReport run_verification(const VerifyOptions& options);

/// Individual checks (ids 1..10), for the acceptance harness.
CheckResult check_table_integrity(const BundledGroups& g);
CheckResult check_dic3_example(const BundledGroups& g);
CheckResult check_sg48_example(const BundledGroups& g);
CheckResult check_degree2_quadratic_sweep(const BundledGroups& g, std::size_t workers);
CheckResult check_degree2_polyquadratic_sweep(const BundledGroups& g, std::size_t workers);
CheckResult check_polyquadratic_oracle(const BundledGroups& g);
CheckResult check_criteria_crosscheck(const BundledGroups& g, std::uint64_t seed);
CheckResult check_weil_identities(std::uint64_t seed);
CheckResult check_phi();
CheckResult check_determinism(const BundledGroups& g, std::size_t workers_a, std::size_t workers_b);

}  // namespace twistkit
