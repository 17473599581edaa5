#pragma once

#include "twistkit/catalog.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace twistkit {

/// Runtime settings. Precedence: command-line flags > environment > config file > defaults.
///
/// Config file (JSON, path from --config or TWISTKIT_CONFIG):
///   {"max_group_order": 20000, "max_cyclotomic_order": 10000, "max_charpoly_degree": 8,
///    "workers": 1, "search_budget": 1000000,
///    "fetch": {"enabled": false, "base_url": "...", "timeout_seconds": 20}}
/// Environment: TWISTKIT_MAX_GROUP_ORDER, TWISTKIT_MAX_CYCLOTOMIC_ORDER, TWISTKIT_WORKERS,
///   TWISTKIT_SEARCH_BUDGET, TWISTKIT_FETCH_ENABLED, TWISTKIT_FETCH_BASE_URL, TWISTKIT_FETCH_TIMEOUT.
struct Config {
  std::size_t max_group_order = 20000;
  std::int64_t max_cyclotomic_order = 10000;
  std::size_t max_charpoly_degree = 8;
  std::size_t workers = 1;
  std::size_t search_budget = 1'000'000;
  FetchConfig fetch;
};

/// Defaults overlaid with the config file (if any) and then the environment.
/// An explicit path that cannot be read is an InputError; so is a malformed value.
Config load_config(const std::optional<std::string>& path);

void apply_config_file(Config& config, const std::string& path);
void apply_environment(Config& config);

/// Installs the bounds process-wide.
void install_bounds(const Config& config);

}  // namespace twistkit
