#include "twistkit/config.hpp"

#include "twistkit/chartab.hpp"
#include "twistkit/cyclotomic.hpp"
#include "twistkit/error.hpp"
#include "twistkit/groups.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>

namespace twistkit {

namespace {

std::uint64_t parse_count(const std::string& name, const std::string& text) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    if (pos != text.size() || v < 1) throw std::invalid_argument(text);
    return static_cast<std::uint64_t>(v);
  } catch (const std::logic_error&) {
    throw InputError(name + " must be a positive integer, got '" + text + "'");
  }
}

bool parse_bool(const std::string& name, const std::string& text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off" || text.empty()) return false;
  throw InputError(name + " must be a boolean, got '" + text + "'");
}

const char* env(const char* name) {
  const char* v = std::getenv(name);
  return (v && *v) ? v : nullptr;
}

}  // namespace

void apply_config_file(Config& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  try {
    const auto j = nlohmann::json::parse(in);
    if (!j.is_object()) throw InputError("config file must hold a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "max_group_order") {
        c.max_group_order = value.get<std::size_t>();
      } else if (key == "max_cyclotomic_order") {
        c.max_cyclotomic_order = value.get<std::int64_t>();
      } else if (key == "max_charpoly_degree") {
        c.max_charpoly_degree = value.get<std::size_t>();
      } else if (key == "workers") {
        c.workers = value.get<std::size_t>();
      } else if (key == "search_budget") {
        c.search_budget = value.get<std::size_t>();
      } else if (key == "fetch") {
        c.fetch.enabled = value.value("enabled", c.fetch.enabled);
        c.fetch.base_url = value.value("base_url", c.fetch.base_url);
        c.fetch.timeout_seconds = value.value("timeout_seconds", c.fetch.timeout_seconds);
      } else {
        throw InputError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("config file '" + path + "': " + e.what());
  }
}

void apply_environment(Config& c) {
  if (auto v = env("TWISTKIT_MAX_GROUP_ORDER")) c.max_group_order = parse_count("TWISTKIT_MAX_GROUP_ORDER", v);
  if (auto v = env("TWISTKIT_MAX_CYCLOTOMIC_ORDER")) {
    c.max_cyclotomic_order = static_cast<std::int64_t>(parse_count("TWISTKIT_MAX_CYCLOTOMIC_ORDER", v));
  }
  if (auto v = env("TWISTKIT_WORKERS")) c.workers = parse_count("TWISTKIT_WORKERS", v);
  if (auto v = env("TWISTKIT_SEARCH_BUDGET")) c.search_budget = parse_count("TWISTKIT_SEARCH_BUDGET", v);
  if (auto v = env("TWISTKIT_FETCH_ENABLED")) c.fetch.enabled = parse_bool("TWISTKIT_FETCH_ENABLED", v);
  if (auto v = env("TWISTKIT_FETCH_BASE_URL")) c.fetch.base_url = v;
  if (auto v = env("TWISTKIT_FETCH_TIMEOUT")) {
    c.fetch.timeout_seconds = static_cast<int>(parse_count("TWISTKIT_FETCH_TIMEOUT", v));
  }
}

Config load_config(const std::optional<std::string>& path) {
  Config c;
  if (path) {
    apply_config_file(c, *path);
  } else if (auto p = env("TWISTKIT_CONFIG")) {
    apply_config_file(c, p);
  }
  apply_environment(c);
  return c;
}

void install_bounds(const Config& c) {
  set_max_group_order(c.max_group_order);
  set_max_cyclotomic_order(c.max_cyclotomic_order);
  set_max_charpoly_degree(c.max_charpoly_degree);
}

}  // namespace twistkit
