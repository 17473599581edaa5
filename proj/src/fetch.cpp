#include "twistkit/catalog.hpp"
#include "twistkit/error.hpp"

#include <httplib.h>
#include <json.hpp>

namespace twistkit {

using nlohmann::json;

GroupRecord fetch_remote_group(const std::string& label, const FetchConfig& config) {
  if (!config.enabled) {
    throw FeatureDisabled("remote fetching is disabled (set TWISTKIT_FETCH_ENABLED=1 or fetch.enabled in the config)");
  }
  httplib::Client client(config.base_url);
  client.set_connection_timeout(config.timeout_seconds, 0);
  client.set_read_timeout(config.timeout_seconds, 0);
  client.set_follow_location(true);
  const std::string path = "/api/gps_groups/?label=" + label + "&_format=json";
  auto res = client.Get(path);
  if (!res) throw NetworkError("request to " + config.base_url + path + " failed: " + httplib::to_string(res.error()));
  if (res->status != 200) {
    throw NetworkError("request to " + config.base_url + path + " returned HTTP " + std::to_string(res->status));
  }
  json body;
  try {
    body = json::parse(res->body);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("remote response is not JSON: ") + e.what());
  }
  if (!body.contains("data") || !body["data"].is_array() || body["data"].empty()) {
    throw NotFound("no remote group with label '" + label + "'");
  }
  const auto& d = body["data"][0];
  try {
    GroupRecord r;
    r.name = "remote_" + label;
    r.provenance = config.base_url + path;
    r.gap_id = label;
    r.degree = d.at("transitive_degree").get<std::size_t>();
    r.expected.order = d.at("order").get<std::size_t>();
    for (const auto& g : d.at("perm_gens")) {
      if (g.is_array()) {
        r.generators.push_back(Permutation::from_one_based(g.get<std::vector<std::int64_t>>()));
      } else if (g.is_number_integer()) {
        r.generators.push_back(permutation_from_rank(r.degree, Integer(g.get<long>())));
      } else if (g.is_string()) {
        r.generators.push_back(permutation_from_rank(r.degree, Integer(g.get<std::string>())));
      } else {
        throw InputError("unrecognized generator encoding");
      }
    }
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("remote record malformed: ") + e.what());
  }
}

}  // namespace twistkit
