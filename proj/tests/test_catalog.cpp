#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/catalog.hpp"
#include "twistkit/error.hpp"

#include <httplib.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

using namespace twistkit;

#ifndef TWISTKIT_DATA_DIR
#define TWISTKIT_DATA_DIR "data/groups"
#endif

namespace {

const char* kS3 = R"({"name": "s3", "degree": 3, "generators": [[2,1,3],[2,3,1]],
  "expected": {"order": 6, "num_classes": 3, "abelianization": [2], "degrees": [1,1,2]},
  "annotations": {"gap_id": "6,1", "notes": ""}})";

}  // namespace

TEST_CASE("builtin fingerprints") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto lg = load_builtin(name);
    const auto fp = compute_fingerprints(*lg.group, *lg.table);
    const auto& want = lg.record.expected;
    CHECK(fp.order == want.order);
    CHECK(fp.num_classes == want.num_classes);
    CHECK(fp.abelianization == want.abelianization);
    CHECK(fp.degrees == want.degrees);
  }
  CHECK_THROWS_AS(builtin_record("nope"), InputError);
}

TEST_CASE("recipes give groups of the recipe's size") {
  for (const char* name : {"dic3", "sg48_3"}) {
    const auto rec = builtin_record(name);
    REQUIRE(rec.recipe);
    const auto& r = *rec.recipe;
    // associativity and identity of the multiplication law, checked directly
    for (std::size_t a = 0; a < r.size; ++a) {
      CHECK(r.multiply(0, a) == a);
      for (std::size_t b = 0; b < r.size; b += 5) {
        for (std::size_t c = 0; c < r.size; c += 3) {
          CHECK(r.multiply(r.multiply(a, b), c) == r.multiply(a, r.multiply(b, c)));
        }
      }
    }
  }
}

TEST_CASE("dic3 characters") {
  const auto lg = load_builtin("dic3");
  const auto c = dic3_characters(*lg.table);
  const auto& T = *lg.table;
  CHECK(T.degrees()[c.epsilon] == 1);
  CHECK(T.degrees()[c.theta] == 2);
  CHECK(frobenius_schur_indicator(T.irreducible(c.theta)) == 1);
  CHECK_FALSE(is_faithful(T.irreducible(c.theta)));
  const auto chi2 = T.irreducible(c.chi) * T.irreducible(c.chi);
  CHECK(chi2 == T.irreducible(c.epsilon));
}

TEST_CASE("sg48_3 structure") {
  const auto lg = load_builtin("sg48_3");
  const auto faithful = faithful_irreducibles(*lg.table, 3);
  CHECK(faithful.size() == 4);
  for (auto i : faithful) CHECK(field_of_values(lg.table->irreducible(i).values).contained_in_gaussian);
  CHECK(sg48_3_field_polynomial().size() == 13);
  CHECK(lg.record.gap_id == "48,3");
}

TEST_CASE("group files") {
  const auto rec = parse_group_record(kS3);
  CHECK(rec.name == "s3");
  CHECK(realize(rec).group->order() == 6);
  // round trip through the writer
  const auto again = parse_group_record(group_record_to_json(rec));
  CHECK(again.generators == rec.generators);
  CHECK(again.expected.degrees == rec.expected.degrees);
  CHECK_THROWS_AS(parse_group_record("{"), InputError);
  CHECK_THROWS_AS(parse_group_record(R"({"name": "x"})"), InputError);
  CHECK_THROWS_AS(parse_group_record(R"({"name": "x", "degree": 3, "generators": [[1,2]]})"), InputError);
  CHECK_THROWS_AS(parse_group_record(R"({"name": "x", "degree": 3, "generators": [[1,1,2]]})"), InputError);
  CHECK_THROWS_AS(load_group_file("/nonexistent/file.json"), InputError);
}

TEST_CASE("tampered fingerprints are rejected") {
  auto rec = parse_group_record(kS3);
  rec.expected.order = 7;
  CHECK_THROWS_AS(realize(rec), FingerprintError);
  rec = parse_group_record(kS3);
  rec.expected.degrees = std::vector<std::int64_t>{1, 1, 1};
  CHECK_THROWS_AS(realize(rec), FingerprintError);
  rec = parse_group_record(kS3);
  rec.generators.pop_back();
  CHECK_THROWS_AS(realize(rec), FingerprintError);
}

TEST_CASE("bundled files agree with the builtins") {
  const std::filesystem::path dir(TWISTKIT_DATA_DIR);
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto path = dir / (name + ".json");
    REQUIRE(std::filesystem::exists(path));
    const auto lg = realize(load_group_file(path.string()));
    const auto b = load_builtin(name);
    CHECK(lg.group->order() == b.group->order());
    CHECK(compute_fingerprints(*lg.group, *lg.table).degrees == b.record.expected.degrees);
  }
}

TEST_CASE("permutation ranks") {
  std::set<std::vector<std::int64_t>> seen;
  for (int r = 0; r < 24; ++r) seen.insert(permutation_from_rank(4, Integer(r)).one_based());
  CHECK(seen.size() == 24);
  CHECK(permutation_from_rank(4, Integer(0)).is_identity());
  CHECK(permutation_from_rank(4, Integer(23)).one_based() == std::vector<std::int64_t>{4, 3, 2, 1});
  CHECK_THROWS_AS(permutation_from_rank(4, Integer(24)), InputError);
}

TEST_CASE("fetcher") {
  FetchConfig off;
  CHECK_THROWS_AS(fetch_remote_group("6.1", off), FeatureDisabled);

  httplib::Server server;
  server.Get("/api/gps_groups/", [](const httplib::Request& req, httplib::Response& res) {
    const auto label = req.get_param_value("label");
    if (label == "6.1") {
      res.set_content(R"({"data": [{"label": "6.1", "order": 6, "transitive_degree": 3, "perm_gens": [1, 3]}]})",
                      "application/json");
    } else if (label == "6.2") {
      res.set_content(R"({"data": [{"label": "6.2", "order": 6, "transitive_degree": 3, "perm_gens": [[2,1,3]]}]})",
                      "application/json");
    } else {
      res.set_content(R"({"data": []})", "application/json");
    }
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  FetchConfig on;
  on.enabled = true;
  on.base_url = "http://127.0.0.1:" + std::to_string(port);
  on.timeout_seconds = 5;
  const auto rec = fetch_remote_group("6.1", on);
  CHECK(rec.degree == 3);
  CHECK(realize(rec).group->order() == 6);
  // a record whose generators do not produce the advertised order
  CHECK_THROWS_AS(realize(fetch_remote_group("6.2", on)), FingerprintError);
  CHECK_THROWS_AS(fetch_remote_group("1.1", on), NotFound);
  server.stop();
  t.join();
  on.base_url = "http://127.0.0.1:" + std::to_string(port);
  on.timeout_seconds = 1;
  CHECK_THROWS_AS(fetch_remote_group("6.1", on), NetworkError);
}
