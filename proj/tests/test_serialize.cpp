#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/config.hpp"
#include "twistkit/error.hpp"
#include "twistkit/serialize.hpp"
#include "twistkit/verify.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

using namespace twistkit;

TEST_CASE("cyclotomic encoding") {
  const auto x = Cyclotomic::root_of_unity(12, 3) * Rational(ratio(2, 3)) - Cyclotomic(ratio(1, 2));
  const auto j = cyclotomic_to_json(x);
  CHECK(j["n"] == 12);
  CHECK(cyclotomic_from_json(j) == x);
  for (const auto& t : j["terms"]) {
    CHECK(t[2].get<std::int64_t>() >= 0);
    CHECK(t[2].get<std::int64_t>() < euler_phi(12));
  }
  const auto big = Cyclotomic(Rational(Integer("123456789012345678901234567890")));
  CHECK(cyclotomic_from_json(cyclotomic_to_json(big)) == big);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"n": 3, "terms": [[1, 0, 1]]})")), InputError);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse(R"({"terms": []})")), InputError);
}

TEST_CASE("character tables round trip, also with permuted classes") {
  std::mt19937_64 rng(1);
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto lg = load_builtin(name);
    const auto j = chartab_to_json(*lg.table);
    const auto back = chartab_from_json(j, lg.group);
    CHECK(chartab_to_json(*back).dump() == j.dump());
    // shuffle the columns in the file; the importer must put them back
    auto k = j;
    std::vector<std::size_t> perm(lg.group->num_classes());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < perm.size(); ++i) k["classes"][i] = j["classes"][perm[i]];
    for (std::size_t r = 0; r < lg.table->size(); ++r) {
      for (std::size_t i = 0; i < perm.size(); ++i) k["irreducibles"][r][i] = j["irreducibles"][r][perm[i]];
    }
    const auto shuffled = chartab_from_json(k, lg.group);
    for (std::size_t r = 0; r < lg.table->size(); ++r) CHECK(shuffled->irreducible(r) == lg.table->irreducible(r));
  }
}

TEST_CASE("tampered tables are rejected") {
  const auto lg = load_builtin("dic3");
  auto j = chartab_to_json(*lg.table);
  j["irreducibles"][1][4] = cyclotomic_to_json(Cyclotomic(1));
  CHECK_THROWS_AS(chartab_from_json(j, lg.group), InputError);
  j = chartab_to_json(*lg.table);
  j["classes"][1]["size"] = 3;
  CHECK_THROWS_AS(chartab_from_json(j, lg.group), InputError);
  j = chartab_to_json(*lg.table);
  j["classes"][2]["representative"] = j["classes"][1]["representative"];
  CHECK_THROWS_AS(chartab_from_json(j, lg.group), InputError);
}

TEST_CASE("representations and verdicts round trip") {
  const auto lg = load_builtin("dic3");
  const auto c = dic3_characters(*lg.table);
  const auto& T = lg.table;
  const auto a = RepSpec::irreducible(T, 0) + RepSpec::irreducible(T, c.epsilon) +
                 RepSpec::irreducible(T, c.theta).twisted_by(c.chi);
  const auto b = RepSpec::irreducible(T, c.chi) + RepSpec::irreducible(T, c.chi).twisted_by(c.epsilon) +
                 RepSpec::irreducible(T, c.theta);
  CHECK(repspec_from_json(repspec_to_json(a), T) == a);
  CHECK_THROWS_AS(repspec_from_json(Json::parse(R"({"group": "s3", "mults": [1,0,0]})"), T), InputError);
  for (auto r : {Relation::quadratic, Relation::polyquadratic, Relation::locally_quadratic,
                 Relation::locally_polyquadratic}) {
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{a, a}}) {
      const auto v = decide(r, x, y);
      CHECK(verdict_from_json(verdict_to_json(v)) == v);
      CHECK(verdict_from_json(Json::parse(verdict_to_json(v).dump())) == v);
    }
  }
  CHECK(parse_mults("1, 0,2") == std::vector<std::int64_t>{1, 0, 2});
  CHECK(parse_mults("[3,4]") == std::vector<std::int64_t>{3, 4});
  CHECK_THROWS_AS(parse_mults("1,x"), InputError);
}

TEST_CASE("Weil records round trip") {
  const WeilPolynomial p(2, Integer(3), IntPoly{Integer(1), Integer(0), Integer(5), Integer(0), Integer(9)});
  CHECK(weil_from_json(weil_to_json(p)) == p);
  const auto c = classify_pair(p, p.negated());
  CHECK(classification_from_json(classification_to_json(c)) == c);
  const WeilPolynomial big(1, Integer("1000000000000000000000"), IntPoly{Integer(1), Integer(0), Integer("1000000000000000000000")});
  CHECK(weil_from_json(Json::parse(weil_to_json(big).dump())) == big);
}

TEST_CASE("config precedence: environment over file over defaults") {
  const auto path = std::filesystem::temp_directory_path() / "twistkit_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"max_group_order": 100, "workers": 3, "fetch": {"enabled": true, "timeout_seconds": 7}})";
  }
  unsetenv("TWISTKIT_MAX_GROUP_ORDER");
  unsetenv("TWISTKIT_WORKERS");
  unsetenv("TWISTKIT_FETCH_ENABLED");
  auto c = load_config(path.string());
  CHECK(c.max_group_order == 100);
  CHECK(c.workers == 3);
  CHECK(c.fetch.enabled);
  CHECK(c.fetch.timeout_seconds == 7);
  setenv("TWISTKIT_MAX_GROUP_ORDER", "200", 1);
  setenv("TWISTKIT_FETCH_ENABLED", "0", 1);
  c = load_config(path.string());
  CHECK(c.max_group_order == 200);
  CHECK_FALSE(c.fetch.enabled);
  setenv("TWISTKIT_MAX_GROUP_ORDER", "lots", 1);
  CHECK_THROWS_AS(load_config(path.string()), InputError);
  unsetenv("TWISTKIT_MAX_GROUP_ORDER");
  unsetenv("TWISTKIT_FETCH_ENABLED");
  CHECK(load_config(std::nullopt).max_group_order == 20000);
  CHECK_FALSE(load_config(std::nullopt).fetch.enabled);
  {
    std::ofstream out(path);
    out << R"({"max_group_ordr": 1})";
  }
  CHECK_THROWS_AS(load_config(path.string()), InputError);
  CHECK_THROWS_AS(load_config(std::string("/nonexistent/config.json")), InputError);
  std::filesystem::remove(path);
}

TEST_CASE("run report structure") {
  const auto groups = load_bundled_groups(std::nullopt);
  CHECK(groups.errors.empty());
  RunReport report;
  report.group_source = "builtin";
  report.checks.push_back(check_phi());
  report.checks.push_back(check_dic3_example(groups));
  const auto j = report.to_json();
  CHECK(j["checks"][0]["status"] == "discrepancy-documented");
  CHECK(j["checks"][1]["status"] == "pass");
  CHECK_FALSE(j["checks"][0].contains("seconds"));
  CHECK(report.to_json(true)["checks"][0].contains("seconds"));
  CHECK(report.ok());
  CHECK(report.to_json().dump() == report.to_json().dump());
}

TEST_CASE("tampered group directory fails the integrity check") {
  const auto dir = std::filesystem::temp_directory_path() / "twistkit_tamper";
  std::filesystem::create_directories(dir);
  for (const auto& name : bundled_group_names()) {
    auto rec = builtin_record(name);
    if (name == "s3") rec.generators.pop_back();
    std::ofstream(dir / (name + ".json")) << group_record_to_json(rec);
  }
  const auto g = load_bundled_groups(dir.string());
  CHECK(g.errors.size() == 1);
  CHECK(check_table_integrity(g).status == CheckStatus::fail);
  std::filesystem::remove_all(dir);
}
