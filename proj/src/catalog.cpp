#include "twistkit/catalog.hpp"

#include "twistkit/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace twistkit {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Permutation perm(std::initializer_list<std::int64_t> one_based) {
  const std::vector<std::int64_t> v(one_based);
  return Permutation::from_one_based(v);
}

Recipe dic3_recipe() {
  // (a, b) in Z6 x {0, 1}, index a + 6b; x = (1,0), y = (0,1): x^6 = 1, y^2 = x^3, y x y^-1 = x^-1
  Recipe r;
  r.size = 12;
  r.multiply = [](std::size_t u, std::size_t v) -> std::size_t {
    const int a = static_cast<int>(u % 6), b = static_cast<int>(u / 6);
    const int c = static_cast<int>(v % 6), d = static_cast<int>(v / 6);
    int e = 0, f = 0;
    if (b == 0) {
      e = a + c;
      f = d;
    } else if (d == 0) {
      e = a - c;
      f = 1;
    } else {
      e = a - c + 3;
      f = 0;
    }
    return static_cast<std::size_t>(((e % 6) + 6) % 6 + 6 * f);
  };
  r.generators = {1, 6};
  return r;
}

Recipe sg48_3_recipe() {
  // (v, c) in (Z4 x Z4) x Z3, index v0 + 4 v1 + 16 c; C3 acts by M(a, b) = (-b, a - b)
  Recipe r;
  r.size = 48;
  r.multiply = [](std::size_t u, std::size_t v) -> std::size_t {
    int a = static_cast<int>(u % 4), b = static_cast<int>(u / 4 % 4), c = static_cast<int>(u / 16);
    int x = static_cast<int>(v % 4), y = static_cast<int>(v / 4 % 4), d = static_cast<int>(v / 16);
    for (int i = 0; i < c; ++i) {
      const int nx = -y, ny = x - y;
      x = nx;
      y = ny;
    }
    const int e = ((a + x) % 4 + 4) % 4, f = ((b + y) % 4 + 4) % 4;
    return static_cast<std::size_t>(e + 4 * f + 16 * ((c + d) % 3));
  };
  r.generators = {1, 4, 16};
  return r;
}

void check_fingerprint(const std::string& group, const char* what, const std::string& expected,
                       const std::string& actual) {
  if (expected != actual) {
    throw FingerprintError("group '" + group + "': fingerprint '" + what + "' mismatch: expected " + expected +
                           ", got " + actual);
  }
}

void assert_dic3(const CharacterTable& table) {
  (void)dic3_characters(table);
}

void assert_sg48_3(const GroupData& group, const CharacterTable& table) {
  if (group.order() != 48) throw InternalError("sg48_3: order is not 48");
  if (abelianization_invariants(group) != std::vector<std::int64_t>{3}) {
    throw InternalError("sg48_3: abelianization is not of order 3");
  }
  const auto faithful = faithful_irreducibles(table, 3);
  if (faithful.size() < 2) {
    throw InternalError("sg48_3: expected a pair of faithful degree-3 irreducibles, found " +
                        std::to_string(faithful.size()));
  }
  for (std::size_t i : faithful) {
    if (!field_of_values(table.irreducible(i).values).contained_in_gaussian) {
      throw InternalError("sg48_3: a faithful degree-3 character has values outside Q(i)");
    }
  }
}

std::vector<std::int64_t> int_list(const json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("'" + field + "' must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError("'" + field + "' must be an array of integers");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

}  // namespace

std::vector<Permutation> regular_generators(const Recipe& recipe) {
  std::vector<Permutation> gens;
  for (std::size_t g : recipe.generators) {
    std::vector<std::uint32_t> im(recipe.size);
    for (std::size_t x = 0; x < recipe.size; ++x) im[x] = static_cast<std::uint32_t>(recipe.multiply(g, x));
    gens.emplace_back(std::move(im));
  }
  return gens;
}

Fingerprints compute_fingerprints(const GroupData& group, const CharacterTable& table) {
  Fingerprints f;
  f.order = group.order();
  f.num_classes = group.num_classes();
  f.abelianization = abelianization_invariants(group);
  auto degs = table.degrees();
  std::sort(degs.begin(), degs.end());
  f.degrees = degs;
  return f;
}

LoadedGroup realize(const GroupRecord& record) {
  LoadedGroup out;
  out.record = record;
  if (record.recipe) {
    out.group = GroupData::enumerate(record.name, record.recipe->size, regular_generators(*record.recipe));
  } else {
    out.group = GroupData::enumerate(record.name, record.degree, record.generators);
  }
  const auto& G = *out.group;
  const auto& e = record.expected;
  if (e.order) check_fingerprint(record.name, "order", std::to_string(*e.order), std::to_string(G.order()));
  if (e.num_classes) {
    check_fingerprint(record.name, "num_classes", std::to_string(*e.num_classes), std::to_string(G.num_classes()));
  }
  if (e.abelianization) {
    check_fingerprint(record.name, "abelianization", join(*e.abelianization), join(abelianization_invariants(G)));
  }
  out.table = character_table(out.group);
  if (e.degrees) {
    auto want = *e.degrees, got = out.table->degrees();
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    check_fingerprint(record.name, "degrees", join(want), join(got));
  }
  if (record.name == "dic3") assert_dic3(*out.table);
  if (record.name == "sg48_3") assert_sg48_3(G, *out.table);
  return out;
}

std::vector<std::string> builtin_names() { return {"trivial", "c2", "c3", "c4", "c2xc2", "s3", "dic3", "sg48_3"}; }

GroupRecord builtin_record(const std::string& name) {
  GroupRecord r;
  r.name = name;
  r.provenance = "builtin";
  auto fp = [&](std::size_t order, std::size_t classes, std::vector<std::int64_t> ab, std::vector<std::int64_t> deg) {
    r.expected.order = order;
    r.expected.num_classes = classes;
    r.expected.abelianization = std::move(ab);
    r.expected.degrees = std::move(deg);
  };
  if (name == "trivial") {
    r.degree = 1;
    fp(1, 1, {}, {1});
    r.gap_id = "1,1";
  } else if (name == "c2") {
    r.degree = 2;
    r.generators = {perm({2, 1})};
    fp(2, 2, {2}, {1, 1});
    r.gap_id = "2,1";
  } else if (name == "c3") {
    r.degree = 3;
    r.generators = {perm({2, 3, 1})};
    fp(3, 3, {3}, {1, 1, 1});
    r.gap_id = "3,1";
  } else if (name == "c4") {
    r.degree = 4;
    r.generators = {perm({2, 3, 4, 1})};
    fp(4, 4, {4}, {1, 1, 1, 1});
    r.gap_id = "4,1";
  } else if (name == "c2xc2") {
    r.degree = 4;
    r.generators = {perm({2, 1, 4, 3}), perm({3, 4, 1, 2})};
    fp(4, 4, {2, 2}, {1, 1, 1, 1});
    r.gap_id = "4,2";
  } else if (name == "s3") {
    r.degree = 3;
    r.generators = {perm({2, 1, 3}), perm({2, 3, 1})};
    fp(6, 3, {2}, {1, 1, 2});
    r.gap_id = "6,1";
  } else if (name == "dic3") {
    r.recipe = dic3_recipe();
    r.degree = 12;
    fp(12, 6, {4}, {1, 1, 1, 1, 2, 2});
    r.gap_id = "12,1";
    r.notes = "dicyclic group of order 12: x^6 = 1, y^2 = x^3, y x y^-1 = x^-1; left regular action";
  } else if (name == "sg48_3") {
    r.recipe = sg48_3_recipe();
    r.degree = 48;
    fp(48, 8, {3}, {1, 1, 1, 3, 3, 3, 3, 3});
    r.gap_id = "48,3";
    r.notes =
        "(Z4 x Z4) semidirect C3, C3 acting by (a, b) -> (-b, a - b); left regular action. "
        "Attached polynomial: T^12 + 2T^10 - 82T^8 + 50T^6 + 595T^4 + 500T^2 + 25";
  } else {
    throw InputError("unknown builtin group '" + name + "'");
  }
  if (r.recipe) r.generators = regular_generators(*r.recipe);
  return r;
}

LoadedGroup load_builtin(const std::string& name) { return realize(builtin_record(name)); }

GroupRecord parse_group_record(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
  try {
    if (!j.is_object()) throw InputError("top level must be an object");
    GroupRecord r;
    r.name = j.at("name").get<std::string>();
    r.degree = j.at("degree").get<std::size_t>();
    r.provenance = source;
    for (const auto& g : j.value("generators", json::array())) {
      const auto im = int_list(g, "generators");
      if (im.size() != r.degree) {
        throw InputError("generator has " + std::to_string(im.size()) + " images, degree is " + std::to_string(r.degree));
      }
      r.generators.push_back(Permutation::from_one_based(im));
    }
    if (j.contains("expected")) {
      const auto& e = j.at("expected");
      if (e.contains("order")) r.expected.order = e.at("order").get<std::size_t>();
      if (e.contains("num_classes")) r.expected.num_classes = e.at("num_classes").get<std::size_t>();
      if (e.contains("abelianization")) r.expected.abelianization = int_list(e.at("abelianization"), "abelianization");
      if (e.contains("degrees")) r.expected.degrees = int_list(e.at("degrees"), "degrees");
    }
    if (j.contains("annotations")) {
      const auto& a = j.at("annotations");
      r.gap_id = a.value("gap_id", "");
      r.notes = a.value("notes", "");
    }
    return r;
  } catch (const json::exception& e) {
    throw InputError(source + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

GroupRecord load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group_record(ss.str(), path);
}

std::string group_record_to_json(const GroupRecord& record) {
  json j;
  j["name"] = record.name;
  j["degree"] = record.recipe ? record.recipe->size : record.degree;
  j["generators"] = json::array();
  for (const auto& g : record.generators) j["generators"].push_back(g.one_based());
  json e = json::object();
  if (record.expected.order) e["order"] = *record.expected.order;
  if (record.expected.num_classes) e["num_classes"] = *record.expected.num_classes;
  if (record.expected.abelianization) e["abelianization"] = *record.expected.abelianization;
  if (record.expected.degrees) e["degrees"] = *record.expected.degrees;
  j["expected"] = e;
  j["annotations"] = {{"gap_id", record.gap_id}, {"notes", record.notes}};
  return j.dump(1);
}

Dic3Characters dic3_characters(const CharacterTable& table) {
  const auto& irr = table.irreducibles();
  std::vector<std::size_t> eps, theta, chi;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    const bool rational = field_of_values(irr[i].values).rational;
    const auto deg = table.degrees()[i];
    if (deg == 1 && i != 0 && rational) eps.push_back(i);
    if (deg == 2 && rational && frobenius_schur_indicator(irr[i]) == 1) theta.push_back(i);
    if (deg == 1) {
      // order of a linear character: smallest k with chi^k trivial
      ClassFunction pw = irr[i];
      int order = 1;
      while (!(pw == trivial_character(table.group()))) {
        pw = pw * irr[i];
        ++order;
      }
      if (order == 4) chi.push_back(i);
    }
  }
  if (eps.size() != 1) {
    throw InternalError("expected a unique rational nontrivial linear character, found " + std::to_string(eps.size()));
  }
  if (theta.size() != 1) {
    throw InternalError("expected a unique degree-2 irreducible realizable over Q, found " +
                        std::to_string(theta.size()));
  }
  if (chi.empty()) throw InternalError("no linear character of order 4");
  return {eps[0], theta[0], chi[0]};
}

std::vector<std::size_t> faithful_irreducibles(const CharacterTable& table, std::int64_t degree) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.degrees()[i] == degree && is_faithful(table.irreducible(i))) out.push_back(i);
  }
  return out;
}

std::vector<std::int64_t> sg48_3_field_polynomial() { return {25, 0, 500, 0, 595, 0, 50, 0, -82, 0, 2, 0, 1}; }

Permutation permutation_from_rank(std::size_t n, const Integer& rank) {
  Integer total = 1;
  for (std::size_t i = 2; i <= n; ++i) total *= static_cast<unsigned long>(i);
  if (rank < 0 || rank >= total) throw InputError("permutation rank " + rank.get_str() + " out of range for degree " +
                                                  std::to_string(n));
  std::vector<std::uint32_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> im;
  Integer r = rank;
  for (std::size_t i = n; i >= 1; --i) {
    total /= static_cast<unsigned long>(i);
    const Integer idx = r / total;
    r %= total;
    const auto k = static_cast<std::size_t>(idx.get_ui());
    im.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation(std::move(im));
}

}  // namespace twistkit
