#include "twistkit/serialize.hpp"

#include "twistkit/error.hpp"

#include <sstream>

namespace twistkit {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

Json opt_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::size_t> opt_index_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::size_t>();
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw InputError("not an integer: " + j.get<std::string>());
    return v;
  }
  throw InputError("expected an integer, got " + j.dump());
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json terms = Json::array();
  for (const auto& [coef, e] : c.terms()) {
    terms.push_back(Json::array({integer_to_json(coef.get_num()), integer_to_json(coef.get_den()), e}));
  }
  return Json{{"n", c.order()}, {"terms", terms}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  return guarded("cyclotomic value", [&] {
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1) throw InputError("cyclotomic order must be positive");
    std::vector<std::pair<Rational, std::int64_t>> terms;
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw InputError("cyclotomic term must be [num, den, exp]");
      const Integer den = integer_from_json(t[1]);
      if (den == 0) throw InputError("zero denominator in cyclotomic term");
      Rational r(integer_from_json(t[0]), den);
      r.canonicalize();
      terms.emplace_back(r, t[2].get<std::int64_t>());
    }
    return Cyclotomic::from_terms(n, terms);
  });
}

Json class_function_to_json(const ClassFunction& f) {
  Json values = Json::array();
  for (const auto& v : f.values) values.push_back(cyclotomic_to_json(v));
  return Json{{"group", f.group->name()}, {"values", values}};
}

ClassFunction class_function_from_json(const Json& j, const GroupPtr& group) {
  return guarded("class function", [&] {
    std::vector<Cyclotomic> values;
    for (const auto& v : j.at("values")) values.push_back(cyclotomic_from_json(v));
    if (values.size() != group->num_classes()) throw InputError("class function has the wrong number of values");
    return ClassFunction(group, std::move(values));
  });
}

Json chartab_to_json(const CharacterTable& table) {
  const auto& G = *table.group();
  Json classes = Json::array();
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    classes.push_back(Json{{"size", G.class_size(c)},
                           {"order", G.class_element_order(c)},
                           {"representative", G.word(G.classes()[c].representative)}});
  }
  Json gens = Json::array();
  for (const auto& g : G.generators()) gens.push_back(g.one_based());
  Json irr = Json::array();
  for (const auto& chi : table.irreducibles()) {
    Json row = Json::array();
    for (const auto& v : chi.values) row.push_back(cyclotomic_to_json(v));
    irr.push_back(row);
  }
  return Json{{"group", G.name()}, {"order", G.order()}, {"generators", gens}, {"classes", classes}, {"irreducibles", irr}};
}

TablePtr chartab_from_json(const Json& j, const GroupPtr& group) {
  return guarded("character table", [&] {
    const auto& G = *group;
    const auto& cls = j.at("classes");
    if (cls.size() != G.num_classes()) {
      throw InputError("table has " + std::to_string(cls.size()) + " classes, group has " +
                       std::to_string(G.num_classes()));
    }
    std::vector<std::size_t> gen_index;
    for (const auto& g : G.generators()) gen_index.push_back(G.index_of(g));
    // column i of the file is class perm[i] of the group
    std::vector<std::size_t> perm(cls.size());
    std::vector<bool> hit(cls.size(), false);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      std::size_t e = G.identity_index();
      for (const auto w : cls[i].at("representative").get<std::vector<std::size_t>>()) {
        if (w < 1 || w > gen_index.size()) throw InputError("class word uses a generator index out of range");
        e = G.multiply(e, gen_index[w - 1]);
      }
      const std::size_t c = G.class_of(e);
      if (hit[c]) throw InputError("two class words land in the same conjugacy class");
      if (cls[i].at("size").get<std::size_t>() != G.class_size(c)) {
        throw InputError("class " + std::to_string(i) + " has size " + std::to_string(G.class_size(c)) +
                         " in the group but " + cls[i].at("size").dump() + " in the file");
      }
      hit[c] = true;
      perm[i] = c;
    }
    std::vector<ClassFunction> rows;
    for (const auto& row : j.at("irreducibles")) {
      if (row.size() != cls.size()) throw InputError("irreducible row has the wrong length");
      std::vector<Cyclotomic> values(cls.size());
      for (std::size_t i = 0; i < cls.size(); ++i) values[perm[i]] = cyclotomic_from_json(row[i]);
      rows.emplace_back(group, std::move(values), true);
    }
    auto table = std::make_shared<const CharacterTable>(group, std::move(rows));
    try {
      verify_character_table(*table);
    } catch (const InternalError& e) {
      throw InputError(std::string("imported table fails verification: ") + e.what());
    }
    return table;
  });
}

Json repspec_to_json(const RepSpec& r) { return Json{{"group", r.table->group()->name()}, {"mults", r.mults}}; }

RepSpec repspec_from_json(const Json& j, const TablePtr& table) {
  return guarded("representation", [&] {
    if (j.contains("group") && j.at("group").get<std::string>() != table->group()->name()) {
      throw InputError("representation refers to group '" + j.at("group").get<std::string>() + "', table is for '" +
                       table->group()->name() + "'");
    }
    return RepSpec::from_mults(table, j.at("mults").get<std::vector<std::int64_t>>());
  });
}

std::vector<std::int64_t> parse_mults(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '[') {
    return guarded("multiplicities", [&] { return Json::parse(s).get<std::vector<std::int64_t>>(); });
  }
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (item.find_first_not_of(" \t", pos) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad multiplicity '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty multiplicity list");
  return out;
}

Json verdict_to_json(const TwistVerdict& v) {
  Json matching = Json::array();
  for (const auto& m : v.matching) matching.push_back(Json{{"irr_a", m.irr_a}, {"irr_b", m.irr_b}, {"quad", m.quad}});
  return Json{{"relation", relation_name(v.relation)},
              {"holds", v.holds},
              {"quadratic_witness", opt_index(v.quadratic_witness)},
              {"matching", matching},
              {"subgroup", v.subgroup},
              {"signs", v.signs},
              {"reason", v.reason},
              {"refuting_class", opt_index(v.refuting_class)},
              {"refuting_classes", v.refuting_classes},
              {"imbalanced_orbit", opt_index(v.imbalanced_orbit)},
              {"orbit_mult_a", v.orbit_mult_a},
              {"orbit_mult_b", v.orbit_mult_b}};
}

TwistVerdict verdict_from_json(const Json& j) {
  return guarded("verdict", [&] {
    TwistVerdict v;
    v.relation = relation_from_name(j.at("relation").get<std::string>());
    v.holds = j.at("holds").get<bool>();
    v.quadratic_witness = opt_index_from(j, "quadratic_witness");
    for (const auto& m : j.value("matching", Json::array())) {
      v.matching.push_back({m.at("irr_a").get<std::size_t>(), m.at("irr_b").get<std::size_t>(),
                            m.at("quad").get<std::size_t>()});
    }
    v.subgroup = j.value("subgroup", std::vector<std::size_t>{});
    v.signs = j.value("signs", std::vector<int>{});
    v.reason = j.value("reason", std::string{});
    v.refuting_class = opt_index_from(j, "refuting_class");
    v.refuting_classes = j.value("refuting_classes", std::vector<std::size_t>{});
    v.imbalanced_orbit = opt_index_from(j, "imbalanced_orbit");
    v.orbit_mult_a = j.value("orbit_mult_a", std::int64_t{0});
    v.orbit_mult_b = j.value("orbit_mult_b", std::int64_t{0});
    return v;
  });
}

Json poly_to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(integer_to_json(c));
  return out;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an array of coefficients");
  IntPoly p;
  for (const auto& c : j) p.push_back(integer_from_json(c));
  return p;
}

Json weil_to_json(const WeilPolynomial& p) {
  return Json{{"g", p.g()}, {"q", integer_to_json(p.q())}, {"coeffs", poly_to_json(p.coeffs())}};
}

WeilPolynomial weil_from_json(const Json& j) {
  return guarded("Weil polynomial", [&] {
    return WeilPolynomial(j.at("g").get<int>(), integer_from_json(j.at("q")), poly_from_json(j.at("coeffs")));
  });
}

Json classification_to_json(const TwistClassification& c) {
  return Json{{"first", weil_to_json(c.first)},
              {"second", weil_to_json(c.second)},
              {"isogenous", c.isogenous},
              {"quadratic_twist", c.quadratic_twist},
              {"polyquadratic_twist", c.polyquadratic_twist},
              {"sign", c.sign ? Json(*c.sign) : Json(nullptr)}};
}

TwistClassification classification_from_json(const Json& j) {
  return guarded("classification", [&] {
    TwistClassification c;
    c.first = weil_from_json(j.at("first"));
    c.second = weil_from_json(j.at("second"));
    c.isogenous = j.at("isogenous").get<bool>();
    c.quadratic_twist = j.at("quadratic_twist").get<bool>();
    c.polyquadratic_twist = j.at("polyquadratic_twist").get<bool>();
    if (j.contains("sign") && !j.at("sign").is_null()) c.sign = j.at("sign").get<int>();
    return c;
  });
}

Json search_result_to_json(const SearchResult& r, const std::string& group, std::int64_t degree, SearchMode mode) {
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs) pairs.push_back(Json{{"a", a.mults}, {"b", b.mults}});
  return Json{{"group", group},
              {"degree", degree},
              {"mode", search_mode_name(mode)},
              {"pairs_total", r.pairs_total},
              {"pairs_examined", r.pairs_examined},
              {"truncated", r.truncated},
              {"pairs", pairs}};
}

}  // namespace twistkit
