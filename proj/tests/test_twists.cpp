#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/catalog.hpp"
#include "twistkit/error.hpp"
#include "twistkit/twists.hpp"

#include <algorithm>

using namespace twistkit;

namespace {

std::vector<RepSpec> reps(const TablePtr& T, std::int64_t d) {
  std::vector<RepSpec> out;
  for (auto& m : representations_of_degree(*T, d)) out.push_back(RepSpec::from_mults(T, m));
  return out;
}

// For a sum of linear characters, the eigenvalues at a class are the character values.
std::vector<Cyclotomic> eigenvalues(const RepSpec& r, std::size_t c) {
  std::vector<Cyclotomic> out;
  for (std::size_t i = 0; i < r.mults.size(); ++i) {
    for (std::int64_t k = 0; k < r.mults[i]; ++k) out.push_back(r.table->irreducible(i)[c]);
  }
  return out;
}

bool same_multiset(std::vector<Cyclotomic> a, std::vector<Cyclotomic> b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    auto it = std::find(b.begin(), b.end(), x);
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

std::vector<Cyclotomic> scaled(std::vector<Cyclotomic> v, long s) {
  for (auto& x : v) x = x * Rational(s);
  return v;
}

std::vector<Cyclotomic> squared(std::vector<Cyclotomic> v) {
  for (auto& x : v) x = x * x;
  return v;
}

// Quadratic characters found by scanning values, then twisting every multiplicity.
bool brute_quadratic(const RepSpec& a, const RepSpec& b) {
  const auto& T = *a.table;
  for (std::size_t i = 0; i < T.size(); ++i) {
    const auto& chi = T.irreducible(i);
    bool quad = T.degrees()[i] == 1;
    for (const auto& v : chi.values) quad = quad && (v == Cyclotomic(1) || v == Cyclotomic(-1));
    if (!quad) continue;
    if (T.decompose(chi * a.character).integers() == b.mults) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Dic3 pair: locally quadratic, not quadratic") {
  const auto lg = load_builtin("dic3");
  const auto& T = lg.table;
  const auto c = dic3_characters(*T);
  const auto one = RepSpec::irreducible(T, 0), eps = RepSpec::irreducible(T, c.epsilon);
  const auto chi = RepSpec::irreducible(T, c.chi), theta = RepSpec::irreducible(T, c.theta);
  const auto a = one + eps + theta.twisted_by(c.chi);
  const auto b = chi + chi.twisted_by(c.epsilon) + theta;
  CHECK(a.degree == 4);
  const auto lq = decide(Relation::locally_quadratic, a, b);
  const auto q = decide(Relation::quadratic, a, b);
  CHECK(lq.holds);
  CHECK_FALSE(q.holds);
  CHECK(verify_verdict(lq, a, b));
  CHECK(verify_verdict(q, a, b));
  CHECK(lq.signs.size() == lg.group->num_classes());
  CHECK(decide(Relation::locally_polyquadratic, a, b).holds);
  CHECK_FALSE(brute_quadratic(a, b));
  CHECK(sym2_alt2_criterion(a, b));
  // the other order-4 character gives an equivalent example
  for (std::size_t k = 0; k < T->size(); ++k) {
    if (k == c.chi || T->degrees()[k] != 1 || k == c.epsilon || k == 0) continue;
    const auto chi2 = RepSpec::irreducible(T, k);
    const auto a2 = one + eps + theta.twisted_by(k);
    const auto b2 = chi2 + chi2.twisted_by(c.epsilon) + theta;
    CHECK(is_locally_quadratic_twist(a2, b2).holds);
    CHECK_FALSE(is_quadratic_twist(a2, b2).holds);
  }
}

TEST_CASE("sg48_3 faithful pairs: locally polyquadratic, not polyquadratic") {
  const auto lg = load_builtin("sg48_3");
  const auto& T = lg.table;
  const auto faithful = faithful_irreducibles(*T, 3);
  REQUIRE(faithful.size() >= 2);
  for (std::size_t x = 0; x < faithful.size(); ++x) {
    for (std::size_t y = x + 1; y < faithful.size(); ++y) {
      const auto a = RepSpec::irreducible(T, faithful[x]);
      const auto b = RepSpec::irreducible(T, faithful[y]);
      CHECK(is_locally_polyquadratic_twist(a, b).holds);
      CHECK_FALSE(is_polyquadratic_twist(a, b).holds);
      CHECK_FALSE(polyquadratic_subgroup_oracle(a, b).holds);
      CHECK(adams2_criterion(a, b));
      // padding with a common summand keeps the property in higher degree
      for (std::size_t t = 0; t < T->size(); ++t) {
        if (T->degrees()[t] > 3) continue;
        const auto th = RepSpec::irreducible(T, t);
        CHECK(is_locally_polyquadratic_twist(a + th, b + th).holds);
        CHECK_FALSE(is_polyquadratic_twist(a + th, b + th).holds);
      }
    }
  }
}

TEST_CASE("trivial cases") {
  const auto lg = load_builtin("s3");
  const auto& T = lg.table;
  const auto a = RepSpec::from_mults(T, {1, 0, 1});
  for (auto r : {Relation::quadratic, Relation::polyquadratic, Relation::locally_quadratic,
                 Relation::locally_polyquadratic}) {
    CHECK(decide(r, a, a).holds);
  }
  const auto b = RepSpec::from_mults(T, {1, 0, 0});
  CHECK_FALSE(decide(Relation::quadratic, a, b).holds);
  CHECK_FALSE(decide(Relation::locally_polyquadratic, a, b).holds);
  CHECK_THROWS_AS(RepSpec::from_mults(T, {1, 0}), InputError);
  CHECK_THROWS_AS(RepSpec::from_mults(T, {1, -1, 0}), InputError);
  CHECK(relation_from_name("lpq") == Relation::locally_polyquadratic);
  CHECK_THROWS_AS(relation_from_name("x"), InputError);
}

TEST_CASE("abelian groups: local relations against eigenvalue multisets") {
  for (const char* name : {"c2", "c3", "c4", "c2xc2"}) {
    const auto lg = load_builtin(name);
    const auto& G = *lg.group;
    for (std::int64_t d = 1; d <= 3; ++d) {
      const auto all = reps(lg.table, d);
      for (const auto& a : all) {
        for (const auto& b : all) {
          bool lq = true, lpq = true;
          for (std::size_t c = 0; c < G.num_classes(); ++c) {
            const auto ea = eigenvalues(a, c), eb = eigenvalues(b, c);
            lq = lq && (same_multiset(ea, eb) || same_multiset(scaled(ea, -1), eb));
            lpq = lpq && same_multiset(squared(ea), squared(eb));
          }
          CHECK(is_locally_quadratic_twist(a, b).holds == lq);
          CHECK(is_locally_polyquadratic_twist(a, b).holds == lpq);
        }
      }
    }
  }
}

TEST_CASE("quadratic relation against a direct scan, and implications") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto lg = load_builtin(name);
    for (std::int64_t d = 1; d <= 3; ++d) {
      const auto all = reps(lg.table, d);
      for (const auto& a : all) {
        for (const auto& b : all) {
          const bool q = is_quadratic_twist(a, b).holds;
          const bool pq = is_polyquadratic_twist(a, b).holds;
          const bool lq = is_locally_quadratic_twist(a, b).holds;
          const bool lpq = is_locally_polyquadratic_twist(a, b).holds;
          CHECK(q == brute_quadratic(a, b));
          if (q) CHECK((pq && lq));
          if (pq || lq) CHECK(lpq);
          CHECK(pq == polyquadratic_subgroup_oracle(a, b).holds);
        }
      }
    }
  }
}

TEST_CASE("degree 2: local relations imply global ones, and the adjoint identity") {
  for (const auto& name : builtin_names()) {
    const auto lg = load_builtin(name);
    const auto one = trivial_character(lg.group);
    const auto& G = *lg.group;
    const auto all = reps(lg.table, 2);
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (is_locally_quadratic_twist(a, b).holds) CHECK(is_quadratic_twist(a, b).holds);
        if (!is_locally_polyquadratic_twist(a, b).holds) continue;
        CHECK(is_polyquadratic_twist(a, b).holds);
        const auto eps = epsilon_character(a, b);
        if (eps == one) continue;
        // multiplicities by explicit class sums
        Rational lhs = 0, rhs = 0;
        for (std::size_t c = 0; c < G.num_classes(); ++c) {
          const Rational w(ratio(static_cast<long>(G.class_size(c)), static_cast<long>(G.order())));
          const Cyclotomic adb = b.character[c] * b.character[c].conj() - Cyclotomic(1);
          const Cyclotomic ada = a.character[c] * a.character[c].conj() - Cyclotomic(1);
          lhs += w * adb.rational_value();
          rhs += w * (eps[c] * ada).rational_value();
        }
        CHECK(lhs == 1 + rhs);
      }
    }
  }
}

TEST_CASE("criteria with symmetric squares and Adams operations") {
  for (const char* name : {"dic3", "sg48_3", "c2xc2"}) {
    const auto lg = load_builtin(name);
    const auto all = reps(lg.table, 4);
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 0; j < all.size(); j += 2) {
        CHECK(is_locally_quadratic_twist(all[i], all[j]).holds == sym2_alt2_criterion(all[i], all[j]));
        CHECK(is_locally_polyquadratic_twist(all[i], all[j]).holds == adams2_criterion(all[i], all[j]));
      }
    }
  }
}

TEST_CASE("certificates are checked") {
  const auto lg = load_builtin("c2xc2");
  const auto& T = lg.table;
  const auto a = RepSpec::from_mults(T, {1, 1, 0, 0});
  const auto b = RepSpec::from_mults(T, {0, 0, 1, 1});
  auto v = is_quadratic_twist(a, b);
  REQUIRE(v.holds);
  CHECK(verify_verdict(v, a, b));
  auto w = v;
  w.quadratic_witness = 0;
  CHECK_FALSE(verify_verdict(w, a, b));
  auto p = is_polyquadratic_twist(a, b);
  REQUIRE(p.holds);
  CHECK(verify_verdict(p, a, b));
  p.subgroup = {0};
  CHECK_FALSE(verify_verdict(p, a, b));
}

TEST_CASE("epsilon character") {
  const auto lg = load_builtin("c4");
  const auto& T = lg.table;
  // a degree-1 pair whose determinant ratio has order 4
  std::size_t four = 0;
  for (std::size_t i = 0; i < T->size(); ++i) {
    if (!(T->irreducible(i) * T->irreducible(i) == trivial_character(lg.group))) four = i;
  }
  CHECK_THROWS_AS(epsilon_character(RepSpec::irreducible(T, 0), RepSpec::irreducible(T, four)), InputError);
}

TEST_CASE("search") {
  const auto dic3 = load_builtin("dic3");
  const auto r = search_counterexamples(dic3.table, 4, SearchMode::locally_quadratic_not_quadratic);
  CHECK_FALSE(r.truncated);
  REQUIRE(r.pairs.size() >= 1);
  const auto c = dic3_characters(*dic3.table);
  const auto& T = dic3.table;
  const auto a = RepSpec::irreducible(T, 0) + RepSpec::irreducible(T, c.epsilon) +
                 RepSpec::irreducible(T, c.theta).twisted_by(c.chi);
  const auto b = RepSpec::irreducible(T, c.chi) + RepSpec::irreducible(T, c.chi).twisted_by(c.epsilon) +
                 RepSpec::irreducible(T, c.theta);
  const auto key = canonical_quadratic_pair(a, b);
  bool found = false;
  for (const auto& [x, y] : r.pairs) found = found || canonical_quadratic_pair(x, y) == key;
  CHECK(found);

  CHECK(search_counterexamples(T, 2, SearchMode::locally_polyquadratic_not_polyquadratic).pairs.empty());
  const auto sg = load_builtin("sg48_3");
  const auto s1 = search_counterexamples(sg.table, 3, SearchMode::locally_polyquadratic_not_polyquadratic, 1000000, 1);
  const auto s4 = search_counterexamples(sg.table, 3, SearchMode::locally_polyquadratic_not_polyquadratic, 1000000, 4);
  CHECK(s1.pairs.size() >= 1);
  REQUIRE(s1.pairs.size() == s4.pairs.size());
  for (std::size_t i = 0; i < s1.pairs.size(); ++i) {
    CHECK(s1.pairs[i].first == s4.pairs[i].first);
    CHECK(s1.pairs[i].second == s4.pairs[i].second);
  }
  const auto t = search_counterexamples(sg.table, 4, SearchMode::locally_quadratic_not_quadratic, 10, 2);
  CHECK(t.truncated);
  CHECK(t.pairs_examined == 10);
  CHECK(search_mode_from_name("lpq-not-pq") == SearchMode::locally_polyquadratic_not_polyquadratic);
}

TEST_CASE("quadratic-twist orbits") {
  const auto lg = load_builtin("dic3");
  const auto orb = quadratic_twist_orbits(*lg.table);
  const auto c = dic3_characters(*lg.table);
  CHECK(orb[c.epsilon] == 0);
  CHECK(orb[c.chi] != 0);
  CHECK(representations_of_degree(*lg.table, 2).size() == 10 + 2);
}
