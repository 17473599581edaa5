#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/catalog.hpp"
#include "twistkit/error.hpp"
#include "twistkit/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace twistkit;

namespace {

GroupPtr group(const std::string& name) { return load_builtin(name).group; }

// Conjugacy classes by conjugating every element with every element.
std::set<std::set<std::size_t>> brute_classes(const GroupData& G) {
  std::set<std::set<std::size_t>> out;
  for (std::size_t x = 0; x < G.order(); ++x) {
    std::set<std::size_t> cls;
    for (const auto& g : G.elements()) cls.insert(G.index_of(g * G.element(x) * g.inverse()));
    out.insert(cls);
  }
  return out;
}

// Subgroup generated by a set, by repeated products of permutations.
std::set<std::size_t> brute_closure(const GroupData& G, std::set<std::size_t> s) {
  s.insert(G.identity_index());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::size_t> cur(s.begin(), s.end());
    for (auto a : cur) {
      for (auto b : cur) {
        if (s.insert(G.index_of(G.element(a) * G.element(b))).second) grew = true;
      }
    }
  }
  return s;
}

std::size_t commutator_subgroup_order(const GroupData& G) {
  std::set<std::size_t> comms;
  for (const auto& a : G.elements()) {
    for (const auto& b : G.elements()) comms.insert(G.index_of(a * b * a.inverse() * b.inverse()));
  }
  return brute_closure(G, comms).size();
}

}  // namespace

TEST_CASE("permutations") {
  const auto a = Permutation::from_one_based(std::vector<std::int64_t>{2, 3, 1});
  const auto b = Permutation::from_one_based(std::vector<std::int64_t>{2, 1, 3});
  // (a * b)(x) = a(b(x))
  CHECK((a * b).one_based() == std::vector<std::int64_t>{3, 2, 1});
  CHECK((a * a.inverse()).is_identity());
  CHECK_THROWS_AS(Permutation::from_one_based(std::vector<std::int64_t>{1, 1, 2}), InputError);
  CHECK_THROWS_AS(Permutation::from_one_based(std::vector<std::int64_t>{1, 4, 2}), InputError);
}

TEST_CASE("orders and class structure") {
  struct Row {
    const char* name;
    std::size_t order, classes;
    std::int64_t exponent;
  };
  for (const Row& r : {Row{"trivial", 1, 1, 1}, Row{"c2", 2, 2, 2}, Row{"c3", 3, 3, 3}, Row{"c4", 4, 4, 4},
                       Row{"c2xc2", 4, 4, 2}, Row{"s3", 6, 3, 6}, Row{"dic3", 12, 6, 12},
                       Row{"sg48_3", 48, 8, 12}}) {
    CAPTURE(r.name);
    const auto G = group(r.name);
    CHECK(G->order() == r.order);
    CHECK(G->num_classes() == r.classes);
    CHECK(G->exponent() == r.exponent);
    std::set<std::set<std::size_t>> ours;
    for (const auto& c : G->classes()) ours.insert(std::set<std::size_t>(c.members.begin(), c.members.end()));
    CHECK(ours == brute_classes(*G));
    CHECK(G->classes()[0].members == std::vector<std::size_t>{G->identity_index()});
  }
}

TEST_CASE("power maps, inverses and orders") {
  for (const char* name : {"s3", "dic3", "sg48_3"}) {
    const auto G = group(name);
    for (std::size_t c = 0; c < G->num_classes(); ++c) {
      const auto x = G->element(G->classes()[c].representative);
      auto p = Permutation::identity(G->degree());
      for (std::int64_t k = 0; k <= G->exponent(); ++k) {
        CHECK(G->power_class(c, k) == G->class_of(G->index_of(p)));
        p = p * x;
      }
      CHECK(G->inverse_class(c) == G->class_of(G->index_of(x.inverse())));
      std::size_t ord = 1;
      for (auto y = x; !y.is_identity(); y = y * x) ++ord;
      CHECK(G->class_element_order(c) == ord);
    }
  }
}

TEST_CASE("words evaluate to their elements") {
  const auto G = group("dic3");
  for (std::size_t e = 0; e < G->order(); ++e) {
    auto p = Permutation::identity(G->degree());
    for (auto w : G->word(e)) p = p * G->generators()[w - 1];
    CHECK(G->index_of(p) == e);
  }
}

TEST_CASE("abelianization against the commutator subgroup") {
  for (const char* name : {"trivial", "c4", "c2xc2", "s3", "dic3", "sg48_3"}) {
    const auto G = group(name);
    std::int64_t prod = 1;
    for (auto d : abelianization_invariants(*G)) prod *= d;
    CHECK(static_cast<std::size_t>(prod) * commutator_subgroup_order(*G) == G->order());
  }
  CHECK(abelianization_invariants(*group("dic3")) == std::vector<std::int64_t>{4});
  CHECK(abelianization_invariants(*group("c2xc2")) == std::vector<std::int64_t>{2, 2});
  CHECK(abelianization_invariants(*group("sg48_3")) == std::vector<std::int64_t>{3});
  CHECK(derived_subgroup(*group("s3")).size() == 3);
}

TEST_CASE("normal subgroups with elementary abelian 2-group quotient") {
  // |G / G^2[G,G]| = 2^d gives exactly the number of subspaces of F_2^d
  const std::map<std::string, std::size_t> expected{{"trivial", 1}, {"c2", 2}, {"c3", 1}, {"c4", 2},
                                                    {"c2xc2", 5},   {"s3", 2}, {"dic3", 2}, {"sg48_3", 1}};
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    const auto G = group(name);
    const auto subs = elementary_2_quotient_subgroups(G);
    CHECK(subs.size() == count);
    std::set<std::size_t> squares;
    for (std::size_t x = 0; x < G->order(); ++x) squares.insert(G->multiply(x, x));
    for (const auto& H : subs) {
      const std::set<std::size_t> members(H.members.begin(), H.members.end());
      CHECK(H.normal);
      CHECK(std::includes(members.begin(), members.end(), squares.begin(), squares.end()));
      CHECK(brute_closure(*G, members) == members);
      for (std::size_t g = 0; g < G->order(); ++g) {
        for (auto h : H.members) CHECK(members.count(G->multiply(G->multiply(g, h), G->inverse(g))));
      }
      const std::size_t index = G->order() / H.order();
      CHECK((index & (index - 1)) == 0);
    }
  }
}

TEST_CASE("subgroups and fusion") {
  const auto G = group("s3");
  const auto gen = G->index_of(Permutation::from_one_based(std::vector<std::int64_t>{2, 3, 1}));
  const auto members = subgroup_closure(*G, std::vector<std::size_t>{gen});
  CHECK(members.size() == 3);
  const auto H = subgroup_classes(G, members);
  CHECK(H.normal);
  CHECK(H.group->num_classes() == 3);
  for (std::size_t c = 0; c < H.group->num_classes(); ++c) {
    const auto e = H.embedding[H.group->classes()[c].representative];
    CHECK(H.fusion[c] == G->class_of(e));
  }
  CHECK_THROWS_AS(subgroup_classes(G, std::vector<std::size_t>{0, gen}), InputError);
}

TEST_CASE("enumeration bound") {
  const auto old = max_group_order();
  set_max_group_order(10);
  std::vector<Permutation> s4{Permutation::from_one_based(std::vector<std::int64_t>{2, 1, 3, 4}),
                              Permutation::from_one_based(std::vector<std::int64_t>{2, 3, 4, 1})};
  CHECK_THROWS_AS(GroupData::enumerate("s4", 4, s4), BoundError);
  set_max_group_order(old);
  CHECK(GroupData::enumerate("s4", 4, s4)->order() == 24);
  CHECK_THROWS_AS(GroupData::enumerate("bad", 3, s4), InputError);
}
