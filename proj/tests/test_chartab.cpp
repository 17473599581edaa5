#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/catalog.hpp"
#include "twistkit/chartab.hpp"
#include "twistkit/error.hpp"

using namespace twistkit;

namespace {

LoadedGroup get(const std::string& name) { return load_builtin(name); }

ClassFunction values(const GroupPtr& g, std::vector<Cyclotomic> v, bool character = true) {
  return ClassFunction(g, std::move(v), character);
}

// polynomial product of (1 - lambda_i T)
std::vector<Cyclotomic> from_eigenvalues(const std::vector<Cyclotomic>& eig) {
  std::vector<Cyclotomic> p{Cyclotomic(1)};
  for (const auto& l : eig) {
    std::vector<Cyclotomic> q(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] -= p[i] * l;
    }
    p = q;
  }
  return p;
}

// Ind_H^G f (g) = (1/|H|) sum_{x in G} f(x g x^-1), f extended by zero off H
ClassFunction brute_induce(const ClassFunction& f, const SubgroupData& H) {
  const auto& G = *H.parent;
  std::vector<long> local(G.order(), -1);
  for (std::size_t i = 0; i < H.embedding.size(); ++i) local[H.embedding[i]] = static_cast<long>(i);
  std::vector<Cyclotomic> out(G.num_classes());
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    const auto g = G.classes()[c].representative;
    Cyclotomic s;
    for (std::size_t x = 0; x < G.order(); ++x) {
      const auto y = G.multiply(G.multiply(x, g), G.inverse(x));
      if (local[y] >= 0) s += f[H.group->class_of(static_cast<std::size_t>(local[y]))];
    }
    out[c] = s * Rational(ratio(1, static_cast<long>(H.order())));
  }
  return ClassFunction(H.parent, out, true);
}

}  // namespace

TEST_CASE("small tables by hand") {
  const auto s3 = get("s3");
  // classes of s3 are ordered by representative; degrees 1, 1, 2
  CHECK(s3.table->degrees() == std::vector<std::int64_t>{1, 1, 2});
  const auto c4 = get("c4");
  for (const auto& chi : c4.table->irreducibles()) {
    for (const auto& v : chi.values) {
      CHECK(v * v * v * v == Cyclotomic(1));
    }
  }
  const auto c3 = get("c3");
  CHECK(c3.table->size() == 3);
  CHECK(c3.table->irreducible(1)[1].order() == 3);
}

TEST_CASE("orthogonality computed in the test") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const auto lg = get(name);
    const auto& G = *lg.group;
    const auto& T = *lg.table;
    REQUIRE(T.size() == G.num_classes());
    for (std::size_t i = 0; i < T.size(); ++i) {
      for (std::size_t j = 0; j < T.size(); ++j) {
        Cyclotomic s;
        for (std::size_t c = 0; c < G.num_classes(); ++c) {
          s += T.irreducible(i)[c] * T.irreducible(j)[c].conj() * Rational(static_cast<long>(G.class_size(c)));
        }
        CHECK(s == Cyclotomic(i == j ? static_cast<long>(G.order()) : 0));
      }
    }
    std::int64_t sq = 0;
    for (auto d : T.degrees()) sq += d * d;
    CHECK(sq == static_cast<std::int64_t>(G.order()));
    CHECK(T.irreducible(0) == trivial_character(lg.group));
  }
}

TEST_CASE("regular character decomposes by degrees") {
  for (const char* name : {"s3", "dic3", "sg48_3"}) {
    const auto lg = get(name);
    const auto d = lg.table->decompose(regular_character(lg.group));
    CHECK(d.integers() == lg.table->degrees());
  }
}

TEST_CASE("characteristic polynomials") {
  const auto s3 = get("s3");
  const auto& T = *s3.table;
  const auto& G = *s3.group;
  const auto& rho = T.irreducible(2);
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    const auto cp = charpoly_at_class(rho, c);
    CHECK(cp.coeffs[1] == -rho[c]);
    const auto g = G.classes()[c].representative;
    // the 2-dim irreducible: eigenvalues 1,1 / 1,-1 / w,w^2 by element order
    std::vector<Cyclotomic> eig;
    if (G.element_order(g) == 1) eig = {Cyclotomic(1), Cyclotomic(1)};
    if (G.element_order(g) == 2) eig = {Cyclotomic(1), Cyclotomic(-1)};
    if (G.element_order(g) == 3) eig = {Cyclotomic::root_of_unity(3), Cyclotomic::root_of_unity(3, 2)};
    CHECK(cp.coeffs == from_eigenvalues(eig));
  }
  // sums of linear characters: eigenvalues are the values themselves
  const auto c4 = get("c4");
  const auto f = c4.table->irreducible(1) + c4.table->irreducible(2) + c4.table->irreducible(3);
  for (std::size_t c = 0; c < c4.group->num_classes(); ++c) {
    CHECK(charpoly_at_class(f, c).coeffs == from_eigenvalues({c4.table->irreducible(1)[c], c4.table->irreducible(2)[c],
                                                              c4.table->irreducible(3)[c]}));
  }
  CHECK(charpoly_at_class(f, 0).coeffs == from_eigenvalues({Cyclotomic(1), Cyclotomic(1), Cyclotomic(1)}));
  CHECK_THROWS_AS(charpoly_at_class(f - c4.table->irreducible(1), 0), InputError);
  const auto old = max_charpoly_degree();
  set_max_charpoly_degree(2);
  CHECK_THROWS_AS(charpoly_at_class(f, 1), BoundError);
  set_max_charpoly_degree(old);
}

TEST_CASE("symmetric and exterior squares") {
  for (const char* name : {"s3", "dic3", "sg48_3"}) {
    const auto lg = get(name);
    for (const auto& chi : lg.table->irreducibles()) {
      const auto d = chi.degree().get_si();
      CHECK(sym2(chi) + alt2(chi) == chi * chi);
      CHECK(sym2(chi) - alt2(chi) == adams2(chi));
      CHECK(sym2(chi).degree() == d * (d + 1) / 2);
      CHECK(alt2(chi).degree() == d * (d - 1) / 2);
      CHECK(lg.table->decompose(sym2(chi)).genuine);
      CHECK(lg.table->decompose(alt2(chi)).genuine);
      CHECK(adjoint0(chi) == chi * conj(chi) - trivial_character(lg.group));
      // det is the top exterior power; for degree 2 it equals alt2
      if (d == 2) CHECK(det_character(chi) == alt2(chi));
    }
  }
}

TEST_CASE("determinant of the regular character of C2") {
  const auto c2 = get("c2");
  CHECK(det_character(regular_character(c2.group)) == c2.table->irreducible(1));
}

TEST_CASE("Frobenius-Schur indicators") {
  const auto dic3 = get("dic3");
  std::vector<Rational> fs;
  for (std::size_t i = 0; i < dic3.table->size(); ++i) {
    if (dic3.table->degrees()[i] == 2) fs.push_back(frobenius_schur_indicator(dic3.table->irreducible(i)));
  }
  std::sort(fs.begin(), fs.end());
  CHECK(fs == std::vector<Rational>{Rational(-1), Rational(1)});
  const auto s3 = get("s3");
  CHECK(frobenius_schur_indicator(s3.table->irreducible(2)) == 1);
}

TEST_CASE("induction matches the averaging formula and Frobenius reciprocity") {
  for (const char* name : {"s3", "dic3", "sg48_3"}) {
    const auto lg = get(name);
    const auto& G = lg.group;
    // a cyclic subgroup generated by an element of maximal order, and its own table
    std::size_t best = 0;
    for (std::size_t e = 0; e < G->order(); ++e) {
      if (G->element_order(e) > G->element_order(best)) best = e;
    }
    const auto H = subgroup_classes(G, subgroup_closure(*G, std::vector<std::size_t>{best}));
    const auto TH = character_table(H.group);
    for (const auto& phi : TH->irreducibles()) {
      const auto ind = induce(phi, H);
      CHECK(ind == brute_induce(phi, H));
      CHECK(ind.degree() == phi.degree() * static_cast<long>(G->order() / H.order()));
      for (const auto& chi : lg.table->irreducibles()) {
        CHECK(inner_product_value(ind, chi) == inner_product_value(phi, restrict_to(chi, H)));
      }
    }
  }
}

TEST_CASE("kernels") {
  const auto sg = get("sg48_3");
  std::size_t faithful = 0;
  for (const auto& chi : sg.table->irreducibles()) faithful += is_faithful(chi);
  CHECK(faithful == 4);
  CHECK(kernel_elements(trivial_character(sg.group)).size() == 48);
}

TEST_CASE("class function algebra errors") {
  const auto a = get("s3");
  const auto b = get("c3");
  CHECK_THROWS_AS(a.table->irreducible(1) + b.table->irreducible(1), InputError);
  CHECK_THROWS_AS(values(a.group, {Cyclotomic(1)}), InputError);
  CHECK_THROWS_AS(a.table->compose(std::vector<std::int64_t>{1, 0}), InputError);
  const auto half = values(a.group, {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)}, false);
  CHECK_FALSE(a.table->decompose(half).integral);
}
