#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistkit/cyclotomic.hpp"
#include "twistkit/error.hpp"

#include <complex>
#include <numbers>
#include <numeric>
#include <random>

using namespace twistkit;
using cd = std::complex<double>;

namespace {

// Numerical evaluation straight from the term list, independent of the power basis.
cd eval(const Cyclotomic& x) {
  cd s = 0;
  for (const auto& [c, e] : x.terms()) {
    s += c.get_d() * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(x.order()));
  }
  return s;
}

Cyclotomic random_element(std::mt19937_64& rng, std::int64_t n) {
  std::vector<std::pair<Rational, std::int64_t>> terms;
  for (int i = 0; i < 4; ++i) {
    Rational c(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1);
    c.canonicalize();
    terms.emplace_back(c, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)));
  }
  return Cyclotomic::from_terms(n, terms);
}

bool close(cd a, cd b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_CASE("euler phi against gcd counting") {
  for (std::int64_t n = 1; n <= 200; ++n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("product of Phi_d over d | n is x^n - 1") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    std::vector<long> prod{1};
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      const auto& phi = cyclotomic_polynomial(d);
      std::vector<long> out(prod.size() + phi.size() - 1, 0);
      for (std::size_t i = 0; i < prod.size(); ++i) {
        for (std::size_t j = 0; j < phi.size(); ++j) out[i + j] += prod[i] * phi[j];
      }
      prod = out;
    }
    std::vector<long> want(static_cast<std::size_t>(n) + 1, 0);
    want[0] = -1;
    want[static_cast<std::size_t>(n)] = 1;
    CHECK(prod == want);
  }
}

TEST_CASE("roots of unity") {
  for (std::int64_t n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 24}) {
    const auto z = Cyclotomic::root_of_unity(n);
    Cyclotomic p = 1;
    Cyclotomic sum;
    for (std::int64_t k = 0; k < n; ++k) {
      sum += p;
      p *= z;
    }
    CHECK(p == Cyclotomic(1));
    if (n > 1) CHECK(sum.is_zero());
  }
  const auto i = Cyclotomic::root_of_unity(12, 3);
  CHECK(i * i == Cyclotomic(-1));
  CHECK(i == Cyclotomic::root_of_unity(4));
  CHECK(Cyclotomic::root_of_unity(6, 2) == Cyclotomic::root_of_unity(3));
}

TEST_CASE("field operations agree with complex evaluation") {
  std::mt19937_64 rng(7);
  for (std::int64_t n : {3, 4, 5, 7, 8, 9, 12, 15, 16, 20, 24}) {
    for (int t = 0; t < 20; ++t) {
      const auto a = random_element(rng, n);
      const auto b = random_element(rng, n);
      CHECK(close(eval(a + b), eval(a) + eval(b)));
      CHECK(close(eval(a - b), eval(a) - eval(b)));
      CHECK(close(eval(a * b), eval(a) * eval(b)));
      CHECK(close(eval(a.conj()), std::conj(eval(a))));
      if (!b.is_zero()) {
        CHECK(close(eval(a / b), eval(a) / eval(b)));
        CHECK(b * b.inverse() == Cyclotomic(1));
      }
      const auto [re, im] = a.approx();
      CHECK(close(cd(re, im), eval(a)));
    }
  }
}

TEST_CASE("galois action is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (std::int64_t n : {5, 8, 12, 21}) {
    for (std::int64_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      const auto a = random_element(rng, n);
      const auto b = random_element(rng, n);
      CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
      CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
    }
  }
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(12).galois(2), InputError);
}

TEST_CASE("norm is the product of all conjugates") {
  std::mt19937_64 rng(3);
  for (std::int64_t n : {5, 7, 12}) {
    const auto a = random_element(rng, n);
    Cyclotomic p = 1;
    for (std::int64_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) == 1) p *= a.galois(k);
    }
    REQUIRE(p.is_rational());
    CHECK(p.rational_value() == a.norm());
  }
}

TEST_CASE("values from different orders compare and combine") {
  const auto i4 = Cyclotomic::root_of_unity(4);
  const auto w3 = Cyclotomic::root_of_unity(3);
  const auto s = i4 + w3;
  CHECK(s.order() == 12);
  CHECK(s - w3 == i4);
  CHECK(i4.lifted_to(12) == i4);
  CHECK_THROWS_AS(i4.lifted_to(6), InputError);
  CHECK(Cyclotomic(ratio(2, 4)) == Cyclotomic(ratio(1, 2)));
}

TEST_CASE("field of values and Q(i) membership") {
  std::mt19937_64 rng(5);
  const auto i = Cyclotomic::root_of_unity(4);
  // x in Q(i) exactly when Re x and Im x are rational
  auto in_gaussian = [&](const Cyclotomic& x) {
    const Cyclotomic re = (x + x.conj()) * Rational(ratio(1, 2));
    const Cyclotomic im = (x - x.conj()) * Rational(ratio(1, 2)) * i.inverse();
    return re.is_rational() && im.is_rational();
  };
  for (std::int64_t n : {4, 8, 12, 24}) {
    for (int t = 0; t < 30; ++t) {
      Cyclotomic x = random_element(rng, n);
      if (t % 3 == 0) x = Cyclotomic(Rational(t)) + Cyclotomic(Rational(t % 5)) * i;
      const std::vector<Cyclotomic> v{x};
      CHECK(field_of_values(v).contained_in_gaussian == in_gaussian(x));
    }
  }
  const std::vector<Cyclotomic> rat{Cyclotomic(3), Cyclotomic(ratio(-1, 2))};
  CHECK(field_of_values(rat).rational);
  const std::vector<Cyclotomic> w{Cyclotomic::root_of_unity(3)};
  CHECK_FALSE(field_of_values(w).contained_in_gaussian);
  // sqrt(-3) = 2 zeta_3 + 1
  const std::vector<Cyclotomic> s3{Cyclotomic::root_of_unity(3) * Rational(2) + Cyclotomic(1)};
  CHECK(field_of_values(s3).stabilizer == std::vector<std::int64_t>{1});
}

TEST_CASE("errors") {
  CHECK_THROWS(Cyclotomic(0) / Cyclotomic(0));
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(0), InputError);
  const auto old = max_cyclotomic_order();
  set_max_cyclotomic_order(100);
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(101), BoundError);
  set_max_cyclotomic_order(old);
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(3).rational_value(), InputError);
}

TEST_CASE("printing") {
  CHECK(Cyclotomic(ratio(-3, 6)).to_string() == "-1/2");
  CHECK(Cyclotomic::root_of_unity(4).to_string() == "z4");
  CHECK(Cyclotomic(0).to_string() == "0");
}
