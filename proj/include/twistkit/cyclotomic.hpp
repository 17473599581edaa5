#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace twistkit {

using Rational = mpq_class;
using Integer = mpz_class;

/// Largest root-of-unity order accepted by arithmetic (default 10^4).
std::int64_t max_cyclotomic_order();
void set_max_cyclotomic_order(std::int64_t bound);

std::int64_t euler_phi(std::int64_t n);

/// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
/// Results are cached; the cache is guarded and safe to use from many threads.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t n);

/// An exact element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1).
///
/// Values never descend to a smaller field on their own: the order is whatever
/// the element was built with, and binary operations lift both operands to the
/// lcm of their orders. Equality compares after such a lift.
class Cyclotomic {
 public:
  Cyclotomic();  // zero in Q(zeta_1) = Q
  explicit Cyclotomic(const Rational& r, std::int64_t order = 1);
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT: integers convert implicitly

  /// zeta_n^k.
  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k = 1);
  /// Sum of c_j zeta_n^{e_j}; exponents may be any integers.
  static Cyclotomic from_terms(std::int64_t n, std::span<const std::pair<Rational, std::int64_t>> terms);
  /// Takes a raw power-basis vector of length phi(n).
  static Cyclotomic from_coeffs(std::int64_t n, std::vector<Rational> coeffs);

  std::int64_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Requires is_rational().
  Rational rational_value() const;
  bool is_integer() const;

  /// Re-expresses the element in Q(zeta_m); m must be a multiple of order().
  Cyclotomic lifted_to(std::int64_t m) const;
  /// Galois automorphism zeta_n -> zeta_n^k, gcd(k, n) = 1.
  Cyclotomic galois(std::int64_t k) const;
  Cyclotomic conj() const { return galois(order_ - 1); }
  Cyclotomic inverse() const;
  /// Product of all Galois conjugates; always rational.
  Rational norm() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Terms (num/den, exponent) with nonzero coefficient, exponents ascending.
  std::vector<std::pair<Rational, std::int64_t>> terms() const;
  /// Human readable, e.g. "-1 + 2*z12^3".
  std::string to_string() const;
  /// Floating-point embedding zeta_n = exp(2 pi i / n); debug output only.
  std::pair<double, double> approx() const;

 private:
  std::int64_t order_ = 1;
  std::vector<Rational> coeffs_;
};

/// Field-of-values summary of a list of cyclotomic numbers.
struct FieldOfValues {
  std::int64_t order = 1;                 // common order the values were lifted to
  std::vector<std::int64_t> stabilizer;   // k in (Z/nZ)^x fixing every value, ascending
  bool contained_in_gaussian = false;     // every value lies in Q(i)
  bool rational = false;                  // every value lies in Q
};

FieldOfValues field_of_values(std::span<const Cyclotomic> values);

std::int64_t lcm_order(std::int64_t a, std::int64_t b);

/// num/den in canonical form (mpq_class's two-argument constructor does not reduce).
inline Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace twistkit
