#pragma once

#include "twistkit/cyclotomic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistkit {

/// Integer polynomial, coefficient of T^k at index k.
using IntPoly = std::vector<Integer>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// p(-T).
IntPoly poly_negate_variable(const IntPoly& p);
/// p(T^k).
IntPoly poly_substitute_power(const IntPoly& p, unsigned k);
void poly_trim(IntPoly& p);
std::string poly_to_string(const IntPoly& p, const std::string& var = "T");

/// Determinant of a square integer matrix (Bareiss fraction-free elimination).
Integer integer_determinant(std::vector<std::vector<Integer>> m);
/// Sylvester-matrix resultant of two integer polynomials in one variable.
Integer resultant(const IntPoly& f, const IntPoly& g);
/// Res_Z(f(Z), Z^k - T) as a polynomial in T, from exact Sylvester
/// determinants at deg(f)+1 integer points and exact interpolation.
IntPoly resultant_with_power(const IntPoly& f, unsigned k);

/// P(T) = sum a_k T^k, a_0 = 1, degree 2g, with a_{2g-k} = q^{g-k} a_k.
/// q = 1 is allowed for normalized (unitary) polynomials.
class WeilPolynomial {
 public:
  WeilPolynomial() = default;
  /// Validates a_0 = 1, the length 2g+1, the functional equation and, for q > 1,
  /// a_1^2 <= 4 g^2 q. `validate = false` keeps a raw polynomial.
  WeilPolynomial(int g, Integer q, IntPoly coeffs, bool validate = true);

  int g() const { return g_; }
  const Integer& q() const { return q_; }
  const IntPoly& coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_[k]; }
  /// -a_1: the trace of Frobenius.
  Integer trace() const { return -coeffs_[1]; }

  /// P(-T): the quadratic twist by the nontrivial character of the residue extension.
  WeilPolynomial negated() const;

  /// Fails with InputError describing the first violated condition. The
  /// archimedean bound on a_1 is skipped when `weil_bound` is false.
  static void validate(int g, const Integer& q, const IntPoly& coeffs, bool weil_bound = true);

  friend bool operator==(const WeilPolynomial&, const WeilPolynomial&) = default;

  std::string to_string() const;

 private:
  int g_ = 0;
  Integer q_ = 1;
  IntPoly coeffs_{1};
};

/// The polynomial whose inverse roots are the k-th powers of P's, over q^k:
/// reverse of Res_Z(Z^{2g} P(1/Z), Z^k - T), normalized to constant term 1.
WeilPolynomial base_change(const WeilPolynomial& p, unsigned k);

struct TwistClassification {
  WeilPolynomial first;
  WeilPolynomial second;
  bool isogenous = false;      // P = P'
  bool quadratic_twist = false;  // P'(T) = P(eps T)
  bool polyquadratic_twist = false;  // equal degree-2 base changes
  std::optional<int> sign;     // eps when quadratic_twist

  friend bool operator==(const TwistClassification&, const TwistClassification&) = default;
};

TwistClassification classify_pair(const WeilPolynomial& p, const WeilPolynomial& p2);

/// Trace-zero criterion for g = 2: polyquadratic and both traces zero should
/// force quadratic. `ok()` is false exactly on a falsifying pair.
struct TraceZeroCheck {
  bool hypothesis = false;  // polyquadratic and a_1 = a'_1 = 0
  bool conclusion = false;  // quadratic twist
  bool ok() const { return !hypothesis || conclusion; }
};
TraceZeroCheck trace_zero_check(const WeilPolynomial& p, const WeilPolynomial& p2);

/// Supersingular normalized polynomials of abelian surfaces and their images
/// under P -> Res_Z(P(Z), Z^2 - T).
struct PhiReport {
  std::vector<IntPoly> domain;        // the five normalized polynomials
  std::vector<IntPoly> images;        // computed
  std::vector<IntPoly> printed;       // the published target list, same order
  std::vector<bool> matches_printed;  // images[i] == printed[i]
  bool pairwise_distinct = false;
  bool agrees_with_base_change = false;  // images[i] == base_change(domain[i], 2)
  std::size_t match_count() const;
};
PhiReport supersingular_phi();
IntPoly phi_map(const IntPoly& p);

/// Parses `g q a_0 a_1 ... a_{2g}`.
WeilPolynomial parse_weil_line(const std::string& line);
/// Parses an LMFDB isogeny-class label `g.q.c1_c2_..._cg` (coefficients a_1..a_g,
/// each written in base 26 with letters a=0 .. z=25, a leading extra 'a' meaning negative).
WeilPolynomial parse_lmfdb_label(const std::string& label);
/// The base-26 encoding used by parse_lmfdb_label.
std::string lmfdb_label(const WeilPolynomial& p);

}  // namespace twistkit
