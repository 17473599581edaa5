#pragma once

#include "twistkit/cyclotomic.hpp"
#include "twistkit/groups.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistkit {

/// A class function: one cyclotomic value per conjugacy class of `group`.
///
/// `character` records whether the function is known to be the character of a
/// genuine representation. The flag is propagated conservatively by the algebra
/// below; virtual class functions (differences, Adams operations) clear it.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;
  bool character = false;

  ClassFunction() = default;
  ClassFunction(GroupPtr g, std::vector<Cyclotomic> v, bool is_character = false);

  const Cyclotomic& operator[](std::size_t c) const { return values[c]; }
  std::size_t size() const { return values.size(); }
  /// Value at the identity class; an integer for characters.
  Integer degree() const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  /// Pointwise product (tensor product of representations).
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(long k, const ClassFunction& f);
  friend ClassFunction operator-(const ClassFunction& f);
  /// Same group and equal values; the character flag is ignored.
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

ClassFunction trivial_character(const GroupPtr& group);
ClassFunction regular_character(const GroupPtr& group);
ClassFunction zero_class_function(const GroupPtr& group);

enum class CfOp { tensor, sym2, alt2, adams2, conj, adjoint0 };

/// Pointwise class-function algebra:
///   sym2(f)(s)  = (f(s)^2 + f(s^2)) / 2
///   alt2(f)(s)  = (f(s)^2 - f(s^2)) / 2
///   adams2(f)(s) = f(s^2)
///   adjoint0(f) = f * conj(f) - 1
/// `g` is only read for CfOp::tensor.
ClassFunction cf_algebra(CfOp op, const ClassFunction& f, const ClassFunction* g = nullptr);
ClassFunction tensor(const ClassFunction& f, const ClassFunction& g);
ClassFunction sym2(const ClassFunction& f);
ClassFunction alt2(const ClassFunction& f);
ClassFunction adams2(const ClassFunction& f);
ClassFunction conj(const ClassFunction& f);
ClassFunction adjoint0(const ClassFunction& f);

/// (1/|G|) sum_c |c| f(c) conj(g(c)), exactly.
Cyclotomic inner_product_value(const ClassFunction& f, const ClassFunction& g);
/// As inner_product_value but asserts the result is rational.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Coefficients a_0 = 1, a_1, ..., a_r of det(1 - rho(s) T).
struct CharPoly {
  std::vector<Cyclotomic> coeffs;
  std::size_t degree() const { return coeffs.size() - 1; }
  /// Coefficients of det(1 - sign * rho(s) T): a_k -> sign^k a_k.
  CharPoly twisted(int sign) const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// det(1 - rho(s)T) at the class of s, from the power sums p_k = f(s^k) by
/// Newton's identities. `r` defaults to f's degree.
CharPoly charpoly_at_class(const ClassFunction& f, std::size_t class_index, std::optional<std::size_t> r = {});
std::size_t max_charpoly_degree();
void set_max_charpoly_degree(std::size_t bound);

/// Class function of the determinant: c -> product of the eigenvalues at c.
ClassFunction det_character(const ClassFunction& f);

/// Ind_H^G: (|G| / (|H| |c|)) * sum over H-classes h fusing into c of |h| f(h).
ClassFunction induce(const ClassFunction& f, const SubgroupData& sub);
ClassFunction restrict_to(const ClassFunction& f, const SubgroupData& sub);

/// Frobenius-Schur indicator (1/|G|) sum f(s^2).
Rational frobenius_schur_indicator(const ClassFunction& f);

/// Classes where f(s) = f(1): the kernel of a genuine character, as element indices.
std::vector<std::size_t> kernel_elements(const ClassFunction& f);
bool is_faithful(const ClassFunction& f);

struct Decomposition {
  std::vector<Cyclotomic> multiplicities;  // <f, chi_i>; rational unless f is a general class function
  bool integral = true;                    // every multiplicity is an integer
  bool genuine = true;                     // integral and non-negative
  /// Requires integral.
  std::vector<std::int64_t> integers() const;
};

class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles);

  const GroupPtr& group() const { return group_; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  const ClassFunction& irreducible(std::size_t i) const { return irreducibles_[i]; }
  std::size_t size() const { return irreducibles_.size(); }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  /// Index of the irreducible with exactly these values.
  std::optional<std::size_t> find(const ClassFunction& f) const;

  /// Multiplicities <f, chi_i>; the reconstruction sum m_i chi_i = f is checked.
  Decomposition decompose(const ClassFunction& f) const;

  /// Character of sum m_i chi_i.
  ClassFunction compose(std::span<const std::int64_t> multiplicities) const;

  /// Indices of linear characters with values in {+1, -1} (trivial included).
  const std::vector<std::size_t>& quadratic_indices() const { return quadratic_; }

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::int64_t> degrees_;
  std::vector<std::size_t> quadratic_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Full character table by Dixon's modular method, exactly verified.
TablePtr character_table(const GroupPtr& group);

/// Throws InternalError unless row and column orthogonality hold exactly,
/// the table is square and sum deg^2 = |G|.
void verify_character_table(const CharacterTable& table);

std::vector<ClassFunction> quadratic_characters(const CharacterTable& table);

}  // namespace twistkit
