#pragma once

#include "twistkit/chartab.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twistkit {

/// A semisimple representation up to isomorphism: multiplicities over the
/// irreducibles of a character table. Over characteristic zero the character
/// determines the isomorphism class, so every relation below is decided on
/// characters.
struct RepSpec {
  TablePtr table;
  std::vector<std::int64_t> mults;
  ClassFunction character;
  std::int64_t degree = 0;

  static RepSpec from_mults(TablePtr table, std::vector<std::int64_t> mults);
  /// The representation with this (genuine) character.
  static RepSpec from_character(TablePtr table, const ClassFunction& character);
  static RepSpec irreducible(TablePtr table, std::size_t index);

  RepSpec operator+(const RepSpec& o) const;
  /// chi (x) this, for a linear character chi given by its table index.
  RepSpec twisted_by(std::size_t linear_index) const;

  friend bool operator==(const RepSpec& a, const RepSpec& b) { return a.mults == b.mults; }
};

enum class Relation { quadratic, polyquadratic, locally_quadratic, locally_polyquadratic };

std::string relation_name(Relation r);
Relation relation_from_name(const std::string& name);  // accepts q, pq, lq, lpq and full names

/// One constituent pairing of a polyquadratic matching: irr_b = quad (x) irr_a.
struct MatchTriple {
  std::size_t irr_a = 0;
  std::size_t irr_b = 0;
  std::size_t quad = 0;
  friend bool operator==(const MatchTriple&, const MatchTriple&) = default;
};

struct TwistVerdict {
  Relation relation = Relation::quadratic;
  bool holds = false;

  // witnesses (when holds)
  std::optional<std::size_t> quadratic_witness;  // quadratic: table index of chi
  std::vector<MatchTriple> matching;             // polyquadratic
  std::vector<std::size_t> subgroup;             // polyquadratic: H as element indices
  std::vector<int> signs;                        // locally quadratic: epsilon_s per class

  // refutation (when !holds)
  std::string reason;
  std::optional<std::size_t> refuting_class;
  std::vector<std::size_t> refuting_classes;  // quadratic: one failing class per quadratic character
  std::optional<std::size_t> imbalanced_orbit;  // polyquadratic: smallest irreducible index of the orbit
  std::int64_t orbit_mult_a = 0;
  std::int64_t orbit_mult_b = 0;

  friend bool operator==(const TwistVerdict&, const TwistVerdict&) = default;
};

TwistVerdict is_quadratic_twist(const RepSpec& a, const RepSpec& b);
/// Orbit-balance decision with a greedy matching and the subgroup H = cap ker(chi_i).
TwistVerdict is_polyquadratic_twist(const RepSpec& a, const RepSpec& b);
/// Brute-force oracle: some normal H with G/H elementary abelian 2-group and
/// equal restrictions. Witness is the largest such H.
TwistVerdict polyquadratic_subgroup_oracle(const RepSpec& a, const RepSpec& b);
/// Per-class sign test on det(1 - rho(s)T); for degree 4 cross-checked against
/// equality of Sym^2 and Alt^2 characters (InternalError on disagreement).
TwistVerdict is_locally_quadratic_twist(const RepSpec& a, const RepSpec& b);
/// det(1 - rho(s^2)T) equality, cross-checked against Adams psi^2 equality.
TwistVerdict is_locally_polyquadratic_twist(const RepSpec& a, const RepSpec& b);

TwistVerdict decide(Relation r, const RepSpec& a, const RepSpec& b);

/// The Sym^2/Alt^2 criterion for degree 4 on its own.
bool sym2_alt2_criterion(const RepSpec& a, const RepSpec& b);
/// The Adams psi^2 criterion on its own.
bool adams2_criterion(const RepSpec& a, const RepSpec& b);

/// Substitutes the verdict's witness (or refutation) back into the defining
/// condition. True when the certificate checks out.
bool verify_verdict(const TwistVerdict& v, const RepSpec& a, const RepSpec& b);

/// det(b) / det(a); throws InputError unless every value is +1 or -1.
ClassFunction epsilon_character(const RepSpec& a, const RepSpec& b);

/// Quadratic-twist orbit id of every irreducible: the smallest index in its orbit.
std::vector<std::size_t> quadratic_twist_orbits(const CharacterTable& table);

/// All multiplicity vectors of total degree r, lexicographically ascending.
std::vector<std::vector<std::int64_t>> representations_of_degree(const CharacterTable& table, std::int64_t r);

enum class SearchMode { locally_quadratic_not_quadratic, locally_polyquadratic_not_polyquadratic };

std::string search_mode_name(SearchMode m);
SearchMode search_mode_from_name(const std::string& name);  // lq-not-q, lpq-not-pq

struct SearchResult {
  std::vector<std::pair<RepSpec, RepSpec>> pairs;
  std::size_t pairs_total = 0;     // unordered pairs of distinct degree-r representations
  std::size_t pairs_examined = 0;
  bool truncated = false;
};

/// Every unordered pair of distinct degree-r representations satisfying
/// "locally X but not X". In the quadratic mode pairs are reported once per
/// orbit under simultaneous twisting by quadratic characters (the smallest
/// representative). Results are sorted and independent of `workers`.
SearchResult search_counterexamples(const TablePtr& table, std::int64_t r, SearchMode mode,
                                    std::size_t pair_budget = 1'000'000, std::size_t workers = 1);

/// Smallest representative of {a, b} under simultaneous quadratic twists, as a
/// pair of multiplicity vectors with first <= second.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> canonical_quadratic_pair(const RepSpec& a,
                                                                                         const RepSpec& b);

}  // namespace twistkit
