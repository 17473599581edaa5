#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace twistkit {

/// A permutation of {0, ..., degree-1}. Files and the CLI use 1-based images;
/// conversion happens at the I/O boundary.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);  // validated bijection
  static Permutation identity(std::size_t degree);
  static Permutation from_one_based(std::span<const std::int64_t> images);

  std::size_t degree() const { return images_.size(); }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }

  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  bool is_identity() const;
  std::vector<std::int64_t> one_based() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

std::size_t max_group_order();
void set_max_group_order(std::size_t bound);

struct ConjugacyClass {
  std::size_t representative = 0;     // element index (smallest member)
  std::vector<std::size_t> members;   // ascending element indices
  std::size_t size() const { return members.size(); }
};

/// A finite permutation group with all elements, classes and power maps enumerated.
/// Immutable once built; share it through std::shared_ptr<const GroupData>.
class GroupData {
 public:
  /// Breadth-first closure of the generators, then sorts elements
  /// lexicographically by image vector. Throws BoundError past max_group_order().
  static std::shared_ptr<const GroupData> enumerate(std::string name, std::size_t degree,
                                                   std::vector<Permutation> generators);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::size_t identity_index() const { return 0; }

  /// Index of a permutation, or npos when it is not in the group.
  std::size_t index_of(const Permutation& p) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, std::int64_t k) const;
  std::size_t element_order(std::size_t a) const { return element_order_[a]; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t num_classes() const { return classes_.size(); }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  std::size_t class_element_order(std::size_t c) const { return element_order_[classes_[c].representative]; }
  /// Class of inverses of class c.
  std::size_t inverse_class(std::size_t c) const;

  std::int64_t exponent() const { return exponent_; }
  /// Class of s^k for s in class c; any integer k (reduced mod the exponent).
  std::size_t power_class(std::size_t c, std::int64_t k) const;
  /// power_maps()[k][c] for 0 <= k <= exponent.
  const std::vector<std::vector<std::size_t>>& power_maps() const { return power_maps_; }

  /// Shortest word in the generators (1-based generator indices, applied left to right
  /// as a product g_{w1} * g_{w2} * ...) evaluating to the element.
  const std::vector<std::size_t>& word(std::size_t element) const { return words_[element]; }

  bool is_abelian() const;

 private:
  GroupData() = default;

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
  std::vector<std::uint32_t> table_;  // full multiplication table when small enough
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::int64_t exponent_ = 1;
  std::vector<std::vector<std::size_t>> power_maps_;
};

using GroupPtr = std::shared_ptr<const GroupData>;

/// power_maps[2]: class of s -> class of s*s.
std::vector<std::size_t> squaring_class_map(const GroupData& group);

/// A subgroup, realized as a permutation group in its own right, plus its
/// class fusion into the parent.
struct SubgroupData {
  GroupPtr parent;
  std::vector<std::size_t> members;  // ascending parent element indices
  bool normal = false;
  GroupPtr group;                    // the subgroup as its own GroupData
  std::vector<std::size_t> fusion;   // subgroup class -> parent class
  std::vector<std::size_t> embedding;  // subgroup element index -> parent element index

  std::size_t order() const { return members.size(); }
};

/// Builds class data for a subgroup given by parent element indices.
/// Throws InputError if the set is not closed under multiplication.
SubgroupData subgroup_classes(const GroupPtr& group, std::vector<std::size_t> members);

/// Smallest subgroup containing the given elements.
std::vector<std::size_t> subgroup_closure(const GroupData& group, std::span<const std::size_t> generators);

/// Subgroup generated by all squares and commutators.
std::vector<std::size_t> squares_and_commutators(const GroupData& group);
std::vector<std::size_t> derived_subgroup(const GroupData& group);

/// Every normal subgroup H with G/H elementary abelian 2-group, i.e. every H
/// containing squares_and_commutators(G). Sorted by decreasing order, then by members.
std::vector<SubgroupData> elementary_2_quotient_subgroups(const GroupPtr& group);

/// Invariant factors of G/[G,G], ascending with each dividing the next; empty for perfect groups.
std::vector<std::int64_t> abelianization_invariants(const GroupData& group);

}  // namespace twistkit
