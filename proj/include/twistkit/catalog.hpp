#pragma once

#include "twistkit/chartab.hpp"
#include "twistkit/groups.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace twistkit {

struct Fingerprints {
  std::optional<std::size_t> order;
  std::optional<std::size_t> num_classes;
  std::optional<std::vector<std::int64_t>> abelianization;  // invariant factors, ascending
  std::optional<std::vector<std::int64_t>> degrees;         // character degrees, ascending
};

/// Abstract elements 0..size-1 with an explicit multiplication law; realized
/// through the left regular action.
struct Recipe {
  std::size_t size = 0;
  std::function<std::size_t(std::size_t, std::size_t)> multiply;
  std::vector<std::size_t> generators;
};

struct GroupRecord {
  std::string name;
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::optional<Recipe> recipe;
  Fingerprints expected;
  std::string gap_id;      // annotation only, never verified
  std::string notes;
  std::string provenance;
};

struct LoadedGroup {
  GroupRecord record;
  GroupPtr group;
  TablePtr table;
};

/// Permutation generators of a recipe's left regular representation.
std::vector<Permutation> regular_generators(const Recipe& recipe);

/// Builds the permutation group, computes its character table and checks every
/// fingerprint present in the record (FingerprintError names the first mismatch).
/// Records named dic3 or sg48_3 additionally get their structural assertions.
LoadedGroup realize(const GroupRecord& record);

Fingerprints compute_fingerprints(const GroupData& group, const CharacterTable& table);

std::vector<std::string> builtin_names();
GroupRecord builtin_record(const std::string& name);
LoadedGroup load_builtin(const std::string& name);

/// Group file (JSON): {"name", "degree", "generators": [[1-based images]],
/// "expected": {"order", "num_classes", "abelianization", "degrees"},
/// "annotations": {"gap_id", "notes"}}.
GroupRecord load_group_file(const std::string& path);
GroupRecord parse_group_record(const std::string& text, const std::string& source = "<string>");
/// Generators are written explicitly (recipes are expanded to their regular representation).
std::string group_record_to_json(const GroupRecord& record);

/// The characters singled out for the Dic3 locally-quadratic example.
struct Dic3Characters {
  std::size_t epsilon;  // the rational nontrivial linear character
  std::size_t theta;    // the degree-2 irreducible realizable over Q
  std::size_t chi;      // an order-4 linear character (smallest index)
};
/// Selects by defining properties and throws InternalError if a selection is not unique.
/// theta is the rational-valued degree-2 irreducible with Frobenius-Schur
/// indicator +1: Dic3 has two rational-valued degree-2 characters, the faithful
/// one being quaternionic.
Dic3Characters dic3_characters(const CharacterTable& table);

/// Faithful irreducible characters of a given degree.
std::vector<std::size_t> faithful_irreducibles(const CharacterTable& table, std::int64_t degree);

/// Coefficients (low degree first) of the degree-12 polynomial attached to the
/// sg48_3 record as documentation; nothing is computed from it.
std::vector<std::int64_t> sg48_3_field_polynomial();

struct FetchConfig {
  bool enabled = false;
  std::string base_url = "https://beta.lmfdb.org";
  int timeout_seconds = 20;
};

/// Downloads permutation generators for an abstract-group label (e.g. "48.3")
/// from `<base_url>/api/gps_groups/?label=<label>&_format=json`. The response is
/// expected as {"data": [{"label", "order", "transitive_degree", "perm_gens", ...}]}
/// where each generator is either a list of 1-based images or an integer rank of
/// the permutation in lexicographic order. The result is untrusted: realize() it.
GroupRecord fetch_remote_group(const std::string& label, const FetchConfig& config);

/// Permutation of {1..n} with the given lexicographic rank (0-based).
Permutation permutation_from_rank(std::size_t n, const Integer& rank);

}  // namespace twistkit
