#pragma once

#include "twistkit/chartab.hpp"
#include "twistkit/twists.hpp"
#include "twistkit/weil.hpp"

#include <json.hpp>

namespace twistkit {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

/// {"n": order, "terms": [[num, den, exp], ...]}: sum (num/den) zeta_n^exp.
Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

Json class_function_to_json(const ClassFunction& f);
ClassFunction class_function_from_json(const Json& j, const GroupPtr& group);

/// {"group", "order", "generators", "classes": [{"size", "order", "representative": word}],
///  "irreducibles": [[cyclotomic, ...], ...]}. Words are lists of 1-based generator indices.
Json chartab_to_json(const CharacterTable& table);
/// Locates every class through its representative word, reorders columns to the
/// group's own class order, checks class sizes and verifies orthogonality.
/// Rows keep the file's order. InputError on anything inconsistent.
TablePtr chartab_from_json(const Json& j, const GroupPtr& group);

Json repspec_to_json(const RepSpec& r);
RepSpec repspec_from_json(const Json& j, const TablePtr& table);
/// Multiplicities written as "1,0,2" or as a JSON array.
std::vector<std::int64_t> parse_mults(const std::string& text);

Json verdict_to_json(const TwistVerdict& v);
TwistVerdict verdict_from_json(const Json& j);

Json weil_to_json(const WeilPolynomial& p);
WeilPolynomial weil_from_json(const Json& j);
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json classification_to_json(const TwistClassification& c);
TwistClassification classification_from_json(const Json& j);

Json search_result_to_json(const SearchResult& r, const std::string& group, std::int64_t degree, SearchMode mode);

}  // namespace twistkit
