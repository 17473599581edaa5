#include "twistkit/twists.hpp"

#include "twistkit/error.hpp"

#include <algorithm>
#include <map>

namespace twistkit {

namespace {

void same_table(const RepSpec& a, const RepSpec& b) {
  if (a.table.get() != b.table.get()) throw InputError("representations are defined over different groups");
}

// G-classes contained in a normal subgroup given by sorted element indices.
std::vector<std::size_t> classes_in(const GroupData& G, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    if (std::binary_search(members.begin(), members.end(), G.classes()[c].representative)) out.push_back(c);
  }
  return out;
}

bool agree_on(const ClassFunction& f, const ClassFunction& g, const std::vector<std::size_t>& classes) {
  for (std::size_t c : classes) {
    if (!(f[c] == g[c])) return false;
  }
  return true;
}

std::vector<std::size_t> expand(const std::vector<std::int64_t>& mults) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    for (std::int64_t k = 0; k < mults[i]; ++k) out.push_back(i);
  }
  return out;
}

// Smallest quadratic character index q with q (x) irr_i = irr_j.
std::optional<std::size_t> relating_quadratic(const CharacterTable& t, std::size_t i, std::size_t j) {
  for (std::size_t q : t.quadratic_indices()) {
    if (t.irreducible(q) * t.irreducible(i) == t.irreducible(j)) return q;
  }
  return std::nullopt;
}

std::vector<std::size_t> intersect_kernels(const CharacterTable& t, const std::vector<MatchTriple>& m) {
  const auto& G = *t.group();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < G.order(); ++x) {
    bool in = true;
    for (const auto& tr : m) {
      if (!(t.irreducible(tr.quad)[G.class_of(x)] == Cyclotomic(1L))) {
        in = false;
        break;
      }
    }
    if (in) out.push_back(x);
  }
  return out;
}

}  // namespace

RepSpec RepSpec::from_mults(TablePtr table, std::vector<std::int64_t> mults) {
  if (mults.size() != table->size()) {
    throw InputError("multiplicity vector has " + std::to_string(mults.size()) + " entries; the table of '" +
                     table->group()->name() + "' has " + std::to_string(table->size()) + " irreducibles");
  }
  RepSpec r;
  r.degree = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i] < 0) throw InputError("multiplicities must be non-negative");
    r.degree += mults[i] * table->degrees()[i];
  }
  r.character = table->compose(mults);
  r.mults = std::move(mults);
  r.table = std::move(table);
  return r;
}

RepSpec RepSpec::from_character(TablePtr table, const ClassFunction& character) {
  const Decomposition d = table->decompose(character);
  if (!d.genuine) throw InputError("class function is not the character of a representation");
  return from_mults(std::move(table), d.integers());
}

RepSpec RepSpec::irreducible(TablePtr table, std::size_t index) {
  std::vector<std::int64_t> m(table->size(), 0);
  m.at(index) = 1;
  return from_mults(std::move(table), std::move(m));
}

RepSpec RepSpec::operator+(const RepSpec& o) const {
  same_table(*this, o);
  std::vector<std::int64_t> m = mults;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += o.mults[i];
  return from_mults(table, std::move(m));
}

RepSpec RepSpec::twisted_by(std::size_t linear_index) const {
  if (table->degrees().at(linear_index) != 1) throw InputError("twisting character must be linear");
  return from_character(table, table->irreducible(linear_index) * character);
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::quadratic:
      return "quadratic";
    case Relation::polyquadratic:
      return "polyquadratic";
    case Relation::locally_quadratic:
      return "locally_quadratic";
    case Relation::locally_polyquadratic:
      return "locally_polyquadratic";
  }
  return "?";
}

Relation relation_from_name(const std::string& name) {
  if (name == "q" || name == "quadratic") return Relation::quadratic;
  if (name == "pq" || name == "polyquadratic") return Relation::polyquadratic;
  if (name == "lq" || name == "locally_quadratic") return Relation::locally_quadratic;
  if (name == "lpq" || name == "locally_polyquadratic") return Relation::locally_polyquadratic;
  throw InputError("unknown relation '" + name + "'");
}

TwistVerdict is_quadratic_twist(const RepSpec& a, const RepSpec& b) {
  same_table(a, b);
  TwistVerdict v;
  v.relation = Relation::quadratic;
  if (a.degree != b.degree) {
    v.reason = "degree mismatch";
    v.refuting_class = 0;
    return v;
  }
  const auto& t = *a.table;
  for (std::size_t q : t.quadratic_indices()) {
    const ClassFunction twisted = t.irreducible(q) * a.character;
    std::optional<std::size_t> bad;
    for (std::size_t c = 0; c < twisted.size() && !bad; ++c) {
      if (!(twisted[c] == b.character[c])) bad = c;
    }
    if (!bad) {
      v.holds = true;
      v.quadratic_witness = q;
      v.refuting_classes.clear();
      return v;
    }
    v.refuting_classes.push_back(*bad);
  }
  v.reason = "no quadratic character twists one character into the other";
  return v;
}

std::vector<std::size_t> quadratic_twist_orbits(const CharacterTable& t) {
  std::vector<std::size_t> orbit(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) orbit[i] = i;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t q : t.quadratic_indices()) {
      const auto j = t.find(t.irreducible(q) * t.irreducible(i));
      if (!j) throw InternalError("twist of an irreducible by a linear character is not irreducible");
      orbit[i] = std::min(orbit[i], *j);
    }
  }
  return orbit;
}

TwistVerdict is_polyquadratic_twist(const RepSpec& a, const RepSpec& b) {
  same_table(a, b);
  const auto& t = *a.table;
  TwistVerdict v;
  v.relation = Relation::polyquadratic;
  const auto orbit = quadratic_twist_orbits(t);
  std::map<std::size_t, std::pair<std::int64_t, std::int64_t>> totals;
  for (std::size_t i = 0; i < t.size(); ++i) {
    totals[orbit[i]].first += a.mults[i];
    totals[orbit[i]].second += b.mults[i];
  }
  for (const auto& [o, ab] : totals) {
    if (ab.first != ab.second) {
      v.reason = "quadratic-twist orbit multiplicities differ";
      v.imbalanced_orbit = o;
      v.orbit_mult_a = ab.first;
      v.orbit_mult_b = ab.second;
      return v;
    }
  }
  // within each orbit, pair constituents lowest index first
  std::map<std::size_t, std::vector<std::size_t>> pending_b;
  for (std::size_t j : expand(b.mults)) pending_b[orbit[j]].push_back(j);
  std::map<std::size_t, std::size_t> cursor;
  for (std::size_t i : expand(a.mults)) {
    const std::size_t o = orbit[i];
    const std::size_t j = pending_b[o][cursor[o]++];
    const auto q = relating_quadratic(t, i, j);
    if (!q) throw InternalError("irreducibles in one orbit are not related by a quadratic character");
    v.matching.push_back({i, j, *q});
  }
  v.holds = true;
  v.subgroup = intersect_kernels(t, v.matching);
  if (!agree_on(a.character, b.character, classes_in(*t.group(), v.subgroup))) {
    throw InternalError("restrictions to the intersection of kernels differ for a polyquadratic matching");
  }
  return v;
}

TwistVerdict polyquadratic_subgroup_oracle(const RepSpec& a, const RepSpec& b) {
  same_table(a, b);
  TwistVerdict v;
  v.relation = Relation::polyquadratic;
  const auto& G = *a.table->group();
  // list is sorted by decreasing order, so the first hit is a largest H
  for (const auto& H : elementary_2_quotient_subgroups(a.table->group())) {
    if (agree_on(a.character, b.character, classes_in(G, H.members))) {
      v.holds = true;
      v.subgroup = H.members;
      return v;
    }
  }
  // the smallest candidate already fails; name a class inside it
  const auto all = elementary_2_quotient_subgroups(a.table->group());
  for (std::size_t c : classes_in(G, all.back().members)) {
    if (!(a.character[c] == b.character[c])) {
      v.refuting_class = c;
      break;
    }
  }
  v.reason = "restrictions differ on every normal subgroup with elementary abelian 2-quotient";
  return v;
}

bool sym2_alt2_criterion(const RepSpec& a, const RepSpec& b) {
  same_table(a, b);
  return sym2(a.character) == sym2(b.character) && alt2(a.character) == alt2(b.character);
}

bool adams2_criterion(const RepSpec& a, const RepSpec& b) {
  same_table(a, b);
  return adams2(a.character) == adams2(b.character);
}

TwistVerdict is_locally_quadratic_twist(const RepSpec& a, const RepSpec& b) {
  same_table(a, b);
  TwistVerdict v;
  v.relation = Relation::locally_quadratic;
  if (a.degree != b.degree) {
    v.reason = "degree mismatch";
    v.refuting_class = 0;
    return v;
  }
  const std::size_t k = a.character.size();
  std::vector<int> signs(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    const CharPoly pa = charpoly_at_class(a.character, c);
    const CharPoly pb = charpoly_at_class(b.character, c);
    if (pb == pa) {
      signs[c] = 1;
    } else if (pb == pa.twisted(-1)) {
      signs[c] = -1;
    } else {
      v.refuting_class = c;
      v.reason = "characteristic polynomials differ up to sign at a class";
      break;
    }
  }
  v.holds = !v.refuting_class.has_value();
  if (v.holds) v.signs = std::move(signs);
  if (a.degree == 4 && sym2_alt2_criterion(a, b) != v.holds) {
    throw InternalError("locally quadratic: characteristic-polynomial test and Sym2/Alt2 criterion disagree");
  }
  return v;
}

TwistVerdict is_locally_polyquadratic_twist(const RepSpec& a, const RepSpec& b) {
  same_table(a, b);
  TwistVerdict v;
  v.relation = Relation::locally_polyquadratic;
  if (a.degree != b.degree) {
    v.reason = "degree mismatch";
    v.refuting_class = 0;
    return v;
  }
  const auto& G = *a.table->group();
  for (std::size_t c = 0; c < a.character.size(); ++c) {
    const std::size_t sq = G.power_class(c, 2);
    if (!(charpoly_at_class(a.character, sq) == charpoly_at_class(b.character, sq))) {
      v.refuting_class = c;
      v.reason = "characteristic polynomials at s^2 differ";
      break;
    }
  }
  v.holds = !v.refuting_class.has_value();
  if (adams2_criterion(a, b) != v.holds) {
    throw InternalError("locally polyquadratic: characteristic-polynomial test and Adams criterion disagree");
  }
  return v;
}

TwistVerdict decide(Relation r, const RepSpec& a, const RepSpec& b) {
  switch (r) {
    case Relation::quadratic:
      return is_quadratic_twist(a, b);
    case Relation::polyquadratic:
      return is_polyquadratic_twist(a, b);
    case Relation::locally_quadratic:
      return is_locally_quadratic_twist(a, b);
    case Relation::locally_polyquadratic:
      return is_locally_polyquadratic_twist(a, b);
  }
  throw InputError("unknown relation");
}

bool verify_verdict(const TwistVerdict& v, const RepSpec& a, const RepSpec& b) {
  same_table(a, b);
  const auto& t = *a.table;
  const auto& G = *t.group();
  const auto is_quadratic = [&](std::size_t q) {
    const auto& qi = t.quadratic_indices();
    return std::find(qi.begin(), qi.end(), q) != qi.end();
  };
  switch (v.relation) {
    case Relation::quadratic:
      if (v.holds) {
        return v.quadratic_witness && is_quadratic(*v.quadratic_witness) &&
               t.irreducible(*v.quadratic_witness) * a.character == b.character;
      }
      if (a.degree != b.degree) return v.refuting_class == 0u;
      if (v.refuting_classes.size() != t.quadratic_indices().size()) return false;
      for (std::size_t n = 0; n < v.refuting_classes.size(); ++n) {
        const std::size_t c = v.refuting_classes[n];
        if (t.irreducible(t.quadratic_indices()[n])[c] * a.character[c] == b.character[c]) return false;
      }
      return true;

    case Relation::polyquadratic: {
      if (!v.holds) {
        if (v.imbalanced_orbit) {
          const auto orbit = quadratic_twist_orbits(t);
          std::int64_t sa = 0, sb = 0;
          for (std::size_t i = 0; i < t.size(); ++i) {
            if (orbit[i] == *v.imbalanced_orbit) {
              sa += a.mults[i];
              sb += b.mults[i];
            }
          }
          return sa != sb && sa == v.orbit_mult_a && sb == v.orbit_mult_b;
        }
        // subgroup oracle refutation: differs inside the smallest candidate
        if (!v.refuting_class) return false;
        const auto N = squares_and_commutators(G);
        return !(a.character[*v.refuting_class] == b.character[*v.refuting_class]) &&
               std::binary_search(N.begin(), N.end(), G.classes()[*v.refuting_class].representative);
      }
      if (!v.matching.empty() || a.degree == 0) {
        std::vector<std::size_t> ma, mb;
        for (const auto& tr : v.matching) {
          if (!is_quadratic(tr.quad)) return false;
          if (!(t.irreducible(tr.quad) * t.irreducible(tr.irr_a) == t.irreducible(tr.irr_b))) return false;
          ma.push_back(tr.irr_a);
          mb.push_back(tr.irr_b);
        }
        std::sort(ma.begin(), ma.end());
        std::sort(mb.begin(), mb.end());
        if (ma != expand(a.mults) || mb != expand(b.mults)) return false;
        if (v.subgroup != intersect_kernels(t, v.matching)) return false;
      }
      // H must be normal with elementary abelian 2-quotient, and the restrictions agree
      const auto N = squares_and_commutators(G);
      if (!std::includes(v.subgroup.begin(), v.subgroup.end(), N.begin(), N.end())) return false;
      if (!subgroup_classes(t.group(), v.subgroup).normal) return false;
      return agree_on(a.character, b.character, classes_in(G, v.subgroup));
    }

    case Relation::locally_quadratic:
      if (v.holds) {
        if (v.signs.size() != G.num_classes()) return false;
        for (std::size_t c = 0; c < G.num_classes(); ++c) {
          if (!(charpoly_at_class(b.character, c) == charpoly_at_class(a.character, c).twisted(v.signs[c]))) {
            return false;
          }
        }
        return true;
      }
      if (!v.refuting_class) return false;
      if (a.degree != b.degree) return true;
      {
        const CharPoly pa = charpoly_at_class(a.character, *v.refuting_class);
        const CharPoly pb = charpoly_at_class(b.character, *v.refuting_class);
        return !(pb == pa) && !(pb == pa.twisted(-1));
      }

    case Relation::locally_polyquadratic:
      if (v.holds) return adams2(a.character) == adams2(b.character);
      if (!v.refuting_class) return false;
      if (a.degree != b.degree) return true;
      {
        const std::size_t sq = G.power_class(*v.refuting_class, 2);
        return !(charpoly_at_class(a.character, sq) == charpoly_at_class(b.character, sq));
      }
  }
  return false;
}

ClassFunction epsilon_character(const RepSpec& a, const RepSpec& b) {
  same_table(a, b);
  const ClassFunction da = det_character(a.character);
  const ClassFunction db = det_character(b.character);
  std::vector<Cyclotomic> v;
  for (std::size_t c = 0; c < da.size(); ++c) {
    Cyclotomic ratio_value = db[c] / da[c];
    if (!(ratio_value == Cyclotomic(1L) || ratio_value == Cyclotomic(-1L))) {
      throw InputError("det(b)/det(a) takes the value " + ratio_value.to_string() +
                       ", not a sign: the pair is not locally polyquadratic of degree 2");
    }
    v.push_back(std::move(ratio_value));
  }
  return ClassFunction(a.table->group(), std::move(v), true);
}

std::vector<std::vector<std::int64_t>> representations_of_degree(const CharacterTable& table, std::int64_t r) {
  std::vector<std::vector<std::int64_t>> out;
  const auto& deg = table.degrees();
  std::vector<std::int64_t> cur(deg.size(), 0);
  // lexicographic order: recurse on the first coordinate, smallest value first
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == deg.size()) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::int64_t m = 0; m * deg[i] <= left; ++m) {
      cur[i] = m;
      self(self, i + 1, left - m * deg[i]);
    }
    cur[i] = 0;
  };
  if (r >= 0) rec(rec, 0, r);
  return out;
}

}  // namespace twistkit
