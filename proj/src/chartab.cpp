#include "twistkit/chartab.hpp"

#include "twistkit/error.hpp"

#include <algorithm>
#include <atomic>

namespace twistkit {

namespace {

std::atomic<std::size_t> g_max_charpoly_degree{8};

void same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group.get() != b.group.get()) throw InputError("class functions live on different groups");
}

Cyclotomic one(const GroupData& g) { return Cyclotomic(Rational(1), g.exponent()); }

}  // namespace

ClassFunction::ClassFunction(GroupPtr g, std::vector<Cyclotomic> v, bool is_character)
    : group(std::move(g)), values(std::move(v)), character(is_character) {
  if (values.size() != group->num_classes()) {
    throw InputError("class function has " + std::to_string(values.size()) + " values but the group has " +
                     std::to_string(group->num_classes()) + " classes");
  }
}

Integer ClassFunction::degree() const {
  if (!values[0].is_integer()) throw InputError("value at the identity is not an integer");
  return values[0].rational_value().get_num();
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  same_group(*this, o);
  for (std::size_t c = 0; c < values.size(); ++c) values[c] += o.values[c];
  character = character && o.character;
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  same_group(*this, o);
  for (std::size_t c = 0; c < values.size(); ++c) values[c] -= o.values[c];
  character = false;
  return *this;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  same_group(a, b);
  ClassFunction out = a;
  for (std::size_t c = 0; c < out.values.size(); ++c) out.values[c] *= b.values[c];
  out.character = a.character && b.character;
  return out;
}

ClassFunction operator*(long k, const ClassFunction& f) {
  ClassFunction out = f;
  for (auto& v : out.values) v *= Rational(k);
  out.character = f.character && k >= 0;
  return out;
}

ClassFunction operator-(const ClassFunction& f) {
  ClassFunction out = f;
  for (auto& v : out.values) v = -v;
  out.character = false;
  return out;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group.get() == b.group.get() && a.values == b.values;
}

ClassFunction trivial_character(const GroupPtr& group) {
  return ClassFunction(group, std::vector<Cyclotomic>(group->num_classes(), one(*group)), true);
}

ClassFunction regular_character(const GroupPtr& group) {
  std::vector<Cyclotomic> v(group->num_classes(), Cyclotomic(Rational(0), group->exponent()));
  v[0] = Cyclotomic(Rational(static_cast<long>(group->order())), group->exponent());
  return ClassFunction(group, std::move(v), true);
}

ClassFunction zero_class_function(const GroupPtr& group) {
  return ClassFunction(group, std::vector<Cyclotomic>(group->num_classes(), Cyclotomic(Rational(0), group->exponent())),
                       true);
}

ClassFunction tensor(const ClassFunction& f, const ClassFunction& g) { return f * g; }

ClassFunction adams2(const ClassFunction& f) {
  ClassFunction out = f;
  for (std::size_t c = 0; c < f.size(); ++c) out.values[c] = f.values[f.group->power_class(c, 2)];
  out.character = false;
  return out;
}

ClassFunction sym2(const ClassFunction& f) {
  ClassFunction out = f;
  const Rational half = ratio(1, 2);
  for (std::size_t c = 0; c < f.size(); ++c) {
    out.values[c] = (f.values[c] * f.values[c] + f.values[f.group->power_class(c, 2)]) * half;
  }
  return out;
}

ClassFunction alt2(const ClassFunction& f) {
  ClassFunction out = f;
  const Rational half = ratio(1, 2);
  for (std::size_t c = 0; c < f.size(); ++c) {
    out.values[c] = (f.values[c] * f.values[c] - f.values[f.group->power_class(c, 2)]) * half;
  }
  return out;
}

ClassFunction conj(const ClassFunction& f) {
  ClassFunction out = f;
  for (auto& v : out.values) v = v.conj();
  return out;
}

ClassFunction adjoint0(const ClassFunction& f) {
  ClassFunction out = f * conj(f);
  const Cyclotomic unit = one(*f.group);
  for (auto& v : out.values) v -= unit;
  // f conj(f) contains the trivial character once f is a nonzero character
  out.character = f.character && sgn(f.values[0].coeffs()[0]) > 0 && f.values[0].is_rational();
  return out;
}

ClassFunction cf_algebra(CfOp op, const ClassFunction& f, const ClassFunction* g) {
  switch (op) {
    case CfOp::tensor:
      if (g == nullptr) throw InputError("tensor needs two class functions");
      return tensor(f, *g);
    case CfOp::sym2:
      return sym2(f);
    case CfOp::alt2:
      return alt2(f);
    case CfOp::adams2:
      return adams2(f);
    case CfOp::conj:
      return conj(f);
    case CfOp::adjoint0:
      return adjoint0(f);
  }
  throw InputError("unknown class-function operation");
}

Cyclotomic inner_product_value(const ClassFunction& f, const ClassFunction& g) {
  same_group(f, g);
  const auto& G = *f.group;
  Cyclotomic sum(Rational(0), G.exponent());
  for (std::size_t c = 0; c < f.size(); ++c) {
    sum += f.values[c] * g.values[c].conj() * Rational(static_cast<long>(G.class_size(c)));
  }
  return sum * ratio(1, static_cast<long>(G.order()));
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  const Cyclotomic v = inner_product_value(f, g);
  if (!v.is_rational()) throw InputError("inner product " + v.to_string() + " is not rational");
  return v.rational_value();
}

CharPoly CharPoly::twisted(int sign) const {
  CharPoly out = *this;
  if (sign < 0) {
    for (std::size_t k = 1; k < out.coeffs.size(); k += 2) out.coeffs[k] = -out.coeffs[k];
  }
  return out;
}

std::size_t max_charpoly_degree() { return g_max_charpoly_degree.load(); }
void set_max_charpoly_degree(std::size_t bound) { g_max_charpoly_degree.store(bound); }

CharPoly charpoly_at_class(const ClassFunction& f, std::size_t class_index, std::optional<std::size_t> r) {
  if (!f.character) throw InputError("characteristic polynomial of a virtual class function is undefined");
  const Integer deg = f.degree();
  const std::size_t rr = r.value_or(deg.get_ui());
  if (deg != static_cast<unsigned long>(rr)) throw InputError("requested degree does not match the character degree");
  if (rr > max_charpoly_degree()) {
    throw BoundError("characteristic polynomial degree " + std::to_string(rr) + " exceeds the configured bound " +
                     std::to_string(max_charpoly_degree()));
  }
  const auto& G = *f.group;
  std::vector<Cyclotomic> p(rr + 1);
  for (std::size_t k = 1; k <= rr; ++k) p[k] = f.values[G.power_class(class_index, static_cast<std::int64_t>(k))];
  // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
  std::vector<Cyclotomic> e(rr + 1);
  e[0] = one(G);
  for (std::size_t k = 1; k <= rr; ++k) {
    Cyclotomic acc(Rational(0), G.exponent());
    for (std::size_t i = 1; i <= k; ++i) {
      const Cyclotomic term = e[k - i] * p[i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = acc * ratio(1, static_cast<long>(k));
  }
  CharPoly out;
  out.coeffs.resize(rr + 1);
  for (std::size_t k = 0; k <= rr; ++k) out.coeffs[k] = k % 2 == 0 ? e[k] : -e[k];
  return out;
}

ClassFunction det_character(const ClassFunction& f) {
  const std::size_t r = f.degree().get_ui();
  std::vector<Cyclotomic> v(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) {
    const CharPoly cp = charpoly_at_class(f, c, r);
    v[c] = r % 2 == 0 ? cp.coeffs[r] : -cp.coeffs[r];
  }
  return ClassFunction(f.group, std::move(v), true);
}

ClassFunction induce(const ClassFunction& f, const SubgroupData& sub) {
  if (f.group.get() != sub.group.get()) throw InputError("induce: class function is not on the given subgroup");
  const auto& G = *sub.parent;
  const auto& H = *sub.group;
  std::vector<Cyclotomic> v(G.num_classes(), Cyclotomic(Rational(0), G.exponent()));
  for (std::size_t h = 0; h < H.num_classes(); ++h) {
    v[sub.fusion[h]] += f.values[h] * Rational(static_cast<long>(H.class_size(h)));
  }
  for (std::size_t c = 0; c < v.size(); ++c) {
    v[c] *= ratio(static_cast<long>(G.order()), static_cast<long>(H.order() * G.class_size(c)));
  }
  return ClassFunction(sub.parent, std::move(v), f.character);
}

ClassFunction restrict_to(const ClassFunction& f, const SubgroupData& sub) {
  if (f.group.get() != sub.parent.get()) throw InputError("restrict: class function is not on the parent group");
  std::vector<Cyclotomic> v;
  v.reserve(sub.fusion.size());
  for (std::size_t c : sub.fusion) v.push_back(f.values[c]);
  return ClassFunction(sub.group, std::move(v), f.character);
}

Rational frobenius_schur_indicator(const ClassFunction& f) {
  return inner_product(adams2(f), trivial_character(f.group));
}

std::vector<std::size_t> kernel_elements(const ClassFunction& f) {
  std::vector<std::size_t> out;
  const auto& G = *f.group;
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f.values[c] == f.values[0]) {
      for (std::size_t m : G.classes()[c].members) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_faithful(const ClassFunction& f) { return kernel_elements(f).size() == 1; }

std::vector<std::int64_t> Decomposition::integers() const {
  if (!integral) throw InputError("decomposition has non-integral multiplicities");
  std::vector<std::int64_t> out;
  for (const auto& m : multiplicities) out.push_back(m.rational_value().get_num().get_si());
  return out;
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles)
    : group_(std::move(group)), irreducibles_(std::move(irreducibles)) {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    auto& chi = irreducibles_[i];
    if (chi.group.get() != group_.get()) throw InputError("irreducible character on a different group");
    chi.character = true;
    degrees_.push_back(chi.degree().get_si());
    if (degrees_.back() != 1) continue;
    bool pm1 = true;
    for (const auto& v : chi.values) {
      if (!(v == Cyclotomic(1L) || v == Cyclotomic(-1L))) {
        pm1 = false;
        break;
      }
    }
    if (pm1) quadratic_.push_back(i);
  }
}

std::optional<std::size_t> CharacterTable::find(const ClassFunction& f) const {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    if (irreducibles_[i] == f) return i;
  }
  return std::nullopt;
}

Decomposition CharacterTable::decompose(const ClassFunction& f) const {
  if (f.group.get() != group_.get()) throw InputError("decompose: class function on a different group");
  Decomposition d;
  ClassFunction rebuilt(group_, std::vector<Cyclotomic>(group_->num_classes(), Cyclotomic(Rational(0), group_->exponent())));
  for (const auto& chi : irreducibles_) {
    Cyclotomic m = inner_product_value(f, chi);
    if (!m.is_integer()) {
      d.integral = false;
      d.genuine = false;
    } else if (sgn(m.rational_value()) < 0) {
      d.genuine = false;
    }
    for (std::size_t c = 0; c < chi.size(); ++c) rebuilt.values[c] += m * chi.values[c];
    d.multiplicities.push_back(std::move(m));
  }
  if (!(rebuilt == f)) throw InternalError("decomposition does not reconstruct the class function");
  return d;
}

ClassFunction CharacterTable::compose(std::span<const std::int64_t> multiplicities) const {
  if (multiplicities.size() != irreducibles_.size()) {
    throw InputError("multiplicity vector has " + std::to_string(multiplicities.size()) + " entries, table has " +
                     std::to_string(irreducibles_.size()) + " irreducibles");
  }
  ClassFunction out = zero_class_function(group_);
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] != 0) out += static_cast<long>(multiplicities[i]) * irreducibles_[i];
  }
  out.character = std::all_of(multiplicities.begin(), multiplicities.end(), [](std::int64_t m) { return m >= 0; });
  return out;
}

void verify_character_table(const CharacterTable& table) {
  const auto& G = *table.group();
  const std::size_t k = G.num_classes();
  const auto& irr = table.irreducibles();
  if (irr.size() != k) {
    throw InternalError("character table of '" + G.name() + "' has " + std::to_string(irr.size()) +
                        " rows for " + std::to_string(k) + " classes");
  }
  std::int64_t sumsq = 0;
  for (std::int64_t d : table.degrees()) sumsq += d * d;
  if (sumsq != static_cast<std::int64_t>(G.order())) {
    throw InternalError("sum of squared degrees is " + std::to_string(sumsq) + ", group order " +
                        std::to_string(G.order()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const Cyclotomic ip = inner_product_value(irr[i], irr[j]);
      if (!(ip == Cyclotomic(i == j ? 1L : 0L))) {
        throw InternalError("row orthogonality fails for irreducibles " + std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c; d < k; ++d) {
      Cyclotomic sum(Rational(0), G.exponent());
      for (const auto& chi : irr) sum += chi.values[c] * chi.values[d].conj();
      const Rational expect = c == d ? ratio(static_cast<long>(G.order()), static_cast<long>(G.class_size(c)))
                                     : Rational(0);
      if (!(sum == Cyclotomic(expect))) {
        throw InternalError("column orthogonality fails for classes " + std::to_string(c) + ", " + std::to_string(d));
      }
    }
  }
}

std::vector<ClassFunction> quadratic_characters(const CharacterTable& table) {
  std::vector<ClassFunction> out;
  for (std::size_t i : table.quadratic_indices()) out.push_back(table.irreducible(i));
  return out;
}

}  // namespace twistkit
