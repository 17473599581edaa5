#include "twistkit/groups.hpp"

#include "twistkit/error.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace twistkit {

namespace {

std::atomic<std::size_t> g_max_order{20000};

constexpr std::size_t kTableLimit = 2048;

std::vector<std::size_t> minimal_generating_set(const GroupData& group, std::span<const std::size_t> members) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{group.identity_index()};
  for (std::size_t m : members) {
    if (std::binary_search(span.begin(), span.end(), m)) continue;
    gens.push_back(m);
    span = subgroup_closure(group, gens);
  }
  return gens;
}

std::vector<std::size_t> normal_closure(const GroupData& group, std::vector<std::size_t> gens) {
  auto sub = subgroup_closure(group, gens);
  for (;;) {
    bool grew = false;
    for (const auto& g : group.generators()) {
      const std::size_t gi = group.index_of(g);
      const std::size_t ginv = group.inverse(gi);
      for (std::size_t h : std::vector<std::size_t>(sub)) {
        const std::size_t c = group.multiply(group.multiply(gi, h), ginv);
        if (!std::binary_search(sub.begin(), sub.end(), c)) {
          gens.push_back(c);
          sub = subgroup_closure(group, gens);
          grew = true;
        }
      }
    }
    if (!grew) return sub;
  }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t v : images_) {
    if (v >= images_.size() || seen[v]) throw InputError("permutation images do not form a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  std::iota(im.begin(), im.end(), 0U);
  return Permutation(std::move(im));
}

Permutation Permutation::from_one_based(std::span<const std::int64_t> images) {
  std::vector<std::uint32_t> im;
  im.reserve(images.size());
  for (std::int64_t v : images) {
    if (v < 1 || v > static_cast<std::int64_t>(images.size())) {
      throw InputError("permutation image " + std::to_string(v) + " out of range 1.." + std::to_string(images.size()));
    }
    im.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<std::uint32_t> im(b.images_.size());
  for (std::size_t x = 0; x < im.size(); ++x) im[x] = a.images_[b.images_[x]];
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = static_cast<std::uint32_t>(x);
  Permutation out;
  out.images_ = std::move(im);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::vector<std::int64_t> Permutation::one_based() const {
  std::vector<std::int64_t> out;
  out.reserve(images_.size());
  for (std::uint32_t v : images_) out.push_back(static_cast<std::int64_t>(v) + 1);
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::uint32_t v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

std::size_t max_group_order() { return g_max_order.load(); }
void set_max_group_order(std::size_t bound) { g_max_order.store(bound); }

std::shared_ptr<const GroupData> GroupData::enumerate(std::string name, std::size_t degree,
                                                      std::vector<Permutation> generators) {
  if (degree == 0) throw InputError("group degree must be at least 1");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InputError("generator of degree " + std::to_string(g.degree()) + " on a group of degree " +
                       std::to_string(degree));
    }
  }
  const std::size_t bound = max_group_order();

  // breadth-first closure; words record the generator path
  std::vector<Permutation> found{Permutation::identity(degree)};
  std::vector<std::vector<std::size_t>> found_words{{}};
  std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{found[0], 0}};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Permutation next = found[head] * generators[gi];
      if (seen.contains(next)) continue;
      if (found.size() >= bound) {
        throw BoundError("group '" + name + "' exceeds the enumeration bound of " + std::to_string(bound) +
                         " elements");
      }
      seen.emplace(next, found.size());
      auto w = found_words[head];
      w.push_back(gi + 1);
      found.push_back(std::move(next));
      found_words.push_back(std::move(w));
    }
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });

  std::shared_ptr<GroupData> g(new GroupData());
  g->name_ = std::move(name);
  g->degree_ = degree;
  g->generators_ = std::move(generators);
  const std::size_t n = found.size();
  g->elements_.reserve(n);
  g->words_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    g->elements_.push_back(std::move(found[perm[i]]));
    g->words_.push_back(std::move(found_words[perm[i]]));
    g->index_.emplace(g->elements_.back(), i);
  }

  if (n <= kTableLimit) {
    g->table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        g->table_[a * n + b] = static_cast<std::uint32_t>(g->index_.at(g->elements_[a] * g->elements_[b]));
      }
    }
  }

  g->inverse_.resize(n);
  g->element_order_.resize(n);
  std::int64_t exponent = 1;
  for (std::size_t a = 0; a < n; ++a) {
    g->inverse_[a] = g->index_.at(g->elements_[a].inverse());
    std::size_t ord = 1;
    for (std::size_t x = a; x != 0; x = g->multiply(x, a)) ++ord;
    if (a == 0) ord = 1;
    g->element_order_[a] = ord;
    exponent = std::lcm(exponent, static_cast<std::int64_t>(ord));
  }
  g->exponent_ = exponent;

  // conjugacy classes by orbit closure under generator conjugation
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  g->class_of_.assign(n, unset);
  std::vector<std::size_t> gen_idx, gen_inv;
  for (const auto& p : g->generators_) {
    gen_idx.push_back(g->index_.at(p));
    gen_inv.push_back(g->inverse_[gen_idx.back()]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g->class_of_[a] != unset) continue;
    const std::size_t c = g->classes_.size();
    ConjugacyClass cls;
    cls.representative = a;
    std::deque<std::size_t> queue{a};
    g->class_of_[a] = c;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      cls.members.push_back(x);
      for (std::size_t k = 0; k < gen_idx.size(); ++k) {
        const std::size_t y = g->multiply(g->multiply(gen_idx[k], x), gen_inv[k]);
        if (g->class_of_[y] == unset) {
          g->class_of_[y] = c;
          queue.push_back(y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    g->classes_.push_back(std::move(cls));
  }

  g->power_maps_.assign(static_cast<std::size_t>(exponent) + 1, std::vector<std::size_t>(g->classes_.size()));
  for (std::size_t c = 0; c < g->classes_.size(); ++c) {
    const std::size_t rep = g->classes_[c].representative;
    std::size_t x = 0;
    for (std::int64_t k = 0; k <= exponent; ++k) {
      g->power_maps_[static_cast<std::size_t>(k)][c] = g->class_of_[x];
      x = g->multiply(x, rep);
    }
  }
  return g;
}

std::size_t GroupData::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? npos : it->second;
}

std::size_t GroupData::multiply(std::size_t a, std::size_t b) const {
  const std::size_t n = elements_.size();
  if (!table_.empty()) return table_[a * n + b];
  return index_.at(elements_[a] * elements_[b]);
}

std::size_t GroupData::power(std::size_t a, std::int64_t k) const {
  const auto ord = static_cast<std::int64_t>(element_order_[a]);
  k %= ord;
  if (k < 0) k += ord;
  std::size_t result = 0;
  std::size_t base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t GroupData::inverse_class(std::size_t c) const { return class_of_[inverse_[classes_[c].representative]]; }

std::size_t GroupData::power_class(std::size_t c, std::int64_t k) const {
  k %= exponent_;
  if (k < 0) k += exponent_;
  return power_maps_[static_cast<std::size_t>(k)][c];
}

bool GroupData::is_abelian() const {
  for (const auto& cls : classes_) {
    if (cls.size() != 1) return false;
  }
  return true;
}

std::vector<std::size_t> squaring_class_map(const GroupData& group) {
  std::vector<std::size_t> out(group.num_classes());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = group.power_class(c, 2);
  return out;
}

std::vector<std::size_t> subgroup_closure(const GroupData& group, std::span<const std::size_t> generators) {
  std::vector<bool> in(group.order(), false);
  std::vector<std::size_t> members{group.identity_index()};
  in[group.identity_index()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t g : generators) {
      const std::size_t y = group.multiply(members[head], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::size_t> squares_and_commutators(const GroupData& group) {
  std::set<std::size_t> gens;
  for (std::size_t s = 0; s < group.order(); ++s) gens.insert(group.multiply(s, s));
  std::vector<std::size_t> gi;
  for (const auto& p : group.generators()) gi.push_back(group.index_of(p));
  for (std::size_t a : gi) {
    for (std::size_t b : gi) {
      gens.insert(group.multiply(group.multiply(a, b), group.multiply(group.inverse(a), group.inverse(b))));
    }
  }
  const std::vector<std::size_t> v(gens.begin(), gens.end());
  // squares generate a normal subgroup already; the closure is normal
  return subgroup_closure(group, v);
}

std::vector<std::size_t> derived_subgroup(const GroupData& group) {
  std::vector<std::size_t> gi;
  for (const auto& p : group.generators()) gi.push_back(group.index_of(p));
  std::vector<std::size_t> comms;
  for (std::size_t a : gi) {
    for (std::size_t b : gi) {
      comms.push_back(group.multiply(group.multiply(a, b), group.multiply(group.inverse(a), group.inverse(b))));
    }
  }
  return normal_closure(group, std::move(comms));
}

SubgroupData subgroup_classes(const GroupPtr& group, std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<bool> in(group->order(), false);
  for (std::size_t m : members) {
    if (m >= group->order()) throw InputError("subgroup member index out of range");
    in[m] = true;
  }
  if (members.empty() || !in[group->identity_index()]) throw InputError("subgroup must contain the identity");
  for (std::size_t a : members) {
    if (!in[group->inverse(a)]) throw InputError("subgroup is not closed under inverses");
    for (std::size_t b : members) {
      if (!in[group->multiply(a, b)]) throw InputError("subgroup is not closed under multiplication");
    }
  }

  SubgroupData out;
  out.parent = group;
  out.members = members;
  out.normal = true;
  for (const auto& g : group->generators()) {
    const std::size_t gi = group->index_of(g);
    for (std::size_t h : members) {
      if (!in[group->multiply(group->multiply(gi, h), group->inverse(gi))]) {
        out.normal = false;
        break;
      }
    }
    if (!out.normal) break;
  }

  std::vector<Permutation> gens;
  for (std::size_t m : minimal_generating_set(*group, members)) gens.push_back(group->element(m));
  out.group = GroupData::enumerate(group->name() + "/sub" + std::to_string(members.size()), group->degree(),
                                   std::move(gens));
  if (out.group->order() != members.size()) throw InternalError("subgroup enumeration size mismatch");
  out.embedding.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) out.embedding[i] = group->index_of(out.group->element(i));
  if (out.embedding != members) throw InternalError("subgroup element ordering does not match the parent");
  out.fusion.resize(out.group->num_classes());
  for (std::size_t c = 0; c < out.fusion.size(); ++c) {
    out.fusion[c] = group->class_of(out.embedding[out.group->classes()[c].representative]);
  }
  return out;
}

std::vector<SubgroupData> elementary_2_quotient_subgroups(const GroupPtr& group) {
  const auto& G = *group;
  const auto N = squares_and_commutators(G);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);

  // coset labels and F_2 coordinates of G/N
  std::vector<std::size_t> coset(G.order(), unset);
  std::vector<std::size_t> coset_rep;
  for (std::size_t x = 0; x < G.order(); ++x) {
    if (coset[x] != unset) continue;
    for (std::size_t n : N) coset[G.multiply(x, n)] = coset_rep.size();
    coset_rep.push_back(x);
  }
  std::vector<std::uint64_t> coord(coset_rep.size(), ~std::uint64_t{0});
  std::vector<std::size_t> known{coset[G.identity_index()]};
  coord[known[0]] = 0;
  int dim = 0;
  for (std::size_t c = 0; c < coset_rep.size(); ++c) {
    if (coord[c] != ~std::uint64_t{0}) continue;
    if (dim >= 6) {
      throw BoundError("elementary abelian 2-quotient of '" + G.name() + "' has dimension above 6");
    }
    const std::uint64_t bit = std::uint64_t{1} << dim;
    ++dim;
    for (std::size_t k : std::vector<std::size_t>(known)) {
      const std::size_t img = coset[G.multiply(coset_rep[c], coset_rep[k])];
      coord[img] = coord[k] | bit;
      known.push_back(img);
    }
  }
  if (known.size() != coset_rep.size()) throw InternalError("G/N is not an elementary abelian 2-group");

  // subspaces of F_2^dim as bitmasks over the 2^dim vectors
  const std::size_t nvec = std::size_t{1} << dim;
  std::set<std::uint64_t> spaces{1};  // {0}
  std::deque<std::uint64_t> queue{1};
  while (!queue.empty()) {
    const std::uint64_t w = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < nvec; ++v) {
      if (w >> v & 1) continue;
      std::uint64_t grown = w;
      for (std::size_t u = 0; u < nvec; ++u) {
        if (w >> u & 1) grown |= std::uint64_t{1} << (u ^ v);
      }
      if (spaces.insert(grown).second) queue.push_back(grown);
    }
  }

  std::vector<SubgroupData> out;
  for (std::uint64_t w : spaces) {
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < G.order(); ++x) {
      if (w >> coord[coset[x]] & 1) members.push_back(x);
    }
    out.push_back(subgroup_classes(group, std::move(members)));
    if (!out.back().normal) throw InternalError("subgroup containing all squares is not normal");
  }
  std::sort(out.begin(), out.end(), [](const SubgroupData& a, const SubgroupData& b) {
    if (a.order() != b.order()) return a.order() > b.order();
    return a.members < b.members;
  });
  return out;
}

std::vector<std::int64_t> abelianization_invariants(const GroupData& group) {
  const auto D = derived_subgroup(group);
  std::vector<bool> inD(group.order(), false);
  for (std::size_t d : D) inD[d] = true;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(group.order(), unset);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (coset[x] != unset) continue;
    for (std::size_t d : D) coset[group.multiply(x, d)] = reps.size();
    reps.push_back(x);
  }
  auto m = static_cast<std::int64_t>(reps.size());
  // p-primary parts: #{x : x^(p^j) in D} = p^(sum_i min(j, e_i))
  std::map<std::int64_t, std::vector<std::int64_t>> primary;  // p -> exponents e_i descending
  std::int64_t rest = m;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<std::int64_t> at_least;  // at_least[j-1] = #{i : e_i >= j}
    std::int64_t prev_log = 0;
    for (std::int64_t j = 1, pj = p;; ++j, pj *= p) {
      std::int64_t count = 0;
      for (std::size_t r : reps) count += inD[group.power(r, pj)] ? 1 : 0;
      std::int64_t lg = 0;
      while (count > 1) {
        count /= p;
        ++lg;
      }
      if (lg == prev_log) break;
      at_least.push_back(lg - prev_log);
      prev_log = lg;
    }
    std::vector<std::int64_t> exps;
    for (std::size_t j = 0; j < at_least.size(); ++j) {
      const std::int64_t next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
      for (std::int64_t c = 0; c < at_least[j] - next; ++c) exps.push_back(static_cast<std::int64_t>(j) + 1);
    }
    std::sort(exps.rbegin(), exps.rend());
    primary[p] = exps;
  }
  std::size_t rank = 0;
  for (const auto& [p, e] : primary) rank = std::max(rank, e.size());
  std::vector<std::int64_t> factors(rank, 1);  // factors[0] largest
  for (const auto& [p, e] : primary) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::int64_t k = 0; k < e[i]; ++k) factors[i] *= p;
    }
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

}  // namespace twistkit
