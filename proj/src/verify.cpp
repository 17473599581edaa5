#include "twistkit/verify.hpp"

#include "twistkit/error.hpp"
#include "twistkit/twists.hpp"
#include "twistkit/weil.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>

namespace twistkit {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
CheckResult timed(int id, std::string name, std::string anchor, double limit, F&& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.limit_seconds = limit;
  const auto t0 = Clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

Json fingerprints_json(const Fingerprints& f) {
  return Json{{"order", *f.order}, {"num_classes", *f.num_classes}, {"abelianization", *f.abelianization},
              {"degrees", *f.degrees}};
}

bool same_fingerprints(const Fingerprints& a, const Fingerprints& b) {
  return a.order == b.order && a.num_classes == b.num_classes && a.abelianization == b.abelianization &&
         a.degrees == b.degrees;
}

std::vector<const LoadedGroup*> groups_up_to(const BundledGroups& g, std::size_t order) {
  std::vector<const LoadedGroup*> out;
  for (const auto& lg : g.groups) {
    if (lg.group->order() <= order) out.push_back(&lg);
  }
  return out;
}

Json pair_json(const RepSpec& a, const RepSpec& b) { return Json{{"a", a.mults}, {"b", b.mults}}; }

// Prime powers in [2, bound].
std::vector<long> prime_powers(long bound) {
  std::vector<long> out;
  for (long q = 2; q <= bound; ++q) {
    long p = 2;
    while (q % p) ++p;
    long x = q;
    while (x % p == 0) x /= p;
    if (x == 1) out.push_back(q);
  }
  return out;
}

long isqrt_floor(long v) {
  long s = static_cast<long>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

IntPoly elliptic_factor(long a, long q) { return {Integer(1), Integer(-a), Integer(q)}; }

}  // namespace

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::discrepancy_documented:
      return "discrepancy-documented";
  }
  return "fail";
}

bool RunReport::ok() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return false;
  }
  return true;
}

Json RunReport::to_json(bool with_timings) const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    Json j{{"id", c.id},
           {"name", c.name},
           {"anchor", c.anchor},
           {"status", check_status_name(c.status)},
           {"summary", c.summary},
           {"payload", c.payload}};
    if (with_timings) {
      j["seconds"] = c.seconds;
      j["limit_seconds"] = c.limit_seconds;
    }
    checks_json.push_back(std::move(j));
  }
  return Json{{"group_source", group_source}, {"ok", ok()}, {"checks", checks_json}};
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const auto& c : checks) {
    std::string tag = c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "DISCREPANCY";
    out << "[" << tag << "] " << c.id << " " << c.name << ": " << c.summary << " (" << c.seconds << " s)\n";
  }
  out << (ok() ? "all checks passed" : "some checks failed") << " (groups: " << group_source << ")\n";
  return out.str();
}

const std::vector<std::string>& bundled_group_names() {
  static const std::vector<std::string> names = {"trivial", "c2", "c3", "c4", "c2xc2", "s3", "dic3", "sg48_3"};
  return names;
}

const LoadedGroup* BundledGroups::find(const std::string& name) const {
  for (const auto& g : groups) {
    if (g.record.name == name) return &g;
  }
  return nullptr;
}

BundledGroups load_bundled_groups(const std::optional<std::string>& dir) {
  BundledGroups out;
  for (const auto& name : bundled_group_names()) {
    try {
      GroupRecord rec;
      if (dir) {
        rec = load_group_file((std::filesystem::path(*dir) / (name + ".json")).string());
        if (rec.name != name) throw InputError("file for '" + name + "' names the group '" + rec.name + "'");
      } else {
        rec = builtin_record(name);
      }
      auto lg = realize(rec);
      const auto got = compute_fingerprints(*lg.group, *lg.table);
      if (!same_fingerprints(got, builtin_record(name).expected)) {
        throw FingerprintError("group '" + name + "': fingerprints differ from the builtin record");
      }
      out.groups.push_back(std::move(lg));
    } catch (const InputError& e) {
      out.errors.push_back(e.what());
    } catch (const BoundError& e) {
      out.errors.push_back(e.what());
    }
  }
  return out;
}

CheckResult check_table_integrity(const BundledGroups& g) {
  return timed(1, "character-table-integrity", "orthogonality and sum of squared degrees", 5.0, [&](CheckResult& r) {
    Json groups = Json::array();
    bool ok = g.errors.empty() && g.groups.size() == bundled_group_names().size();
    for (const auto& lg : g.groups) {
      const auto& G = *lg.group;
      const auto& T = *lg.table;
      bool row = true, col = true;
      // rows: <chi_i, chi_j> = delta_ij
      for (std::size_t i = 0; i < T.size(); ++i) {
        for (std::size_t j = 0; j < T.size(); ++j) {
          if (inner_product_value(T.irreducible(i), T.irreducible(j)) != Cyclotomic(i == j ? 1 : 0)) row = false;
        }
      }
      // columns: sum_chi chi(c) conj(chi(d)) = delta_cd |G| / |c|
      for (std::size_t c = 0; c < G.num_classes(); ++c) {
        for (std::size_t d = 0; d < G.num_classes(); ++d) {
          Cyclotomic s;
          for (const auto& chi : T.irreducibles()) s += chi[c] * chi[d].conj();
          const Cyclotomic want = c == d ? Cyclotomic(Rational(static_cast<long>(G.order() / G.class_size(c)))) : 0;
          if (s != want) col = false;
        }
      }
      std::int64_t sq = 0;
      for (auto d : T.degrees()) sq += d * d;
      const bool good = row && col && sq == static_cast<std::int64_t>(G.order()) && T.size() == G.num_classes();
      ok = ok && good;
      groups.push_back(Json{{"group", G.name()},
                            {"fingerprints", fingerprints_json(compute_fingerprints(G, T))},
                            {"row_orthogonality", row},
                            {"column_orthogonality", col},
                            {"sum_of_squared_degrees", sq}});
    }
    r.payload = Json{{"groups", groups}, {"load_errors", g.errors}};
    r.status = pass_if(ok);
    r.summary = ok ? std::to_string(g.groups.size()) + " groups verified exactly"
                   : "failures: " + std::to_string(g.errors.size()) + " load error(s)" +
                         (g.errors.empty() ? std::string() : " (" + g.errors.front() + ")");
  });
}

CheckResult check_dic3_example(const BundledGroups& g) {
  return timed(2, "dic3-locally-quadratic-not-quadratic", "rank 4 counterexample on Dic3", 1.0, [&](CheckResult& r) {
    const auto* lg = g.find("dic3");
    if (!lg) {
      r.summary = "dic3 unavailable";
      return;
    }
    const auto& T = lg->table;
    const auto c = dic3_characters(*T);
    const auto one = RepSpec::irreducible(T, 0);
    const auto eps = RepSpec::irreducible(T, c.epsilon);
    const auto chi = RepSpec::irreducible(T, c.chi);
    const auto theta = RepSpec::irreducible(T, c.theta);
    const RepSpec a = one + eps + theta.twisted_by(c.chi);
    const RepSpec b = chi + chi.twisted_by(c.epsilon) + theta;
    const auto lq = is_locally_quadratic_twist(a, b);
    const auto q = is_quadratic_twist(a, b);
    const bool certified = verify_verdict(lq, a, b) && verify_verdict(q, a, b);
    r.payload = Json{{"epsilon", c.epsilon},
                     {"theta", c.theta},
                     {"chi", c.chi},
                     {"pair", pair_json(a, b)},
                     {"locally_quadratic", verdict_to_json(lq)},
                     {"quadratic", verdict_to_json(q)},
                     {"certificates_verified", certified}};
    const bool ok = lq.holds && !q.holds && certified;
    r.status = pass_if(ok);
    r.summary = std::string("locally quadratic = ") + (lq.holds ? "true" : "false") +
                ", quadratic = " + (q.holds ? "true" : "false");
  });
}

CheckResult check_sg48_example(const BundledGroups& g) {
  return timed(3, "sg48_3-locally-polyquadratic-not-polyquadratic", "rank 3 counterexample on (Z4 x Z4) : C3", 5.0,
               [&](CheckResult& r) {
    const auto* lg = g.find("sg48_3");
    if (!lg) {
      r.summary = "sg48_3 unavailable";
      return;
    }
    const auto& T = lg->table;
    const auto faithful = faithful_irreducibles(*T, 3);
    bool in_qi = true;
    for (auto i : faithful) in_qi = in_qi && field_of_values(T->irreducible(i).values).contained_in_gaussian;
    Json pairs = Json::array();
    bool all_pairs = true, agree = true;
    for (std::size_t x = 0; x < faithful.size(); ++x) {
      for (std::size_t y = x + 1; y < faithful.size(); ++y) {
        const auto a = RepSpec::irreducible(T, faithful[x]);
        const auto b = RepSpec::irreducible(T, faithful[y]);
        const auto lpq = is_locally_polyquadratic_twist(a, b);
        const auto pq = is_polyquadratic_twist(a, b);
        const auto oracle = polyquadratic_subgroup_oracle(a, b);
        agree = agree && pq.holds == oracle.holds;
        all_pairs = all_pairs && lpq.holds && !pq.holds && verify_verdict(lpq, a, b) && verify_verdict(pq, a, b);
        pairs.push_back(Json{{"a", faithful[x]},
                             {"b", faithful[y]},
                             {"locally_polyquadratic", lpq.holds},
                             {"polyquadratic", pq.holds},
                             {"polyquadratic_subgroup_oracle", oracle.holds}});
      }
    }
    const bool count_ok = faithful.size() == 2;
    r.payload = Json{{"faithful_degree3", faithful},
                     {"faithful_degree3_count", faithful.size()},
                     {"expected_count", 2},
                     {"all_in_gaussian_field", in_qi},
                     {"pairs", pairs},
                     {"procedures_agree", agree}};
    r.status = pass_if(count_ok && in_qi && all_pairs && agree && !faithful.empty());
    std::ostringstream s;
    s << faithful.size() << " faithful degree-3 characters (expected exactly 2), values in Q(i): "
      << (in_qi ? "yes" : "no") << "; every pair locally polyquadratic and not polyquadratic: "
      << (all_pairs ? "yes" : "no") << "; decision procedures agree: " << (agree ? "yes" : "no");
    r.summary = s.str();
  });
}

namespace {

CheckResult degree2_sweep(int id, const char* name, const char* anchor, SearchMode mode, const BundledGroups& g,
                          std::size_t workers) {
  return timed(id, name, anchor, 60.0, [&](CheckResult& r) {
    Json groups = Json::array();
    std::size_t hits = 0, examined = 0;
    bool truncated = false;
    for (const auto* lg : groups_up_to(g, 48)) {
      const auto res = search_counterexamples(lg->table, 2, mode, 1'000'000, workers);
      hits += res.pairs.size();
      examined += res.pairs_examined;
      truncated = truncated || res.truncated;
      groups.push_back(search_result_to_json(res, lg->group->name(), 2, mode));
    }
    r.payload = Json{{"searches", groups}};
    r.status = pass_if(hits == 0 && !truncated && g.errors.empty());
    r.summary = std::to_string(examined) + " degree-2 pairs over " + std::to_string(groups.size()) + " groups, " +
                std::to_string(hits) + " counterexamples";
    if (mode == SearchMode::locally_polyquadratic_not_polyquadratic) {
      // the multiplicity identity for pairs whose determinant ratio is nontrivial
      std::size_t instances = 0, failures = 0;
      Json witnesses = Json::array();
      for (const auto* lg : groups_up_to(g, 48)) {
        const auto reps = representations_of_degree(*lg->table, 2);
        const auto one = trivial_character(lg->group);
        for (std::size_t i = 0; i < reps.size(); ++i) {
          for (std::size_t j = 0; j < reps.size(); ++j) {
            const auto a = RepSpec::from_mults(lg->table, reps[i]);
            const auto b = RepSpec::from_mults(lg->table, reps[j]);
            if (!is_locally_polyquadratic_twist(a, b).holds) continue;
            const auto eps = epsilon_character(a, b);
            if (eps == one) continue;
            ++instances;
            const Rational lhs = inner_product(one, adjoint0(b.character));
            const Rational rhs = 1 + inner_product(eps, adjoint0(a.character));
            if (lhs != rhs) {
              ++failures;
              witnesses.push_back(Json{{"group", lg->group->name()}, {"pair", pair_json(a, b)}});
            }
          }
        }
      }
      r.payload["adjoint_identity"] = Json{{"instances", instances}, {"failures", failures}, {"witnesses", witnesses}};
      if (failures) r.status = CheckStatus::fail;
      r.summary += "; adjoint identity on " + std::to_string(instances) + " ordered pairs with nontrivial epsilon, " +
                   std::to_string(failures) + " failures";
    }
  });
}

}  // namespace

CheckResult check_degree2_quadratic_sweep(const BundledGroups& g, std::size_t workers) {
  return degree2_sweep(4, "rank-2-locally-quadratic-implies-quadratic", "rank 2 local-global for quadratic twists",
                       SearchMode::locally_quadratic_not_quadratic, g, workers);
}

CheckResult check_degree2_polyquadratic_sweep(const BundledGroups& g, std::size_t workers) {
  return degree2_sweep(5, "rank-2-locally-polyquadratic-implies-polyquadratic",
                       "rank 2 local-global for polyquadratic twists",
                       SearchMode::locally_polyquadratic_not_polyquadratic, g, workers);
}

CheckResult check_polyquadratic_oracle(const BundledGroups& g) {
  return timed(6, "polyquadratic-matching-vs-subgroup-oracle", "constituent matching vs restriction to H", 120.0,
               [&](CheckResult& r) {
    Json groups = Json::array();
    std::size_t total = 0, disagreements = 0, positives = 0;
    Json witnesses = Json::array();
    for (const auto& lg : g.groups) {
      std::size_t n = 0, pos = 0;
      for (std::int64_t d = 1; d <= 4; ++d) {
        const auto reps = representations_of_degree(*lg.table, d);
        for (std::size_t i = 0; i < reps.size(); ++i) {
          const auto a = RepSpec::from_mults(lg.table, reps[i]);
          for (std::size_t j = i; j < reps.size(); ++j) {
            const auto b = RepSpec::from_mults(lg.table, reps[j]);
            const auto m = is_polyquadratic_twist(a, b);
            const auto o = polyquadratic_subgroup_oracle(a, b);
            ++n;
            if (m.holds) ++pos;
            if (m.holds != o.holds || !verify_verdict(m, a, b) || !verify_verdict(o, a, b)) {
              ++disagreements;
              if (witnesses.size() < 10) witnesses.push_back(Json{{"group", lg.group->name()}, {"pair", pair_json(a, b)}});
            }
          }
        }
      }
      total += n;
      positives += pos;
      groups.push_back(Json{{"group", lg.group->name()}, {"pairs", n}, {"polyquadratic", pos}});
    }
    r.payload = Json{{"groups", groups}, {"pairs", total}, {"disagreements", disagreements}, {"witnesses", witnesses}};
    r.status = pass_if(disagreements == 0 && g.errors.empty());
    r.summary = std::to_string(total) + " pairs of degree <= 4 (" + std::to_string(positives) +
                " polyquadratic), " + std::to_string(disagreements) + " disagreements";
  });
}

CheckResult check_criteria_crosscheck(const BundledGroups& g, std::uint64_t seed) {
  return timed(7, "symmetric-square-and-adams-criteria", "Sym^2/Alt^2 and psi^2 characterizations", 0.0,
               [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    Json groups = Json::array();
    std::size_t disagreements = 0;
    for (const auto& lg : g.groups) {
      const auto& T = lg.table;
      const auto& quads = T->quadratic_indices();
      std::vector<std::vector<std::vector<std::int64_t>>> by_degree(5);
      for (std::int64_t d = 1; d <= 4; ++d) by_degree[d] = representations_of_degree(*T, d);
      std::size_t lq_pos = 0, lpq_pos = 0, sym_cmp = 0, adams_cmp = 0, bad = 0;
      for (int trial = 0; trial < 500; ++trial) {
        const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 4);
        const auto& pool = by_degree[d];
        const auto a = RepSpec::from_mults(T, pool[rng() % pool.size()]);
        RepSpec b;
        switch (rng() % 3) {
          case 0:
            b = RepSpec::from_mults(T, pool[rng() % pool.size()]);
            break;
          case 1:
            b = a.twisted_by(quads[rng() % quads.size()]);
            break;
          default: {
            // twist each constituent copy independently
            std::vector<std::int64_t> m(T->size(), 0);
            for (std::size_t i = 0; i < a.mults.size(); ++i) {
              for (std::int64_t k = 0; k < a.mults[i]; ++k) {
                const auto tw = RepSpec::irreducible(T, i).twisted_by(quads[rng() % quads.size()]);
                for (std::size_t x = 0; x < m.size(); ++x) m[x] += tw.mults[x];
              }
            }
            b = RepSpec::from_mults(T, m);
          }
        }
        const bool lpq = is_locally_polyquadratic_twist(a, b).holds;
        ++adams_cmp;
        if (lpq != adams2_criterion(a, b)) ++bad;
        lpq_pos += lpq;
        if (d == 4) {
          const bool lq = is_locally_quadratic_twist(a, b).holds;
          ++sym_cmp;
          if (lq != sym2_alt2_criterion(a, b)) ++bad;
          lq_pos += lq;
        }
      }
      disagreements += bad;
      groups.push_back(Json{{"group", lg.group->name()},
                            {"samples", 500},
                            {"adams_comparisons", adams_cmp},
                            {"locally_polyquadratic", lpq_pos},
                            {"symmetric_square_comparisons", sym_cmp},
                            {"locally_quadratic", lq_pos},
                            {"disagreements", bad}});
    }
    r.payload = Json{{"seed", seed}, {"groups", groups}, {"disagreements", disagreements}};
    r.status = pass_if(disagreements == 0 && g.errors.empty());
    r.summary = "500 random pairs per group, " + std::to_string(disagreements) + " disagreements";
  });
}

CheckResult check_weil_identities(std::uint64_t seed) {
  return timed(8, "weil-graeffe-and-trace-zero", "base change identity and the g = 2 trace-zero criterion", 30.0,
               [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    const auto qs = prime_powers(49);
    std::size_t graeffe_fail = 0, tower_fail = 0;
    Json graeffe_witness = Json::array();
    for (int n = 0; n < 1000; ++n) {
      const int g = 1 + static_cast<int>(rng() % 3);
      const long q = qs[rng() % qs.size()];
      const long bound = isqrt_floor(4 * q);
      IntPoly p{Integer(1)};
      for (int i = 0; i < g; ++i) {
        const long a = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
        p = poly_mul(p, elliptic_factor(a, q));
      }
      const WeilPolynomial P(g, Integer(q), p);
      const auto P2 = base_change(P, 2);
      const IntPoly lhs = poly_substitute_power(P2.coeffs(), 2);
      const IntPoly rhs = poly_mul(P.coeffs(), poly_negate_variable(P.coeffs()));
      if (lhs != rhs) {
        ++graeffe_fail;
        if (graeffe_witness.size() < 5) graeffe_witness.push_back(weil_to_json(P));
      }
      if (n < 100 && base_change(P2, 2) != base_change(P, 4)) ++tower_fail;
    }
    std::size_t configs = 0, hypothesis = 0, falsified = 0;
    Json falsifying = Json::array();
    for (long q : prime_powers(100)) {
      const long bound = isqrt_floor(4 * q);
      for (long a = -bound; a <= bound; ++a) {
        const long b = -a;  // zero trace
        const WeilPolynomial P(2, Integer(q), poly_mul(elliptic_factor(a, q), elliptic_factor(b, q)));
        for (int s1 : {1, -1}) {
          for (int s2 : {1, -1}) {
            const WeilPolynomial P2(2, Integer(q), poly_mul(elliptic_factor(s1 * a, q), elliptic_factor(s2 * b, q)));
            const auto t = trace_zero_check(P, P2);
            ++configs;
            hypothesis += t.hypothesis;
            if (!t.ok()) {
              ++falsified;
              falsifying.push_back(Json{{"first", weil_to_json(P)}, {"second", weil_to_json(P2)}});
            }
          }
        }
      }
    }
    r.payload = Json{{"seed", seed},
                     {"graeffe", Json{{"samples", 1000}, {"failures", graeffe_fail}, {"witnesses", graeffe_witness}}},
                     {"tower", Json{{"samples", 100}, {"failures", tower_fail}}},
                     {"trace_zero", Json{{"configurations", configs},
                                         {"hypothesis_met", hypothesis},
                                         {"falsifications", falsified},
                                         {"falsifying_pairs", falsifying}}}};
    r.status = pass_if(graeffe_fail == 0 && tower_fail == 0 && falsified == 0);
    r.summary = "Graeffe identity on 1000 random polynomials: " + std::to_string(graeffe_fail) + " failures; " +
                std::to_string(configs) + " trace-zero configurations (" + std::to_string(hypothesis) +
                " meeting the hypothesis): " + std::to_string(falsified) + " falsifications";
  });
}

CheckResult check_phi() {
  return timed(9, "supersingular-phi-bijection", "Phi on the five normalized supersingular polynomials", 1.0,
               [&](CheckResult& r) {
    const auto rep = supersingular_phi();
    Json rows = Json::array();
    std::vector<std::size_t> mismatched;
    for (std::size_t i = 0; i < rep.domain.size(); ++i) {
      rows.push_back(Json{{"domain", poly_to_json(rep.domain[i])},
                          {"domain_text", poly_to_string(rep.domain[i])},
                          {"image", poly_to_json(rep.images[i])},
                          {"image_text", poly_to_string(rep.images[i])},
                          {"printed", poly_to_json(rep.printed[i])},
                          {"printed_text", poly_to_string(rep.printed[i])},
                          {"matches_printed", static_cast<bool>(rep.matches_printed[i])}});
      if (!rep.matches_printed[i]) mismatched.push_back(i);
    }
    r.payload = Json{{"rows", rows},
                     {"pairwise_distinct", rep.pairwise_distinct},
                     {"agrees_with_base_change", rep.agrees_with_base_change},
                     {"matches", rep.match_count()},
                     {"mismatched", mismatched}};
    const bool structural = rep.domain.size() == 5 && rep.pairwise_distinct && rep.agrees_with_base_change;
    if (structural && rep.match_count() == 5) {
      r.status = CheckStatus::pass;
    } else if (structural && rep.match_count() == 4 && mismatched == std::vector<std::size_t>{2}) {
      r.status = CheckStatus::discrepancy_documented;
    } else {
      r.status = CheckStatus::fail;
    }
    r.summary = "5 pairwise-distinct images, equal to the degree-2 base changes; " +
                std::to_string(rep.match_count()) + " of 5 match the printed list";
    if (!mismatched.empty()) {
      const auto i = mismatched.front();
      r.summary += "; Phi(" + poly_to_string(rep.domain[i]) + ") = " + poly_to_string(rep.images[i]) +
                   ", printed " + poly_to_string(rep.printed[i]);
    }
    if (!structural) r.summary = "images not distinct or not equal to the base changes";
  });
}

CheckResult check_determinism(const BundledGroups& g, std::size_t workers_a, std::size_t workers_b) {
  return timed(10, "determinism", "identical output across runs and worker counts", 0.0, [&](CheckResult& r) {
    auto snapshot = [&](std::size_t workers) {
      Json j = Json::array();
      j.push_back(check_degree2_quadratic_sweep(g, workers).payload);
      j.push_back(check_degree2_polyquadratic_sweep(g, workers).payload);
      if (const auto* d = g.find("dic3")) {
        j.push_back(search_result_to_json(
            search_counterexamples(d->table, 4, SearchMode::locally_quadratic_not_quadratic, 1'000'000, workers),
            "dic3", 4, SearchMode::locally_quadratic_not_quadratic));
      }
      if (const auto* s = g.find("sg48_3")) {
        j.push_back(search_result_to_json(
            search_counterexamples(s->table, 3, SearchMode::locally_polyquadratic_not_polyquadratic, 1'000'000,
                                   workers),
            "sg48_3", 3, SearchMode::locally_polyquadratic_not_polyquadratic));
      }
      return j.dump();
    };
    const auto first = snapshot(workers_a);
    const auto again = snapshot(workers_a);
    const auto parallel = snapshot(workers_b);
    const bool ok = first == again && first == parallel;
    r.payload = Json{{"repeat_identical", first == again}, {"worker_counts_identical", first == parallel}};
    r.status = pass_if(ok);
    r.summary = ok ? "searches repeat byte for byte, also with more workers" : "outputs differ between runs";
  });
}

RunReport run_verification(const VerifyOptions& o) {
  RunReport report;
  report.group_source = o.groups_dir ? "files" : "builtin";
  const auto g = load_bundled_groups(o.groups_dir);
  report.checks.push_back(check_table_integrity(g));
  report.checks.push_back(check_dic3_example(g));
  report.checks.push_back(check_sg48_example(g));
  report.checks.push_back(check_degree2_quadratic_sweep(g, o.workers));
  report.checks.push_back(check_degree2_polyquadratic_sweep(g, o.workers));
  report.checks.push_back(check_polyquadratic_oracle(g));
  report.checks.push_back(check_criteria_crosscheck(g, o.seed));
  report.checks.push_back(check_weil_identities(o.seed));
  report.checks.push_back(check_phi());
  report.checks.push_back(check_determinism(g, 1, std::max<std::size_t>(2, o.parallel_workers)));
  return report;
}

}  // namespace twistkit
