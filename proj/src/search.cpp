#include "twistkit/error.hpp"
#include "twistkit/twists.hpp"

#include <algorithm>
#include <map>
#include <exception>
#include <thread>

namespace twistkit {

std::string search_mode_name(SearchMode m) {
  return m == SearchMode::locally_quadratic_not_quadratic ? "lq-not-q" : "lpq-not-pq";
}

SearchMode search_mode_from_name(const std::string& name) {
  if (name == "lq-not-q" || name == "locally_quadratic_not_quadratic") return SearchMode::locally_quadratic_not_quadratic;
  if (name == "lpq-not-pq" || name == "locally_polyquadratic_not_polyquadratic") {
    return SearchMode::locally_polyquadratic_not_polyquadratic;
  }
  throw InputError("unknown search mode '" + name + "' (expected lq-not-q or lpq-not-pq)");
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> canonical_quadratic_pair(const RepSpec& a,
                                                                                         const RepSpec& b) {
  std::optional<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> best;
  for (std::size_t q : a.table->quadratic_indices()) {
    auto x = a.twisted_by(q).mults;
    auto y = b.twisted_by(q).mults;
    if (y < x) std::swap(x, y);
    auto cand = std::make_pair(std::move(x), std::move(y));
    if (!best || cand < *best) best = std::move(cand);
  }
  return *best;
}

SearchResult search_counterexamples(const TablePtr& table, std::int64_t r, SearchMode mode, std::size_t pair_budget,
                                    std::size_t workers) {
  const auto vectors = representations_of_degree(*table, r);
  std::vector<RepSpec> reps;
  reps.reserve(vectors.size());
  for (const auto& m : vectors) reps.push_back(RepSpec::from_mults(table, m));

  SearchResult result;
  const std::size_t n = reps.size();
  result.pairs_total = n < 2 ? 0 : n * (n - 1) / 2;
  result.pairs_examined = std::min(result.pairs_total, pair_budget);
  result.truncated = result.pairs_examined < result.pairs_total;

  std::vector<std::pair<std::size_t, std::size_t>> todo;
  todo.reserve(result.pairs_examined);
  for (std::size_t i = 0; i < n && todo.size() < result.pairs_examined; ++i) {
    for (std::size_t j = i + 1; j < n && todo.size() < result.pairs_examined; ++j) todo.emplace_back(i, j);
  }

  auto predicate = [&](const RepSpec& a, const RepSpec& b) {
    if (mode == SearchMode::locally_quadratic_not_quadratic) {
      if (!is_locally_quadratic_twist(a, b).holds || is_quadratic_twist(a, b).holds) return false;
      const auto canon = canonical_quadratic_pair(a, b);
      return canon.first == a.mults && canon.second == b.mults;
    }
    return is_locally_polyquadratic_twist(a, b).holds && !is_polyquadratic_twist(a, b).holds;
  };

  workers = std::max<std::size_t>(1, std::min(workers, todo.size()));
  std::vector<std::vector<std::size_t>> hits(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      for (std::size_t t = w; t < todo.size(); t += workers) {
        if (predicate(reps[todo[t].first], reps[todo[t].second])) hits[w].push_back(t);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<std::size_t> all;
  for (const auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  std::sort(all.begin(), all.end());
  for (std::size_t t : all) result.pairs.emplace_back(reps[todo[t].first], reps[todo[t].second]);
  return result;
}

}  // namespace twistkit
