// twistkit command-line front end.
//
// Exit codes: 0 ok / relation holds, 1 verify-paper reported a failing check,
// 10 relation fails (twist-check, weil trace-zero), 20 search truncated by the pair
// budget, 30 bad input / load / fetch error, 31 internal cross-check disagreement,
// 32 any other internal error.

#include "twistkit/catalog.hpp"
#include "twistkit/config.hpp"
#include "twistkit/error.hpp"
#include "twistkit/serialize.hpp"
#include "twistkit/twists.hpp"
#include "twistkit/verify.hpp"
#include "twistkit/weil.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef TWISTKIT_DATA_DIR
#define TWISTKIT_DATA_DIR ""
#endif

using namespace twistkit;

namespace {

constexpr int kRelationFails = 10;
constexpr int kTruncated = 20;
constexpr int kInputError = 30;
constexpr int kDisagreement = 31;
constexpr int kInternal = 32;

struct GroupSource {
  std::string builtin;
  std::string file;
  std::string fetch;
};

void add_group_source(CLI::App* cmd, GroupSource& src) {
  auto* b = cmd->add_option("--builtin", src.builtin, "builtin group: " + [] {
    std::string s;
    for (const auto& n : builtin_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  auto* f = cmd->add_option("--file", src.file, "group file (JSON)");
  auto* r = cmd->add_option("--fetch", src.fetch, "abstract-group label to download (needs fetch enabled)");
  b->excludes(f)->excludes(r);
  f->excludes(r);
}

LoadedGroup load_source(const GroupSource& src, const Config& config) {
  if (!src.builtin.empty()) return load_builtin(src.builtin);
  if (!src.file.empty()) return realize(load_group_file(src.file));
  if (!src.fetch.empty()) return realize(fetch_remote_group(src.fetch, config.fetch));
  throw InputError("no group given (use --builtin, --file or --fetch)");
}

std::string words_text(const std::vector<std::size_t>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (auto x : w) s += (s.empty() ? "g" : "*g") + std::to_string(x);
  return s;
}

Json group_info_json(const LoadedGroup& lg) {
  const auto& G = *lg.group;
  Json classes = Json::array();
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    classes.push_back(Json{{"size", G.class_size(c)},
                           {"order", G.class_element_order(c)},
                           {"representative", G.word(G.classes()[c].representative)},
                           {"square_class", G.power_class(c, 2)}});
  }
  const auto fp = compute_fingerprints(G, *lg.table);
  return Json{{"name", G.name()},
              {"degree", G.degree()},
              {"order", G.order()},
              {"num_classes", G.num_classes()},
              {"exponent", G.exponent()},
              {"abelian", G.is_abelian()},
              {"abelianization", *fp.abelianization},
              {"degrees", *fp.degrees},
              {"gap_id", lg.record.gap_id},
              {"provenance", lg.record.provenance},
              {"classes", classes}};
}

void print_group_info(const LoadedGroup& lg) {
  const auto& G = *lg.group;
  std::cout << "group " << G.name() << " (degree " << G.degree() << ")\n";
  std::cout << "order " << G.order() << ", " << G.num_classes() << " classes, exponent " << G.exponent() << "\n";
  const auto ab = abelianization_invariants(G);
  std::cout << "abelianization [";
  for (std::size_t i = 0; i < ab.size(); ++i) std::cout << (i ? "," : "") << ab[i];
  std::cout << "]\n";
  if (!lg.record.gap_id.empty()) std::cout << "small group id (annotation) " << lg.record.gap_id << "\n";
  std::cout << "class  size  order  square  representative\n";
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    std::cout << c << "  " << G.class_size(c) << "  " << G.class_element_order(c) << "  " << G.power_class(c, 2)
              << "  " << words_text(G.word(G.classes()[c].representative)) << "\n";
  }
}

void print_table_text(const CharacterTable& T) {
  const auto& G = *T.group();
  std::cout << "character table of " << G.name() << " (order " << G.order() << ")\n";
  std::cout << "classes:";
  for (std::size_t c = 0; c < G.num_classes(); ++c) {
    std::cout << "  " << c << "[" << G.class_size(c) << "|" << G.class_element_order(c) << "]";
  }
  std::cout << "\n";
  for (std::size_t i = 0; i < T.size(); ++i) {
    const auto& chi = T.irreducible(i);
    std::cout << "X" << i << " deg " << T.degrees()[i];
    if (is_faithful(chi)) std::cout << " faithful";
    const auto fov = field_of_values(chi.values);
    if (fov.rational) {
      std::cout << " rational";
    } else if (fov.contained_in_gaussian) {
      std::cout << " Q(i)";
    }
    std::cout << " :";
    for (const auto& v : chi.values) std::cout << "  " << v.to_string();
    std::cout << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

std::vector<std::int64_t> parse_int_list(const std::string& text) { return parse_mults(text); }

// `g q a_0 ... a_2g` or an isogeny-class label such as 2.3.a_f
WeilPolynomial parse_weil_spec(const std::string& text) {
  if (text.find('.') != std::string::npos && text.find(' ') == std::string::npos) return parse_lmfdb_label(text);
  return parse_weil_line(text);
}

std::vector<WeilPolynomial> read_weil_lines(const std::string& path) {
  std::vector<WeilPolynomial> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    out.push_back(parse_weil_spec(line));
  }
  return out;
}

// Output of these commands is JSON already; the option exists for uniformity.
void add_json_format(CLI::App* sub, std::string& sink) {
  sub->add_option("--format", sink, "output format (json only)")->check(CLI::IsMember({"json"}));
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twistkit: exact twist relations between finite-group representations and Weil polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, json_only;
  std::size_t workers_flag = 0, max_order_flag = 0;
  app.add_option("--config", config_path, "JSON config file (also TWISTKIT_CONFIG)");
  app.add_option("--workers", workers_flag, "worker threads for searches (also TWISTKIT_WORKERS)");
  app.add_option("--max-group-order", max_order_flag, "enumeration bound (also TWISTKIT_MAX_GROUP_ORDER)");

  // group-info
  GroupSource info_src;
  std::string info_format = "text";
  auto* info = app.add_subcommand("group-info", "order, classes, power map and exponent of a group");
  add_group_source(info, info_src);
  info->add_option("--format", info_format)->check(CLI::IsMember({"text", "json"}));

  // group-export
  GroupSource export_src;
  auto* gexport = app.add_subcommand("group-export", "write a group file with computed fingerprints");
  add_group_source(gexport, export_src);
  add_json_format(gexport, json_only);

  // chartab
  GroupSource tab_src;
  std::string tab_format = "text", tab_import;
  auto* tab = app.add_subcommand("chartab", "character table");
  add_group_source(tab, tab_src);
  tab->add_option("--format", tab_format)->check(CLI::IsMember({"text", "json"}));
  tab->add_option("--import", tab_import, "verify and print a table file instead of computing one");

  // twist-check
  GroupSource tw_src;
  std::string tw_a, tw_b, tw_rel = "all";
  auto* tw = app.add_subcommand("twist-check", "decide twist relations between two representations");
  add_group_source(tw, tw_src);
  tw->add_option("--a", tw_a, "multiplicities of the first representation, e.g. 1,0,1")->required();
  tw->add_option("--b", tw_b, "multiplicities of the second representation")->required();
  add_json_format(tw, json_only);
  tw->add_option("--relation", tw_rel)->check(CLI::IsMember({"q", "pq", "lq", "lpq", "all"}));

  // search
  GroupSource se_src;
  std::int64_t se_degree = 2;
  std::string se_mode = "lq-not-q";
  std::size_t se_budget = 0;
  auto* se = app.add_subcommand("search", "enumerate locally-X-but-not-X pairs of a given degree");
  add_group_source(se, se_src);
  se->add_option("--degree", se_degree)->required()->check(CLI::PositiveNumber);
  se->add_option("--mode", se_mode)->check(CLI::IsMember({"lq-not-q", "lpq-not-pq"}));
  se->add_option("--budget", se_budget, "maximum number of pairs examined");
  add_json_format(se, json_only);

  // weil
  auto* weil = app.add_subcommand("weil", "Weil polynomial tools");
  weil->require_subcommand(1);
  int bc_g = 1, bc_k = 2;
  std::string bc_q, bc_coeffs;
  auto* bc = weil->add_subcommand("basechange", "polynomial over the degree-k extension");
  bc->add_option("--g", bc_g)->required();
  bc->add_option("--q", bc_q)->required();
  bc->add_option("--coeffs", bc_coeffs, "a_0,...,a_2g")->required();
  bc->add_option("--k", bc_k)->check(CLI::PositiveNumber);
  add_json_format(bc, json_only);
  std::string cl_p, cl_p2, cl_input;
  auto* cl = weil->add_subcommand("classify", "isogenous / quadratic / polyquadratic twist flags");
  cl->add_option("--p", cl_p, "first polynomial: 'g q a_0 ... a_2g' or an isogeny-class label");
  cl->add_option("--p2", cl_p2, "second polynomial");
  cl->add_option("--input", cl_input, "file with one polynomial per line; classifies every pair");
  add_json_format(cl, json_only);
  std::string lm_p, lm_p2, lm_input;
  auto* lm = weil->add_subcommand("trace-zero", "g = 2 trace-zero criterion");
  lm->alias("lemma314");
  lm->alias("lemma214");
  lm->add_option("--p", lm_p);
  lm->add_option("--p2", lm_p2);
  lm->add_option("--input", lm_input, "file with one polynomial per line; checks every pair");
  add_json_format(lm, json_only);
  auto* phi = weil->add_subcommand("phi", "the map P -> Res_Z(P(Z), Z^2 - T) on supersingular polynomials");
  add_json_format(phi, json_only);

  // verify-paper
  bool vp_json = false, vp_timings = false, vp_builtin = false;
  std::string vp_dir;
  auto* vp = app.add_subcommand("verify-paper", "run the reproduction checks and report");
  vp->add_flag("--json", vp_json, "machine-readable report");
  std::string vp_format = "text";
  vp->add_option("--format", vp_format, "text or json (json is the same as --json)")->check(CLI::IsMember({"text", "json"}));
  vp->add_flag("--timings", vp_timings, "include wall times in the JSON report");
  vp->add_option("--groups-dir", vp_dir, "directory with the bundled group files");
  vp->add_flag("--builtin-groups", vp_builtin, "use the compiled-in group records instead of files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    Config config = load_config(config_path.empty() ? std::nullopt : std::optional<std::string>(config_path));
    if (workers_flag) config.workers = workers_flag;
    if (max_order_flag) config.max_group_order = max_order_flag;
    install_bounds(config);

    if (*info) {
      const auto lg = load_source(info_src, config);
      if (info_format == "json") {
        emit(group_info_json(lg), true);
      } else {
        print_group_info(lg);
      }
      return 0;
    }
    if (*gexport) {
      const auto lg = load_source(export_src, config);
      auto rec = lg.record;
      rec.expected = compute_fingerprints(*lg.group, *lg.table);
      std::cout << group_record_to_json(rec) << "\n";
      return 0;
    }
    if (*tab) {
      const auto lg = load_source(tab_src, config);
      TablePtr table = lg.table;
      if (!tab_import.empty()) table = chartab_from_json(parse_json(read_file(tab_import), tab_import), lg.group);
      if (tab_format == "json") {
        emit(chartab_to_json(*table), true);
      } else {
        print_table_text(*table);
      }
      return 0;
    }
    if (*tw) {
      const auto lg = load_source(tw_src, config);
      const auto a = RepSpec::from_mults(lg.table, parse_int_list(tw_a));
      const auto b = RepSpec::from_mults(lg.table, parse_int_list(tw_b));
      std::vector<Relation> rels;
      if (tw_rel == "all") {
        rels = {Relation::quadratic, Relation::polyquadratic, Relation::locally_quadratic,
                Relation::locally_polyquadratic};
      } else {
        rels = {relation_from_name(tw_rel)};
      }
      Json verdicts = Json::array();
      bool all_hold = true;
      for (auto r : rels) {
        const auto v = decide(r, a, b);
        if (!verify_verdict(v, a, b)) throw InternalError("certificate for " + relation_name(r) + " does not verify");
        if (r == Relation::polyquadratic && polyquadratic_subgroup_oracle(a, b).holds != v.holds) {
          throw InternalError("polyquadratic matching and subgroup oracle disagree");
        }
        all_hold = all_hold && v.holds;
        verdicts.push_back(verdict_to_json(v));
      }
      emit(Json{{"group", lg.group->name()},
                {"a", repspec_to_json(a)},
                {"b", repspec_to_json(b)},
                {"verdicts", verdicts}},
           true);
      return all_hold ? 0 : kRelationFails;
    }
    if (*se) {
      const auto lg = load_source(se_src, config);
      const auto mode = search_mode_from_name(se_mode);
      const auto res = search_counterexamples(lg.table, se_degree, mode, se_budget ? se_budget : config.search_budget,
                                              config.workers);
      for (const auto& [a, b] : res.pairs) emit(Json{{"a", a.mults}, {"b", b.mults}}, false);
      emit(Json{{"group", lg.group->name()},
                {"degree", se_degree},
                {"mode", search_mode_name(mode)},
                {"pairs_found", res.pairs.size()},
                {"pairs_total", res.pairs_total},
                {"pairs_examined", res.pairs_examined},
                {"truncated", res.truncated}},
           false);
      return res.truncated ? kTruncated : 0;
    }
    if (*bc) {
      IntPoly coeffs;
      for (auto c : parse_int_list(bc_coeffs)) coeffs.emplace_back(static_cast<long>(c));
      const WeilPolynomial p(bc_g, Integer(bc_q), coeffs);
      const auto out = base_change(p, static_cast<unsigned>(bc_k));
      emit(Json{{"input", weil_to_json(p)}, {"k", bc_k}, {"base_change", weil_to_json(out)}}, false);
      return 0;
    }
    if (*cl || *lm) {
      const bool classify = static_cast<bool>(*cl);
      const std::string& input = classify ? cl_input : lm_input;
      const std::string& p1 = classify ? cl_p : lm_p;
      const std::string& p2 = classify ? cl_p2 : lm_p2;
      std::vector<std::pair<WeilPolynomial, WeilPolynomial>> pairs;
      if (!input.empty()) {
        const auto polys = read_weil_lines(input);
        for (std::size_t i = 0; i < polys.size(); ++i) {
          for (std::size_t j = i + 1; j < polys.size(); ++j) pairs.emplace_back(polys[i], polys[j]);
        }
      } else {
        if (p1.empty() || p2.empty()) throw InputError("give --p and --p2, or --input");
        pairs.emplace_back(parse_weil_spec(p1), parse_weil_spec(p2));
      }
      bool falsified = false;
      for (const auto& [x, y] : pairs) {
        if (classify) {
          emit(classification_to_json(classify_pair(x, y)), false);
        } else {
          const auto t = trace_zero_check(x, y);
          falsified = falsified || !t.ok();
          emit(Json{{"first", weil_to_json(x)},
                    {"second", weil_to_json(y)},
                    {"hypothesis", t.hypothesis},
                    {"conclusion", t.conclusion},
                    {"ok", t.ok()}},
               false);
        }
      }
      return falsified ? kRelationFails : 0;
    }
    if (*phi) {
      const auto rep = supersingular_phi();
      for (std::size_t i = 0; i < rep.domain.size(); ++i) {
        emit(Json{{"domain", poly_to_json(rep.domain[i])},
                  {"image", poly_to_json(rep.images[i])},
                  {"image_text", poly_to_string(rep.images[i])},
                  {"printed", poly_to_json(rep.printed[i])},
                  {"matches_printed", static_cast<bool>(rep.matches_printed[i])}},
             false);
      }
      Json summary{{"pairwise_distinct", rep.pairwise_distinct},
                   {"agrees_with_base_change", rep.agrees_with_base_change},
                   {"matches_printed", rep.match_count()}};
      for (std::size_t i = 0; i < rep.domain.size(); ++i) {
        if (!rep.matches_printed[i]) {
          summary["discrepancy"] = Json{{"index", i},
                                        {"domain", poly_to_string(rep.domain[i])},
                                        {"computed", poly_to_string(rep.images[i])},
                                        {"printed", poly_to_string(rep.printed[i])}};
          break;
        }
      }
      emit(summary, false);
      return 0;
    }
    if (*vp) {
      VerifyOptions o;
      o.workers = config.workers;
      if (!vp_dir.empty()) {
        o.groups_dir = vp_dir;
      } else if (!vp_builtin && std::string(TWISTKIT_DATA_DIR).size() &&
                 std::filesystem::is_directory(TWISTKIT_DATA_DIR)) {
        o.groups_dir = TWISTKIT_DATA_DIR;
      }
      const auto report = run_verification(o);
      if (vp_json || vp_format == "json") {
        emit(report.to_json(vp_timings), true);
      } else {
        std::cout << report.to_text();
      }
      return report.ok() ? 0 : 1;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDisagreement;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return 0;
}
