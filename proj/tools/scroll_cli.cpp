// Command-line surface for the scroll enumerative toolkit.  All
// subcommands are batch; the default output is a JSON envelope on stdout,
// diagnostics go to stderr.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scroll/chowring.hpp"
#include "scroll/degeneration.hpp"
#include "scroll/dualgraph.hpp"
#include "scroll/numerics.hpp"

using json = nlohmann::ordered_json;
using scroll::i64;

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kResource = 3, kInternal = 4 };

struct Options {
  bool table = false;
  std::optional<i64> cap;  // downward-only enumeration cap
};

std::string rational_str(const scroll::Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

void apply_cap(const Options& opt, i64 requested) {
  if (opt.cap && requested > *opt.cap)
    throw scroll::resource_error("enumeration size " +
                                 std::to_string(requested) +
                                 " exceeds --cap " + std::to_string(*opt.cap));
}

json envelope(const std::string& command, json inputs, json result,
              const std::vector<std::string>& warnings) {
  json env;
  env["schema_version"] = "1";
  env["command"] = command;
  env["inputs"] = std::move(inputs);
  env["result"] = std::move(result);
  env["warnings"] = warnings;
  return env;
}

void print_table(const json& result, int indent = 0) {
  for (const auto& [key, value] : result.items()) {
    std::cout << std::string(indent, ' ') << key << ": ";
    if (value.is_object()) {
      std::cout << "\n";
      print_table(value, indent + 2);
    } else {
      std::cout << value.dump() << "\n";
    }
  }
}

void emit(const Options& opt, const json& env) {
  if (opt.table)
    print_table(env["result"]);
  else
    std::cout << env.dump(2) << "\n";
  for (const auto& w : env["warnings"])
    std::cerr << "warning: " << w.get<std::string>() << "\n";
}

void maybe_warn_hdg(i64 d, i64 g, std::vector<std::string>& warnings) {
  if (!scroll::ScrollParams(d, g).in_Hdg())
    warnings.push_back("(d, g) = (" + std::to_string(d) + ", " +
                       std::to_string(g) +
                       ") fails d >= 2g + 3 + min{1, g-1}; formula values "
                       "are outside the theorem's range");
}

void cmd_dims(const Options& opt, i64 d, i64 g, i64 m) {
  std::vector<std::string> warnings;
  maybe_warn_hdg(d, g, warnings);
  i64 dm = scroll::expected_dim(d, g, m);
  json result;
  result["expected_dim"] = dm;
  json range = json::array();
  if (g >= 1) {
    if (dm < 0) warnings.push_back("d_m = -1: the family is empty");
    for (const auto& e : scroll::splitting_range(d, g, m))
      range.push_back({{"m_X", e.m_X},
                       {"dim_on_X", e.dim_on_X},
                       {"dim_component", e.dim_component}});
  } else {
    warnings.push_back("splitting range needs g >= 1; omitted");
  }
  result["splitting_range"] = range;
  emit(opt, envelope("dims", {{"d", d}, {"g", g}, {"m", m}}, result,
                     warnings));
}

void cmd_min_sections(const Options& opt, i64 d, i64 g) {
  std::vector<std::string> warnings;
  maybe_warn_hdg(d, g, warnings);
  auto ms = scroll::min_unisecant_degree(d, g);
  json result;
  result["m_bar"] = ms.m_bar;
  result["kind"] = ms.finite ? "finite_count" : "one_dim_family";
  if (ms.finite) result["count"] = ms.count.get_str();
  emit(opt, envelope("min-sections", {{"d", d}, {"g", g}}, result, warnings));
}

void cmd_index(const Options& opt, i64 d, i64 g, i64 m) {
  std::vector<std::string> warnings;
  maybe_warn_hdg(d, g, warnings);
  mpz_class idx = scroll::index(d, g, m);
  auto proj = scroll::projection_reduction(d, g, m);
  if (proj.hdg_warning)
    warnings.push_back("projected scroll fails the d >= 2g + 3 + min{1, g-1} "
                       "bound; minimal-section count unverified there");
  json result;
  result["index"] = idx.get_str();
  result["projection"] = {{"d_prime", proj.d_prime},
                          {"g_prime", proj.g_prime},
                          {"m_prime", proj.m_prime},
                          {"ambient", proj.ambient},
                          {"d_prime_plus_g_odd",
                           (proj.d_prime + proj.g_prime) % 2 != 0},
                          {"expected_dim_prime",
                           scroll::expected_dim(proj.d_prime, proj.g_prime,
                                                proj.m_prime)}};
  emit(opt, envelope("index", {{"d", d}, {"g", g}, {"m", m}}, result,
                     warnings));
}

void cmd_chow_product(const Options& opt, i64 g, bool with_terms) {
  std::vector<std::string> warnings;
  json result;
  result["g"] = g;
  result["term_count"] = scroll::product_H_term_count(static_cast<int>(g)).get_str();
  if (g <= 20) {
    apply_cap(opt, i64(1) << g);
    auto prod = scroll::product_H(static_cast<int>(g));
    result["pair_with_V0"] = scroll::pair_with_V0(prod);
    if (with_terms) {
      json terms = json::array();
      for (const auto& [bits, coeff] : prod.terms())
        terms.push_back(
            (coeff == 1 ? "" : std::to_string(coeff) + "*") +
            scroll::monomial_to_string(bits, prod.ambient_g()));
      result["terms"] = terms;
    }
  } else {
    warnings.push_back("g > 20: count-only mode, terms not materialized");
  }
  emit(opt, envelope("chow-product", {{"g", g}}, result, warnings));
}

void cmd_limit_graph(const Options& opt, i64 g, bool dot) {
  apply_cap(opt, i64(1) << g);
  auto graph = scroll::build_limit_graph(static_cast<int>(g));
  if (dot) {
    std::cout << scroll::to_dot(graph);
    return;
  }
  json result;
  result["v"] = graph.vertex_count();
  result["e"] = graph.edge_count();
  result["euler_char"] = scroll::euler_char(graph);
  result["arithmetic_genus"] = scroll::arithmetic_genus(graph);
  result["vertices"] = graph.vertex_ids;
  json edges = json::array();
  for (const auto& [a, b] : graph.edges)
    edges.push_back({graph.vertex_ids[a], graph.vertex_ids[b]});
  result["edges"] = edges;
  emit(opt, envelope("limit-graph", {{"g", g}}, result, {}));
}

void cmd_genus(const Options& opt, i64 g, bool via_graph) {
  json result;
  result["genus"] = scroll::genus_formula(g).get_str();
  if (via_graph) {
    auto graph = scroll::build_limit_graph(static_cast<int>(g));
    i64 gamma = scroll::arithmetic_genus(graph);
    result["graph"] = {{"v", graph.vertex_count()},
                       {"e", graph.edge_count()},
                       {"euler_char", scroll::euler_char(graph)},
                       {"genus", gamma}};
    result["paths_agree"] =
        (mpz_class(static_cast<long>(gamma)) == scroll::genus_formula(g));
  }
  emit(opt, envelope("genus", {{"g", g}}, result, {}));
}

void cmd_monodromy(const Options& opt, i64 g, bool brute_force) {
  apply_cap(opt, i64(1) << g);
  auto t = scroll::monodromy_transpositions(static_cast<int>(g));
  json result;
  result["symbols"] = static_cast<i64>(t.symbols.size());
  result["swaps"] = static_cast<i64>(t.swaps.size());
  result["full_symmetric"] = scroll::is_full_symmetric(t);
  if (brute_force)
    result["group_order"] = scroll::generated_group_order(t).get_str();
  emit(opt, envelope("monodromy", {{"g", g}}, result, {}));
}

void cmd_stability(const Options& opt, i64 deg1, i64 deg2) {
  auto v = scroll::classify_decomposable(scroll::DecomposableBundle(deg1, deg2));
  json result;
  switch (v.kind) {
    case scroll::StabilityKind::Stable: result["kind"] = "stable"; break;
    case scroll::StabilityKind::StrictlySemistable:
      result["kind"] = "strictly_semistable";
      break;
    case scroll::StabilityKind::Unstable: result["kind"] = "unstable"; break;
  }
  result["destabilizer"] =
      v.destabilizer ? json(*v.destabilizer == 0 ? "first" : "second")
                     : json(nullptr);
  result["slope"] = rational_str(v.slope);
  emit(opt, envelope("stability", {{"deg1", deg1}, {"deg2", deg2}}, result,
                     {}));
}

void cmd_validate(const Options& opt, i64 d, i64 g, bool strict) {
  scroll::ScrollParams p(d, g);
  if (strict) scroll::require_in_Hdg(d, g, "validate --strict");
  std::vector<std::string> warnings;
  if (!p.in_Hdg()) maybe_warn_hdg(d, g, warnings);
  json result;
  result["in_Hdg"] = p.in_Hdg();
  result["smooth_range"] = p.smooth_range();
  result["ambient_dim"] = scroll::ambient_dim(d, g, 0);
  if (p.in_Hdg()) result["hilbert_dim"] = scroll::hilbert_dim(d, g);
  emit(opt, envelope("validate", {{"d", d}, {"g", g}, {"strict", strict}},
                     result, warnings));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerative invariants of non-special scrolls"};
  app.require_subcommand(1);

  Options opt;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON envelope output (default)");
  app.add_flag("--table", opt.table, "human-readable columns");
  i64 cap_value = 0;
  auto* cap_opt = app.add_option("--cap", cap_value,
                                 "override enumeration caps (downward only)");

  i64 d = 0, g = 0, m = 0, deg1 = 0, deg2 = 0;
  bool with_terms = false, dot = false, via_graph = false,
       brute_force = false, strict = false;

  auto* dims = app.add_subcommand("dims", "expected dimension and splitting");
  dims->add_option("d", d)->required();
  dims->add_option("g", g)->required();
  dims->add_option("m", m)->required();

  auto* minsec = app.add_subcommand("min-sections", "minimal unisecants");
  minsec->add_option("d", d)->required();
  minsec->add_option("g", g)->required();

  auto* index = app.add_subcommand("index", "index with projection trace");
  index->add_option("d", d)->required();
  index->add_option("g", g)->required();
  index->add_option("m", m)->required();

  auto* chow = app.add_subcommand("chow-product", "H_1 ... H_g expansion");
  chow->add_option("g", g)->required();
  chow->add_flag("--terms", with_terms, "list the expanded monomials");

  auto* graph = app.add_subcommand("limit-graph", "limit dual graph");
  graph->add_option("g", g)->required();
  graph->add_flag("--dot", dot, "DOT output");

  auto* genus = app.add_subcommand("genus", "arithmetic genus");
  genus->add_option("g", g)->required();
  genus->add_flag("--via-graph", via_graph, "cross-check via the dual graph");

  auto* mono = app.add_subcommand("monodromy", "minimal-section monodromy");
  mono->add_option("g", g)->required();
  mono->add_flag("--brute-force", brute_force,
                 "also compute the generated group order (g <= 3)");

  auto* stab = app.add_subcommand("stability", "decomposable bundle verdict");
  stab->add_option("deg1", deg1)->required();
  stab->add_option("deg2", deg2)->required();

  auto* validate = app.add_subcommand("validate", "range checks for (d, g)");
  validate->add_option("d", d)->required();
  validate->add_option("g", g)->required();
  validate->add_flag("--strict", strict, "error when the bound fails");

  // Let --json/--table/--cap trail a subcommand.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n" << app.help();
    return kUsage;
  }
  if (cap_opt->count()) {
    if (cap_value < 1) {
      std::cerr << "--cap must be positive\n";
      return kUsage;
    }
    opt.cap = cap_value;
  }

  try {
    if (dims->parsed()) cmd_dims(opt, d, g, m);
    else if (minsec->parsed()) cmd_min_sections(opt, d, g);
    else if (index->parsed()) cmd_index(opt, d, g, m);
    else if (chow->parsed()) cmd_chow_product(opt, g, with_terms);
    else if (graph->parsed()) cmd_limit_graph(opt, g, dot);
    else if (genus->parsed()) cmd_genus(opt, g, via_graph);
    else if (mono->parsed()) cmd_monodromy(opt, g, brute_force);
    else if (stab->parsed()) cmd_stability(opt, deg1, deg2);
    else if (validate->parsed()) cmd_validate(opt, d, g, strict);
  } catch (const scroll::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const scroll::parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const scroll::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const scroll::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
