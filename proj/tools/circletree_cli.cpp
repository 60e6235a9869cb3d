// Command-line front end: genus, reduce, ereduce, classify-tree, catalog,
// census, series, classify, verify. Machine output (JSON, or CSV with --csv)
// goes to stdout, diagnostics to stderr. Exit codes: 0 success, 1 domain
// error or bad input, 2 broken invariant / catalog failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "circletree/catalog_json.hpp"
#include "circletree/circletree.hpp"

using nlohmann::ordered_json;
using namespace circletree;

namespace {

struct GraphArgs {
  std::string positional;
  int n = 0;
  std::string edges;

  CircleGraph resolve() const {
    if (!positional.empty()) return parse_circle_graph(positional);
    if (n > 0) return parse_circle_graph("n=" + std::to_string(n) + ";edges=" + edges);
    throw DomainError("no graph given: pass \"n=<int>;edges=a-b,...\" or --n with --edges");
  }
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("graph", args.positional, "graph in n=<int>;edges=a-b,... form");
  cmd->add_option("--n", args.n, "point count (with --edges)");
  cmd->add_option("--edges", args.edges, "comma-separated chord list a-b,c-d,...");
}

ordered_json edges_json(const EdgeList& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back(format_edge(e));
  return out;
}

std::optional<std::filesystem::path> cache_directory(const std::string& flag) {
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv("CIRCLE_GENUS_CACHE")) return std::filesystem::path(env);
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "circle-genus";
  return std::nullopt;
}

int run(int argc, char** argv) {
  CLI::App app{"circle-tree genus toolkit"};
  app.require_subcommand(1);

  GraphArgs genus_args, reduce_args, ereduce_args, classify_tree_args;
  int census_n = 0, series_max = -1;
  long long classify_value = 0;
  int verify_n_max = 8;
  int jobs = 0;
  bool slow = false, by_form = false, parity = false, csv = false;
  std::string cache_dir_flag;

  auto* genus_cmd = app.add_subcommand("genus", "genus of the drawing chords + circle");
  add_graph_options(genus_cmd, genus_args);

  auto* reduce_cmd = app.add_subcommand("reduce", "final offspring under the two deletion operations");
  add_graph_options(reduce_cmd, reduce_args);

  auto* ereduce_cmd = app.add_subcommand("ereduce", "three-step e-reduction of a genus-one tree");
  add_graph_options(ereduce_cmd, ereduce_args);

  auto* classify_tree_cmd =
      app.add_subcommand("classify-tree", "catalog form of a genus-one tree");
  add_graph_options(classify_tree_cmd, classify_tree_args);

  auto* catalog_cmd = app.add_subcommand("catalog", "emit the derived form catalog");

  auto* census_cmd = app.add_subcommand("census", "exhaustive genus-one census of labeled trees");
  census_cmd->add_option("--n", census_n, "point count")->required();
  census_cmd->add_flag("--slow", slow, "allow n >= 9");
  census_cmd->add_flag("--by-form", by_form, "include per-form and orbit data");
  census_cmd->add_option("--jobs", jobs, "worker count (default: hardware)");
  census_cmd->add_option("--cache-dir", cache_dir_flag, "census cache directory");
  census_cmd->add_flag("--csv", csv, "emit the cache CSV row format");

  auto* series_cmd = app.add_subcommand("series", "tables of a_k, b_k, c_k, l_k");
  series_cmd->add_option("--max", series_max, "largest index")->required();
  series_cmd->add_flag("--parity", parity, "include parity columns");
  series_cmd->add_flag("--csv", csv, "emit CSV instead of JSON");

  auto* classify_cmd = app.add_subcommand("classify", "divisibility of f(n) by n");
  classify_cmd->add_option("--n", classify_value, "point count")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the exhaustive verification suite");
  verify_cmd->add_option("--n-max", verify_n_max, "largest n for the exhaustive sweeps");
  verify_cmd->add_flag("--slow", slow, "include the n=9 sweep and the n=10 census");
  verify_cmd->add_option("--jobs", jobs, "worker count (default: hardware)");
  verify_cmd->add_option("--cache-dir", cache_dir_flag, "census cache directory");

  CLI11_PARSE(app, argc, argv);

  if (genus_cmd->parsed()) {
    ordered_json j;
    j["genus"] = genus(genus_args.resolve());
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (reduce_cmd->parsed()) {
    const CircleGraph g = reduce_args.resolve();
    const auto [fin, trace] = final_offspring(g);
    const auto verdict = match_final_form(g);
    ordered_json j;
    j["schema"] = 1;
    j["input"] = format_circle_graph(g);
    j["final"] = format_circle_graph(fin);
    j["kind"] = to_string(verdict.kind);
    j["canonical"] = {{"k", verdict.canonical.k},
                      {"edges", edges_json(verdict.canonical.edges)},
                      {"period", verdict.canonical.period}};
    j["trace"] = ordered_json::array();
    for (const ReductionStep& step : trace) {
      ordered_json s;
      s["op"] = step.op == ReductionStep::Op::DeleteUncrossed ? "delete-uncrossed"
                                                              : "collapse-parallel";
      s["removed"] = edges_json(step.removed);
      j["trace"].push_back(std::move(s));
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (ereduce_cmd->parsed()) {
    const CircleGraph g = ereduce_args.resolve();
    const CircleTree tree(g);
    const EReductionResult er = e_reduce(tree);
    ordered_json j;
    j["schema"] = 1;
    j["input"] = format_circle_graph(g);
    j["egraphs"] = ordered_json::array();
    for (std::size_t i = 0; i < er.egraphs.size(); ++i) {
      const EGraph& eg = er.egraphs[i];
      ordered_json e;
      e["parallel"] = edges_json(eg.parallel);
      e["uncrossed"] = edges_json(eg.uncrossed);
      e["arcs"] = {{eg.arcs[0].from, eg.arcs[0].to}, {eg.arcs[1].from, eg.arcs[1].to}};
      e["outermost"] = {format_edge(eg.outermost.first), format_edge(eg.outermost.second)};
      e["representative"] = format_edge(er.representatives[i]);
      j["egraphs"].push_back(std::move(e));
    }
    j["prereduced"] = format_circle_graph(er.prereduced);
    j["reduced"] = format_circle_graph(er.reduced);
    j["added"] = edges_json(er.added_edges);
    j["form"] = classify_tree(tree);
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (classify_tree_cmd->parsed()) {
    const CircleGraph g = classify_tree_args.resolve();
    const std::string id = classify_tree(CircleTree(g));
    const FormEntry& f = form_metadata(id);
    ordered_json j;
    j["schema"] = 1;
    j["form"] = id;
    j["points"] = f.points;
    j["period"] = f.period;
    j["source"] = f.source;
    j["mirror"] = f.mirror;
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (catalog_cmd->parsed()) {
    std::cout << catalog_snapshot_text();
    return 0;
  }

  if (census_cmd->parsed()) {
    if (census_n >= 9 && !slow)
      throw DomainError("census at n >= 9 enumerates billions of trees; pass --slow to confirm");
    CensusOptions opts;
    opts.jobs = jobs;
    const auto dir = cache_directory(cache_dir_flag);
    if (by_form) {
      const CensusReport rep = count_f(census_n, opts);
      if (dir) census_cache_store(*dir, rep);
      ordered_json j;
      j["schema"] = 1;
      j["n"] = rep.n;
      j["f_n"] = rep.f_n;
      j["f_mod_n"] = rep.f_mod_n;
      if (rep.p_n >= 0)
        j["p_n"] = rep.p_n;
      else
        j["p_n"] = nullptr;
      j["class_count"] = rep.class_count;
      j["orbit_periods"] = ordered_json::object();
      for (const auto& [period, count] : rep.orbit_periods)
        j["orbit_periods"][std::to_string(period)] = count;
      j["by_form"] = ordered_json::object();
      for (const auto& [form, count] : rep.by_form) j["by_form"][form] = count;
      j["kernel_version"] = kKernelVersion;
      std::cout << j.dump() << "\n";
      return 0;
    }
    CensusOptions summary_opts = opts;
    const CensusCacheRow row = census_summary(census_n, summary_opts, dir);
    if (csv) {
      std::cout << kCensusCacheHeader << "\n"
                << row.n << ',' << row.f_n << ',' << row.f_mod_n << ',';
      if (row.p_n >= 0) std::cout << row.p_n;
      std::cout << ',' << row.kernel_version << "\n";
      return 0;
    }
    ordered_json j;
    j["schema"] = 1;
    j["n"] = row.n;
    j["f_n"] = row.f_n;
    j["f_mod_n"] = row.f_mod_n;
    if (row.p_n >= 0)
      j["p_n"] = row.p_n;
    else
      j["p_n"] = nullptr;
    j["kernel_version"] = row.kernel_version;
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (series_cmd->parsed()) {
    if (series_max < 0) throw DomainError("--max must be nonnegative");
    const SeriesTable t = series_tables(series_max);
    if (csv) {
      std::cout << "k,a,b,c,l";
      if (parity) std::cout << ",a_mod2,b_mod2,c_mod2,l_mod2";
      std::cout << "\n";
      for (int k = 0; k <= series_max; ++k) {
        std::cout << k << ',' << t.a[k] << ',' << t.b[k] << ',' << t.c[k] << ',' << t.l[k];
        if (parity)
          std::cout << ',' << parity_a(k) << ',' << parity_b(k) << ',' << parity_c(k) << ','
                    << parity_l(k);
        std::cout << "\n";
      }
      return 0;
    }
    ordered_json j;
    j["schema"] = 1;
    j["rows"] = ordered_json::array();
    for (int k = 0; k <= series_max; ++k) {
      ordered_json row;
      row["k"] = k;
      row["a"] = t.a[k].str();
      row["b"] = t.b[k].str();
      row["c"] = t.c[k].str();
      row["l"] = t.l[k].str();
      if (parity) {
        row["a_mod2"] = parity_a(k);
        row["b_mod2"] = parity_b(k);
        row["c_mod2"] = parity_c(k);
        row["l_mod2"] = parity_l(k);
      }
      j["rows"].push_back(std::move(row));
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (classify_cmd->parsed()) {
    const DivisibilityVerdict v = classify_n(classify_value);
    ordered_json j;
    j["schema"] = 1;
    j["n"] = classify_value;
    j["verdict"] = to_string(v.verdict);
    if (v.witness) {
      ordered_json w;
      w["family"] = v.witness->family;
      w["v"] = v.witness->v;
      if (v.witness->k > 0) w["k"] = v.witness->k;
      w["negligent"] = v.witness->v_negligent;
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  if (verify_cmd->parsed()) {
    CensusOptions opts;
    opts.jobs = jobs;
    const VerifyReport rep = verify_suite(verify_n_max, slow, opts, cache_directory(cache_dir_flag));
    ordered_json j;
    j["schema"] = 1;
    j["lines"] = ordered_json::array();
    for (const VerifyLine& l : rep.lines) {
      std::cerr << (l.pass ? "PASS " : "FAIL ") << l.claim
                << (l.detail.empty() ? "" : "  [" + l.detail + "]") << "\n";
      ordered_json line;
      line["claim"] = l.claim;
      line["pass"] = l.pass;
      line["detail"] = l.detail;
      j["lines"].push_back(std::move(line));
    }
    j["all_pass"] = rep.all_pass();
    std::cout << j.dump() << "\n";
    if (!rep.all_pass()) throw InvariantError("verification failed");
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
