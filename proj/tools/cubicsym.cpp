// cubicsym: command-line front end.
//
// Exit codes: 0 ok / claim holds, 1 claim failed, 2 usage or input error,
// 3 graph text could not be parsed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cubicsym/constructions.hpp"
#include "cubicsym/distinguishing.hpp"
#include "cubicsym/enumeration.hpp"
#include "cubicsym/io.hpp"
#include "cubicsym/report.hpp"
#include "cubicsym/search.hpp"
#include "cubicsym/verify.hpp"

using namespace cubicsym;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputArgs {
  std::string file;
  std::string graph6;
  std::string catalog;
  std::string format = "graph6";
};

void add_input_options(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("--input", in.file, "read the graph from FILE");
  cmd->add_option("--graph6", in.graph6, "graph6 string");
  cmd->add_option("--catalog", in.catalog, "catalog name, e.g. heawood or gp(10,2)");
  cmd->add_option("--format", in.format, "file / output format")->check(CLI::IsMember({"graph6", "edgelist"}));
}

std::string trim_line(const std::string& text) {
  // First non-empty line of a graph6 file.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) return line;
  }
  return "";
}

Graph load_graph(const InputArgs& in) {
  const int sources = !in.file.empty() + !in.graph6.empty() + !in.catalog.empty();
  if (sources != 1) throw UsageError("exactly one of --input, --graph6, --catalog is required");
  if (!in.catalog.empty()) return catalog(in.catalog);
  if (!in.graph6.empty()) return from_graph6(in.graph6);
  std::ifstream f(in.file, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + in.file + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  if (in.format == "edgelist") return from_edge_list(buf.str());
  return from_graph6(trim_line(buf.str()));
}

void emit_graph(const Graph& g, const std::string& format) {
  if (format == "edgelist")
    std::cout << to_edge_list(g);
  else
    std::cout << to_graph6(g) << "\n";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry invariants of finite cubic graphs"};
  app.require_subcommand(1);

  InputArgs in;
  bool json = false;
  std::optional<std::uint64_t> budget;
  int jobs = 1;

  auto* analyze_cmd = app.add_subcommand("analyze", "full symmetry report for one graph");
  add_input_options(analyze_cmd, in);
  analyze_cmd->add_flag("--json", json);
  analyze_cmd->add_option("--budget", budget, "candidate sets tried by the cost search");

  std::string catalog_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "list named graphs, or print one");
  catalog_cmd->add_option("name", catalog_name);
  catalog_cmd->add_option("--format", in.format)->check(CLI::IsMember({"graph6", "edgelist"}));
  catalog_cmd->add_flag("--json", json);

  std::string labeling = "adjacency";
  std::uint64_t seed = 0;
  std::string by;
  auto* truncate_cmd = app.add_subcommand("truncate", "generalized truncation by a cycle");
  add_input_options(truncate_cmd, in);
  truncate_cmd->add_option("--labeling", labeling)->check(CLI::IsMember({"adjacency", "rotation", "seeded"}));
  truncate_cmd->add_option("--seed", seed, "seed for --labeling seeded");
  truncate_cmd->add_option("--by", by, "catalog graph replacing each vertex (default: cycle of the degree)");

  auto* quotient_cmd = app.add_subcommand("quotient", "contract the cycle edge orbit");
  add_input_options(quotient_cmd, in);

  int n = 0;
  int min_girth = 0;
  int part = 0, parts = 1;
  bool count_only = false;
  std::vector<std::string> predicate_texts;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "connected cubic graphs on n vertices, as graph6");
  enumerate_cmd->add_option("n", n)->required();
  enumerate_cmd->add_option("--girth", min_girth, "minimum girth");
  enumerate_cmd->add_option("--where", predicate_texts, "predicate, e.g. girth=5 or arc-transitive");
  enumerate_cmd->add_option("--jobs", jobs);
  enumerate_cmd->add_option("--part", part);
  enumerate_cmd->add_option("--parts", parts);
  enumerate_cmd->add_flag("--count", count_only, "print only the number of graphs");

  auto* cost_cmd = app.add_subcommand("cost", "distinguishing cost and witness");
  add_input_options(cost_cmd, in);
  cost_cmd->add_option("--budget", budget);
  cost_cmd->add_flag("--json", json);

  std::string claim;
  std::optional<int> max_n;
  std::vector<std::string> catalog_inputs;
  auto* verify_cmd = app.add_subcommand("verify", "check a classification claim over the census");
  verify_cmd->add_option("claim", claim)->required();
  verify_cmd->add_option("--max-n", max_n);
  verify_cmd->add_option("--jobs", jobs);
  verify_cmd->add_option("--catalog-input", catalog_inputs, "extra inputs for thm34 / cor33");
  verify_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) {
      auto report = analyze(load_graph(in), {budget});
      if (json)
        print_json(to_json(report));
      else
        std::cout << to_text(report);
    } else if (catalog_cmd->parsed()) {
      if (!catalog_name.empty()) {
        emit_graph(catalog(catalog_name), in.format);
        return 0;
      }
      Json list = Json::array();
      for (const auto& name : catalog_names()) {
        Graph g = catalog(name);
        auto gr = girth(g);
        Json e;
        e["name"] = name;
        e["order"] = g.order();
        e["size"] = g.size();
        e["girth"] = gr.acyclic() ? Json(nullptr) : Json(gr.length());
        list.push_back(e);
        if (!json)
          std::printf("%-22s %4d %4zu %s\n", name.c_str(), g.order(), g.size(),
                      gr.acyclic() ? "-" : std::to_string(gr.length()).c_str());
      }
      if (json) print_json(list);
    } else if (truncate_cmd->parsed()) {
      Graph lambda;
      LabelingStrategy strategy = AdjacencyOrder{};
      if (labeling == "rotation") {
        if (in.catalog.empty()) throw UsageError("--labeling rotation needs a --catalog entry with a rotation system");
        auto entry = catalog_lookup(in.catalog);
        if (!entry.rotation) throw UsageError("catalog entry '" + in.catalog + "' has no rotation system");
        lambda = entry.graph;
        strategy = FromRotation{*entry.rotation};
      } else {
        lambda = load_graph(in);
        if (labeling == "seeded") strategy = Seeded{seed};
      }
      if (lambda.order() == 0 || !lambda.is_regular(lambda.degree(0)))
        throw UsageError("truncation needs a regular graph");
      Graph y = by.empty() ? cycle_graph(lambda.degree(0)) : catalog(by);
      emit_graph(generalized_truncation(lambda, neighborhood_labeling(lambda, strategy), y), in.format);
    } else if (quotient_cmd->parsed()) {
      Graph g = load_graph(in);
      emit_graph(cycle_quotient(g, edge_orbit_summary(g)), in.format);
    } else if (enumerate_cmd->parsed()) {
      std::vector<Predicate> preds;
      for (const auto& t : predicate_texts) preds.push_back(parse_predicate(t));
      EnumerationOptions opts{jobs, min_girth, part, parts};
      for (const auto& p : preds)
        if (auto* gp = std::get_if<GirthIs>(&p)) opts.min_girth = std::max(opts.min_girth, gp->g);
      std::uint64_t count = 0;
      enumerate_cubic(
          n, opts, [&](const Graph& g) { return preds.empty() || satisfies_all(g, preds); },
          [&](const Graph& g) {
            ++count;
            if (!count_only) std::cout << to_graph6(g) << "\n";
          });
      if (count_only) std::cout << count << "\n";
    } else if (cost_cmd->parsed()) {
      auto r = analyze(load_graph(in), {budget});
      Json j = to_json(r)["distinguishing_cost"];
      if (json) {
        print_json(j);
      } else if (j["status"] == "ok" || j["status"] == "asymmetric") {
        std::cout << j["rho"].get<int>() << " " << j["witness"].dump() << "\n";
      } else {
        std::cout << j["status"].get<std::string>() << "\n";
      }
    } else if (verify_cmd->parsed()) {
      auto report = verify_claim(claim, {max_n, jobs, catalog_inputs});
      if (json)
        print_json(to_json(report));
      else
        std::cout << to_text(report);
      return report.pass ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
