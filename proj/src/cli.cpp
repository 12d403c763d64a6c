#include "diamondpaths/cli.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diamondpaths/connectivity.hpp"
#include "diamondpaths/construct.hpp"
#include "diamondpaths/diamond.hpp"
#include "diamondpaths/experiments.hpp"
#include "diamondpaths/graph.hpp"
#include "diamondpaths/serialize.hpp"

namespace diamondpaths {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

Graph read_graph(const std::string& input_path, std::istream& in, bool collapse) {
  if (input_path.empty()) {
    return parse_graph(in, GraphFormat::edge_list, collapse);
  }
  std::ifstream file(input_path);
  if (!file) {
    throw parse_error("cannot open input file \"" + input_path + "\"");
  }
  return parse_graph(file, GraphFormat::edge_list, collapse);
}

GraphFormat format_from_name(const std::string& name) {
  if (name == "edge-list") return GraphFormat::edge_list;
  if (name == "structured") return GraphFormat::structured;
  if (name == "dot") return GraphFormat::dot;
  throw parse_error("unknown format \"" + name + "\"");
}

int emit_report(const Report& report, std::ostream& out) {
  out << serialize_report(report);
  return report.ok() ? kExitOk : kExitCounterexample;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Edge-disjoint and independent path toolkit over recursive diamond graphs"};
  app.name("diamondpaths");
  app.require_subcommand(1);

  // diamond
  auto* diamond_cmd = app.add_subcommand("diamond", "Generate a recursive diamond graph");
  int diamond_order = 0;
  std::string diamond_format = "edge-list";
  bool counts_only = false;
  diamond_cmd->add_option("--order", diamond_order, "Diamond order p")->required();
  auto* diamond_format_opt = diamond_cmd->add_option("--format", diamond_format, "Output format")
                                 ->check(CLI::IsMember({"edge-list", "structured", "dot"}));
  diamond_cmd->add_flag("--counts-only", counts_only, "Print counts without building the graph")
      ->excludes(diamond_format_opt);

  // paths edge-disjoint | independent
  auto* paths_cmd = app.add_subcommand("paths", "Maximum disjoint path systems");
  paths_cmd->require_subcommand(1);
  std::string input_path;
  bool collapse = false;
  std::string src, dst;
  auto* edge_cmd = paths_cmd->add_subcommand("edge-disjoint", "Maximum edge-disjoint paths");
  edge_cmd->add_option("--source", src, "Source vertex")->required();
  edge_cmd->add_option("--sink", dst, "Sink vertex")->required();
  edge_cmd->add_option("--input", input_path, "Edge-list file (default: stdin)");
  edge_cmd->add_flag("--collapse", collapse, "Collapse duplicate input edges");
  auto* indep_cmd = paths_cmd->add_subcommand("independent", "Maximum independent paths + cut");
  indep_cmd->add_option("--from", src, "First endpoint")->required();
  indep_cmd->add_option("--to", dst, "Second endpoint")->required();
  indep_cmd->add_option("--input", input_path, "Edge-list file (default: stdin)");
  indep_cmd->add_flag("--collapse", collapse, "Collapse duplicate input edges");

  // construct two | three
  auto* construct_cmd = app.add_subcommand("construct", "Independent-path witnesses");
  construct_cmd->require_subcommand(1);
  auto* two_cmd = construct_cmd->add_subcommand("two", "Two independent paths from two edge-disjoint");
  two_cmd->add_option("--source", src, "Source vertex")->required();
  two_cmd->add_option("--sink", dst, "Sink vertex")->required();
  two_cmd->add_option("--input", input_path, "Edge-list file (default: stdin)");
  two_cmd->add_flag("--collapse", collapse, "Collapse duplicate input edges");
  auto* three_cmd =
      construct_cmd->add_subcommand("three", "Three independent paths from three edge-disjoint");
  three_cmd->add_option("--source", src, "Source vertex")->required();
  three_cmd->add_option("--sink", dst, "Sink vertex")->required();
  three_cmd->add_option("--input", input_path, "Edge-list file (default: stdin)");
  three_cmd->add_flag("--collapse", collapse, "Collapse duplicate input edges");

  // verify lemma1 | lemma2
  auto* verify_cmd = app.add_subcommand("verify", "Verification experiments");
  verify_cmd->require_subcommand(1);
  bool serial = false;
  auto* lemma1_cmd = verify_cmd->add_subcommand("lemma1", "Three-path witnesses on planted instances");
  Lemma1Params lemma1;
  lemma1_cmd->add_option("--trials", lemma1.trials, "Number of planted instances");
  lemma1_cmd->add_option("--seed", lemma1.seed, "Master seed");
  lemma1_cmd->add_option("--n", lemma1.n_max, "Maximum instance size");
  lemma1_cmd->add_option("--extra", lemma1.extra_fractions,
                         "Extra-edge fractions cycled across trials");
  lemma1_cmd->add_flag("--serial", serial, "Run the scan on one thread");
  auto* lemma2_cmd = verify_cmd->add_subcommand("lemma2", "All-pairs diamond scan");
  int lemma2_order = 0;
  int max_order = 3;
  lemma2_cmd->add_option("--order", lemma2_order, "Diamond order")->required();
  lemma2_cmd->add_option("--max-order", max_order, "All-pairs guard (up to 4)");
  lemma2_cmd->add_flag("--serial", serial, "Run the scan on one thread");

  // f-table
  auto* ftable_cmd = app.add_subcommand("f-table", "Lower and upper bounds for f(k)");
  int k_max = 0;
  int scan_limit = 3;
  ftable_cmd->add_option("--k-max", k_max, "Largest k")->required();
  ftable_cmd->add_option("--scan-limit", scan_limit, "Largest diamond order scanned with flow");
  ftable_cmd->add_flag("--serial", serial, "Run the scan on one thread");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force independent path count");
  oracle_cmd->add_option("--from", src, "First endpoint")->required();
  oracle_cmd->add_option("--to", dst, "Second endpoint")->required();
  oracle_cmd->add_option("--input", input_path, "Edge-list file (default: stdin)");
  oracle_cmd->add_flag("--collapse", collapse, "Collapse duplicate input edges");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  ScanMode mode = serial ? ScanMode::serial : ScanMode::parallel;
  try {
    if (diamond_cmd->parsed()) {
      if (counts_only) {
        DiamondCounts c = diamond_counts(diamond_order);
        nlohmann::json j;
        j["order"] = diamond_order;
        j["vertices"] = c.vertices;
        j["edges"] = c.edges;
        j["edge_disjoint_st_paths"] = c.edge_disjoint_st_paths;
        out << dump_json(j);
        return kExitOk;
      }
      GraphFormat format = format_from_name(diamond_format);
      if (format == GraphFormat::dot && diamond_order > 4) {
        throw precondition_error("DOT export is supported for orders up to 4");
      }
      DiamondGraph d = generate_diamond(diamond_order);
      out << serialize_graph(d.graph, format);
      return kExitOk;
    }
    if (edge_cmd->parsed()) {
      Graph g = read_graph(input_path, in, collapse);
      out << serialize_path_system(max_edge_disjoint_paths(g, src, dst));
      return kExitOk;
    }
    if (indep_cmd->parsed()) {
      Graph g = read_graph(input_path, in, collapse);
      IndependentResult r = max_independent_paths(g, src, dst);
      nlohmann::json j;
      j["system"] = path_system_to_json(r.system);
      j["certificate"] = certificate_to_json(r.certificate);
      out << dump_json(j);
      return kExitOk;
    }
    if (two_cmd->parsed() || three_cmd->parsed()) {
      Graph g = read_graph(input_path, in, collapse);
      IndependentWitness w = two_cmd->parsed() ? find_two_independent(g, src, dst)
                                               : find_three_independent(g, src, dst);
      out << serialize_witness(w);
      return kExitOk;
    }
    if (lemma1_cmd->parsed()) {
      return emit_report(verify_lemma1(lemma1, mode), out);
    }
    if (lemma2_cmd->parsed()) {
      return emit_report(verify_lemma2(lemma2_order, mode, max_order), out);
    }
    if (ftable_cmd->parsed()) {
      return emit_report(f_table(k_max, mode, scan_limit), out);
    }
    if (oracle_cmd->parsed()) {
      Graph g = read_graph(input_path, in, collapse);
      int count = oracle_max_independent(g, src, dst);
      nlohmann::json j;
      j["from"] = src;
      j["to"] = dst;
      j["count"] = count;
      out << dump_json(j);
      return kExitOk;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  err << "error: no subcommand selected\n";
  return kExitUsage;
}

}  // namespace diamondpaths
