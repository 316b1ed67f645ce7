#include "treespec/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "treespec/enumeration.hpp"
#include "treespec/json_io.hpp"

namespace treespec {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

SubdividedEdge pick_edge(const Tree& t, const std::vector<int>& endpoints) {
  auto edges = find_subdivided_edges(t);
  if (edges.empty()) throw std::invalid_argument("tree has no subdivided edge");
  if (endpoints.empty()) return edges.front();
  int a = endpoints[0], b = endpoints[1];
  for (auto& e : edges) {
    if (e.endpoints == std::make_pair(std::min(a, b), std::max(a, b))) {
      if (e.vertices.front() != a) std::reverse(e.vertices.begin(), e.vertices.end());
      return e;
    }
  }
  throw std::invalid_argument("no maximal subdivided edge with endpoints " +
                              std::to_string(a) + "," + std::to_string(b));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact spectral analysis of trees"};
  app.require_subcommand(1);
  unsigned long seed = 0;
  app.add_option("--seed", seed, "Seed for randomized check paths (reserved)");

  std::string input = "-";
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "Edge-list file, or - for standard input");
  };

  auto* cmd_charpoly = app.add_subcommand("charpoly", "Characteristic polynomial as JSON");
  add_input(cmd_charpoly);

  auto* cmd_spectrum = app.add_subcommand("spectrum", "Full spectrum report as JSON");
  add_input(cmd_spectrum);

  auto* cmd_integral = app.add_subcommand("is-integral", "Spectrum report as JSON");
  add_input(cmd_integral);

  auto* cmd_count = app.add_subcommand("count", "Eigenvalues in an open interval");
  add_input(cmd_count);
  std::string from_str, to_str;
  bool distinct = false;
  cmd_count->add_option("--from", from_str, "Left endpoint, integer or p/q")->required();
  cmd_count->add_option("--to", to_str, "Right endpoint, integer or p/q")->required();
  cmd_count->add_flag("--distinct", distinct, "Count distinct eigenvalues instead of multiplicities");

  auto* cmd_subdivided = app.add_subcommand("subdivided", "Maximal subdivided edges as JSON");
  add_input(cmd_subdivided);

  auto* cmd_verify = app.add_subcommand(
      "verify-theorem", "Check every tree with a long subdivided edge for non-integrality");
  int max_n = 0, k = 7, jobs = 1;
  cmd_verify->add_option("--max-n", max_n, "Largest tree order to check")->required();
  cmd_verify->add_option("--k", k, "Minimum subdivided-edge vertex count");
  cmd_verify->add_option("--jobs", jobs, "Worker threads");

  auto* cmd_search = app.add_subcommand("search-integral", "List all integral trees up to a given order");
  cmd_search->add_option("--max-n", max_n, "Largest tree order to search")->required();
  cmd_search->add_option("--jobs", jobs, "Worker threads");

  auto* cmd_trace = app.add_subcommand("trace", "Sign dynamics along a subdivided edge");
  add_input(cmd_trace);
  std::vector<int> endpoints;
  bool csv = false;
  cmd_trace
      ->add_option("--endpoints", endpoints,
                   "Endpoints a,b of the subdivided edge to trace; the trace is rooted at a "
                   "(default: the longest edge)")
      ->delimiter(',')
      ->expected(0, 2);
  cmd_trace->add_flag("--csv", csv, "Emit one CSV row per panel instead of JSON");

  auto* cmd_enumerate = app.add_subcommand("enumerate", "Stream non-isomorphic trees, one record per line");
  int enum_n = 0;
  int min_subdivided = 0;
  cmd_enumerate->add_option("--n", enum_n, "Tree order")->required();
  cmd_enumerate->add_option("--min-subdivided", min_subdivided,
                            "Only trees whose longest subdivided edge has at least this many vertices");

  std::vector<std::string> argv_storage = args;
  std::vector<const char*> argv;
  argv.push_back("treespec");
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(cmd_charpoly)) {
      Tree t = parse_tree(slurp(input, in));
      out << char_poly_json(t.n, char_poly(t)).dump(2) << "\n";
    } else if (app.got_subcommand(cmd_spectrum) || app.got_subcommand(cmd_integral)) {
      Tree t = parse_tree(slurp(input, in));
      out << spectrum_report_json(spectrum_report(t)).dump(2) << "\n";
    } else if (app.got_subcommand(cmd_count)) {
      Tree t = parse_tree(slurp(input, in));
      BigRational a = parse_rational(from_str), b = parse_rational(to_str);
      out << count_eigs_interval(t, a, b,
                                 distinct ? CountMode::distinct : CountMode::with_multiplicity)
          << "\n";
    } else if (app.got_subcommand(cmd_subdivided)) {
      Tree t = parse_tree(slurp(input, in));
      out << subdivided_edges_json(find_subdivided_edges(t)).dump(2) << "\n";
    } else if (app.got_subcommand(cmd_verify)) {
      VerificationReport rep = verify_theorem(max_n, k, jobs);
      out << verification_report_json(rep).dump(2) << "\n";
      return rep.violations.empty() ? 0 : 1;
    } else if (app.got_subcommand(cmd_search)) {
      out << integral_trees_json(search_integral_trees(max_n, jobs)).dump(2) << "\n";
    } else if (app.got_subcommand(cmd_trace)) {
      if (endpoints.size() == 1) throw std::invalid_argument("--endpoints needs two vertices");
      Tree t = parse_tree(slurp(input, in));
      SignTrace trace = trace_sign_dynamics(t, pick_edge(t, endpoints));
      if (csv)
        out << sign_trace_csv(trace);
      else
        out << sign_trace_json(trace).dump(2) << "\n";
    } else if (app.got_subcommand(cmd_enumerate)) {
      TreeStream stream = min_subdivided > 0
                              ? enumerate_with_subdivided_edge(enum_n, min_subdivided)
                              : enumerate_free_trees(enum_n);
      Tree t;
      while (stream.next(t)) out << format_edge_record(t) << "\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace treespec
