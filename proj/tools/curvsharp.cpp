#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <curvsharp/canonical.hpp>
#include <curvsharp/catalog.hpp>
#include <curvsharp/curvature.hpp>
#include <curvsharp/graph.hpp>
#include <curvsharp/search.hpp>
#include <curvsharp/two_ball.hpp>

namespace {

using namespace curvsharp;

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_edge_list(in);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string report_row(const CurvatureReport& r) {
  std::ostringstream row;
  row << format_real(r.k_infinity) << '\t' << format_real(r.upper_bound) << '\t'
      << bool_text(r.sharp) << '\t' << r.triangles_vertex << '\t' << r.degree;
  return row.str();
}

int run_curvature(const std::string& input, int vertex, bool all, double tol,
                  const std::string& format) {
  const Graph g = load_graph(input);
  std::vector<int> targets;
  if (all || vertex < 0) {
    for (int v = 0; v < g.vertex_count(); ++v) targets.push_back(v);
  } else {
    if (vertex >= g.vertex_count()) throw std::invalid_argument("vertex index out of range");
    targets.push_back(vertex);
  }
  for (int v : targets)
    if (g.degree(v) == 0) throw std::invalid_argument("curvature needs at least one neighbor");

  if (format == "json") {
    std::cout << '[';
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const CurvatureReport r = k_infinity(extract(g, targets[i]), tol);
      if (i) std::cout << ',';
      std::cout << "{\"vertex\":" << targets[i] << ',' << report_to_json(r).substr(1);
    }
    std::cout << "]\n";
  } else {
    std::cout << "vertex\tk_infinity\tupper_bound\tsharp\ttriangles_vertex\tdegree\n";
    for (int v : targets)
      std::cout << v << '\t' << report_row(k_infinity(extract(g, v), tol)) << '\n';
  }
  return 0;
}

int run_ball(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad ball JSON: ") + e.what());
  }
  std::vector<int> s1;
  std::vector<std::vector<int>> subsets;
  try {
    s1 = doc.at("s1").get<std::vector<int>>();
    subsets = doc.at("s1s2").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad ball JSON: ") + e.what());
  }
  const CurvatureReport r = k_infinity(ball_from_lists(s1, subsets));
  if (format == "json")
    std::cout << report_to_json(r) << '\n';
  else
    std::cout << "k_infinity\tupper_bound\tsharp\ttriangles_vertex\tdegree\n"
              << report_row(r) << '\n';
  return 0;
}

int run_enumerate(const std::string& filter, const std::string& out_path,
                  const std::string& format, int jobs) {
  const std::vector<TwoBall>& balls = enumerate_quartic();
  std::vector<CurvatureReport> reports(balls.size());
  if (jobs < 1) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<int>(jobs, static_cast<int>(balls.size()));
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < balls.size(); i += jobs) reports[i] = k_infinity(balls[i]);
    });
  for (auto& worker : pool) worker.join();

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::invalid_argument("cannot write " + out_path);
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < balls.size(); ++i) {
    if (filter == "nonneg" && reports[i].k_infinity < -kSharpTolerance) continue;
    if (filter == "sharp" && !reports[i].sharp) continue;
    keep.push_back(i);
  }
  if (format == "json") {
    out << '[';
    for (std::size_t k = 0; k < keep.size(); ++k) {
      if (k) out << ',';
      out << "{\"ball\":" << ball_to_json(balls[keep[k]]) << ','
          << report_to_json(reports[keep[k]]).substr(1);
    }
    out << "]\n";
  } else {
    out << "ball\tk_infinity\tupper_bound\tsharp\ttriangles_vertex\tdegree\n";
    for (std::size_t i : keep) out << ball_to_json(balls[i]) << '\t' << report_row(reports[i]) << '\n';
  }
  return 0;
}

std::string classification_row(const ClassificationRecord& record, const BonnetMyersReport& bm) {
  std::ostringstream row;
  row << record.graph_name << '\t' << record.vertex_count << '\t'
      << format_real(record.curvature) << '\t' << record.diam << '\t'
      << bool_text(record.sharp_everywhere) << '\t';
  bool first = true;
  for (const BallTypeId& type : record.ball_types) {
    if (!first) row << ',';
    row << type.label();
    first = false;
  }
  row << '\t' << format_real(bm.slack);
  return row.str();
}

int run_verify_classification() {
  std::cout << "name\t|V|\tK_infinity\tdiameter\tsharp_everywhere\tball_type\tbonnet_myers_slack\n";
  for (const NamedGraphFacts& facts : named_graph_facts()) {
    const ClassificationRecord record = verify_named(facts.name);
    const BonnetMyersReport bm = check_bonnet_myers(named_graph(facts.name));
    if (!bm.holds) throw verification_error(facts.name, "bonnet_myers", "diameter bound violated");
    std::cout << classification_row(record, bm) << '\n';
  }
  return 0;
}

int run_search(const std::string& seed, int max_vertices, bool no_rigidity, int jobs,
               const std::string& out_dir) {
  SearchOptions opts;
  opts.max_vertices = max_vertices;
  opts.rigidity_prune = !no_rigidity;
  opts.jobs = jobs;
  const auto start = std::chrono::steady_clock::now();
  const SearchOutcome outcome = search_from_seed(BallTypeId::from_label(seed), opts);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::vector<std::string> files;
  for (std::size_t i = 0; i < outcome.completed_graphs.size(); ++i) {
    const std::string name = "search-" + seed + "-" + std::to_string(i + 1) + ".txt";
    const std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    write_edge_list(outcome.completed_graphs[i], out);
    files.push_back(name);
  }

  std::cout << "{\"seed\":\"" << seed << "\",\"graph_count\":" << outcome.completed_graphs.size()
            << ",\"graphs\":[";
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << '"' << files[i] << '"';
  }
  std::cout << "],\"vertex_counts\":[";
  for (std::size_t i = 0; i < outcome.completed_graphs.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << outcome.completed_graphs[i].vertex_count();
  }
  std::cout << "],\"nodes_explored\":" << outcome.nodes_explored << ",\"pruned_by\":{";
  bool first = true;
  for (const auto& [rule, count] : outcome.pruned_by) {
    if (!first) std::cout << ',';
    std::cout << '"' << rule << "\":" << count;
    first = false;
  }
  std::cout << "},\"truncated\":" << bool_text(outcome.truncated) << "}\n";
  std::cerr << "search " << seed << " finished in " << elapsed << " s\n";
  return 0;
}

int run_named(const std::string& name, const std::string& emit_path) {
  const ClassificationRecord record = verify_named(name);
  const BonnetMyersReport bm = check_bonnet_myers(named_graph(name));
  if (emit_path.empty()) {
    std::cout << "name\t|V|\tK_infinity\tdiameter\tsharp_everywhere\tball_type\tbonnet_myers_slack\n"
              << classification_row(record, bm) << '\n';
  } else {
    std::ofstream out(emit_path);
    if (!out) throw std::invalid_argument("cannot write " + emit_path);
    write_edge_list(named_graph(name), out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature tools for quartic graphs"};
  app.require_subcommand(1);

  std::string format = "tsv";

  auto* curvature = app.add_subcommand("curvature", "Curvature reports for a graph's vertices");
  std::string input;
  int vertex = -1;
  bool all = false;
  double tol = kDefaultTolerance;
  curvature->add_option("--input", input, "edge-list file")->required();
  auto* vertex_opt = curvature->add_option("--vertex", vertex, "single vertex to analyze");
  auto* all_opt = curvature->add_flag("--all", all, "analyze every vertex (default)");
  vertex_opt->excludes(all_opt);
  curvature->add_option("--tol", tol, "bisection tolerance");
  curvature->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

  auto* ball = app.add_subcommand("ball", "Curvature report for a ball's center");
  std::string ball_path;
  ball->add_option("--json", ball_path, "ball JSON file")->required();
  ball->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

  auto* enumerate = app.add_subcommand("enumerate", "Catalog of quartic balls with curvatures");
  std::string filter = "all";
  std::string out_path;
  int jobs = 0;
  enumerate->add_option("--filter", filter)->check(CLI::IsMember({"all", "nonneg", "sharp"}));
  enumerate->add_option("--out", out_path, "write the catalog to a file");
  enumerate->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

  auto* verify = app.add_subcommand("verify-classification",
                                    "Verify the eight sharp graphs and their diameter bounds");
  (void)verify;

  auto* search = app.add_subcommand("search", "Complete a sharp seed ball to whole graphs");
  std::string seed;
  int max_vertices = 40;
  bool no_rigidity = false;
  std::string out_dir = ".";
  search->add_option("--seed", seed, "seed ball type, e.g. 4.5")->required();
  search->add_option("--max-vertices", max_vertices, "vertex cap before truncation");
  search->add_flag("--no-rigidity-prune", no_rigidity, "disable the hypercube shortcut");
  search->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  search->add_option("--out-dir", out_dir, "directory for emitted edge lists");

  auto* named = app.add_subcommand("named", "Construct and verify a named graph");
  std::string graph_name;
  std::string emit_path;
  named->add_option("name", graph_name, "K5, O, K3xK3, K44, C10, D12, D14 or Q4")->required();
  named->add_option("--emit-edges", emit_path, "write the edge list to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (curvature->parsed()) return run_curvature(input, vertex, all, tol, format);
    if (ball->parsed()) return run_ball(ball_path, format);
    if (enumerate->parsed()) return run_enumerate(filter, out_path, format, jobs);
    if (verify->parsed()) return run_verify_classification();
    if (search->parsed()) return run_search(seed, max_vertices, no_rigidity, jobs, out_dir);
    if (named->parsed()) return run_named(graph_name, emit_path);
  } catch (const verification_error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
