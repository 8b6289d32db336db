#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "longcycle/corpus.hpp"
#include "longcycle/families.hpp"
#include "longcycle/graph_io.hpp"
#include "longcycle/harness.hpp"
#include "longcycle/transitive.hpp"

using namespace longcycle;

namespace {

constexpr int kUsage = 3;

Graph read_graph(const std::string& path) {
  std::vector<Graph> gs;
  if (path == "-") {
    gs = read_graph6_stream(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    gs = read_graph6_stream(in);
  }
  if (gs.empty()) throw InvalidArgument("no graph in " + path);
  return gs.front();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw InvalidArgument("bad integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest-cycle intersection toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph, printed as graph6");
  gen->require_subcommand(1);
  int gen_n = 0;
  std::string conn, group_file;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  auto* gen_circ = gen->add_subcommand("circulant", "Circulant graph; the connection set is closed under negation");
  gen_circ->add_option("--n", gen_n, "Order")->required();
  gen_circ->add_option("--conn", conn, "Connection set s1,s2,...")->required();
  auto* gen_cay = gen->add_subcommand("cayley", "Cayley graph of a group file");
  gen_cay->add_option("--file", group_file, "Group presentation")->required();
  auto* gen_rand = gen->add_subcommand("random", "G(n, p)");
  gen_rand->add_option("--n", gen_n, "Order")->required();
  gen_rand->add_option("--p", gen_p, "Edge probability")->required();
  gen_rand->add_option("--seed", gen_seed, "Seed");
  auto* gen_exh = gen->add_subcommand("exhaustive", "All connected graphs on n vertices (n <= 10)");
  gen_exh->add_option("--n", gen_n, "Order")->required();

  // single-graph commands
  std::string in_path, x_text, y_text;
  bool enumerate = false;
  int limit = 0;
  std::int64_t budget = SearchOptions{}.node_budget;
  auto* cycles = app.add_subcommand("cycles", "Longest cycle, or all longest cycles");
  cycles->add_option("--in", in_path, "graph6 file ('-' for stdin)")->required();
  cycles->add_flag("--enumerate", enumerate, "List every longest cycle");
  cycles->add_option("--limit", limit, "Stop after this many cycles");
  cycles->add_option("--budget", budget, "Search node budget");

  auto* intersect = app.add_subcommand("intersect", "Minimum pairwise intersection of longest cycles");
  intersect->add_option("--in", in_path, "graph6 file")->required();
  intersect->add_option("--budget", budget, "Search node budget");

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--in", in_path, "graph6 file")->required();
    sub->add_option("--x", x_text, "Cycle as v0,v1,...")->required();
    sub->add_option("--y", y_text, "Cycle as v0,v1,...")->required();
  };
  auto* separator = app.add_subcommand("separator", "Separator between two cycles");
  add_pair(separator);
  auto* auxgraph = app.add_subcommand("auxgraph", "Auxiliary graph, type census and counting report");
  add_pair(auxgraph);
  auto* certify = app.add_subcommand("certify", "Try the exchange arguments on two cycles");
  add_pair(certify);

  // verify
  std::string suite = "all", corpus_text = "named", out_path, data_dir = LONGCYCLE_DATA_DIR;
  RunOptions run;
  auto* verify = app.add_subcommand("verify", "Batch verification over a corpus");
  verify->add_option("--suite", suite, "babai|smith|separator|devos|all");
  verify->add_option("--corpus", corpus_text,
                     "named | exhaustive:N | vt:N[:LIMIT] | random:N:P:COUNT | file:PATH");
  verify->add_option("--seed", run.seed, "Seed");
  verify->add_option("--out", out_path, "Report file (stdout when absent)");
  verify->add_option("--data", data_dir, "Directory holding connected_le9.g6");
  verify->add_option("--jobs", run.jobs, "Worker threads");
  verify->add_option("--max-cycles", run.max_cycles, "Longest cycles enumerated per instance");
  verify->add_option("--max-pairs", run.max_pairs, "Cycle pairs checked per instance");
  verify->add_option("--budget", run.node_budget, "Search node budget per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return e.get_exit_code() == 0 ? rc : kUsage;
  }

  try {
    if (gen->parsed()) {
      if (gen_circ->parsed()) {
        std::vector<int> s;
        for (int v : parse_list(conn)) {
          const int r = ((v % gen_n) + gen_n) % gen_n;
          s.push_back(r);
          s.push_back((gen_n - r) % gen_n);
        }
        std::cout << to_graph6(circulant(gen_n, s)) << "\n";
      } else if (gen_cay->parsed()) {
        std::cout << to_graph6(cayley(parse_group(read_file(group_file)))) << "\n";
      } else if (gen_rand->parsed()) {
        std::cout << to_graph6(families::random_gnp(gen_n, gen_p, gen_seed)) << "\n";
      } else {
        for (const Graph& g : connected_graphs(gen_n)) std::cout << to_graph6(g) << "\n";
      }
      return 0;
    }

    SearchOptions search;
    search.node_budget = budget;
    if (cycles->parsed()) {
      const Graph g = read_graph(in_path);
      try {
        if (enumerate) {
          std::int64_t nodes = 0;
          json j = to_json(enumerate_longest_cycles(g, limit > 0 ? std::optional<int>(limit) : std::nullopt, search, &nodes));
          j["nodes"] = nodes;
          emit(j);
        } else {
          const auto r = find_longest_cycle(g, search);
          emit({{"length", r.length}, {"witness", r.witness.vertices()}, {"nodes", r.nodes}});
        }
      } catch (const BudgetExceeded& e) {
        emit({{"error", e.what()}, {"nodes", e.nodes()}, {"best_lower_bound", e.best_lower_bound()}});
        return 2;
      }
      return 0;
    }

    if (intersect->parsed()) {
      const Graph g = read_graph(in_path);
      try {
        const CycleSet cs = enumerate_longest_cycles(g, std::nullopt, search);
        json j = {{"c", cs.length}, {"count", cs.count()},
                  {"connectivity", g.order() >= 2 ? vertex_connectivity(g) : 0}};
        if (cs.count() >= 2) {
          const auto mpi = min_pairwise_intersection(cs);
          j["m_min"] = mpi.size;
          j["pair"] = {mpi.first.vertices(), mpi.second.vertices()};
        } else {
          j["m_min"] = nullptr;
        }
        emit(j);
      } catch (const BudgetExceeded& e) {
        emit({{"error", e.what()}, {"nodes", e.nodes()}, {"best_lower_bound", e.best_lower_bound()}});
        return 2;
      }
      return 0;
    }

    if (separator->parsed() || auxgraph->parsed() || certify->parsed()) {
      const Graph g = read_graph(in_path);
      const Cycle x = parse_cycle(g, x_text);
      const Cycle y = parse_cycle(g, y_text);
      if (separator->parsed()) {
        const auto rep = xy_separator(g, x, y);
        emit(to_json(rep));
        return rep.bound_satisfied ? 0 : 1;
      }
      if (auxgraph->parsed()) {
        const AuxGraph f = build_aux(g, x, y, cycle_path_family(g, x, y));
        emit({{"aux", to_json(f)}, {"census", to_json(type_census(f))},
              {"supersaturation", to_json(supersaturation_report(f))}});
        return 0;
      }
      json j;
      json certs = json::array();
      try {
        const AuxGraph f = build_aux(g, x, y, cycle_path_family(g, x, y));
        const auto fc = four_cycles(f);
        for (const auto& c : fc)
          if (c.type == FourCycleType{0, 0}) certs.push_back(to_json(type00_certificate(g, f, c)));
        for (std::size_t a = 0; a < fc.size(); ++a)
          for (std::size_t b = a + 1; b < fc.size(); ++b)
            if (auto cert = crossing_pair_certificate(g, f, fc[a], fc[b])) certs.push_back(to_json(*cert));
      } catch (const SegmentPairCollision& e) {
        j["segment_pair_collision"] = {{"i", e.i()}, {"j", e.j()}, {"paths", {e.first(), e.second()}}};
      }
      j["certificates"] = certs;
      const auto imp = improve_by_exchange(g, x, y);
      j["improved"] = imp.has_value();
      if (imp) j["improvement"] = to_json(*imp);
      emit(j);
      return 0;
    }

    // verify
    run.suites = parse_suites(suite);
    const CorpusSpec spec = parse_corpus_spec(corpus_text, run.seed);
    const auto corpus = load_corpus(spec, data_dir);
    const auto reports = run_corpus(corpus, run);
    const json doc = report_document(to_string(spec), run, reports);
    if (out_path.empty()) {
      emit(doc);
    } else {
      std::ofstream out(out_path);
      if (!out) throw InvalidArgument("cannot write " + out_path);
      out << doc.dump(2) << "\n";
      std::cerr << reports.size() << " instances, status " << doc["status"].get<std::string>() << "\n";
    }
    return exit_code(reports);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
