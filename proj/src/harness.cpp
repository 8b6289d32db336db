#include "longcycle/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "longcycle/families.hpp"
#include "longcycle/graph_io.hpp"
#include "longcycle/transitive.hpp"

namespace longcycle {

json to_json(const Cycle& c) { return c.vertices(); }

json to_json(const CycleSet& cs) {
  json cycles = json::array();
  for (const auto& c : cs.cycles) cycles.push_back(c.vertices());
  return {{"length", cs.length}, {"count", cs.count()}, {"truncated", cs.truncated}, {"cycles", cycles}};
}

json to_json(const PathFamily& family) {
  json paths = json::array();
  for (const auto& p : family.paths) paths.push_back(p);
  return paths;
}

json to_json(const XYSeparatorReport& rep) {
  return {{"cut", rep.cut.to_vector()},
          {"m", rep.m},
          {"bound", rep.bound},
          {"paths", to_json(rep.paths)},
          {"bound_satisfied", rep.bound_satisfied},
          {"common", rep.common.to_vector()},
          {"degenerate", rep.degenerate}};
}

json to_json(const AuxGraph& f) {
  json edges = json::array();
  json endpoints = json::object();
  json paths = json::array();
  for (const auto& e : f.edges) {
    edges.push_back({e.i, e.j});
    endpoints[std::to_string(e.i) + "," + std::to_string(e.j)] = {e.u(), e.v()};
    paths.push_back(e.path);
  }
  json xs = json::array(), ys = json::array();
  for (const auto& s : f.dec.x_segments) xs.push_back(s);
  for (const auto& s : f.dec.y_segments) ys.push_back(s);
  return {{"m", f.m()},         {"edges", edges},           {"endpoints", endpoints},    {"paths", paths},
          {"x_segments", xs},   {"y_segments", ys},         {"m_order_x", f.dec.m_order_x},
          {"m_order_y", f.dec.m_order_y}};
}

json to_json(const TypeCensus& census) {
  return {{"00", census[0][0]}, {"01", census[0][1]}, {"10", census[1][0]}, {"11", census[1][1]}};
}

json to_json(const SupersaturationReport& r) {
  json j = {{"edges", r.edges},
            {"m", r.m},
            {"sum_common", r.sum_common},
            {"l_size", r.l_size},
            {"assumption_met", r.assumption_met},
            {"l_noncrossing", r.l_noncrossing},
            {"l_upper_holds", r.l_upper_holds},
            {"edge_bound", r.edge_bound},
            {"edge_bound_holds", r.edge_bound_holds}};
  if (r.assumption_met) {
    j["convexity_lower"] = r.convexity_lower;
    j["convexity_holds"] = r.convexity_holds;
    j["l_lower"] = r.l_lower;
    j["l_lower_holds"] = r.l_lower_holds;
  } else {
    j["note"] = "assumption e(F) >= m not met; inequalities skipped";
  }
  return j;
}

json to_json(const WinningCertificate& cert) {
  json j = {{"origin", to_string(cert.origin)},
            {"q1", cert.q1.vertices()},
            {"q2", cert.q2.vertices()},
            {"surplus", cert.surplus},
            {"q1_is_cycle", cert.check.q1_is_cycle},
            {"q2_is_cycle", cert.check.q2_is_cycle},
            {"covers_edges", cert.check.covers_edges},
            {"longer", cert.check.longer},
            {"valid", cert.check.ok()}};
  if (cert.case_id >= 0) j["case"] = cert.case_id;
  return j;
}

json to_json(const Improvement& imp) {
  return {{"origin", to_string(imp.origin)}, {"x", imp.x.vertices()}, {"y", imp.y.vertices()}};
}

Cycle parse_cycle(const Graph& g, const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> vs;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v >= g.order()) throw InvalidArgument("bad cycle vertex '" + tok + "'");
    vs.push_back(v);
  }
  return Cycle::in_graph(g, std::move(vs));
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::Skipped: return "skipped";
    case Status::Observation: return "observation";
  }
  return "?";
}

namespace {

// g with every edge at a vertex of `removed` dropped (ids unchanged).
Graph without(const Graph& g, const VertexSet& removed) {
  std::vector<Edge> keep;
  for (auto [u, v] : g.edges())
    if (!removed.test(u) && !removed.test(v)) keep.emplace_back(u, v);
  return Graph::from_edges(g.order(), keep);
}

// True iff every longest cycle (of length c) meets a: no cycle of length c survives in G - a.
bool meets_every_longest(const Graph& g, const VertexSet& a, int c, const SearchOptions& opts) {
  try {
    return longest_cycle_length(without(g, a), opts) < c;
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const InvalidArgument&) {
    return true;  // forest
  }
}

BabaiOutcome babai_from(int n, int c, bool exact) {
  BabaiOutcome out;
  out.c = c;
  out.bound = std::sqrt(3.0 * n);
  // c >= sqrt(3n) iff c^2 >= 3n
  if (c * c >= 3 * n)
    out.status = Status::Pass;
  else if (exact)
    out.status = Status::Fail;
  else {
    out.status = Status::Inconclusive;
    out.note = "budget exceeded below the bound";
  }
  if (!exact && out.status == Status::Pass) out.note = "lower bound from partial search suffices";
  return out;
}

void require_vt(const Graph& g, const char* what) {
  if (g.order() < 3 || !is_connected(g) || !is_vertex_transitive(g, kMaxVertices))
    throw InvalidArgument(std::string(what) + " needs a connected vertex-transitive graph on at least 3 vertices");
}

// Two cycles of length c in an n-vertex graph share at least 2c - n vertices.
int counting_overlap(int n, int c) { return std::max(0, 2 * c - n); }

SmithOutcome smith_from(int n, int k, const CycleSet& longest) {
  SmithOutcome out;
  out.k = k;
  out.cycles = longest.count();
  out.complete = !longest.truncated;
  if (longest.count() < 2) {
    out.status = Status::Pass;
    out.note = "single longest cycle";
    return out;
  }
  const auto mpi = min_pairwise_intersection(longest);
  out.m_min = mpi.size;
  out.witness = std::make_pair(mpi.first, mpi.second);
  out.ratio = mpi.size / std::pow(static_cast<double>(k), 2.0 / 3.0);
  if (k >= 9) {
    out.status = Status::Observation;
    out.note = "k >= 9: reported, not asserted";
  } else if (mpi.size < k) {
    out.status = Status::Fail;
  } else if (longest.truncated && counting_overlap(n, longest.length) >= k) {
    out.status = Status::Pass;
    out.note = "enumeration truncated; 2c - n >= k settles it";
  } else if (longest.truncated) {
    out.status = Status::Inconclusive;
    out.note = "enumeration truncated";
  } else {
    out.status = Status::Pass;
  }
  return out;
}

DevosOutcome devos_from(int n, int c, int t, int a_size) {
  DevosOutcome out;
  out.c = c;
  out.t = t;
  out.a_size = a_size;
  out.n = n;
  out.bound = static_cast<double>(t) * n / a_size;
  out.status = static_cast<long>(c) * a_size >= static_cast<long>(t) * n ? Status::Pass : Status::Fail;
  return out;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
  return h;
}

// Pair indices (a < b) to check: all of them, or max_pairs sampled without repetition.
std::vector<std::pair<int, int>> choose_pairs(int count, int max_pairs, std::uint64_t seed) {
  std::vector<std::pair<int, int>> out;
  const long total = static_cast<long>(count) * (count - 1) / 2;
  if (total <= max_pairs) {
    for (int a = 0; a < count; ++a)
      for (int b = a + 1; b < count; ++b) out.emplace_back(a, b);
    return out;
  }
  families::SplitMix rng(seed);
  std::set<std::pair<int, int>> picked;
  while (static_cast<int>(picked.size()) < max_pairs) {
    int a = rng.below(count), b = rng.below(count);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    picked.emplace(a, b);
  }
  return {picked.begin(), picked.end()};
}

PairChecks check_pairs(const Graph& g, const CycleSet& longest, const RunOptions& opts, std::uint64_t seed) {
  PairChecks out;
  const int count = longest.count();
  out.pairs_total = static_cast<long>(count) * (count - 1) / 2;
  if (count < 2) {
    out.status = Status::Pass;
    out.exhaustive = !longest.truncated;
    out.note = "single longest cycle";
    return out;
  }
  const auto pairs = choose_pairs(count, opts.max_pairs, seed);
  out.exhaustive = !longest.truncated && static_cast<long>(pairs.size()) == out.pairs_total;
  out.worst_cut_slack = std::numeric_limits<double>::infinity();
  SearchOptions search;
  search.node_budget = opts.node_budget;
  out.status = Status::Pass;
  auto fail = [&](const char* what, const Cycle& x, const Cycle& y) {
    out.status = Status::Fail;
    out.failed_check = what;
    out.witness = std::make_pair(x, y);
  };
  for (auto [a, b] : pairs) {
    const Cycle& x = longest.cycles[a];
    const Cycle& y = longest.cycles[b];
    ++out.pairs_checked;
    XYSeparatorReport rep;
    try {
      rep = xy_separator(g, x, y);
    } catch (const InvalidArgument&) {
      fail("longest cycles intersect", x, y);
      break;
    }
    const int cut = rep.cut.count();
    out.max_m = std::max(out.max_m, rep.m);
    out.max_cut = std::max(out.max_cut, cut);
    out.worst_cut_slack = std::min(out.worst_cut_slack, rep.bound - cut);
    if (!rep.bound_satisfied) {
      fail("separator_bound", x, y);
      break;
    }
    bool transversal = false;
    try {
      transversal = longest.truncated ? meets_every_longest(g, rep.cut, longest.length, search)
                                      : separator_is_transversal(longest, rep);
    } catch (const BudgetExceeded&) {
      out.status = Status::Inconclusive;
      out.note = "budget exceeded in the transversal check";
      break;
    }
    if (!transversal) {
      fail("separator_transversal", x, y);
      break;
    }
    AuxGraph f;
    try {
      f = build_aux(g, x, y, rep.paths);
    } catch (const SegmentPairCollision&) {
      fail("segment_pair_collision", x, y);
      break;
    }
    out.max_aux_edges = std::max(out.max_aux_edges, f.edge_count());
    const auto census = type_census(f);
    out.four_cycles += census[0][0] + census[0][1] + census[1][0] + census[1][1];
    if (census[0][0] != 0) {
      fail("type00_free", x, y);
      break;
    }
    if (!is_pairwise_noncrossing(l_set(f))) {
      fail("l_set_noncrossing", x, y);
      break;
    }
    if (f.edge_count() > aux_edge_bound(f.m())) {
      fail("aux_edge_bound", x, y);
      break;
    }
    if (improve_by_exchange(g, x, y)) {
      fail("exchange_absent", x, y);
      break;
    }
  }
  if (out.pairs_checked == 0) out.worst_cut_slack = 0.0;
  return out;
}

}  // namespace

BabaiOutcome verify_babai(const Graph& g, const SearchOptions& opts) {
  require_vt(g, "babai check");
  try {
    return babai_from(g.order(), longest_cycle_length(g, opts), true);
  } catch (const BudgetExceeded& e) {
    return babai_from(g.order(), e.best_lower_bound(), false);
  }
}

SmithOutcome verify_smith(const Graph& g, int max_cycles, const SearchOptions& opts) {
  if (g.order() < 3 || !is_two_connected(g)) throw InvalidArgument("smith check needs a 2-connected graph");
  const int k = vertex_connectivity(g);
  try {
    return smith_from(g.order(), k, enumerate_longest_cycles(g, max_cycles, opts));
  } catch (const BudgetExceeded&) {
    SmithOutcome out;
    out.k = k;
    out.status = Status::Inconclusive;
    out.complete = false;
    out.note = "budget exceeded";
    return out;
  }
}

SeparatorBoundOutcome verify_separator_bound(const Graph& g, const Cycle& x, const Cycle& y) {
  SeparatorBoundOutcome out;
  out.report = xy_separator(g, x, y);
  out.m = out.report.m;
  out.cut = out.report.cut.count();
  out.bound = out.report.bound;
  out.status = out.report.bound_satisfied ? Status::Pass : Status::Fail;
  return out;
}

DevosOutcome verify_devos(const Graph& g, const VertexSet& a, int t, const SearchOptions& opts) {
  require_vt(g, "devos check");
  if (t < 1 || a.empty() || !a.is_subset_of(g.vertices())) throw InvalidArgument("devos check needs t >= 1 and A inside V(G)");
  try {
    const int c = longest_cycle_length(g, opts);
    const bool transversal = t == 1 ? meets_every_longest(g, a, c, opts) : is_t_transversal(g, a, t, opts);
    if (!transversal) throw InvalidArgument("A is not a t-transversal");
    return devos_from(g.order(), c, t, a.count());
  } catch (const BudgetExceeded&) {
    DevosOutcome out;
    out.status = Status::Inconclusive;
    out.t = t;
    out.a_size = a.count();
    out.n = g.order();
    out.note = "budget exceeded";
    return out;
  }
}

Suites parse_suites(const std::string& text) {
  Suites s;
  if (text == "babai") s.babai = true;
  else if (text == "smith") s.smith = true;
  else if (text == "separator") s.separator = true;
  else if (text == "devos") s.devos = true;
  else if (text == "all") s = {true, true, true, true};
  else throw InvalidArgument("unknown suite '" + text + "'");
  return s;
}

Status VerificationReport::overall() const {
  bool inconclusive_seen = !inconclusive.empty();
  auto look = [&](const auto& o) {
    if (!o) return false;
    if (o->status == Status::Fail) return true;
    if (o->status == Status::Inconclusive) inconclusive_seen = true;
    return false;
  };
  if (look(babai) || look(smith) || look(separator) || look(devos)) return Status::Fail;
  return inconclusive_seen ? Status::Inconclusive : Status::Pass;
}

VerificationReport verify_instance(const CorpusGraph& cg, const RunOptions& opts) {
  const Graph& g = cg.graph;
  VerificationReport r;
  r.id = cg.id;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.edges = g.edge_count();
  if (r.n > 0) r.degree = is_regular(g);
  const bool connected = is_connected(g);
  r.connectivity = r.n >= 2 && connected ? vertex_connectivity(g) : 0;
  AutomorphismOptions aut;
  aut.node_budget = opts.node_budget;
  if (r.n <= opts.vt_cap && r.n > 0) {
    try {
      r.vertex_transitive = is_vertex_transitive(g, opts.vt_cap, aut);
    } catch (const BudgetExceeded&) {
      r.inconclusive = "automorphism search budget exceeded";
    }
  }
  const bool vt = connected && r.n >= 3 && r.vertex_transitive.value_or(false);

  SearchOptions search;
  search.node_budget = opts.node_budget;
  CycleSet longest;
  bool have_cycles = false;
  int lower = 0;
  try {
    longest = enumerate_longest_cycles(g, opts.max_cycles, search, &r.nodes);
    have_cycles = true;
    r.c = longest.length;
    r.longest_count = longest.count();
    r.longest_truncated = longest.truncated;
  } catch (const BudgetExceeded& e) {
    r.inconclusive = "longest cycle search budget exceeded";
    r.nodes = e.nodes();
    lower = e.best_lower_bound();
  } catch (const InvalidArgument&) {
    have_cycles = true;  // forest: c = 0
  }

  if (opts.suites.babai) {
    if (!vt) {
      r.babai = BabaiOutcome{};
      r.babai->note = "not vertex-transitive";
    } else {
      r.babai = have_cycles ? babai_from(r.n, r.c, true) : babai_from(r.n, lower, false);
    }
  }
  const bool two_connected = r.n >= 3 && is_two_connected(g);
  if (opts.suites.smith) {
    if (!two_connected) {
      r.smith = SmithOutcome{};
      r.smith->note = "not 2-connected";
    } else if (!have_cycles) {
      r.smith = SmithOutcome{};
      r.smith->k = r.connectivity;
      r.smith->status = Status::Inconclusive;
      r.smith->note = "budget exceeded";
    } else {
      r.smith = smith_from(r.n, r.connectivity, longest);
    }
  }
  if (opts.suites.separator) {
    if (!two_connected) {
      r.separator = PairChecks{};
      r.separator->note = "not 2-connected";
    } else if (!have_cycles) {
      r.separator = PairChecks{};
      r.separator->status = Status::Inconclusive;
      r.separator->note = "budget exceeded";
    } else {
      r.separator = check_pairs(g, longest, opts, opts.seed ^ fnv1a(cg.id));
    }
  }
  if (opts.suites.devos) {
    if (!vt || !have_cycles || r.c == 0) {
      r.devos = DevosOutcome{};
      r.devos->note = vt ? "budget exceeded" : "not vertex-transitive";
      if (vt) r.devos->status = Status::Inconclusive;
    } else {
      // A = V(first longest cycle). t is exact from a complete list; otherwise
      // the counting bound 2c - n, or 1 after checking G - A directly.
      const VertexSet a = longest.cycles.front().vertex_set();
      int t = counting_overlap(r.n, r.c);
      bool ok = true;
      if (!longest.truncated) {
        t = r.c;
        for (const auto& c : longest.cycles) t = std::min(t, (c.vertex_set() & a).count());
      } else if (t == 0) {
        t = 1;
        try {
          ok = meets_every_longest(g, a, r.c, search);
        } catch (const BudgetExceeded&) {
          ok = false;
        }
      }
      if (ok) {
        r.devos = devos_from(r.n, r.c, t, a.count());
        if (longest.truncated) r.devos->note = "enumeration truncated; t from a bound";
      } else {
        r.devos = DevosOutcome{};
        r.devos->status = Status::Inconclusive;
        r.devos->note = "transversal check budget exceeded";
      }
    }
  }
  return r;
}

std::vector<VerificationReport> run_corpus(const std::vector<CorpusGraph>& corpus, const RunOptions& opts) {
  std::vector<VerificationReport> out(corpus.size());
  const int jobs = std::max(1, std::min<int>(opts.jobs, static_cast<int>(corpus.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) out[i] = verify_instance(corpus[i], opts);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < corpus.size(); i = next++) out[i] = verify_instance(corpus[i], opts);
    });
  for (auto& t : pool) t.join();
  return out;
}

namespace {

json pair_json(const std::optional<std::pair<Cycle, Cycle>>& w) {
  if (!w) return nullptr;
  return {w->first.vertices(), w->second.vertices()};
}

template <class T>
json with_note(json j, const T& o) {
  if (!o.note.empty()) j["note"] = o.note;
  return j;
}

}  // namespace

json to_json(const VerificationReport& r) {
  json j = {{"id", r.id},
            {"graph6", r.graph6},
            {"n", r.n},
            {"edges", r.edges},
            {"degree", r.degree ? json(*r.degree) : json(nullptr)},
            {"connectivity", r.connectivity},
            {"vertex_transitive", r.vertex_transitive ? json(*r.vertex_transitive) : json(nullptr)},
            {"c", r.c},
            {"longest_cycles", {{"count", r.longest_count}, {"truncated", r.longest_truncated}}},
            {"search_nodes", r.nodes},
            {"status", to_string(r.overall())}};
  if (!r.inconclusive.empty()) j["inconclusive"] = r.inconclusive;
  if (r.babai)
    j["babai"] = with_note(json{{"status", to_string(r.babai->status)}, {"c", r.babai->c}, {"bound", r.babai->bound}},
                           *r.babai);
  if (r.smith) {
    const auto& s = *r.smith;
    j["smith"] = with_note(json{{"status", to_string(s.status)},
                                {"k", s.k},
                                {"m_min", s.m_min >= 0 ? json(s.m_min) : json(nullptr)},
                                {"cycles", s.cycles},
                                {"complete", s.complete},
                                {"ratio_k23", s.ratio},
                                {"witness", pair_json(s.witness)}},
                           s);
  }
  if (r.separator) {
    const auto& p = *r.separator;
    json pj = {{"status", to_string(p.status)},
               {"pairs_total", p.pairs_total},
               {"pairs_checked", p.pairs_checked},
               {"exhaustive", p.exhaustive},
               {"max_m", p.max_m},
               {"max_cut", p.max_cut},
               {"max_aux_edges", p.max_aux_edges},
               {"min_cut_slack", p.worst_cut_slack},
               {"four_cycles", p.four_cycles}};
    if (!p.failed_check.empty()) {
      pj["failed_check"] = p.failed_check;
      pj["witness"] = pair_json(p.witness);
    }
    j["separator"] = with_note(pj, p);
  }
  if (r.devos) {
    const auto& d = *r.devos;
    j["devos"] = with_note(json{{"status", to_string(d.status)},
                                {"c", d.c},
                                {"t", d.t},
                                {"a_size", d.a_size},
                                {"bound", d.bound}},
                           d);
  }
  return j;
}

json report_document(const std::string& corpus_spec, const RunOptions& opts,
                     const std::vector<VerificationReport>& reports) {
  json suites = json::array();
  if (opts.suites.babai) suites.push_back("babai");
  if (opts.suites.smith) suites.push_back("smith");
  if (opts.suites.separator) suites.push_back("separator");
  if (opts.suites.devos) suites.push_back("devos");
  json instances = json::array();
  std::map<std::string, std::map<std::string, int>> per_suite;
  std::map<std::string, int> overall;
  for (const auto& r : reports) {
    json j = to_json(r);
    for (const char* s : {"babai", "smith", "separator", "devos"})
      if (j.contains(s)) ++per_suite[s][j[s]["status"].get<std::string>()];
    ++overall[to_string(r.overall())];
    instances.push_back(std::move(j));
  }
  const int code = exit_code(reports);
  return {{"corpus", corpus_spec},
          {"seed", opts.seed},
          {"suites", suites},
          {"options",
           {{"max_cycles", opts.max_cycles},
            {"max_pairs", opts.max_pairs},
            {"vt_cap", opts.vt_cap},
            {"node_budget", opts.node_budget}}},
          {"instances", instances},
          {"summary", {{"instances", reports.size()}, {"overall", overall}, {"suites", per_suite}}},
          {"status", code == 0 ? "pass" : code == 1 ? "fail" : "inconclusive"}};
}

int exit_code(const std::vector<VerificationReport>& reports) {
  bool inconclusive = false;
  for (const auto& r : reports) {
    const Status s = r.overall();
    if (s == Status::Fail) return 1;
    if (s == Status::Inconclusive) inconclusive = true;
  }
  return inconclusive ? 2 : 0;
}

}  // namespace longcycle
