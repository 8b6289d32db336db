#include "longcycle/flow.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace longcycle {
namespace {

constexpr int kInf = 1 << 20;

// Unit vertex capacities via splitting: vertex v becomes v_in = 2v and
// v_out = 2v + 1 joined by a capacity-1 arc. Edge, source and sink arcs are
// uncapacitated so that every minimum cut consists of vertex arcs only.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& allowed)
      : n_(g.order()), source_(2 * n_), sink_(2 * n_ + 1), head_(2 * n_ + 2, -1) {
    for (int v : allowed) add_arc(2 * v, 2 * v + 1, 1);
    for (int u : allowed)
      for (int v : g.neighbors(u) & allowed) add_arc(2 * u + 1, 2 * v, kInf);
    for (int v : a & allowed) add_arc(source_, 2 * v, kInf);
    for (int v : b & allowed) add_arc(2 * v + 1, sink_, kInf);
  }

  int max_flow() {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::deque<int> queue{source_};
      via[source_] = -2;
      while (!queue.empty() && via[sink_] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int e = head_[x]; e >= 0; e = arcs_[e].next) {
          const int y = arcs_[e].to;
          if (arcs_[e].cap > 0 && via[y] == -1) {
            via[y] = e;
            queue.push_back(y);
          }
        }
      }
      if (via[sink_] == -1) return flow;
      for (int x = sink_; x != source_; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].cap -= 1;
        arcs_[via[x] ^ 1].cap += 1;
      }
      ++flow;
    }
  }

  // Vertices whose in-node is reachable from the source in the residual
  // network but whose out-node is not.
  VertexSet min_cut() const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{source_};
    seen[source_] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int e = head_[x]; e >= 0; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
          seen[arcs_[e].to] = 1;
          queue.push_back(arcs_[e].to);
        }
    }
    VertexSet cut;
    for (int v = 0; v < n_; ++v)
      if (seen[2 * v] && !seen[2 * v + 1]) cut.set(v);
    return cut;
  }

  // Follows saturated vertex arcs from each source arc in arc order.
  std::vector<std::vector<int>> paths() {
    std::vector<std::vector<int>> out;
    for (int e = head_[source_]; e >= 0; e = arcs_[e].next) {
      if (!carries_flow(e)) continue;
      std::vector<int> walk;
      int x = arcs_[e].to;
      while (x != sink_) {
        const int v = x / 2;
        walk.push_back(v);
        x = 2 * v + 1;
        int step = -1;
        for (int f = head_[x]; f >= 0; f = arcs_[f].next)
          if (carries_flow(f) && arcs_[f].to != 2 * v) {
            step = f;
            break;
          }
        if (step < 0) throw Error("flow decomposition lost its path");
        consume(step);
        x = arcs_[step].to;
      }
      out.push_back(std::move(walk));
    }
    return out;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
    int orig;
  };

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }
  bool carries_flow(int e) const { return arcs_[e].orig > 0 && arcs_[e].cap < arcs_[e].orig; }
  void consume(int e) { arcs_[e].cap += 1; }

  int n_;
  int source_;
  int sink_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

void check_terminals(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw InvalidArgument("overlapping terminals");
  if (!(a | b).is_subset_of(g.vertices())) throw InvalidArgument("terminal outside the graph");
}

// Cuts a flow walk down to its last vertex in a and the first vertex in b after it.
std::vector<int> trim_walk(const std::vector<int>& walk, const VertexSet& a, const VertexSet& b) {
  std::size_t begin = 0;
  for (std::size_t i = 0; i < walk.size(); ++i)
    if (a.test(walk[i])) begin = i;
  std::size_t end = begin;
  while (!b.test(walk[end])) ++end;
  return {walk.begin() + static_cast<std::ptrdiff_t>(begin), walk.begin() + static_cast<std::ptrdiff_t>(end) + 1};
}

SeparatorReport solve(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& allowed) {
  check_terminals(g, a, b);
  const VertexSet live = allowed & g.vertices();
  SplitNetwork net(g, a, b, live);
  SeparatorReport rep;
  rep.max_disjoint_paths = net.max_flow();
  rep.cut = net.min_cut();
  rep.witness.source_set = a & live;
  rep.witness.target_set = b & live;
  for (const auto& walk : net.paths()) rep.witness.paths.push_back(trim_walk(walk, a, b));
  std::sort(rep.witness.paths.begin(), rep.witness.paths.end());
  if (rep.cut.count() != rep.max_disjoint_paths || rep.witness.size() != rep.max_disjoint_paths)
    throw Error("min cut and max flow disagree");
  return rep;
}

}  // namespace

PathFamily max_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return solve(g, a, b, g.vertices()).witness;
}

PathFamily max_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& allowed) {
  return solve(g, a, b, allowed).witness;
}

SeparatorReport min_vertex_cut(const Graph& g, const VertexSet& a, const VertexSet& b) {
  return solve(g, a, b, g.vertices());
}

SeparatorReport min_vertex_cut(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& allowed) {
  return solve(g, a, b, allowed);
}

bool separates(const Graph& g, const VertexSet& cut, const VertexSet& a, const VertexSet& b,
               const VertexSet& allowed) {
  const VertexSet live = (allowed & g.vertices()) - cut;
  VertexSet seen;
  for (int s : a & live) {
    if (seen.test(s)) continue;
    seen |= reachable(g, s, live);
  }
  return !seen.intersects(b & live);
}

bool is_valid_path_family(const Graph& g, const PathFamily& family) {
  VertexSet used;
  for (const auto& p : family.paths) {
    if (p.empty()) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int v = p[i];
      if (v < 0 || v >= g.order() || used.test(v)) return false;
      used.set(v);
      if (i > 0 && !g.adjacent(p[i - 1], v)) return false;
      if (family.source_set.test(v) != (i == 0)) return false;
      if (family.target_set.test(v) != (i + 1 == p.size())) return false;
    }
  }
  return true;
}

double separator_bound(int m) { return std::sqrt(10.0) * std::pow(m, 1.5) + 1.5 * m; }

XYSeparatorReport xy_separator(const Graph& g, const Cycle& x, const Cycle& y) {
  if (!x.is_cycle_of(g) || !y.is_cycle_of(g)) throw InvalidArgument("separator inputs must be cycles of the graph");
  XYSeparatorReport rep;
  rep.common = x.vertex_set() & y.vertex_set();
  rep.m = rep.common.count();
  rep.bound = separator_bound(rep.m);
  const VertexSet a = x.vertex_set() - rep.common;
  const VertexSet b = y.vertex_set() - rep.common;
  rep.paths.source_set = a;
  rep.paths.target_set = b;
  if (a.empty() || b.empty()) {
    rep.degenerate = true;
    rep.cut = rep.common;
  } else {
    auto inner = min_vertex_cut(g, a, b, g.vertices() - rep.common);
    rep.cut = inner.cut | rep.common;
    rep.paths = std::move(inner.witness);
  }
  rep.bound_satisfied = rep.cut.count() <= rep.bound;
  return rep;
}

bool separator_is_transversal(const CycleSet& longest, const XYSeparatorReport& rep) {
  return is_t_transversal(longest, rep.cut, 1);
}

bool separator_is_transversal(const Graph& g, const XYSeparatorReport& rep, const SearchOptions& opts) {
  return is_t_transversal(g, rep.cut, 1, opts);
}

int local_connectivity(const Graph& g, int s, int t) {
  if (s == t || s < 0 || t < 0 || s >= g.order() || t >= g.order())
    throw InvalidArgument("local connectivity needs two distinct vertices of the graph");
  // Common neighbours are paths of length two; the rest need the flow network.
  const VertexSet shared = g.neighbors(s) & g.neighbors(t);
  VertexSet allowed = g.vertices() - shared;
  allowed.reset(s);
  allowed.reset(t);
  const VertexSet a = g.neighbors(s) & allowed;
  const VertexSet b = g.neighbors(t) & allowed;
  return (g.adjacent(s, t) ? 1 : 0) + shared.count() + solve(g, a, b, allowed).max_disjoint_paths;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InvalidArgument("undefined connectivity");
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;
  // Any min_degree + 1 vertices include one outside some minimum separator,
  // and that vertex is separated from some non-neighbour by it.
  const int probes = min_degree(g) + 1;
  int best = n - 1;
  for (int s = 0; s < probes && s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (t != s && !g.adjacent(s, t)) best = std::min(best, local_connectivity(g, s, t));
  return best;
}

}  // namespace longcycle
