#include "longcycle/graph.hpp"

#include <algorithm>
#include <string>

namespace longcycle {

Graph Graph::from_edges(int n, std::span<const Edge> edges, int cap) {
  cap = std::min(cap, kMaxVertices);
  if (n < 0 || n > cap)
    throw InvalidArgument("vertex count " + std::to_string(n) + " outside [0, " + std::to_string(cap) + "]");
  Graph g;
  g.n_ = n;
  g.rows_.assign(n, VertexSet{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (g.rows_[u].test(v))
      throw InvalidArgument("repeated edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    ++g.m_;
  }
  return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) throw InvalidArgument("too many vertices");
  const VertexSet all = VertexSet::range(n);
  int twice = 0;
  for (int v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(all)) throw InvalidArgument("adjacency row references a missing vertex");
    if (rows[v].test(v)) throw InvalidArgument("self-loop at vertex " + std::to_string(v));
    for (int u : rows[v])
      if (!rows[u].test(v)) throw InvalidArgument("adjacency rows are not symmetric");
    twice += rows[v].count();
  }
  Graph g;
  g.n_ = n;
  g.m_ = twice / 2;
  g.rows_ = std::move(rows);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation size mismatch");
  std::vector<VertexSet> rows(n_);
  for (int u = 0; u < n_; ++u)
    for (int v : rows_[u]) rows[perm[u]].set(perm[v]);
  return from_rows(std::move(rows));
}

VertexSet reachable(const Graph& g, int start, const VertexSet& allowed) {
  VertexSet seen{start};
  VertexSet frontier{start};
  while (frontier.any()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g, const VertexSet& allowed) {
  const int s = allowed.first();
  if (s < 0) return true;
  return reachable(g, s, allowed) == allowed;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

bool is_two_connected(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  VertexSet all = g.vertices();
  for (int v = 0; v < n; ++v) {
    VertexSet rest = all;
    rest.reset(v);
    if (!is_connected(g, rest)) return false;
  }
  return true;
}

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
  VertexSet out;
  for (int v : a) out |= g.neighbors(v);
  return out - a;
}

std::vector<int> distances_from(const Graph& g, int s) {
  std::vector<int> dist(g.order(), -1);
  dist[s] = 0;
  VertexSet seen{s};
  VertexSet frontier{s};
  for (int d = 1; frontier.any(); ++d) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next -= seen;
    for (int v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : distances_from(g, s)) {
      if (d < 0) throw InvalidArgument("infinite diameter: graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<int> is_regular(const Graph& g) {
  if (g.order() == 0) return 0;
  const int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

int min_degree(const Graph& g) {
  int d = g.order() == 0 ? 0 : g.degree(0);
  for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace longcycle
