#include "longcycle/families.hpp"

namespace longcycle::families {

Graph empty_graph(int n) { return Graph::from_edges(n, {}); }

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least three vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edges(a + b, e);
}

Graph wheel(int rim) {
  if (rim < 3) throw InvalidArgument("wheel rim needs at least three vertices");
  std::vector<Edge> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(0, 1 + i);
    e.emplace_back(1 + i, 1 + (i + 1) % rim);
  }
  return Graph::from_edges(rim + 1, e);
}

Graph prism(int n) { return generalized_petersen(n, 1); }

Graph mobius_ladder(int n) {
  if (n < 2) throw InvalidArgument("Moebius ladder needs n >= 2");
  std::vector<Edge> e;
  for (int i = 0; i < 2 * n; ++i) e.emplace_back(i, (i + 1) % (2 * n));
  for (int i = 0; i < n; ++i) e.emplace_back(i, i + n);
  return Graph::from_edges(2 * n, e);
}

Graph grid(int rows, int cols) {
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::from_edges(rows * cols, e);
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw InvalidArgument("generalized Petersen graph needs 1 <= k < n/2");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph::from_edges(2 * n, e);
}

Graph petersen() { return generalized_petersen(5, 2); }

Graph theta(const std::vector<int>& internal_lengths) {
  std::vector<Edge> e;
  int next = 2;
  int zero_length = 0;
  for (int len : internal_lengths) {
    if (len < 0) throw InvalidArgument("negative path length");
    if (len == 0) {
      if (++zero_length > 1) throw InvalidArgument("theta graph would repeat the hub edge");
      e.emplace_back(0, 1);
      continue;
    }
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, 1);
  }
  return Graph::from_edges(next, e);
}

Graph two_triangles_sharing_vertex() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}};
  return Graph::from_edges(5, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  for (auto [u, v] : h.edges()) e.emplace_back(u + g.order(), v + g.order());
  return Graph::from_edges(g.order() + h.order(), e);
}

std::uint64_t SplitMix::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int SplitMix::below(int bound) {
  if (bound <= 0) throw InvalidArgument("bound must be positive");
  return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw InvalidArgument("edge probability must lie in [0, 1]");
  SplitMix rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < p) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

}  // namespace longcycle::families
