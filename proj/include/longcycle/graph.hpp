#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "longcycle/errors.hpp"
#include "longcycle/vertex_set.hpp"

namespace longcycle {

using Edge = std::pair<int, int>;

/// Default cap on the vertex count accepted when building graphs from input.
inline constexpr int kDefaultVertexCap = kMaxVertices;

/// Undirected simple graph on vertices 0..n-1 with dense bit-row adjacency.
///
/// Immutable once built. Algorithms that need to "delete" vertices take an
/// allowed-vertex mask instead of copying the graph.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Rejects self-loops, repeated edges,
  /// out-of-range ids and vertex counts above `cap` (at most kMaxVertices).
  static Graph from_edges(int n, std::span<const Edge> edges, int cap = kDefaultVertexCap);

  /// Builds a graph from adjacency rows; rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return n_; }
  int edge_count() const { return m_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  const VertexSet& neighbors(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return rows_[v].count(); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// The graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> rows_;
};

/// Vertices reachable from `start` using only vertices in `allowed`.
/// `start` itself is included whether or not it is allowed.
VertexSet reachable(const Graph& g, int start, const VertexSet& allowed);

bool is_connected(const Graph& g);
/// Connectivity of the subgraph induced by `allowed` (empty set counts as connected).
bool is_connected(const Graph& g, const VertexSet& allowed);

/// Minimum number of vertices whose removal disconnects g or leaves a single
/// vertex. Complete graphs give n-1. Throws InvalidArgument for n < 2.
int vertex_connectivity(const Graph& g);

/// True iff g has at least 3 vertices and no cut vertex.
bool is_two_connected(const Graph& g);

/// Vertices outside `a` adjacent to some vertex of `a`.
VertexSet neighborhood(const Graph& g, const VertexSet& a);

/// BFS distances from s; unreachable vertices get -1.
std::vector<int> distances_from(const Graph& g, int s);

/// Largest shortest-path distance. Throws InvalidArgument when g is disconnected.
int diameter(const Graph& g);

/// The common degree when g is regular.
std::optional<int> is_regular(const Graph& g);

int min_degree(const Graph& g);
int max_degree(const Graph& g);

}  // namespace longcycle
