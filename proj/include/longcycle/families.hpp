#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle::families {

Graph empty_graph(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
/// Hub 0 joined to a rim cycle 1..n.
Graph wheel(int rim);
/// C_n x K_2: outer cycle 0..n-1, inner cycle n..2n-1, spokes i ~ n+i.
Graph prism(int n);
/// Cycle 0..2n-1 with the n antipodal chords.
Graph mobius_ladder(int n);
Graph grid(int rows, int cols);
/// Outer cycle 0..n-1, inner vertices n+i ~ n+((i+k) mod n), spokes i ~ n+i.
/// generalized_petersen(5, 2) is the Petersen graph.
Graph generalized_petersen(int n, int k);
Graph petersen();
/// Two hubs joined by internally disjoint paths with the given numbers of internal vertices.
Graph theta(const std::vector<int>& internal_lengths);
/// Two triangles sharing exactly vertex 0: {0,1,2} and {0,3,4}.
Graph two_triangles_sharing_vertex();
/// Disjoint union of g and h, h relabelled after g.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Deterministic 64-bit generator (splitmix64) so corpora do not depend on the
/// standard library's distribution implementations.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1).
  double unit();
  /// Uniform in [0, bound).
  int below(int bound);

 private:
  std::uint64_t state_;
};

/// G(n, p) with edges decided in (i, j) lexicographic order.
Graph random_gnp(int n, double p, std::uint64_t seed);

/// A named small graph used by tests and corpora.
struct Named {
  std::string name;
  Graph graph;
};

}  // namespace longcycle::families
