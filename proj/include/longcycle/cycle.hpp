#pragma once

#include <compare>
#include <span>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Rotation/reflection of `seq` that is lexicographically smallest: it starts
/// at the minimum vertex and continues towards the smaller of its two
/// cyclic neighbours.
std::vector<int> canonical_rotation(std::span<const int> seq);

/// A cycle as a cyclic vertex sequence, always stored in canonical form.
/// The stored order is the cycle's fixed orientation.
class Cycle {
 public:
  /// Canonicalizes `vertices`. Throws InvalidArgument for fewer than three
  /// vertices or a repeated vertex. Adjacency is not checked here.
  explicit Cycle(std::vector<int> vertices);

  /// As above, and additionally requires every cyclically consecutive pair
  /// to be an edge of `g`.
  static Cycle in_graph(const Graph& g, std::vector<int> vertices);

  const std::vector<int>& vertices() const { return seq_; }
  /// Number of edges, which equals the number of vertices.
  int length() const { return static_cast<int>(seq_.size()); }
  VertexSet vertex_set() const { return VertexSet::from(seq_); }
  bool is_cycle_of(const Graph& g) const;
  /// Edges as (min, max) pairs in traversal order.
  std::vector<Edge> edges() const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;

 private:
  std::vector<int> seq_;
};

/// Cycles of a common length, sorted by canonical sequence, without duplicates.
struct CycleSet {
  int length = 0;
  std::vector<Cycle> cycles;
  bool truncated = false;

  int count() const { return static_cast<int>(cycles.size()); }
};

/// True iff `seq` lists distinct vertices (at least three) forming a cycle of g.
bool is_simple_cycle(const Graph& g, std::span<const int> seq);

}  // namespace longcycle
