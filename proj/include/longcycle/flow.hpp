#pragma once

#include <optional>
#include <vector>

#include "longcycle/cycle_search.hpp"

namespace longcycle {

/// Pairwise vertex-disjoint (source_set, target_set)-paths. Each path meets
/// source_set only in its first vertex and target_set only in its last; a
/// path may be a single vertex when the two sets share it.
struct PathFamily {
  std::vector<std::vector<int>> paths;
  VertexSet source_set;
  VertexSet target_set;

  int size() const { return static_cast<int>(paths.size()); }
};

/// Minimum (a, b)-separator together with a maximum path family of equal size.
struct SeparatorReport {
  VertexSet cut;
  int max_disjoint_paths = 0;
  PathFamily witness;
};

/// Maximum family of vertex-disjoint (a, b)-paths inside the subgraph induced
/// by `allowed` (terminals outside `allowed` are ignored). a and b must be
/// disjoint: throws InvalidArgument("overlapping terminals") otherwise.
PathFamily max_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b);
PathFamily max_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& allowed);

/// Minimum vertex set meeting every (a, b)-path of the allowed subgraph; may
/// contain terminals. Same preconditions as max_disjoint_paths.
SeparatorReport min_vertex_cut(const Graph& g, const VertexSet& a, const VertexSet& b);
SeparatorReport min_vertex_cut(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& allowed);

/// Maximum number of internally disjoint (s, t)-paths; the edge st, when
/// present, counts as one path.
int local_connectivity(const Graph& g, int s, int t);

/// True iff no path of g[allowed - cut] joins a vertex of a - cut to one of b - cut.
bool separates(const Graph& g, const VertexSet& cut, const VertexSet& a, const VertexSet& b,
               const VertexSet& allowed);

/// Checks the three path-family invariants against g.
bool is_valid_path_family(const Graph& g, const PathFamily& family);

/// sqrt(10) m^{3/2} + 3m/2, the separator size bound for two longest cycles sharing m vertices.
double separator_bound(int m);

/// Separator between two cycles X and Y of g, built as a minimum cut between
/// V(X) - M and V(Y) - M in G - M, plus M itself (M = V(X) ∩ V(Y)).
struct XYSeparatorReport {
  VertexSet cut;
  VertexSet common;
  int m = 0;
  double bound = 0.0;
  bool bound_satisfied = false;
  /// True when one cycle lies inside the other, so cut = M.
  bool degenerate = false;
  /// Disjoint (V(X) - M, V(Y) - M)-paths in G - M; |cut| = m + paths.size().
  PathFamily paths;
};

XYSeparatorReport xy_separator(const Graph& g, const Cycle& x, const Cycle& y);

/// True iff the cut meets every longest cycle of g.
bool separator_is_transversal(const Graph& g, const XYSeparatorReport& rep, const SearchOptions& opts = {});
bool separator_is_transversal(const CycleSet& longest, const XYSeparatorReport& rep);

}  // namespace longcycle
