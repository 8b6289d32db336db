#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "longcycle/flow.hpp"

namespace longcycle {

/// M = V(X) ∩ V(Y) and the segments of X - M and Y - M. Segment i of X is the
/// (possibly empty) run of X strictly between m_order_x[i] and
/// m_order_x[(i+1) % m], walking X in its chosen orientation; likewise for Y.
/// Indices are 0-based.
struct SegmentDecomposition {
  int m = 0;
  VertexSet common;
  std::vector<int> m_order_x;
  std::vector<int> m_order_y;
  std::vector<std::vector<int>> x_segments;
  std::vector<std::vector<int>> y_segments;
  /// The walks of X and Y in the chosen orientation, starting at the first M vertex.
  std::vector<int> x_walk;
  std::vector<int> y_walk;
  bool x_reversed = false;
  bool y_reversed = false;

  /// Segment index of v on X (-1 when v is not in X - M) and its offset inside the segment.
  int x_segment_of(int v) const { return x_seg_[v]; }
  int x_offset_of(int v) const { return x_off_[v]; }
  int y_segment_of(int v) const { return y_seg_[v]; }
  int y_offset_of(int v) const { return y_off_[v]; }
  /// Position of v in x_walk / y_walk, or -1.
  int x_position_of(int v) const { return x_pos_[v]; }
  int y_position_of(int v) const { return y_pos_[v]; }

 private:
  friend SegmentDecomposition decompose(const Graph&, const Cycle&, const Cycle&, bool, bool);
  std::vector<int> x_seg_, x_off_, y_seg_, y_off_, x_pos_, y_pos_;
};

/// Decomposition following the stored (canonical) orientations, or their
/// reversals when requested. Throws InvalidArgument("empty intersection") for
/// vertex-disjoint cycles.
SegmentDecomposition decompose(const Graph& g, const Cycle& x, const Cycle& y, bool reverse_x = false,
                               bool reverse_y = false);

/// An edge x_i y_j of the auxiliary graph with the path that realizes it.
struct AuxEdge {
  int i = 0;
  int j = 0;
  std::vector<int> path;  // from u (on X) to v (on Y)
  int u() const { return path.front(); }
  int v() const { return path.back(); }
};

/// Bipartite graph on {x_0..x_{m-1}} and {y_0..y_{m-1}} with one edge per path.
struct AuxGraph {
  SegmentDecomposition dec;
  std::vector<AuxEdge> edges;  // sorted by (i, j)

  int m() const { return dec.m; }
  int edge_count() const { return static_cast<int>(edges.size()); }
  /// Index into edges of x_i y_j, or -1.
  int edge_index(int i, int j) const { return index_[static_cast<std::size_t>(i) * dec.m + j]; }
  bool has_edge(int i, int j) const { return edge_index(i, j) >= 0; }
  const AuxEdge& edge(int i, int j) const;
  /// Neighbours of x_i among y_0..y_{m-1}.
  std::vector<int> x_neighbors(int i) const;

 private:
  friend AuxGraph build_aux(const SegmentDecomposition&, const Graph&, const PathFamily&);
  std::vector<int> index_;
};

/// Thrown when two paths of a family join the same pair of segments. For
/// longest cycles this cannot happen; the two paths give an improvement.
class SegmentPairCollision : public Error {
 public:
  SegmentPairCollision(int i, int j, std::vector<int> first, std::vector<int> second);
  int i() const { return i_; }
  int j() const { return j_; }
  const std::vector<int>& first() const { return first_; }
  const std::vector<int>& second() const { return second_; }

 private:
  int i_, j_;
  std::vector<int> first_, second_;
};

/// Builds F(X, Y, P). Each path must be a path of g starting in X - M and
/// ending in Y - M, with paths pairwise disjoint; otherwise InvalidArgument
/// ("invalid terminal" for endpoints in M or outside the cycles).
AuxGraph build_aux(const SegmentDecomposition& dec, const Graph& g, const PathFamily& family);
AuxGraph build_aux(const Graph& g, const Cycle& x, const Cycle& y, const PathFamily& family);

/// Maximum family of disjoint (V(X) - M, V(Y) - M)-paths in G - M.
PathFamily cycle_path_family(const Graph& g, const Cycle& x, const Cycle& y);

struct FourCycleType {
  int alpha = 0;
  int beta = 0;
  friend bool operator==(const FourCycleType&, const FourCycleType&) = default;
};

/// Type of the 4-cycle x_i y_k x_j y_l (i < j, k < l). alpha compares the
/// order of u_ik, u_il inside X_i with that of u_jk, u_jl inside X_j; beta
/// compares v_ik, v_jk inside Y_k with v_il, v_jl inside Y_l.
/// Throws InvalidArgument("not a 4-cycle") when an edge is missing.
FourCycleType classify_four_cycle(const AuxGraph& f, int i, int j, int k, int l);

struct FourCycle {
  int i, j, k, l;
  FourCycleType type;
};

/// All 4-cycles of f as (i < j, k < l), in lexicographic order.
std::vector<FourCycle> four_cycles(const AuxGraph& f);

/// census[alpha][beta] = number of 4-cycles of that type.
using TypeCensus = std::array<std::array<long, 2>, 2>;
TypeCensus type_census(const AuxGraph& f);

/// a_ij = |N(x_i) ∩ N(x_j)| for all i < j (zero entries included).
std::map<std::pair<int, int>, int> common_neighbor_counts(const AuxGraph& f);

/// Pairs (i, j), i < j, with a_ij >= 7.
std::vector<std::pair<int, int>> l_set(const AuxGraph& f);

/// Crossing test for index pairs with p.first < p.second.
bool is_crossing(std::pair<int, int> p1, std::pair<int, int> p2);
bool is_pairwise_noncrossing(const std::vector<std::pair<int, int>>& pairs);

struct NoncrossingFamily {
  int size = 0;
  std::vector<std::pair<int, int>> pairs;  // over 0..m-1
};

/// Exact maximum pairwise non-crossing family of pairs over {0..m-1}:
/// branch and bound for m <= 12, interval dynamic programming beyond.
NoncrossingFamily max_noncrossing_family(int m);
/// The interval dynamic program alone (any m >= 2).
NoncrossingFamily max_noncrossing_family_dp(int m);
/// Branch and bound alone (2 <= m <= 15).
NoncrossingFamily max_noncrossing_family_bnb(int m);

/// sqrt(10) m^{3/2} + m/2, the bound on e(F) for longest cycles.
double aux_edge_bound(int m);

struct SupersaturationReport {
  int edges = 0;  // e(F)
  int m = 0;
  long sum_common = 0;  // sum over i < j of a_ij
  int l_size = 0;
  double convexity_lower = 0.0;  // e(e - m) / (2m)
  double l_lower = 0.0;          // e(e - m) / (2m^2) - 3(m - 1)
  bool assumption_met = false;   // e >= m
  bool convexity_holds = false;
  bool l_lower_holds = false;
  bool l_noncrossing = false;
  bool l_upper_holds = false;    // |L| <= 2m - 3 (m >= 2; vacuous for m = 1)
  double edge_bound = 0.0;
  bool edge_bound_holds = false;
};

/// Evaluates the counting chain on f. When e(F) < m the inequalities are
/// skipped and the *_holds fields for them stay false with assumption_met false.
SupersaturationReport supersaturation_report(const AuxGraph& f);

}  // namespace longcycle
