#pragma once

#include <optional>
#include <string>
#include <vector>

#include "longcycle/aux_graph.hpp"

namespace longcycle {

enum class CertificateOrigin {
  SameSegments,   // two paths joining one X-segment to one Y-segment
  Type00,         // a 4-cycle of type (0,0)
  CrossingPairs,  // two type-(1,0) 4-cycles with crossing X-pairs
  Merge,          // subpath substitution between two cycles
};

std::string to_string(CertificateOrigin origin);

/// Independent check of a candidate pair {q1, q2} against the source cycles.
struct CertificateCheck {
  bool q1_is_cycle = false;
  bool q2_is_cycle = false;
  bool covers_edges = false;  // E(q1) ∪ E(q2) ⊇ E(x) ∪ E(y)
  bool longer = false;        // |q1| + |q2| > |x| + |y|

  bool ok() const { return q1_is_cycle && q2_is_cycle && covers_edges && longer; }
};

CertificateCheck validate_certificate(const Graph& g, const Cycle& x, const Cycle& y, const std::vector<int>& q1,
                                      const std::vector<int>& q2);

/// Two cycles covering E(X) ∪ E(Y) with larger total length than X and Y.
struct WinningCertificate {
  Cycle q1;
  Cycle q2;
  CertificateOrigin origin;
  int surplus = 0;   // |q1| + |q2| - |x| - |y|
  int case_id = -1;  // endpoint-ordering case for CrossingPairs, else -1
  CertificateCheck check;
};

/// Result of splicing two paths into one cycle: the new cycle replaces x
/// (replaced_x) or y, and is strictly longer than the cycle it replaces.
struct SplicedCycle {
  Cycle cycle;
  bool replaced_x = true;
};

/// path1, path2 run from X-segment i to Y-segment j and are disjoint, with
/// interiors off X ∪ Y. The shorter of X_i[u1,u2] and Y_j[v1,v2] is replaced
/// by the detour L1 ∪ (other arc) ∪ L2. Throws InvalidArgument on violated
/// preconditions and std::logic_error("exchange produced non-cycle") if the
/// splice is not a cycle.
SplicedCycle same_segment_exchange(const Graph& g, const Cycle& x, const Cycle& y, const std::vector<int>& path1,
                                   const std::vector<int>& path2);

/// Q1, Q2 from the two explicit unions for a type-(0,0) 4-cycle
/// x_i y_k x_j y_l of f. Throws InvalidArgument("wrong type") otherwise.
WinningCertificate type00_certificate(const Graph& g, const AuxGraph& f, const FourCycle& c);

/// Two type-(1,0) 4-cycles whose X-pairs cross while their Y-pairs are
/// disjoint and non-crossing. Returns nullopt when that configuration is not
/// present; throws std::logic_error if it is present but no certificate results.
std::optional<WinningCertificate> crossing_pair_certificate(const Graph& g, const AuxGraph& f, const FourCycle& c1,
                                                            const FourCycle& c2);

/// Case of the crossing configuration after orienting X and Y so that
/// u_{i1k1} <_X u_{i1l1} and v_{i1k1} <_Y v_{j1k1}: bit 1 is [u_{i2k2} <_X u_{i2l2}],
/// bit 0 is [v_{i2k2} <_Y v_{j2k2}].
int crossing_case(const AuxGraph& f, const FourCycle& c1, const FourCycle& c2);

/// Generic splice for a set of paths of f whose X-endpoints use each touched
/// X-segment exactly twice, and likewise on Y. Q1 takes the paths, the X-arcs
/// inside segments and the Y-arcs between segments; Q2 takes the rest. Returns
/// nullopt when either side is not a single cycle.
std::optional<WinningCertificate> alternating_certificate(const Graph& g, const AuxGraph& f,
                                                          const std::vector<int>& edge_ids, CertificateOrigin origin);

/// Substitutions (p[t] a subpath of x, q[t] a subpath of the donor cycle)
/// with matching endpoints.
struct MergePlan {
  std::vector<std::vector<int>> p;
  std::vector<std::vector<int>> q;
};

/// Replaces every p[t] in x by q[t]. The plan must satisfy the three merge
/// conditions, otherwise InvalidArgument names the violated one
/// ("merge bullet 1/2/3: ...").
Cycle cycle_merge(const Graph& g, const Cycle& x, const Cycle& donor, const MergePlan& plan);

struct Improvement {
  Cycle x;
  Cycle y;
  CertificateOrigin origin;
};

/// Tries the same-segment exchange for every segment pair, then type-(0,0)
/// and crossing-pair certificates on a maximum family in G - M. Returns the
/// first improved pair found (|x'| + |y'| > |x| + |y|).
std::optional<Improvement> improve_by_exchange(const Graph& g, const Cycle& x, const Cycle& y);

}  // namespace longcycle
