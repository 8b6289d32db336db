#pragma once

#include <cstdint>
#include <optional>

#include "longcycle/cycle.hpp"

namespace longcycle {

struct SearchOptions {
  /// Cap on DFS node expansions; exceeding it throws BudgetExceeded.
  std::int64_t node_budget = 100'000'000;
};

struct LongestCycleResult {
  int length = 0;
  Cycle witness;
  std::int64_t nodes = 0;
};

/// Exact c(G) with one witness cycle. Throws InvalidArgument ("forest has no
/// cycle") when g is acyclic and BudgetExceeded when the search runs out.
LongestCycleResult find_longest_cycle(const Graph& g, const SearchOptions& opts = {});

int longest_cycle_length(const Graph& g, const SearchOptions& opts = {});

/// Every cycle of length exactly `length`, canonical and sorted. With a limit,
/// enumeration stops once `limit` cycles are found and the set is flagged
/// truncated (only when more cycles may exist).
CycleSet enumerate_cycles_of_length(const Graph& g, int length, std::optional<int> limit = std::nullopt,
                                    const SearchOptions& opts = {}, std::int64_t* nodes_out = nullptr);

/// All longest cycles of g.
CycleSet enumerate_longest_cycles(const Graph& g, std::optional<int> limit = std::nullopt,
                                  const SearchOptions& opts = {}, std::int64_t* nodes_out = nullptr);

struct PairwiseIntersection {
  int size = 0;
  Cycle first;
  Cycle second;
};

/// Minimum |V(X) ∩ V(Y)| over unordered pairs of distinct members, with the
/// first witnessing pair in canonical order. Throws for fewer than two cycles.
PairwiseIntersection min_pairwise_intersection(const CycleSet& cs);

/// True iff every longest cycle of g meets `a` in at least t vertices.
bool is_t_transversal(const Graph& g, const VertexSet& a, int t, const SearchOptions& opts = {});

/// Same check against an already enumerated (untruncated) set of longest cycles.
bool is_t_transversal(const CycleSet& longest, const VertexSet& a, int t);

}  // namespace longcycle
