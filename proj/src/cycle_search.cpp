#include "longcycle/cycle_search.hpp"

#include <algorithm>
#include <string>

namespace longcycle {
namespace {

// Anchored DFS over simple paths starting at the anchor s. Every cycle is found
// from its minimum vertex, so only vertices >= s are ever allowed.
class PathSearch {
 public:
  enum class Mode { kMaximize, kExactLength };

  PathSearch(const Graph& g, Mode mode, const SearchOptions& opts, std::int64_t& nodes)
      : g_(g), mode_(mode), budget_(opts.node_budget), nodes_(nodes) {}

  // Maximize mode.
  int best = 0;
  std::vector<int> best_cycle;

  // Exact-length mode.
  int target = 0;
  std::optional<int> limit;
  std::vector<std::vector<int>> found;
  bool hit_limit = false;

  void run_anchor(int s) {
    s_ = s;
    allowed_ = VertexSet::range(g_.order()) - VertexSet::range(s);
    allowed_ = reachable(g_, s, allowed_);
    anchor_nbrs_ = g_.neighbors(s) & allowed_;
    if (anchor_nbrs_.count() < 2) return;
    if (mode_ == Mode::kMaximize && allowed_.count() <= best) return;
    if (mode_ == Mode::kExactLength && allowed_.count() < target) return;
    path_.assign(1, s);
    used_ = VertexSet{s};
    stop_ = false;
    extend();
  }

 private:
  void extend() {
    if (++nodes_ > budget_)
      throw BudgetExceeded("cycle search exceeded node budget of " + std::to_string(budget_), nodes_, best);
    const int head = path_.back();
    const int len = static_cast<int>(path_.size());

    if (len >= 3 && g_.adjacent(head, s_)) {
      if (mode_ == Mode::kMaximize) {
        if (len > best) {
          best = len;
          best_cycle = path_;
          if (best == allowed_.count()) {
            stop_ = true;
            return;
          }
        }
      } else if (len == target && path_[1] < head) {
        found.push_back(path_);
        if (limit && static_cast<int>(found.size()) >= *limit) {
          hit_limit = true;
          stop_ = true;
          return;
        }
      }
    }
    if (mode_ == Mode::kExactLength && len == target) return;

    const VertexSet free = allowed_ - used_;
    VertexSet region = reachable(g_, head, free);
    region.reset(head);
    // Some vertex of the remaining region must close the cycle back to s.
    if (!region.intersects(anchor_nbrs_)) return;
    const int bound = len + region.count();
    if (mode_ == Mode::kMaximize ? bound <= best : bound < target) return;

    const VertexSet next = g_.neighbors(head) & free;
    for (int w : next) {
      path_.push_back(w);
      used_.set(w);
      extend();
      used_.reset(w);
      path_.pop_back();
      if (stop_) return;
    }
  }

  const Graph& g_;
  Mode mode_;
  std::int64_t budget_;
  std::int64_t& nodes_;
  int s_ = 0;
  VertexSet allowed_;
  VertexSet anchor_nbrs_;
  VertexSet used_;
  std::vector<int> path_;
  bool stop_ = false;
};

void require_cycle(const Graph& g) {
  // A graph is a forest iff m = n - (number of components).
  int components = 0;
  VertexSet seen;
  for (int v = 0; v < g.order(); ++v) {
    if (seen.test(v)) continue;
    ++components;
    seen |= reachable(g, v, g.vertices());
  }
  if (g.edge_count() == g.order() - components) throw InvalidArgument("forest has no cycle");
}

}  // namespace

LongestCycleResult find_longest_cycle(const Graph& g, const SearchOptions& opts) {
  require_cycle(g);
  std::int64_t nodes = 0;
  PathSearch search(g, PathSearch::Mode::kMaximize, opts, nodes);
  for (int s = 0; s < g.order() && g.order() - s > search.best; ++s) {
    search.run_anchor(s);
    if (search.best == g.order()) break;
  }
  return LongestCycleResult{search.best, Cycle(search.best_cycle), nodes};
}

int longest_cycle_length(const Graph& g, const SearchOptions& opts) { return find_longest_cycle(g, opts).length; }

CycleSet enumerate_cycles_of_length(const Graph& g, int length, std::optional<int> limit, const SearchOptions& opts,
                                    std::int64_t* nodes_out) {
  if (length < 3) throw InvalidArgument("cycle length must be at least 3");
  if (limit && *limit < 1) throw InvalidArgument("limit must be positive");
  std::int64_t nodes = 0;
  PathSearch search(g, PathSearch::Mode::kExactLength, opts, nodes);
  search.target = length;
  search.limit = limit;
  for (int s = 0; s + length <= g.order(); ++s) {
    search.run_anchor(s);
    if (search.hit_limit) break;
  }
  CycleSet out;
  out.length = length;
  out.truncated = search.hit_limit;
  out.cycles.reserve(search.found.size());
  // Paths are emitted already canonical: anchored at the minimum with path[1] < last.
  for (auto& p : search.found) out.cycles.emplace_back(std::move(p));
  std::sort(out.cycles.begin(), out.cycles.end());
  if (nodes_out) *nodes_out = nodes;
  return out;
}

CycleSet enumerate_longest_cycles(const Graph& g, std::optional<int> limit, const SearchOptions& opts,
                                  std::int64_t* nodes_out) {
  const auto best = find_longest_cycle(g, opts);
  SearchOptions rest = opts;
  rest.node_budget = std::max<std::int64_t>(0, opts.node_budget - best.nodes);
  std::int64_t nodes = 0;
  CycleSet out;
  try {
    out = enumerate_cycles_of_length(g, best.length, limit, rest, &nodes);
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(e.what(), best.nodes + e.nodes(), best.length);
  }
  if (nodes_out) *nodes_out = best.nodes + nodes;
  return out;
}

PairwiseIntersection min_pairwise_intersection(const CycleSet& cs) {
  if (cs.count() < 2) throw InvalidArgument("need two cycles");
  std::vector<VertexSet> sets;
  sets.reserve(cs.cycles.size());
  for (const auto& c : cs.cycles) sets.push_back(c.vertex_set());
  int best = kMaxVertices + 1;
  std::size_t bi = 0, bj = 1;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const int k = (sets[i] & sets[j]).count();
      if (k < best) {
        best = k;
        bi = i;
        bj = j;
      }
    }
  }
  return PairwiseIntersection{best, cs.cycles[bi], cs.cycles[bj]};
}

bool is_t_transversal(const CycleSet& longest, const VertexSet& a, int t) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (longest.truncated) throw InvalidArgument("transversal check needs the complete set of longest cycles");
  for (const auto& c : longest.cycles)
    if ((c.vertex_set() & a).count() < t) return false;
  return true;
}

bool is_t_transversal(const Graph& g, const VertexSet& a, int t, const SearchOptions& opts) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  return is_t_transversal(enumerate_longest_cycles(g, std::nullopt, opts), a, t);
}

}  // namespace longcycle
