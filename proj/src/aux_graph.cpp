#include "longcycle/aux_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace longcycle {
namespace {

// Rotates the oriented cycle walk so it starts at its first vertex in `common`.
std::vector<int> oriented_walk(const Cycle& c, bool reversed, const VertexSet& common) {
  std::vector<int> seq = c.vertices();
  if (reversed) std::reverse(seq.begin(), seq.end());
  const auto first = std::find_if(seq.begin(), seq.end(), [&](int v) { return common.test(v); });
  std::rotate(seq.begin(), first, seq.end());
  return seq;
}

void split_walk(const std::vector<int>& walk, const VertexSet& common, int n, std::vector<int>& order,
                std::vector<std::vector<int>>& segments, std::vector<int>& seg, std::vector<int>& off,
                std::vector<int>& pos) {
  seg.assign(n, -1);
  off.assign(n, -1);
  pos.assign(n, -1);
  for (std::size_t t = 0; t < walk.size(); ++t) {
    const int v = walk[t];
    pos[v] = static_cast<int>(t);
    if (common.test(v)) {
      order.push_back(v);
      segments.emplace_back();
    } else {
      seg[v] = static_cast<int>(segments.size()) - 1;
      off[v] = static_cast<int>(segments.back().size());
      segments.back().push_back(v);
    }
  }
}

}  // namespace

SegmentDecomposition decompose(const Graph& g, const Cycle& x, const Cycle& y, bool reverse_x, bool reverse_y) {
  if (!x.is_cycle_of(g) || !y.is_cycle_of(g)) throw InvalidArgument("decomposition inputs must be cycles of the graph");
  SegmentDecomposition d;
  d.common = x.vertex_set() & y.vertex_set();
  if (d.common.empty()) throw InvalidArgument("empty intersection");
  d.m = d.common.count();
  d.x_reversed = reverse_x;
  d.y_reversed = reverse_y;
  d.x_walk = oriented_walk(x, reverse_x, d.common);
  d.y_walk = oriented_walk(y, reverse_y, d.common);
  split_walk(d.x_walk, d.common, g.order(), d.m_order_x, d.x_segments, d.x_seg_, d.x_off_, d.x_pos_);
  split_walk(d.y_walk, d.common, g.order(), d.m_order_y, d.y_segments, d.y_seg_, d.y_off_, d.y_pos_);
  return d;
}

const AuxEdge& AuxGraph::edge(int i, int j) const {
  const int e = edge_index(i, j);
  if (e < 0) throw InvalidArgument("no edge x" + std::to_string(i) + " y" + std::to_string(j));
  return edges[e];
}

std::vector<int> AuxGraph::x_neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < dec.m; ++j)
    if (has_edge(i, j)) out.push_back(j);
  return out;
}

SegmentPairCollision::SegmentPairCollision(int i, int j, std::vector<int> first, std::vector<int> second)
    : Error("two paths join segments x" + std::to_string(i) + " and y" + std::to_string(j)),
      i_(i),
      j_(j),
      first_(std::move(first)),
      second_(std::move(second)) {}

AuxGraph build_aux(const SegmentDecomposition& dec, const Graph& g, const PathFamily& family) {
  AuxGraph f;
  f.dec = dec;
  f.index_.assign(static_cast<std::size_t>(dec.m) * dec.m, -1);
  VertexSet used;
  for (const auto& p : family.paths) {
    if (p.empty()) throw InvalidArgument("empty path in family");
    for (std::size_t t = 0; t < p.size(); ++t) {
      if (p[t] < 0 || p[t] >= g.order()) throw InvalidArgument("path vertex outside the graph");
      if (used.test(p[t])) throw InvalidArgument("paths in the family are not disjoint");
      used.set(p[t]);
      if (t > 0 && !g.adjacent(p[t - 1], p[t])) throw InvalidArgument("family member is not a path of the graph");
    }
    const int i = dec.x_segment_of(p.front());
    const int j = dec.y_segment_of(p.back());
    if (i < 0 || j < 0) throw InvalidArgument("invalid terminal");
    for (std::size_t t = 1; t + 1 < p.size(); ++t)
      if (dec.x_segment_of(p[t]) >= 0 || dec.y_segment_of(p[t]) >= 0)
        throw InvalidArgument("path interior meets X - M or Y - M");
    f.edges.push_back(AuxEdge{i, j, p});
  }
  std::sort(f.edges.begin(), f.edges.end(), [](const AuxEdge& a, const AuxEdge& b) {
    return std::tie(a.i, a.j, a.path) < std::tie(b.i, b.j, b.path);
  });
  for (std::size_t e = 0; e < f.edges.size(); ++e) {
    auto& slot = f.index_[static_cast<std::size_t>(f.edges[e].i) * dec.m + f.edges[e].j];
    if (slot >= 0) throw SegmentPairCollision(f.edges[e].i, f.edges[e].j, f.edges[slot].path, f.edges[e].path);
    slot = static_cast<int>(e);
  }
  return f;
}

AuxGraph build_aux(const Graph& g, const Cycle& x, const Cycle& y, const PathFamily& family) {
  return build_aux(decompose(g, x, y), g, family);
}

PathFamily cycle_path_family(const Graph& g, const Cycle& x, const Cycle& y) {
  const VertexSet common = x.vertex_set() & y.vertex_set();
  const VertexSet a = x.vertex_set() - common;
  const VertexSet b = y.vertex_set() - common;
  if (a.empty() || b.empty()) {
    PathFamily empty;
    empty.source_set = a;
    empty.target_set = b;
    return empty;
  }
  return max_disjoint_paths(g, a, b, g.vertices() - common);
}

FourCycleType classify_four_cycle(const AuxGraph& f, int i, int j, int k, int l) {
  if (!(i < j) || !(k < l)) throw InvalidArgument("4-cycle indices need i < j and k < l");
  if (i < 0 || l >= f.m() || j >= f.m() || k < 0) throw InvalidArgument("4-cycle index out of range");
  if (!f.has_edge(i, k) || !f.has_edge(i, l) || !f.has_edge(j, k) || !f.has_edge(j, l))
    throw InvalidArgument("not a 4-cycle");
  const auto& d = f.dec;
  auto xo = [&](int a, int b) { return d.x_offset_of(f.edge(a, b).u()); };
  auto yo = [&](int a, int b) { return d.y_offset_of(f.edge(a, b).v()); };
  FourCycleType t;
  t.alpha = (xo(i, k) < xo(i, l)) != (xo(j, k) < xo(j, l)) ? 1 : 0;
  t.beta = (yo(i, k) < yo(j, k)) != (yo(i, l) < yo(j, l)) ? 1 : 0;
  return t;
}

std::vector<FourCycle> four_cycles(const AuxGraph& f) {
  std::vector<FourCycle> out;
  const int m = f.m();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> shared;
      for (int k = 0; k < m; ++k)
        if (f.has_edge(i, k) && f.has_edge(j, k)) shared.push_back(k);
      for (std::size_t a = 0; a < shared.size(); ++a)
        for (std::size_t b = a + 1; b < shared.size(); ++b)
          out.push_back({i, j, shared[a], shared[b], classify_four_cycle(f, i, j, shared[a], shared[b])});
    }
  return out;
}

TypeCensus type_census(const AuxGraph& f) {
  TypeCensus c{};
  for (const auto& fc : four_cycles(f)) ++c[fc.type.alpha][fc.type.beta];
  return c;
}

std::map<std::pair<int, int>, int> common_neighbor_counts(const AuxGraph& f) {
  std::map<std::pair<int, int>, int> a;
  const int m = f.m();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int c = 0;
      for (int k = 0; k < m; ++k) c += f.has_edge(i, k) && f.has_edge(j, k);
      a[{i, j}] = c;
    }
  return a;
}

std::vector<std::pair<int, int>> l_set(const AuxGraph& f) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [pair, a] : common_neighbor_counts(f))
    if (a >= 7) out.push_back(pair);
  return out;
}

bool is_crossing(std::pair<int, int> p1, std::pair<int, int> p2) {
  const auto [i1, j1] = p1;
  const auto [i2, j2] = p2;
  if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2) return false;
  const bool in2 = i1 <= i2 && i2 <= j1;
  const bool inj2 = i1 <= j2 && j2 <= j1;
  return in2 != inj2;
}

bool is_pairwise_noncrossing(const std::vector<std::pair<int, int>>& pairs) {
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      if (is_crossing(pairs[a], pairs[b])) return false;
  return true;
}

namespace {

// The family {(0, t)} ∪ {(t, t + 1) : t >= 1}: nested intervals plus adjacent pairs.
std::vector<std::pair<int, int>> nested_plus_adjacent(int m) {
  std::vector<std::pair<int, int>> out;
  for (int t = 1; t < m; ++t) out.emplace_back(0, t);
  for (int t = 1; t + 1 < m; ++t) out.emplace_back(t, t + 1);
  std::sort(out.begin(), out.end());
  return out;
}

// Maximum clique in the compatibility graph of pairs, with greedy colouring bounds.
class CompatibleClique {
 public:
  explicit CompatibleClique(int m) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) pairs_.emplace_back(i, j);
    const int p = static_cast<int>(pairs_.size());
    compat_.resize(p);
    for (int a = 0; a < p; ++a)
      for (int b = 0; b < p; ++b)
        if (a != b && !is_crossing(pairs_[a], pairs_[b])) compat_[a].set(b);
  }

  std::vector<std::pair<int, int>> solve(const std::vector<std::pair<int, int>>& seed) {
    for (const auto& s : seed) best_.push_back(index_of(s));
    VertexSet all = VertexSet::range(static_cast<int>(pairs_.size()));
    std::vector<int> current;
    expand(all, current);
    std::vector<std::pair<int, int>> out;
    for (int v : best_) out.push_back(pairs_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  int index_of(std::pair<int, int> p) const {
    return static_cast<int>(std::find(pairs_.begin(), pairs_.end(), p) - pairs_.begin());
  }

  void expand(VertexSet cand, std::vector<int>& current) {
    // Colour classes are independent sets of the compatibility graph.
    std::vector<int> order;
    std::vector<int> colour;
    VertexSet uncoloured = cand;
    int k = 0;
    while (uncoloured.any()) {
      ++k;
      VertexSet q = uncoloured;
      while (q.any()) {
        const int v = q.first();
        q.reset(v);
        q -= compat_[v];
        uncoloured.reset(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (int t = static_cast<int>(order.size()) - 1; t >= 0; --t) {
      if (static_cast<int>(current.size()) + colour[t] <= static_cast<int>(best_.size())) return;
      const int v = order[t];
      current.push_back(v);
      const VertexSet next = cand & compat_[v];
      if (next.empty()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      cand.reset(v);
    }
  }

  std::vector<std::pair<int, int>> pairs_;
  std::vector<VertexSet> compat_;
  std::vector<int> best_;
};

}  // namespace

NoncrossingFamily max_noncrossing_family_bnb(int m) {
  if (m < 2) throw InvalidArgument("non-crossing family needs m >= 2");
  if (m > 15) throw InvalidArgument("branch and bound supports m <= 15");
  CompatibleClique search(m);
  auto pairs = search.solve(nested_plus_adjacent(m));
  return NoncrossingFamily{static_cast<int>(pairs.size()), std::move(pairs)};
}

NoncrossingFamily max_noncrossing_family_dp(int m) {
  if (m < 2) throw InvalidArgument("non-crossing family needs m >= 2");
  // best[i][j]: largest non-crossing family inside [i, j]. The pair (i, j)
  // crosses nothing inside [i, j]; a maximal family also contains a split
  // point k so that every other pair lies in [i, k] or [k, j].
  std::vector<std::vector<int>> best(m, std::vector<int>(m, 0));
  std::vector<std::vector<int>> split(m, std::vector<int>(m, -1));
  for (int len = 1; len < m; ++len)
    for (int i = 0; i + len < m; ++i) {
      const int j = i + len;
      int inner = 0;
      for (int k = i + 1; k < j; ++k)
        if (best[i][k] + best[k][j] > inner || split[i][j] < 0) {
          inner = best[i][k] + best[k][j];
          split[i][j] = k;
        }
      best[i][j] = 1 + inner;
    }
  NoncrossingFamily out;
  std::function<void(int, int)> collect = [&](int i, int j) {
    if (i >= j) return;
    out.pairs.emplace_back(i, j);
    if (split[i][j] >= 0) {
      collect(i, split[i][j]);
      collect(split[i][j], j);
    }
  };
  collect(0, m - 1);
  std::sort(out.pairs.begin(), out.pairs.end());
  out.size = best[0][m - 1];
  return out;
}

NoncrossingFamily max_noncrossing_family(int m) {
  if (m < 2) throw InvalidArgument("non-crossing family needs m >= 2");
  return m <= 12 ? max_noncrossing_family_bnb(m) : max_noncrossing_family_dp(m);
}

double aux_edge_bound(int m) { return std::sqrt(10.0) * std::pow(m, 1.5) + m / 2.0; }

SupersaturationReport supersaturation_report(const AuxGraph& f) {
  SupersaturationReport r;
  r.edges = f.edge_count();
  r.m = f.m();
  for (const auto& [pair, a] : common_neighbor_counts(f)) r.sum_common += a;
  const auto l = l_set(f);
  r.l_size = static_cast<int>(l.size());
  r.l_noncrossing = is_pairwise_noncrossing(l);
  r.l_upper_holds = r.m < 2 || r.l_size <= 2 * r.m - 3;
  r.edge_bound = aux_edge_bound(r.m);
  r.edge_bound_holds = r.edges <= r.edge_bound;
  const double e = r.edges;
  const double m = r.m;
  r.convexity_lower = e * (e - m) / (2.0 * m);
  r.l_lower = e * (e - m) / (2.0 * m * m) - 3.0 * (m - 1.0);
  r.assumption_met = r.edges >= r.m;
  if (r.assumption_met) {
    r.convexity_holds = r.sum_common >= r.convexity_lower - 1e-9;
    r.l_lower_holds = r.l_size >= r.l_lower - 1e-9;
  }
  return r;
}

}  // namespace longcycle
