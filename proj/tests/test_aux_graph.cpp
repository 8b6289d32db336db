#include <algorithm>
#include <functional>
#include <map>

#include "doctest.h"
#include "hosts.hpp"
#include "longcycle/aux_graph.hpp"
#include "longcycle/families.hpp"

using namespace longcycle;
namespace fam = longcycle::families;

namespace {

// Two X segments (i = 0, j = 1) and two Y segments (k = 0, l = 1); path ids
// 0 = ik, 1 = il, 2 = jk, 3 = jl. The item orders fix the endpoint orders.
hosts::Built four_path_host(std::vector<int> xi, std::vector<int> xj, std::vector<int> yk, std::vector<int> yl,
                            int interior = 0) {
  hosts::Spec s;
  s.m = 2;
  s.x_items = {std::move(xi), std::move(xj)};
  s.y_items = {std::move(yk), std::move(yl)};
  s.interior.assign(4, interior);
  return hosts::build(s);
}

// F = K_{2,t}: x_0 and x_1 both joined to y_0..y_{t-1}, with m = t.
hosts::Built k2t_host(int t) {
  hosts::Spec s;
  s.m = t;
  s.x_items.assign(t, {});
  s.y_items.assign(t, {});
  for (int k = 0; k < t; ++k) {
    s.x_items[0].push_back(k);
    s.x_items[1].push_back(t + k);
    s.y_items[k] = {k, t + k};
  }
  s.interior.assign(2 * t, 0);
  return hosts::build(s);
}

}  // namespace

TEST_CASE("decompose examples") {
  const Graph k4 = fam::complete(4);
  const Cycle x = Cycle::in_graph(k4, {0, 1, 2, 3});
  const auto same = decompose(k4, x, x);
  CHECK(same.m == 4);
  for (const auto& seg : same.x_segments) CHECK(seg.empty());
  for (const auto& seg : same.y_segments) CHECK(seg.empty());

  const Graph tt = fam::two_triangles_sharing_vertex();
  const auto d = decompose(tt, Cycle::in_graph(tt, {0, 1, 2}), Cycle::in_graph(tt, {0, 3, 4}));
  CHECK(d.m == 1);
  CHECK(d.x_segments == std::vector<std::vector<int>>{{1, 2}});
  CHECK(d.y_segments == std::vector<std::vector<int>>{{3, 4}});

  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 6}, {6, 7}, {7, 8}, {8, 0}};
  const Graph host = Graph::from_edges(9, e);
  const auto c = decompose(host, Cycle::in_graph(host, {0, 1, 2, 3, 4, 5}), Cycle::in_graph(host, {0, 1, 2, 6, 7, 8}));
  CHECK(c.m == 3);
  CHECK(c.common == VertexSet{0, 1, 2});
  CHECK(c.m_order_x == std::vector<int>{0, 1, 2});
  CHECK(c.x_segments == std::vector<std::vector<int>>{{}, {}, {3, 4, 5}});
  CHECK(c.y_segments == std::vector<std::vector<int>>{{}, {}, {6, 7, 8}});
  CHECK(c.x_segment_of(4) == 2);
  CHECK(c.x_offset_of(4) == 1);
  CHECK(c.x_segment_of(0) == -1);

  const Graph two = fam::disjoint_union(fam::cycle(3), fam::cycle(3));
  CHECK_THROWS_WITH_AS(decompose(two, Cycle::in_graph(two, {0, 1, 2}), Cycle::in_graph(two, {3, 4, 5})),
                       "empty intersection", InvalidArgument);
}

TEST_CASE("decomposition partitions both cycles") {
  fam::SplitMix rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = hosts::build(hosts::random_spec(rng, 1 + rng.below(6), rng.below(8)));
    for (bool rx : {false, true})
      for (bool ry : {false, true}) {
        const auto d = decompose(h.g, h.x, h.y, rx, ry);
        VertexSet xs = d.common, ys = d.common;
        int xc = d.m, yc = d.m;
        for (const auto& s : d.x_segments) {
          for (int v : s) xs.set(v);
          xc += static_cast<int>(s.size());
        }
        for (const auto& s : d.y_segments) {
          for (int v : s) ys.set(v);
          yc += static_cast<int>(s.size());
        }
        CHECK(xs == h.x.vertex_set());
        CHECK(xc == h.x.length());
        CHECK(ys == h.y.vertex_set());
        CHECK(yc == h.y.length());
        CHECK(static_cast<int>(d.x_segments.size()) == d.m);
      }
  }
}

TEST_CASE("build_aux examples") {
  const auto h = four_path_host({0, 1}, {2, 3}, {0, 2}, {1, 3}, 1);
  CHECK(h.g.order() == 14);
  PathFamily none;
  CHECK(build_aux(h.g, h.x, h.y, none).edge_count() == 0);

  PathFamily one;
  one.paths = {h.family.paths[0]};
  const auto f1 = build_aux(h.g, h.x, h.y, one);
  CHECK(f1.edge_count() == 1);
  CHECK(f1.has_edge(0, 0));

  const auto f = build_aux(h.g, h.x, h.y, h.family);
  CHECK(f.edge_count() == 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(f.has_edge(i, j));
  CHECK(four_cycles(f).size() == 1);
}

TEST_CASE("build_aux rejects bad families") {
  const auto h = four_path_host({0, 1}, {2, 3}, {0, 2}, {1, 3}, 1);
  PathFamily from_m;
  from_m.paths = {{0, h.y_walk[1]}};
  CHECK_THROWS_WITH_AS(build_aux(h.g, h.x, h.y, from_m), "invalid terminal", InvalidArgument);

  // Two paths into the same segment pair.
  hosts::Spec s;
  s.m = 1;
  s.x_items = {{0, 1}};
  s.y_items = {{0, 1}};
  s.interior = {0, 1};
  const auto dup = hosts::build(s);
  try {
    build_aux(dup.g, dup.x, dup.y, dup.family);
    FAIL("expected a segment pair collision");
  } catch (const SegmentPairCollision& e) {
    CHECK(e.i() == 0);
    CHECK(e.j() == 0);
    CHECK(e.first() != e.second());
  }
}

TEST_CASE("classify_four_cycle on the four endpoint arrangements") {
  auto type_of = [](const hosts::Built& h) {
    return classify_four_cycle(build_aux(h.g, h.x, h.y, h.family), 0, 1, 0, 1);
  };
  CHECK(type_of(four_path_host({0, 1}, {2, 3}, {0, 2}, {1, 3})) == FourCycleType{0, 0});
  CHECK(type_of(four_path_host({0, 1}, {2, 3}, {0, 2}, {3, 1})) == FourCycleType{0, 1});
  CHECK(type_of(four_path_host({0, 1}, {3, 2}, {0, 2}, {1, 3})) == FourCycleType{1, 0});
  CHECK(type_of(four_path_host({0, 1}, {3, 2}, {0, 2}, {3, 1})) == FourCycleType{1, 1});
  CHECK(type_of(four_path_host({1, 0}, {3, 2}, {2, 0}, {3, 1})) == FourCycleType{0, 0});

  const auto h = four_path_host({0, 1}, {2, 3}, {0, 2}, {1, 3});
  PathFamily three;
  three.paths = {h.family.paths[0], h.family.paths[1], h.family.paths[2]};
  CHECK_THROWS_WITH_AS(classify_four_cycle(build_aux(h.g, h.x, h.y, three), 0, 1, 0, 1), "not a 4-cycle",
                       InvalidArgument);
}

TEST_CASE("4-cycle types do not depend on the cycle orientations") {
  // Reversal renumbers segments, so match 4-cycles by their four X endpoints.
  auto keyed = [](const AuxGraph& f) {
    std::map<std::vector<int>, FourCycleType> out;
    for (const auto& c : four_cycles(f)) {
      std::vector<int> key{f.edge(c.i, c.k).u(), f.edge(c.i, c.l).u(), f.edge(c.j, c.k).u(), f.edge(c.j, c.l).u()};
      std::sort(key.begin(), key.end());
      out[key] = c.type;
    }
    return out;
  };
  fam::SplitMix rng(5);
  int seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + rng.below(4);
    const auto h = hosts::build(hosts::random_spec(rng, m, m + rng.below(m * m - m + 1)));
    const auto base = keyed(build_aux(h.g, h.x, h.y, h.family));
    for (bool rx : {false, true})
      for (bool ry : {false, true}) {
        const auto other = keyed(build_aux(decompose(h.g, h.x, h.y, rx, ry), h.g, h.family));
        CHECK(other == base);
      }
    seen += static_cast<int>(base.size());
  }
  CHECK(seen > 100);
}

TEST_CASE("common neighbour counts and the L-set") {
  const auto k22 = four_path_host({0, 1}, {2, 3}, {0, 2}, {1, 3});
  CHECK(common_neighbor_counts(build_aux(k22.g, k22.x, k22.y, k22.family)).at({0, 1}) == 2);

  const auto bare = four_path_host({0, 1}, {2, 3}, {0, 2}, {1, 3});
  for (const auto& [pair, a] : common_neighbor_counts(build_aux(bare.g, bare.x, bare.y, PathFamily{}))) CHECK(a == 0);

  // The canonical orientation decides which indices the two loaded X segments get.
  auto loaded_pair = [](const hosts::Built& h, const AuxGraph& f, int t) {
    const int a = f.dec.x_segment_of(h.u[0]);
    const int b = f.dec.x_segment_of(h.u[t]);
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  const auto k27 = k2t_host(7);
  const auto f7 = build_aux(k27.g, k27.x, k27.y, k27.family);
  const auto p7 = loaded_pair(k27, f7, 7);
  CHECK(common_neighbor_counts(f7).at(p7) == 7);
  CHECK(l_set(f7) == std::vector<std::pair<int, int>>{p7});
  int nonzero = 0;
  for (const auto& [pair, a] : common_neighbor_counts(f7)) nonzero += a > 0;
  CHECK(nonzero == 1);

  const auto k26 = k2t_host(6);
  const auto f6 = build_aux(k26.g, k26.x, k26.y, k26.family);
  CHECK(common_neighbor_counts(f6).at(loaded_pair(k26, f6, 6)) == 6);
  CHECK(l_set(f6).empty());
}

TEST_CASE("common neighbour counts match a scan over edge pairs") {
  fam::SplitMix rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = hosts::build(hosts::random_spec(rng, 6, 12 + rng.below(10)));
    const auto f = build_aux(h.g, h.x, h.y, h.family);
    std::map<std::pair<int, int>, int> expect;
    for (const auto& a : f.edges)
      for (const auto& b : f.edges)
        if (a.i < b.i && a.j == b.j) ++expect[{a.i, b.i}];
    for (const auto& [pair, count] : common_neighbor_counts(f)) {
      const auto it = expect.find(pair);
      CHECK(count == (it == expect.end() ? 0 : it->second));
    }
  }
}

TEST_CASE("is_crossing") {
  CHECK(is_crossing({0, 2}, {1, 3}));
  CHECK(is_crossing({1, 3}, {0, 2}));
  CHECK_FALSE(is_crossing({0, 3}, {1, 2}));
  CHECK_FALSE(is_crossing({0, 1}, {1, 2}));
  CHECK_FALSE(is_crossing({0, 1}, {2, 3}));
}

namespace {

// Every non-crossing subfamily of the pairs over [m], by depth-first search
// that adds pairs in index order; returns the largest size seen.
int enumerate_noncrossing(int m, long& families) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  std::vector<std::pair<int, int>> chosen;
  int best = 0;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    ++families;
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t t = from; t < pairs.size(); ++t) {
      bool ok = true;
      for (const auto& c : chosen) ok = ok && !is_crossing(c, pairs[t]);
      if (!ok) continue;
      chosen.push_back(pairs[t]);
      go(t + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return best;
}

}  // namespace

TEST_CASE("max_noncrossing_family examples") {
  CHECK(max_noncrossing_family(2).size == 1);
  CHECK(max_noncrossing_family(3).size == 3);
  CHECK(max_noncrossing_family(5).size == 7);
  CHECK_THROWS_AS(max_noncrossing_family(1), InvalidArgument);
}

TEST_CASE("max_noncrossing_family against subset scans") {
  for (int m = 2; m <= 6; ++m) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<int, int>> fam;
      for (std::size_t t = 0; t < pairs.size(); ++t)
        if (mask >> t & 1) fam.push_back(pairs[t]);
      if (is_pairwise_noncrossing(fam)) best = std::max(best, static_cast<int>(fam.size()));
    }
    CHECK(max_noncrossing_family(m).size == best);
  }
  for (int m = 2; m <= 8; ++m) {
    long families = 0;
    CHECK(max_noncrossing_family(m).size == enumerate_noncrossing(m, families));
  }
}

TEST_CASE("branch and bound agrees with the interval program and witnesses are valid") {
  for (int m = 2; m <= 12; ++m) {
    const auto bnb = max_noncrossing_family_bnb(m);
    const auto dp = max_noncrossing_family_dp(m);
    CHECK(bnb.size == dp.size);
    CHECK(bnb.size == 2 * m - 3);
    for (const auto* f : {&bnb, &dp}) {
      CHECK(static_cast<int>(f->pairs.size()) == f->size);
      CHECK(is_pairwise_noncrossing(f->pairs));
      CHECK(std::adjacent_find(f->pairs.begin(), f->pairs.end()) == f->pairs.end());
    }
  }
  for (int m = 13; m <= 40; ++m) CHECK(max_noncrossing_family(m).size == 2 * m - 3);
}

TEST_CASE("supersaturation report") {
  hosts::Spec s;
  s.m = 3;
  s.x_items = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  s.y_items = {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
  s.interior.assign(9, 0);
  const auto k33 = hosts::build(s);
  const auto r = supersaturation_report(build_aux(k33.g, k33.x, k33.y, k33.family));
  CHECK(r.edges == 9);
  CHECK(r.sum_common == 9);
  CHECK(r.convexity_lower == doctest::Approx(9.0));
  CHECK(r.assumption_met);
  CHECK(r.convexity_holds);
  CHECK(r.l_lower_holds);

  hosts::Spec mt;
  mt.m = 4;
  mt.x_items = {{0}, {1}, {2}, {3}};
  mt.y_items = {{0}, {1}, {2}, {3}};
  mt.interior.assign(4, 0);
  const auto matching = hosts::build(mt);
  const auto rm = supersaturation_report(build_aux(matching.g, matching.x, matching.y, matching.family));
  CHECK(rm.edges == 4);
  CHECK(rm.sum_common == 0);
  CHECK(rm.convexity_lower == doctest::Approx(0.0));
  CHECK(rm.convexity_holds);

  const auto few = supersaturation_report(build_aux(matching.g, matching.x, matching.y, PathFamily{}));
  CHECK_FALSE(few.assumption_met);
  CHECK_FALSE(few.convexity_holds);

  fam::SplitMix rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = hosts::build(hosts::random_spec(rng, 6, 12));
    const auto rr = supersaturation_report(build_aux(h.g, h.x, h.y, h.family));
    CHECK(rr.edges == 12);
    CHECK(rr.assumption_met);
    CHECK(rr.convexity_holds);
    CHECK(rr.l_lower_holds);
  }
}
