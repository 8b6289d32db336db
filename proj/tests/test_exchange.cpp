#include <algorithm>
#include <set>

#include "doctest.h"
#include "hosts.hpp"
#include "longcycle/cycle_search.hpp"
#include "longcycle/exchange.hpp"
#include "longcycle/families.hpp"

using namespace longcycle;
namespace fam = longcycle::families;

namespace {

constexpr int F = hosts::kFiller;

using hosts::crossing_host;
using hosts::cycle_of;
using hosts::total_path_length;
using hosts::type00_host;

void check_certificate(const Graph& g, const Cycle& x, const Cycle& y, const WinningCertificate& c) {
  CHECK(c.check.ok());
  // Validation repeated from scratch, outside the constructor.
  const auto again = validate_certificate(g, x, y, c.q1.vertices(), c.q2.vertices());
  CHECK(again.q1_is_cycle);
  CHECK(again.q2_is_cycle);
  CHECK(again.covers_edges);
  CHECK(again.longer);
  std::set<Edge> have;
  for (const auto& e : c.q1.edges()) have.insert(e);
  for (const auto& e : c.q2.edges()) have.insert(e);
  for (const auto& e : x.edges()) CHECK(have.count(e) == 1);
  for (const auto& e : y.edges()) CHECK(have.count(e) == 1);
  CHECK(c.q1.length() + c.q2.length() - x.length() - y.length() == c.surplus);
}

}  // namespace

TEST_CASE("same-segment exchange lengthens the cycle with the shorter arc") {
  // X and Y are 8-cycles sharing M = {0, 1}; both paths run from X_0 to Y_0
  // through two interior vertices each: 18 vertices.
  hosts::Spec s;
  s.m = 2;
  s.x_items = {{F, 0, F, 1}, {F, F}};
  s.y_items = {{0, F, F, F, 1}, {F}};
  s.interior = {2, 2};
  const auto h = hosts::build(s);
  REQUIRE(h.g.order() == 18);
  REQUIRE(h.x.length() == 8);
  REQUIRE(h.y.length() == 8);

  const auto r = same_segment_exchange(h.g, h.x, h.y, h.family.paths[0], h.family.paths[1]);
  CHECK(r.replaced_x);
  // |X| - |X_0[u1,u2]| + |L1| + |Y_0[v1,v2]| + |L2| = 8 - 2 + 3 + 4 + 3.
  CHECK(r.cycle.length() == 16);
  CHECK(r.cycle.is_cycle_of(h.g));

  s.y_items = {{0, F, 1}, {F, F, F}};
  const auto tie = hosts::build(s);
  const auto rt = same_segment_exchange(tie.g, tie.x, tie.y, tie.family.paths[0], tie.family.paths[1]);
  CHECK(rt.replaced_x);
  CHECK(rt.cycle.length() == 8 - 2 + 3 + 2 + 3);

  s.x_items = {{0, F, F, F, 1}, {F}};
  s.y_items = {{0, F, 1}, {F, F, F}};
  const auto ys = hosts::build(s);
  const auto ry = same_segment_exchange(ys.g, ys.x, ys.y, ys.family.paths[0], ys.family.paths[1]);
  CHECK_FALSE(ry.replaced_x);
  CHECK(ry.cycle.length() == 8 - 2 + 3 + 4 + 3);
  CHECK(ry.cycle.length() > ys.y.length());

  auto shared = h.family.paths[1];
  shared.front() = h.family.paths[0].front();
  CHECK_THROWS_WITH_AS(same_segment_exchange(h.g, h.x, h.y, h.family.paths[0], h.family.paths[0]),
                       "paths are not disjoint", InvalidArgument);
  CHECK_THROWS_AS(same_segment_exchange(h.g, h.x, h.y, h.family.paths[0], shared), InvalidArgument);
}

TEST_CASE("same-segment exchange requires both segments shared") {
  hosts::Spec s;
  s.m = 2;
  s.x_items = {{0}, {1}};
  s.y_items = {{0, 1}, {F}};
  s.interior = {1, 1};
  const auto h = hosts::build(s);
  CHECK_THROWS_WITH_AS(same_segment_exchange(h.g, h.x, h.y, h.family.paths[0], h.family.paths[1]),
                       "paths do not share both segments", InvalidArgument);
}

TEST_CASE("type (0,0) certificates in every orientation") {
  for (bool fx : {false, true})
    for (bool fy : {false, true}) {
      const auto h = type00_host(fx, fy);
      const auto f = build_aux(h.g, h.x, h.y, h.family);
      const auto c = cycle_of(f, h, 0);
      REQUIRE(c.type == FourCycleType{0, 0});
      const auto cert = type00_certificate(h.g, f, c);
      check_certificate(h.g, h.x, h.y, cert);
      CHECK(cert.origin == CertificateOrigin::Type00);
      CHECK(cert.surplus == 8);
      // The alternating splice must reproduce the same pair.
      const auto alt = alternating_certificate(h.g, f, {0, 1, 2, 3}, CertificateOrigin::Type00);
      REQUIRE(alt);
      CHECK(std::minmax(alt->q1, alt->q2) == std::minmax(cert.q1, cert.q2));
    }
}

TEST_CASE("type (0,0) surplus is twice the total path length") {
  const auto h = type00_host(false, false, {1, 0, 0, 0});
  const auto f = build_aux(h.g, h.x, h.y, h.family);
  const auto cert = type00_certificate(h.g, f, cycle_of(f, h, 0));
  check_certificate(h.g, h.x, h.y, cert);
  CHECK(cert.surplus == 10);

  const auto h2 = type00_host(true, false, {2, 1, 0, 3});
  const auto f2 = build_aux(h2.g, h2.x, h2.y, h2.family);
  const auto cert2 = type00_certificate(h2.g, f2, cycle_of(f2, h2, 0));
  check_certificate(h2.g, h2.x, h2.y, cert2);
  CHECK(cert2.surplus == 2 * total_path_length(h2, 0, 4));
  CHECK(cert2.surplus == 2 * (3 + 2 + 1 + 4));
}

TEST_CASE("type (0,0) certificate rejects other types") {
  hosts::Spec s;
  s.m = 2;
  s.x_items = {{0, 1}, {3, 2}};
  s.y_items = {{0, 2}, {1, 3}};
  s.interior.assign(4, 0);
  const auto h = hosts::build(s);
  const auto f = build_aux(h.g, h.x, h.y, h.family);
  const auto c = cycle_of(f, h, 0);
  CHECK(c.type == FourCycleType{1, 0});
  CHECK_THROWS_WITH_AS(type00_certificate(h.g, f, c), "wrong type", InvalidArgument);
}

TEST_CASE("crossing-pair certificates for all four endpoint orderings") {
  for (bool nested : {false, true})
    for (int extra : {0, 2})
      for (int interior : {0, 2}) {
        std::set<int> cases;
        for (bool tri : {false, true})
          for (bool rect : {false, true}) {
            const auto h = crossing_host(tri, rect, nested, extra, interior);
            const auto f = build_aux(h.g, h.x, h.y, h.family);
            const auto c1 = cycle_of(f, h, 0);
            const auto c2 = cycle_of(f, h, 4);
            REQUIRE(c1.type == FourCycleType{1, 0});
            REQUIRE(c2.type == FourCycleType{1, 0});
            REQUIRE(is_crossing({c1.i, c1.j}, {c2.i, c2.j}));
            const auto cert = crossing_pair_certificate(h.g, f, c1, c2);
            REQUIRE(cert);
            check_certificate(h.g, h.x, h.y, *cert);
            CHECK(cert->origin == CertificateOrigin::CrossingPairs);
            CHECK(cert->surplus == 2 * total_path_length(h, 0, 8));
            cases.insert(cert->case_id);
            // The certificate does not depend on which 4-cycle is listed first.
            const auto swapped = crossing_pair_certificate(h.g, f, c2, c1);
            REQUIRE(swapped);
            CHECK(std::minmax(swapped->q1, swapped->q2) == std::minmax(cert->q1, cert->q2));
          }
        CHECK(cases == std::set<int>{0, 1, 2, 3});
      }
}

TEST_CASE("crossing-pair certificate is absent outside its configuration") {
  // Y-pairs (0, 2) and (1, 3) cross.
  hosts::Spec s;
  s.m = 4;
  s.x_items = {{0, 1}, {4, 5}, {3, 2}, {7, 6}};
  s.y_items = {{0, 2}, {4, 6}, {1, 3}, {5, 7}};
  s.interior.assign(8, 0);
  auto h = hosts::build(s);
  auto f = build_aux(h.g, h.x, h.y, h.family);
  CHECK_FALSE(crossing_pair_certificate(h.g, f, cycle_of(f, h, 0), cycle_of(f, h, 4)));

  // X-pairs (0, 1) and (2, 3) do not cross.
  s.x_items = {{0, 1}, {3, 2}, {4, 5}, {7, 6}};
  s.y_items = {{0, 2}, {1, 3}, {4, 6}, {5, 7}};
  h = hosts::build(s);
  f = build_aux(h.g, h.x, h.y, h.family);
  CHECK_FALSE(crossing_pair_certificate(h.g, f, cycle_of(f, h, 0), cycle_of(f, h, 4)));

  // First 4-cycle of type (0,0).
  s.x_items = {{0, 1}, {4, 5}, {2, 3}, {7, 6}};
  s.y_items = {{0, 2}, {1, 3}, {4, 6}, {5, 7}};
  h = hosts::build(s);
  f = build_aux(h.g, h.x, h.y, h.family);
  CHECK(cycle_of(f, h, 0).type == FourCycleType{0, 0});
  CHECK_FALSE(crossing_pair_certificate(h.g, f, cycle_of(f, h, 0), cycle_of(f, h, 4)));
}

TEST_CASE("certificates on random hosts") {
  fam::SplitMix rng(2024);
  int type00_seen = 0, crossing_seen = 0, crossing_absent = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 4 + rng.below(3);
    const auto h = hosts::build(hosts::random_spec(rng, m, 2 * m + rng.below(2 * m)));
    const auto f = build_aux(h.g, h.x, h.y, h.family);
    std::vector<FourCycle> t10;
    for (const auto& c : four_cycles(f)) {
      if (c.type == FourCycleType{0, 0}) {
        const auto cert = type00_certificate(h.g, f, c);
        check_certificate(h.g, h.x, h.y, cert);
        int len = 0;
        for (auto [a, b] : {std::pair{c.i, c.k}, {c.i, c.l}, {c.j, c.k}, {c.j, c.l}})
          len += static_cast<int>(f.edge(a, b).path.size()) - 1;
        CHECK(cert.surplus == 2 * len);
        const auto alt = alternating_certificate(
            h.g, f, {f.edge_index(c.i, c.k), f.edge_index(c.i, c.l), f.edge_index(c.j, c.k), f.edge_index(c.j, c.l)},
            CertificateOrigin::Type00);
        REQUIRE(alt);
        CHECK(std::minmax(alt->q1, alt->q2) == std::minmax(cert.q1, cert.q2));
        ++type00_seen;
      } else {
        CHECK_THROWS_WITH_AS(type00_certificate(h.g, f, c), "wrong type", InvalidArgument);
      }
      if (c.type == FourCycleType{1, 0}) t10.push_back(c);
    }
    for (const auto& c1 : t10)
      for (const auto& c2 : t10) {
        const bool y_disjoint = c1.k != c2.k && c1.k != c2.l && c1.l != c2.k && c1.l != c2.l;
        const bool hypothesis =
            is_crossing({c1.i, c1.j}, {c2.i, c2.j}) && y_disjoint && !is_crossing({c1.k, c1.l}, {c2.k, c2.l});
        const auto cert = crossing_pair_certificate(h.g, f, c1, c2);
        CHECK(cert.has_value() == hypothesis);
        if (cert) {
          check_certificate(h.g, h.x, h.y, *cert);
          ++crossing_seen;
        } else {
          ++crossing_absent;
        }
      }
  }
  CHECK(type00_seen > 50);
  CHECK(crossing_seen > 10);
  CHECK(crossing_absent > 10);
}

TEST_CASE("cycle merge") {
  // x = 0..7, extra vertices 8 and 9.
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v) e.emplace_back(v, (v + 1) % 8);
  e.insert(e.end(), {{0, 8}, {8, 9}, {9, 2}, {8, 5}, {5, 9}});
  const Graph g = Graph::from_edges(10, e);
  const Cycle x = Cycle::in_graph(g, {0, 1, 2, 3, 4, 5, 6, 7});
  const Cycle donor = Cycle::in_graph(g, {0, 8, 9, 2, 3, 4, 5, 6, 7});

  CHECK(cycle_merge(g, x, donor, MergePlan{}) == x);

  const Cycle merged = cycle_merge(g, x, donor, MergePlan{{{0, 1, 2}}, {{0, 8, 9, 2}}});
  CHECK(merged.length() == x.length() + 3 - 2);
  CHECK(merged == donor);

  CHECK_THROWS_WITH_AS(cycle_merge(g, x, donor, MergePlan{{{0, 1, 2}}, {{0, 8, 9}}}),
                       doctest::Contains("merge bullet 1"), InvalidArgument);

  const Cycle through = Cycle::in_graph(g, {0, 8, 5, 9, 2, 1});
  CHECK_THROWS_WITH_AS(cycle_merge(g, x, through, MergePlan{{{0, 1, 2}}, {{0, 8, 5, 9, 2}}}),
                       doctest::Contains("merge bullet 3"), InvalidArgument);

  CHECK_THROWS_WITH_AS(cycle_merge(g, x, donor, MergePlan{{{0, 2}}, {{0, 8, 9, 2}}}),
                       doctest::Contains("not a subpath of x"), InvalidArgument);
}

TEST_CASE("cycle merge with two substitutions and the cyclic order condition") {
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v) e.emplace_back(v, (v + 1) % 8);
  e.insert(e.end(), {{0, 8}, {8, 1}, {4, 9}, {9, 5}, {1, 5}, {4, 0}, {1, 4}, {5, 0}});
  const Graph g = Graph::from_edges(10, e);
  const Cycle x = Cycle::in_graph(g, {0, 1, 2, 3, 4, 5, 6, 7});

  // Endpoints along the donor read 0, 1, 4, 5: same cyclic order as on x.
  const Cycle same = Cycle::in_graph(g, {0, 8, 1, 4, 9, 5});
  const Cycle merged = cycle_merge(g, x, same, MergePlan{{{0, 1}, {4, 5}}, {{0, 8, 1}, {4, 9, 5}}});
  CHECK(merged.length() == 10);
  CHECK(merged.is_cycle_of(g));

  // Along this donor they read 0, 1, 5, 4.
  const Cycle other = Cycle::in_graph(g, {0, 8, 1, 5, 9, 4});
  CHECK_THROWS_WITH_AS(cycle_merge(g, x, other, MergePlan{{{0, 1}, {4, 5}}, {{0, 8, 1}, {5, 9, 4}}}),
                       doctest::Contains("merge bullet 2"), InvalidArgument);
}

TEST_CASE("improve_by_exchange on constructed hosts") {
  hosts::Spec s;
  s.m = 2;
  s.x_items = {{F, 0, F, 1}, {F, F}};
  s.y_items = {{0, F, F, F, 1}, {F}};
  s.interior = {2, 2};
  const auto h = hosts::build(s);
  const auto a = improve_by_exchange(h.g, h.x, h.y);
  REQUIRE(a);
  CHECK(a->origin == CertificateOrigin::SameSegments);
  CHECK(a->x.length() + a->y.length() > h.x.length() + h.y.length());

  const auto t = type00_host(true, false);
  const auto b = improve_by_exchange(t.g, t.x, t.y);
  REQUIRE(b);
  CHECK(b->origin == CertificateOrigin::Type00);
  CHECK(b->x.length() + b->y.length() == t.x.length() + t.y.length() + 8);

  const auto c = crossing_host(true, false, false);
  const auto r = improve_by_exchange(c.g, c.x, c.y);
  REQUIRE(r);
  CHECK(r->origin == CertificateOrigin::CrossingPairs);
  CHECK(validate_certificate(c.g, c.x, c.y, r->x.vertices(), r->y.vertices()).ok());

  const Graph cn = fam::cycle(9);
  const Cycle only = Cycle::in_graph(cn, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK_FALSE(improve_by_exchange(cn, only, only));
}

TEST_CASE("improve_by_exchange never improves a pair of longest cycles") {
  std::vector<Graph> graphs{fam::petersen(), fam::complete(5), fam::wheel(6), fam::prism(4), fam::complete_bipartite(3, 4),
                            fam::theta({1, 2, 3}), fam::grid(3, 3)};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) graphs.push_back(fam::random_gnp(9, 0.4, seed));
  int pairs = 0;
  for (const auto& g : graphs) {
    if (g.edge_count() < g.order()) continue;
    const auto all = enumerate_longest_cycles(g, 200);
    const std::size_t cap = std::min<std::size_t>(all.cycles.size(), 30);
    for (std::size_t a = 0; a < cap; ++a)
      for (std::size_t b = a; b < cap; ++b) {
        CHECK_FALSE(improve_by_exchange(g, all.cycles[a], all.cycles[b]));
        ++pairs;
      }
  }
  CHECK(pairs > 200);
}

TEST_CASE("improvements of non-maximal pairs are valid") {
  const Graph g = fam::petersen();
  const auto longest = enumerate_longest_cycles(g);
  int improved = 0;
  for (int len = 5; len <= 8; ++len) {
    const auto shorter = enumerate_cycles_of_length(g, len, 20);
    for (const auto& x : shorter.cycles) {
      const auto r = improve_by_exchange(g, x, longest.cycles.front());
      if (!r) continue;
      ++improved;
      CHECK(r->x.is_cycle_of(g));
      CHECK(r->y.is_cycle_of(g));
      CHECK(r->x.length() + r->y.length() > x.length() + longest.length);
    }
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph r = fam::random_gnp(10, 0.45, seed);
    if (r.edge_count() < r.order()) continue;
    const int c = longest_cycle_length(r);
    for (int len = 3; len < c; ++len) {
      const auto cs = enumerate_cycles_of_length(r, len, 8);
      for (std::size_t a = 0; a < cs.cycles.size(); ++a)
        for (std::size_t b = a + 1; b < cs.cycles.size(); ++b) {
          const auto& x = cs.cycles[a];
          const auto& y = cs.cycles[b];
          const auto imp = improve_by_exchange(r, x, y);
          if (!imp) continue;
          ++improved;
          CHECK(imp->x.is_cycle_of(r));
          CHECK(imp->y.is_cycle_of(r));
          CHECK(imp->x.length() + imp->y.length() > x.length() + y.length());
          if (imp->origin != CertificateOrigin::SameSegments)
            CHECK(validate_certificate(r, x, y, imp->x.vertices(), imp->y.vertices()).ok());
        }
    }
  }
  MESSAGE("improved " << improved << " non-maximal pairs");
}
