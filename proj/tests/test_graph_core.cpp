#include <sstream>

#include "doctest.h"
#include "longcycle/families.hpp"
#include "longcycle/graph_io.hpp"
#include "oracles.hpp"

using namespace longcycle;
namespace fam = longcycle::families;

TEST_CASE("is_connected") {
  CHECK(is_connected(fam::cycle(5)));
  CHECK_FALSE(is_connected(fam::disjoint_union(fam::complete(3), fam::complete(3))));
  CHECK_FALSE(is_connected(fam::empty_graph(3)));
  CHECK(is_connected(fam::empty_graph(0)));
  CHECK(is_connected(fam::empty_graph(1)));
}

TEST_CASE("vertex_connectivity examples") {
  CHECK(vertex_connectivity(fam::complete(4)) == 3);
  CHECK(vertex_connectivity(fam::cycle(5)) == 2);
  CHECK(vertex_connectivity(fam::petersen()) == 3);
  CHECK(vertex_connectivity(fam::path(4)) == 1);
  CHECK(vertex_connectivity(fam::empty_graph(2)) == 0);
  CHECK(vertex_connectivity(fam::complete(2)) == 1);
  CHECK_THROWS_WITH_AS(vertex_connectivity(fam::empty_graph(1)), "undefined connectivity", InvalidArgument);
}

TEST_CASE("vertex_connectivity matches subset search on random graphs") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const double p = 0.25 + 0.05 * static_cast<double>(seed % 12);
    const Graph g = fam::random_gnp(n, p, seed);
    const int k = vertex_connectivity(g);
    CAPTURE(to_graph6(g));
    CHECK(k == oracle::subset_connectivity(g));
    CHECK(k <= min_degree(g));
  }
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(fam::cycle(5), VertexSet{0}) == VertexSet{1, 4});
  const Graph p = fam::petersen();
  CHECK(neighborhood(p, p.vertices()).empty());
  CHECK(neighborhood(p, VertexSet{0, 1, 2, 3, 4}) == VertexSet{5, 6, 7, 8, 9});
  for (const auto& g : {fam::petersen(), fam::wheel(6), fam::grid(3, 4)}) {
    for (int v = 0; v < g.order(); ++v) {
      const VertexSet a{v, (v + 3) % g.order()};
      CHECK_FALSE(neighborhood(g, a).intersects(a));
    }
  }
}

TEST_CASE("diameter") {
  CHECK(diameter(fam::complete(4)) == 1);
  CHECK(diameter(fam::cycle(6)) == 3);
  CHECK(diameter(fam::petersen()) == 2);
  CHECK_THROWS_WITH_AS(diameter(fam::empty_graph(2)), doctest::Contains("infinite diameter"), InvalidArgument);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = fam::random_gnp(2 + static_cast<int>(seed % 11), 0.45, seed);
    const int expect = oracle::floyd_diameter(g);
    if (expect < 0) {
      CHECK_THROWS_AS(diameter(g), InvalidArgument);
    } else {
      CHECK(diameter(g) == expect);
    }
  }
}

TEST_CASE("is_regular") {
  CHECK(is_regular(fam::cycle(5)) == 2);
  CHECK_FALSE(is_regular(fam::path(3)).has_value());
  CHECK(is_regular(fam::petersen()) == 3);
}

TEST_CASE("graph construction rejects malformed input") {
  const std::vector<Edge> loop{{0, 0}};
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  const std::vector<Edge> outside{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(3, twice), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(3, outside), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(10, {}, 8), InvalidArgument);
  std::vector<VertexSet> rows{VertexSet{1}, VertexSet{}};
  CHECK_THROWS_AS(Graph::from_rows(rows), InvalidArgument);
}

TEST_CASE("adjacency is symmetric on generated graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = fam::random_gnp(20, 0.3, seed);
    for (int u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (int v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }
}

TEST_CASE("graph6 known encodings") {
  // Reference strings from an independent graph6 encoder.
  CHECK(to_graph6(fam::petersen()) == "IheA@GUAo");
  CHECK(to_graph6(fam::cycle(70)).substr(0, 12) == "~?@EhCGGC@?G");
  CHECK(to_graph6(fam::complete(4)) == "C~");
  CHECK(to_graph6(fam::empty_graph(0)) == "?");
  CHECK(to_graph6(fam::path(2)) == "A_");
  CHECK(from_graph6(">>graph6<<C~\n") == fam::complete(4));
}

TEST_CASE("graph6 round trip is bit-exact") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = static_cast<int>(seed % 100);
    const Graph g = fam::random_gnp(n, 0.3, seed);
    const std::string text = to_graph6(g);
    const Graph back = from_graph6(text);
    CHECK(back == g);
    CHECK(to_graph6(back) == text);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), InvalidArgument);
  CHECK_THROWS_AS(from_graph6("C"), InvalidArgument);
  CHECK_THROWS_AS(from_graph6("C~~"), InvalidArgument);
  CHECK_THROWS_AS(from_graph6("A`"), InvalidArgument);  // padding bit set
  CHECK_THROWS_AS(from_graph6(":Fa@x^"), InvalidArgument);
  CHECK_THROWS_AS(from_graph6("C\x01"), InvalidArgument);
}

TEST_CASE("edge list reading") {
  std::istringstream numeric("# a comment\n0 1\n1 2  # trailing\n\n2 0\n");
  const auto lg = read_edge_list(numeric);
  CHECK(lg.graph == fam::cycle(3));
  std::istringstream labels("a b\nb c\nc a\nc d\n");
  const auto named = read_edge_list(labels);
  CHECK(named.graph.order() == 4);
  CHECK(named.labels == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(named.graph.adjacent(2, 3));
  std::istringstream bad("0 1 2\n");
  CHECK_THROWS_AS(read_edge_list(bad), InvalidArgument);
  std::ostringstream out;
  write_edge_list(out, fam::cycle(4));
  std::istringstream again(out.str());
  CHECK(read_edge_list(again).graph == fam::cycle(4));
}
