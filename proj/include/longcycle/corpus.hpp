#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// Isomorphism invariant: the colour-refinement trace from the uniform
/// colouring. Isomorphic graphs get equal keys.
std::string refinement_key(const Graph& g);

/// All connected graphs on n vertices up to isomorphism (1 <= n <= 10),
/// sorted by graph6 string. Built by adding a vertex to every connected
/// graph on n - 1 vertices and discarding isomorphic copies.
std::vector<Graph> connected_graphs(int n);

/// A named graph for the corpora.
struct CorpusGraph {
  std::string id;
  Graph graph;
};

/// Small named graphs used across the verification suites.
std::vector<CorpusGraph> named_graphs();

/// Deterministic vertex-transitive corpus: every connected circulant on
/// 3..max_n vertices whose connection set has at most `max_gens` classes
/// {s, -s}, followed by Cayley graphs of small permutation groups, then
/// truncated to `limit` entries. Duplicates up to isomorphism are kept out.
std::vector<CorpusGraph> vertex_transitive_corpus(int max_n, int max_gens, int limit);

/// Corpus selection for the harness. Text form:
///   `named` | `exhaustive:N` | `vt:N[:LIMIT]` | `random:N:P:COUNT` | `file:PATH`
/// `exhaustive:N` reads data/connected_le9.g6 when N <= 9 and it is present,
/// otherwise generates.
struct CorpusSpec {
  enum class Kind { Named, Exhaustive, VertexTransitive, Random, File };
  Kind kind = Kind::Named;
  int max_n = 0;
  int limit = 0;
  double p = 0.0;
  std::string path;
  std::uint64_t seed = 0;
  int max_cycles = 2000;  // cap on enumerated longest cycles per instance
  std::int64_t node_budget = 20'000'000;
};

/// Throws InvalidArgument("bad corpus: ...").
CorpusSpec parse_corpus_spec(const std::string& text, std::uint64_t seed);
std::string to_string(const CorpusSpec& spec);

/// Materializes the corpus. Deterministic given the spec.
std::vector<CorpusGraph> load_corpus(const CorpusSpec& spec, const std::string& data_dir);

}  // namespace longcycle
