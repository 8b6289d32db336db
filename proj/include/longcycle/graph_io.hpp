#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// graph6 encoding (no trailing newline). Bit-exact with the usual nauty tools.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted; anything else malformed throws InvalidArgument.
Graph from_graph6(std::string_view text, int cap = kDefaultVertexCap);

/// Reads every non-blank line of a graph6 stream.
std::vector<Graph> read_graph6_stream(std::istream& in, int cap = kDefaultVertexCap);

/// Graph read from a labelled format together with the label of each dense id.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

/// Edge-list text: one "u v" pair per line, '#' starts a comment. When every
/// token is a non-negative integer the ids are used as-is (n = max id + 1);
/// otherwise labels are relabelled to 0..n-1 in order of first appearance.
LabeledGraph read_edge_list(std::istream& in, int cap = kDefaultVertexCap);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace longcycle
