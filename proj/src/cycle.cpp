#include "longcycle/cycle.hpp"

#include <algorithm>
#include <string>

namespace longcycle {

std::vector<int> canonical_rotation(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<int> out;
  if (n == 0) return out;
  const int start = static_cast<int>(std::min_element(seq.begin(), seq.end()) - seq.begin());
  const int fwd = seq[(start + 1) % n];
  const int bwd = seq[(start + n - 1) % n];
  const int step = fwd <= bwd ? 1 : n - 1;
  out.reserve(n);
  for (int k = 0, i = start; k < n; ++k, i = (i + step) % n) out.push_back(seq[i]);
  return out;
}

Cycle::Cycle(std::vector<int> vertices) {
  if (vertices.size() < 3) throw InvalidArgument("a cycle needs at least three vertices");
  VertexSet seen;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InvalidArgument("cycle vertex out of range");
    if (seen.test(v)) throw InvalidArgument("cycle repeats vertex " + std::to_string(v));
    seen.set(v);
  }
  seq_ = canonical_rotation(vertices);
}

Cycle Cycle::in_graph(const Graph& g, std::vector<int> vertices) {
  for (int v : vertices)
    if (v >= g.order()) throw InvalidArgument("cycle vertex " + std::to_string(v) + " not in graph");
  Cycle c(std::move(vertices));
  if (!c.is_cycle_of(g)) throw InvalidArgument("vertex sequence is not a cycle of the graph");
  return c;
}

bool Cycle::is_cycle_of(const Graph& g) const { return is_simple_cycle(g, seq_); }

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  const int n = length();
  for (int i = 0; i < n; ++i) {
    const int a = seq_[i];
    const int b = seq_[(i + 1) % n];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

bool is_simple_cycle(const Graph& g, std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 3) return false;
  VertexSet seen;
  for (int v : seq) {
    if (v < 0 || v >= g.order() || seen.test(v)) return false;
    seen.set(v);
  }
  for (int i = 0; i < n; ++i)
    if (!g.adjacent(seq[i], seq[(i + 1) % n])) return false;
  return true;
}

}  // namespace longcycle
