#include "longcycle/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace longcycle {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw InvalidArgument(std::string("graph6: byte out of range: '") + c + "'");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text, int cap) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw InvalidArgument("graph6: empty input");
  if (text.front() == ':' || text.front() == '&')
    throw InvalidArgument("graph6: sparse6/digraph6 input is not supported");

  std::size_t pos = 0;
  int n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw InvalidArgument("graph6: vertex count too large");
    if (text.size() < 4) throw InvalidArgument("graph6: truncated size field");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n > std::min(cap, kMaxVertices)) throw InvalidArgument("graph6: vertex count " + std::to_string(n) + " above cap");

  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != bytes)
    throw InvalidArgument("graph6: expected " + std::to_string(bytes) + " adjacency bytes, got " +
                          std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  int cur = 0;
  int left = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        cur = sextet(text[pos++]);
        left = 6;
      }
      --left;
      if ((cur >> left) & 1) edges.emplace_back(i, j);
    }
  }
  if (left > 0 && (cur & ((1 << left) - 1)) != 0) throw InvalidArgument("graph6: nonzero padding bits");
  return Graph::from_edges(n, edges, cap);
}

std::vector<Graph> read_graph6_stream(std::istream& in, int cap) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(from_graph6(line, cap));
  }
  return out;
}

LabeledGraph read_edge_list(std::istream& in, int cap) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 2)
      throw InvalidArgument("edge list line " + std::to_string(lineno) + ": expected two tokens");
    raw.emplace_back(tok[0], tok[1]);
  }

  auto as_id = [](const std::string& s) -> int {
    int v = -1;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || v < 0) return -1;
    return v;
  };
  bool numeric = true;
  for (const auto& [a, b] : raw)
    if (as_id(a) < 0 || as_id(b) < 0) numeric = false;

  LabeledGraph out;
  std::vector<Edge> edges;
  if (numeric) {
    int n = 0;
    for (const auto& [a, b] : raw) {
      edges.emplace_back(as_id(a), as_id(b));
      n = std::max({n, as_id(a) + 1, as_id(b) + 1});
    }
    if (n > std::min(cap, kMaxVertices)) throw InvalidArgument("edge list: vertex id above cap");
    for (int v = 0; v < n; ++v) out.labels.push_back(std::to_string(v));
    out.graph = Graph::from_edges(n, edges, cap);
  } else {
    std::map<std::string, int> ids;
    auto id_of = [&](const std::string& s) {
      auto [it, fresh] = ids.emplace(s, static_cast<int>(out.labels.size()));
      if (fresh) out.labels.push_back(s);
      return it->second;
    };
    for (const auto& [a, b] : raw) {
      const int u = id_of(a);
      const int v = id_of(b);
      edges.emplace_back(u, v);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.labels.size()), edges, cap);
  }
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.order() << " m=" << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace longcycle
