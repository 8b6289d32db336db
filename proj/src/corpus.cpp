#include "longcycle/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "longcycle/errors.hpp"
#include "longcycle/families.hpp"
#include "longcycle/graph_io.hpp"
#include "longcycle/transitive.hpp"

namespace longcycle {

std::string refinement_key(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, 0);
  std::string key(1, static_cast<char>(n));
  int classes = 1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      for (int w : g.neighbors(v)) sig[v].push_back(colour[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& s : sorted) {
      key.push_back(static_cast<char>(s.size()));
      for (int c : s) key.push_back(static_cast<char>(c));
    }
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int now = static_cast<int>(sorted.size());
    if (now == classes && key.size() > 1 + static_cast<std::size_t>(n)) break;
    classes = now;
  }
  return key;
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 10) throw InvalidArgument("connected_graphs supports 1 <= n <= 10");
  std::vector<Graph> level{Graph::from_edges(1, std::vector<Edge>{})};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_map<std::string, std::vector<int>> buckets;
    for (const Graph& g : level) {
      const auto base = g.edges();
      for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
        auto edges = base;
        for (int v = 0; v < k - 1; ++v)
          if (mask >> v & 1) edges.emplace_back(v, k - 1);
        Graph h = Graph::from_edges(k, edges);
        auto& bucket = buckets[refinement_key(h)];
        bool seen = false;
        for (int idx : bucket)
          if (find_isomorphism(h, next[idx])) {
            seen = true;
            break;
          }
        if (seen) continue;
        bucket.push_back(static_cast<int>(next.size()));
        next.push_back(std::move(h));
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::string, Graph>> keyed;
  for (auto& g : level) keyed.emplace_back(to_graph6(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  for (auto& [s, g] : keyed) out.push_back(std::move(g));
  return out;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Keeps graphs that are pairwise non-isomorphic, in insertion order.
class IsoFilter {
 public:
  bool insert(const Graph& g) {
    auto& bucket = buckets_[refinement_key(g)];
    for (const Graph& h : bucket)
      if (find_isomorphism(g, h)) return false;
    bucket.push_back(g);
    return true;
  }

 private:
  std::unordered_map<std::string, std::vector<Graph>> buckets_;
};

// Small groups given by generators; every list is closed under inverses.
const std::vector<std::pair<std::string, std::string>>& cayley_presentations() {
  static const std::vector<std::pair<std::string, std::string>> groups = {
      {"s3-transpositions", "perm 3: (0 1); (1 2); (0 2)"},
      {"s4-star", "perm 4: (0 1); (0 2); (0 3)"},
      {"s4-adjacent", "perm 4: (0 1); (1 2); (2 3)"},
      {"s4-all-transpositions", "perm 4: (0 1); (0 2); (0 3); (1 2); (1 3); (2 3)"},
      {"s4-transposition-4cycle", "perm 4: (0 1); (0 1 2 3); (0 3 2 1)"},
      {"s4-3cycle-4cycle", "perm 4: (0 1 2); (0 2 1); (0 1 2 3); (0 3 2 1)"},
      {"s4-transposition-3cycle", "perm 4: (0 1); (1 2 3); (1 3 2)"},
      {"a4-two-3cycles", "perm 4: (0 1 2); (0 2 1); (1 2 3); (1 3 2)"},
      {"a4-3cycle-double", "perm 4: (0 1 2); (0 2 1); (0 1)(2 3)"},
      {"z2^4", "perm 8: (0 1); (2 3); (4 5); (6 7)"},
      {"z2^5", "perm 10: (0 1); (2 3); (4 5); (6 7); (8 9)"},
      {"z2^4-folded", "perm 8: (0 1); (2 3); (4 5); (6 7); (0 1)(2 3)(4 5)(6 7)"},
      {"z2xz8", "perm 10: (0 1); (2 3 4 5 6 7 8 9); (2 9 8 7 6 5 4 3)"},
      {"z4xz4", "perm 8: (0 1 2 3); (0 3 2 1); (4 5 6 7); (4 7 6 5)"},
      {"z4xz8", "perm 12: (0 1 2 3); (0 3 2 1); (4 5 6 7 8 9 10 11); (4 11 10 9 8 7 6 5)"},
      {"z2xz2xz8", "perm 12: (0 1); (2 3); (4 5 6 7 8 9 10 11); (4 11 10 9 8 7 6 5)"},
      {"q8", "perm 8: (0 1 2 3)(4 5 6 7); (0 3 2 1)(4 7 6 5); (0 4 2 6)(1 7 3 5); (0 6 2 4)(1 5 3 7)"},
      {"s3xz4", "perm 7: (0 1); (1 2); (3 4 5 6); (3 6 5 4)"},
      {"s3xz5", "perm 8: (0 1); (1 2); (3 4 5 6 7); (3 7 6 5 4)"},
      {"a4xz2", "perm 6: (0 1 2); (0 2 1); (1 2 3); (1 3 2); (4 5)"},
      {"d4xz4", "perm 8: (0 1 2 3); (0 3 2 1); (0 2); (4 5 6 7); (4 7 6 5)"},
  };
  return groups;
}

std::vector<CorpusGraph> read_graph6_file(const std::string& path, int max_n, const std::string& prefix) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::vector<CorpusGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Graph g = from_graph6(line);
    if (max_n > 0 && g.order() > max_n) continue;
    out.push_back({prefix + to_graph6(g), std::move(g)});
  }
  return out;
}

int parse_int(const std::string& s, const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad corpus: " + text);
  }
  if (used != s.size()) throw InvalidArgument("bad corpus: " + text);
  return v;
}

}  // namespace

std::vector<CorpusGraph> named_graphs() {
  namespace fam = families;
  return {
      {"petersen", fam::petersen()},
      {"k4", fam::complete(4)},
      {"k5", fam::complete(5)},
      {"k6", fam::complete(6)},
      {"c9", fam::cycle(9)},
      {"wheel6", fam::wheel(6)},
      {"prism4", fam::prism(4)},
      {"prism5", fam::prism(5)},
      {"k33", fam::complete_bipartite(3, 3)},
      {"k34", fam::complete_bipartite(3, 4)},
      {"mobius4", fam::mobius_ladder(4)},
      {"gp7-2", fam::generalized_petersen(7, 2)},
      {"gp8-3", fam::generalized_petersen(8, 3)},
      {"grid3x3", fam::grid(3, 3)},
      {"grid3x4", fam::grid(3, 4)},
      {"theta-1-2-3", fam::theta({1, 2, 3})},
      {"two-triangles", fam::two_triangles_sharing_vertex()},
      {"circulant16-1-2", circulant(16, {1, 2, 14, 15})},
  };
}

std::vector<CorpusGraph> vertex_transitive_corpus(int max_n, int max_gens, int limit) {
  if (max_n < 3 || max_n > kMaxVertices) throw InvalidArgument("vertex_transitive_corpus needs 3 <= max_n <= 128");
  if (max_gens < 1) throw InvalidArgument("vertex_transitive_corpus needs max_gens >= 1");
  std::vector<CorpusGraph> out;
  IsoFilter seen;
  auto full = [&] { return limit > 0 && static_cast<int>(out.size()) >= limit; };
  for (int n = 3; n <= max_n && !full(); ++n) {
    const int classes = n / 2;
    // subsets of {1..n/2} with at most max_gens elements, by size then lexicographically
    for (int size = 1; size <= std::min(max_gens, classes) && !full(); ++size) {
      std::vector<int> pick(size);
      for (int i = 0; i < size; ++i) pick[i] = i + 1;
      while (!full()) {
        std::vector<int> conn;
        for (int s : pick) {
          conn.push_back(s);
          if (n - s != s) conn.push_back(n - s);
        }
        Graph g = circulant(n, conn);
        if (is_connected(g) && seen.insert(g)) out.push_back({"circulant" + std::to_string(n) + ":" + join_ints(pick), std::move(g)});
        int i = size - 1;
        while (i >= 0 && pick[i] == classes - (size - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  for (const auto& [name, text] : cayley_presentations()) {
    if (full()) break;
    Graph g = cayley(parse_group(text));
    if (g.order() > max_n) continue;
    if (seen.insert(g)) out.push_back({"cayley:" + name, std::move(g)});
  }
  return out;
}

CorpusSpec parse_corpus_spec(const std::string& text, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  CorpusSpec spec;
  spec.seed = seed;
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  if (kind == "file") {
    if (colon == std::string::npos || colon + 1 == text.size()) throw InvalidArgument("bad corpus: " + text);
    spec.kind = CorpusSpec::Kind::File;
    spec.path = text.substr(colon + 1);
    return spec;
  }
  while (std::getline(in, cur, ':')) parts.push_back(cur);
  if (parts.empty()) throw InvalidArgument("bad corpus: empty");
  if (kind == "named" && parts.size() == 1) {
    spec.kind = CorpusSpec::Kind::Named;
  } else if (kind == "exhaustive" && parts.size() == 2) {
    spec.kind = CorpusSpec::Kind::Exhaustive;
    spec.max_n = parse_int(parts[1], text);
    if (spec.max_n < 1 || spec.max_n > 10) throw InvalidArgument("bad corpus: exhaustive needs 1 <= N <= 10");
  } else if (kind == "vt" && (parts.size() == 2 || parts.size() == 3)) {
    spec.kind = CorpusSpec::Kind::VertexTransitive;
    spec.max_n = parse_int(parts[1], text);
    if (parts.size() == 3) spec.limit = parse_int(parts[2], text);
    if (spec.max_n < 3 || spec.max_n > kMaxVertices || spec.limit < 0)
      throw InvalidArgument("bad corpus: vt needs 3 <= N <= 128");
  } else if (kind == "random" && parts.size() == 4) {
    spec.kind = CorpusSpec::Kind::Random;
    spec.max_n = parse_int(parts[1], text);
    try {
      std::size_t used = 0;
      spec.p = std::stod(parts[2], &used);
      if (used != parts[2].size()) throw InvalidArgument("");
    } catch (const std::exception&) {
      throw InvalidArgument("bad corpus: " + text);
    }
    spec.limit = parse_int(parts[3], text);
    if (spec.max_n < 3 || spec.max_n > kMaxVertices || !(spec.p > 0.0 && spec.p <= 1.0) || spec.limit < 1)
      throw InvalidArgument("bad corpus: random needs 3 <= N <= 128, 0 < P <= 1, COUNT >= 1");
  } else {
    throw InvalidArgument("bad corpus: " + text);
  }
  return spec;
}

std::string to_string(const CorpusSpec& spec) {
  switch (spec.kind) {
    case CorpusSpec::Kind::Named:
      return "named";
    case CorpusSpec::Kind::Exhaustive:
      return "exhaustive:" + std::to_string(spec.max_n);
    case CorpusSpec::Kind::VertexTransitive:
      return "vt:" + std::to_string(spec.max_n) + (spec.limit ? ":" + std::to_string(spec.limit) : "");
    case CorpusSpec::Kind::Random: {
      std::ostringstream p;
      p << spec.p;
      return "random:" + std::to_string(spec.max_n) + ":" + p.str() + ":" + std::to_string(spec.limit);
    }
    case CorpusSpec::Kind::File:
      return "file:" + spec.path;
  }
  return "?";
}

std::vector<CorpusGraph> load_corpus(const CorpusSpec& spec, const std::string& data_dir) {
  switch (spec.kind) {
    case CorpusSpec::Kind::Named:
      return named_graphs();
    case CorpusSpec::Kind::Exhaustive: {
      const std::string stored = data_dir + "/connected_le9.g6";
      if (spec.max_n <= 9 && std::ifstream(stored)) return read_graph6_file(stored, spec.max_n, "g6:");
      std::vector<CorpusGraph> out;
      for (int n = 1; n <= spec.max_n; ++n)
        for (Graph& g : connected_graphs(n)) out.push_back({"g6:" + to_graph6(g), std::move(g)});
      return out;
    }
    case CorpusSpec::Kind::VertexTransitive:
      return vertex_transitive_corpus(spec.max_n, 2, spec.limit);
    case CorpusSpec::Kind::Random: {
      // G(n, p) draws with seeds seed, seed + 1, ...; disconnected draws are skipped.
      std::vector<CorpusGraph> out;
      for (std::uint64_t i = 0; static_cast<int>(out.size()) < spec.limit; ++i) {
        if (i >= 1000u * static_cast<std::uint64_t>(spec.limit))
          throw InvalidArgument("random corpus: too few connected draws");
        Graph g = families::random_gnp(spec.max_n, spec.p, spec.seed + i);
        if (is_connected(g)) out.push_back({"random:" + std::to_string(spec.seed + i), std::move(g)});
      }
      return out;
    }
    case CorpusSpec::Kind::File:
      return read_graph6_file(spec.path, 0, "file:");
  }
  return {};
}

}  // namespace longcycle
