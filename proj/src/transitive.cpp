#include "longcycle/transitive.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "longcycle/errors.hpp"
#include "longcycle/exchange.hpp"

namespace longcycle {

Graph circulant(int n, const std::vector<int>& connection) {
  if (n < 1) throw InvalidArgument("circulant needs n >= 1");
  if (connection.empty()) throw InvalidArgument("empty connection set");
  std::vector<bool> in(n, false);
  for (int s : connection) in[((s % n) + n) % n] = true;
  if (in[0]) throw InvalidArgument("identity in connection");
  for (int s = 1; s < n; ++s)
    if (in[s] != in[n - s]) throw InvalidArgument("asymmetric connection");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int s = 1; s < n; ++s)
      if (in[s] && i < (i + s) % n) edges.emplace_back(i, (i + s) % n);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(n, edges);
}

namespace {

[[noreturn]] void malformed(const std::string& why) { throw InvalidArgument("malformed group: " + why); }

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

int parse_int(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty()) malformed("missing number");
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (const std::exception&) {
    malformed("bad number '" + t + "'");
  }
  if (used != t.size()) malformed("bad number '" + t + "'");
  return v;
}

// One generator in cycle notation, e.g. "(0 1 2)(3 4)"; "()" is the identity.
std::vector<int> parse_cycles(const std::string& text, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> moved(n, false);
  std::size_t p = 0;
  const std::string t = trim(text);
  if (t.empty()) malformed("empty generator");
  while (p < t.size()) {
    if (t[p] == ' ' || t[p] == '\t') {
      ++p;
      continue;
    }
    if (t[p] != '(') malformed("expected '(' in '" + t + "'");
    const auto close = t.find(')', p);
    if (close == std::string::npos) malformed("unclosed cycle in '" + t + "'");
    std::istringstream in(t.substr(p + 1, close - p - 1));
    std::vector<int> cyc;
    std::string tok;
    while (in >> tok) {
      const int v = parse_int(tok);
      if (v < 0 || v >= n) malformed("point " + tok + " outside 0.." + std::to_string(n - 1));
      if (moved[v]) malformed("point " + tok + " repeated");
      moved[v] = true;
      cyc.push_back(v);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
    p = close + 1;
  }
  return perm;
}

}  // namespace

GroupPresentation parse_group(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) malformed("missing ':'");
  std::istringstream head(text.substr(0, colon));
  std::string kind, n_text, extra;
  if (!(head >> kind >> n_text) || (head >> extra)) malformed("header must be 'cyclic n' or 'perm n'");
  GroupPresentation gp;
  gp.order = parse_int(n_text);
  if (gp.order < 1 || gp.order > kMaxVertices) malformed("order out of range");
  const std::string body = text.substr(colon + 1);
  if (kind == "cyclic") {
    gp.kind = GroupPresentation::Kind::Cyclic;
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!trim(tok).empty()) gp.connection.push_back(parse_int(tok));
    if (gp.connection.empty()) malformed("empty connection set");
  } else if (kind == "perm") {
    gp.kind = GroupPresentation::Kind::Permutation;
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ';'))
      if (!trim(tok).empty()) gp.generators.push_back(parse_cycles(tok, gp.order));
    if (gp.generators.empty()) malformed("no generators");
  } else {
    malformed("unknown kind '" + kind + "'");
  }
  return gp;
}

Graph cayley(const GroupPresentation& gp) {
  if (gp.kind == GroupPresentation::Kind::Cyclic) return circulant(gp.order, gp.connection);
  const int deg = gp.order;
  std::vector<int> identity(deg);
  std::iota(identity.begin(), identity.end(), 0);
  for (const auto& s : gp.generators) {
    if (static_cast<int>(s.size()) != deg) throw InvalidArgument("generator has the wrong degree");
    if (s == identity) throw InvalidArgument("identity in connection");
    std::vector<int> inv(deg);
    for (int x = 0; x < deg; ++x) inv[s[x]] = x;
    if (std::find(gp.generators.begin(), gp.generators.end(), inv) == gp.generators.end())
      throw InvalidArgument("connection not closed under inverses");
  }
  auto compose = [&](const std::vector<int>& g, const std::vector<int>& s) {
    std::vector<int> out(deg);
    for (int x = 0; x < deg; ++x) out[x] = g[s[x]];
    return out;
  };
  std::map<std::vector<int>, int> id;
  std::vector<std::vector<int>> elements{identity};
  id[identity] = 0;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& s : gp.generators) {
      auto h = compose(elements[k], s);
      auto it = id.find(h);
      if (it == id.end()) {
        if (static_cast<int>(elements.size()) >= kMaxVertices) throw InvalidArgument("group too large");
        it = id.emplace(h, static_cast<int>(elements.size())).first;
        elements.push_back(h);
      }
      const int a = static_cast<int>(k), b = it->second;
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(static_cast<int>(elements.size()), edges);
}

bool is_automorphism(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<bool> hit(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (auto [u, w] : g.edges())
    if (!g.adjacent(perm[u], perm[w])) return false;
  return true;
}

namespace {

// Individualization-refinement search for isomorphisms a -> b. Both
// colourings are refined in lockstep with canonical colour names, so a
// mismatch in the signature multisets prunes the branch.
class IsoSearch {
 public:
  using Visit = std::function<bool(const std::vector<int>&)>;

  IsoSearch(const Graph& a, const Graph& b, std::int64_t budget) : a_(a), b_(b), budget_(budget) {}

  // Calls visit on every isomorphism extending the colourings; stops early
  // when visit returns false. Returns false iff stopped.
  bool run(std::vector<int> ca, std::vector<int> cb, const Visit& visit) {
    if (a_.order() != b_.order() || a_.edge_count() != b_.edge_count()) return true;
    return descend(std::move(ca), std::move(cb), visit);
  }

  std::int64_t nodes() const { return nodes_; }

 private:
  static std::vector<std::vector<int>> signatures(const Graph& g, const std::vector<int>& c) {
    std::vector<std::vector<int>> sig(g.order());
    for (int v = 0; v < g.order(); ++v) {
      sig[v].push_back(c[v]);
      for (int w : g.neighbors(v)) sig[v].push_back(c[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    return sig;
  }

  bool refine(std::vector<int>& ca, std::vector<int>& cb) const {
    int classes = -1;
    while (true) {
      auto sa = signatures(a_, ca), sb = signatures(b_, cb);
      auto sorted_a = sa, sorted_b = sb;
      std::sort(sorted_a.begin(), sorted_a.end());
      std::sort(sorted_b.begin(), sorted_b.end());
      if (sorted_a != sorted_b) return false;
      sorted_a.erase(std::unique(sorted_a.begin(), sorted_a.end()), sorted_a.end());
      auto rank = [&](const std::vector<int>& s) {
        return static_cast<int>(std::lower_bound(sorted_a.begin(), sorted_a.end(), s) - sorted_a.begin());
      };
      for (int v = 0; v < a_.order(); ++v) {
        ca[v] = rank(sa[v]);
        cb[v] = rank(sb[v]);
      }
      const int now = static_cast<int>(sorted_a.size());
      if (now == classes) return true;
      classes = now;
    }
  }

  bool descend(std::vector<int> ca, std::vector<int> cb, const Visit& visit) {
    if (++nodes_ > budget_) throw BudgetExceeded("automorphism search budget exhausted", nodes_, 0);
    if (!refine(ca, cb)) return true;
    const int n = a_.order();
    const int k = n == 0 ? 0 : *std::max_element(ca.begin(), ca.end()) + 1;
    if (k == n) {
      std::vector<int> perm(n), at(n);
      for (int v = 0; v < n; ++v) at[cb[v]] = v;
      for (int v = 0; v < n; ++v) perm[v] = at[ca[v]];
      for (auto [u, w] : a_.edges())
        if (!b_.adjacent(perm[u], perm[w])) return true;
      return visit(perm);
    }
    std::vector<int> size(k, 0);
    for (int c : ca) ++size[c];
    int target = -1;
    for (int c = 0; c < k; ++c)
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    const int a = static_cast<int>(std::find(ca.begin(), ca.end(), target) - ca.begin());
    for (int b = 0; b < n; ++b) {
      if (cb[b] != target) continue;
      auto ca2 = ca, cb2 = cb;
      ca2[a] = k;
      cb2[b] = k;
      if (!descend(std::move(ca2), std::move(cb2), visit)) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  void absorb(const std::vector<int>& perm) {
    for (std::size_t v = 0; v < perm.size(); ++v) unite(static_cast<int>(v), perm[v]);
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h, const AutomorphismOptions& opts) {
  std::optional<std::vector<int>> found;
  IsoSearch(g, h, opts.node_budget)
      .run(std::vector<int>(g.order(), 0), std::vector<int>(h.order(), 0), [&](const std::vector<int>& p) {
        found = p;
        return false;
      });
  return found;
}

std::optional<Automorphism> automorphism_mapping(const Graph& g, int u, int v, const AutomorphismOptions& opts) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidArgument("vertex out of range");
  std::vector<int> ca(n, 0), cb(n, 0);
  ca[u] = 1;
  cb[v] = 1;
  std::optional<Automorphism> found;
  IsoSearch(g, g, opts.node_budget).run(ca, cb, [&](const std::vector<int>& p) {
    found = Automorphism{p};
    return false;
  });
  return found;
}

AutomorphismList automorphisms(const Graph& g, int limit, const AutomorphismOptions& opts) {
  AutomorphismList out;
  IsoSearch(g, g, opts.node_budget)
      .run(std::vector<int>(g.order(), 0), std::vector<int>(g.order(), 0), [&](const std::vector<int>& p) {
        if (static_cast<int>(out.automorphisms.size()) >= limit) {
          out.complete = false;
          return false;
        }
        out.automorphisms.push_back(Automorphism{p});
        return true;
      });
  return out;
}

std::vector<int> vertex_orbits(const Graph& g, const AutomorphismOptions& opts) {
  const int n = g.order();
  UnionFind uf(n);
  for (int v = 1; v < n; ++v) {
    if (uf.find(v) != v) continue;
    for (int r = 0; r < v; ++r) {
      if (uf.find(r) != r || g.degree(r) != g.degree(v)) continue;
      if (auto a = automorphism_mapping(g, r, v, opts)) {
        uf.absorb(a->perm);
        break;
      }
    }
  }
  std::vector<int> orbit(n);
  for (int v = 0; v < n; ++v) orbit[v] = uf.find(v);
  return orbit;
}

bool is_vertex_transitive(const Graph& g, int cap, const AutomorphismOptions& opts) {
  const int n = g.order();
  if (n > cap) throw InvalidArgument("automorphism search cap exceeded");
  if (n <= 1) return true;
  if (!is_regular(g)) return false;
  UnionFind uf(n);
  for (int v = 1; v < n; ++v) {
    if (uf.find(v) == 0) continue;
    const auto a = automorphism_mapping(g, 0, v, opts);
    if (!a) return false;
    uf.absorb(a->perm);
  }
  return true;
}

Cycle apply_automorphism(const Cycle& x, const Automorphism& a) {
  const int n = static_cast<int>(a.perm.size());
  std::vector<bool> hit(n, false);
  for (int v : a.perm) {
    if (v < 0 || v >= n || hit[v]) throw InvalidArgument("not a permutation");
    hit[v] = true;
  }
  std::vector<int> image;
  for (int v : x.vertices()) {
    if (v >= n) throw InvalidArgument("permutation does not cover the cycle");
    image.push_back(a.perm[v]);
  }
  return Cycle(std::move(image));
}

namespace {

struct Bridge {
  std::vector<int> q;  // subpath of the donor with ends on x and interior off x
};

std::vector<Bridge> bridges(const Cycle& donor, const std::vector<int>& xpos) {
  const auto& d = donor.vertices();
  const int len = static_cast<int>(d.size());
  std::vector<int> on;
  for (int t = 0; t < len; ++t)
    if (xpos[d[t]] >= 0) on.push_back(t);
  std::vector<Bridge> out;
  if (on.size() < 2) return out;
  for (std::size_t k = 0; k < on.size(); ++k) {
    const int s = on[k];
    const int e = k + 1 < on.size() ? on[k + 1] : on[0] + len;
    if (e - s < 2) continue;  // a single edge never beats an arc of x
    Bridge b;
    for (int t = s; t <= e; ++t) b.q.push_back(d[t % len]);
    out.push_back(std::move(b));
  }
  return out;
}

// The two arcs of x between a and b.
std::array<std::vector<int>, 2> arcs(const Cycle& x, const std::vector<int>& xpos, int a, int b) {
  const auto& s = x.vertices();
  const int len = static_cast<int>(s.size());
  std::array<std::vector<int>, 2> out;
  for (int dir = 0; dir < 2; ++dir) {
    int p = xpos[a];
    out[dir].push_back(a);
    while (s[p] != b) {
      p = dir == 0 ? (p + 1) % len : (p + len - 1) % len;
      out[dir].push_back(s[p]);
    }
  }
  return out;
}

std::optional<Cycle> try_merge(const Graph& g, const Cycle& x, const Cycle& donor) {
  std::vector<int> xpos(g.order(), -1);
  for (int t = 0; t < x.length(); ++t) xpos[x.vertices()[t]] = t;
  const auto bs = bridges(donor, xpos);
  struct Option {
    std::vector<int> p;
    const std::vector<int>* q;
    int gain;
  };
  std::vector<Option> opts;
  for (const auto& b : bs)
    for (auto& p : arcs(x, xpos, b.q.front(), b.q.back()))
      opts.push_back(Option{p, &b.q, static_cast<int>(b.q.size()) - static_cast<int>(p.size())});
  for (const auto& o : opts)
    if (o.gain > 0) return cycle_merge(g, x, donor, MergePlan{{o.p}, {*o.q}});
  for (std::size_t i = 0; i < opts.size(); ++i)
    for (std::size_t j = i + 1; j < opts.size(); ++j) {
      if (opts[i].q == opts[j].q || opts[i].gain + opts[j].gain <= 0) continue;
      if (VertexSet::from(opts[i].p).intersects(VertexSet::from(opts[j].p))) continue;
      try {
        return cycle_merge(g, x, donor, MergePlan{{opts[i].p, opts[j].p}, {*opts[i].q, *opts[j].q}});
      } catch (const InvalidArgument&) {
        // cyclic order condition failed; try the next pair
      }
    }
  return std::nullopt;
}

}  // namespace

std::optional<Cycle> automorphism_merge_search(const Graph& g, const Cycle& x, const MergeSearchOptions& opts) {
  if (!x.is_cycle_of(g)) throw InvalidArgument("x is not a cycle of the graph");
  std::optional<Cycle> found;
  int seen = 0;
  bool exhausted = false;
  IsoSearch(g, g, opts.search.node_budget)
      .run(std::vector<int>(g.order(), 0), std::vector<int>(g.order(), 0), [&](const std::vector<int>& p) {
        if (seen >= opts.max_automorphisms) {
          exhausted = true;
          return false;
        }
        ++seen;
        const Cycle image = apply_automorphism(x, Automorphism{p});
        if (image == x) return true;
        found = try_merge(g, x, image);
        return !found;
      });
  if (!found && exhausted) throw BudgetExceeded("automorphism budget exhausted", seen, x.length());
  return found;
}

}  // namespace longcycle
