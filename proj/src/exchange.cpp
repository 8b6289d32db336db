#include "longcycle/exchange.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace longcycle {

namespace {

Edge norm(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Walk of one cycle with vertex positions, in the decomposition's orientation.
struct Walk {
  const std::vector<int>& seq;
  std::vector<int> pos;  // -1 off the cycle

  Walk(const std::vector<int>& s, int n) : seq(s), pos(n, -1) {
    for (std::size_t t = 0; t < s.size(); ++t) pos[s[t]] = static_cast<int>(t);
  }
  int size() const { return static_cast<int>(seq.size()); }

  // a, ..., b stepping forward or backward along the walk.
  std::vector<int> arc(int a, int b, bool forward) const {
    std::vector<int> out{a};
    const int len = size();
    int p = pos[a];
    while (seq[p] != b) {
      p = forward ? (p + 1) % len : (p + len - 1) % len;
      out.push_back(seq[p]);
    }
    return out;
  }
  // The arc from a to b that does not wrap past the walk's start. Inside one
  // segment this is the segment subpath.
  std::vector<int> inner(int a, int b) const { return arc(a, b, pos[a] < pos[b]); }
};

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

void append(std::vector<int>& seq, const std::vector<int>& piece) {
  if (!seq.empty() && seq.back() != piece.front()) throw std::logic_error("exchange pieces do not meet");
  seq.insert(seq.end(), piece.begin() + (seq.empty() ? 0 : 1), piece.end());
}

std::vector<int> closed(std::vector<int> seq) {
  if (seq.size() < 2 || seq.front() != seq.back()) throw std::logic_error("exchange walk is not closed");
  seq.pop_back();
  return seq;
}

Cycle checked_cycle(const Graph& g, const std::vector<int>& seq) {
  if (!is_simple_cycle(g, seq)) throw std::logic_error("exchange produced non-cycle");
  return Cycle(seq);
}

void add_path_edges(std::vector<Edge>& out, const std::vector<int>& path) {
  for (std::size_t t = 0; t + 1 < path.size(); ++t) out.push_back(norm(path[t], path[t + 1]));
}

// The vertex sequence of a single cycle with exactly these edges, or nullopt.
std::optional<std::vector<int>> cycle_from_edges(std::vector<Edge> edges, int n) {
  std::sort(edges.begin(), edges.end());
  if (edges.size() < 3 || std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return std::nullopt;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& nb : adj)
    if (!nb.empty() && nb.size() != 2) return std::nullopt;
  const int start = edges.front().first;
  std::vector<int> seq{start};
  int prev = start, cur = adj[start][0];
  while (cur != start) {
    seq.push_back(cur);
    const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
  }
  if (seq.size() != edges.size()) return std::nullopt;
  return seq;
}

std::set<Edge> edge_set(const std::vector<int>& cyc) {
  std::set<Edge> out;
  for (std::size_t t = 0; t < cyc.size(); ++t) out.insert(norm(cyc[t], cyc[(t + 1) % cyc.size()]));
  return out;
}

void require_clear_interior(const std::vector<int>& path, const VertexSet& on_cycles) {
  for (std::size_t t = 1; t + 1 < path.size(); ++t)
    if (on_cycles.test(path[t])) throw InvalidArgument("path interior meets X or Y");
}

WinningCertificate make_certificate(const Graph& g, const Cycle& x, const Cycle& y, const std::vector<int>& q1,
                                    const std::vector<int>& q2, CertificateOrigin origin) {
  WinningCertificate cert{checked_cycle(g, q1), checked_cycle(g, q2), origin, 0, -1, {}};
  cert.surplus = cert.q1.length() + cert.q2.length() - x.length() - y.length();
  cert.check = validate_certificate(g, x, y, q1, q2);
  if (!cert.check.ok()) throw std::logic_error("certificate failed validation");
  return cert;
}

}  // namespace

std::string to_string(CertificateOrigin origin) {
  switch (origin) {
    case CertificateOrigin::SameSegments: return "same_segments";
    case CertificateOrigin::Type00: return "type00";
    case CertificateOrigin::CrossingPairs: return "crossing_pairs";
    case CertificateOrigin::Merge: return "merge";
  }
  return "unknown";
}

CertificateCheck validate_certificate(const Graph& g, const Cycle& x, const Cycle& y, const std::vector<int>& q1,
                                      const std::vector<int>& q2) {
  CertificateCheck c;
  c.q1_is_cycle = is_simple_cycle(g, q1);
  c.q2_is_cycle = is_simple_cycle(g, q2);
  auto have = edge_set(q1);
  have.merge(edge_set(q2));
  c.covers_edges = true;
  for (const auto& cyc : {x, y})
    for (const Edge& e : cyc.edges()) c.covers_edges = c.covers_edges && have.count(e) > 0;
  c.longer = q1.size() + q2.size() > static_cast<std::size_t>(x.length() + y.length());
  return c;
}

SplicedCycle same_segment_exchange(const Graph& g, const Cycle& x, const Cycle& y, const std::vector<int>& path1,
                                   const std::vector<int>& path2) {
  const auto dec = decompose(g, x, y);
  const VertexSet on_cycles = x.vertex_set() | y.vertex_set();
  VertexSet seen;
  for (const auto* p : {&path1, &path2}) {
    if (p->size() < 2) throw InvalidArgument("path too short");
    for (std::size_t t = 0; t < p->size(); ++t) {
      if ((*p)[t] < 0 || (*p)[t] >= g.order()) throw InvalidArgument("path vertex outside the graph");
      if (seen.test((*p)[t])) throw InvalidArgument("paths are not disjoint");
      seen.set((*p)[t]);
      if (t > 0 && !g.adjacent((*p)[t - 1], (*p)[t])) throw InvalidArgument("not a path of the graph");
    }
    if (dec.x_segment_of(p->front()) < 0 || dec.y_segment_of(p->back()) < 0) throw InvalidArgument("invalid terminal");
    require_clear_interior(*p, on_cycles);
  }
  const int u1 = path1.front(), u2 = path2.front(), v1 = path1.back(), v2 = path2.back();
  if (dec.x_segment_of(u1) != dec.x_segment_of(u2) || dec.y_segment_of(v1) != dec.y_segment_of(v2))
    throw InvalidArgument("paths do not share both segments");
  const Walk wx(dec.x_walk, g.order()), wy(dec.y_walk, g.order());
  const int lx = std::abs(dec.x_offset_of(u1) - dec.x_offset_of(u2));
  const int ly = std::abs(dec.y_offset_of(v1) - dec.y_offset_of(v2));
  // Keep the long arc a2 -> a1 of one cycle and close it with L1, the other
  // cycle's segment subpath and L2.
  auto splice = [&](const Walk& keep, int a1, int a2, const std::vector<int>& detour) {
    std::vector<int> seq = keep.arc(a2, a1, keep.pos[a1] < keep.pos[a2]);
    append(seq, detour);
    return checked_cycle(g, closed(seq));
  };
  std::vector<int> detour;
  if (lx <= ly) {
    detour = path1;
    append(detour, wy.inner(v1, v2));
    append(detour, reversed(path2));
    return {splice(wx, u1, u2, detour), true};
  }
  detour = reversed(path1);
  append(detour, wx.inner(u1, u2));
  append(detour, path2);
  return {splice(wy, v1, v2, detour), false};
}

WinningCertificate type00_certificate(const Graph& g, const AuxGraph& f, const FourCycle& c) {
  if (!(classify_four_cycle(f, c.i, c.j, c.k, c.l) == FourCycleType{0, 0})) throw InvalidArgument("wrong type");
  const auto& d = f.dec;
  const Cycle x(d.x_walk), y(d.y_walk);
  const VertexSet on_cycles = x.vertex_set() | y.vertex_set();
  const auto& pik = f.edge(c.i, c.k).path;
  const auto& pil = f.edge(c.i, c.l).path;
  const auto& pjk = f.edge(c.j, c.k).path;
  const auto& pjl = f.edge(c.j, c.l).path;
  for (const auto* p : {&pik, &pil, &pjk, &pjl}) require_clear_interior(*p, on_cycles);
  const Walk wx(d.x_walk, g.order()), wy(d.y_walk, g.order());
  const int uik = pik.front(), uil = pil.front(), ujk = pjk.front(), ujl = pjl.front();
  const int vik = pik.back(), vil = pil.back(), vjk = pjk.back(), vjl = pjl.back();
  // Direction flags making u_ik <_X u_il and v_ik <_Y v_jk; type (0,0) then
  // gives u_jk <_X u_jl and v_il <_Y v_jl as well.
  const bool dx = d.x_offset_of(uik) < d.x_offset_of(uil);
  const bool dy = d.y_offset_of(vik) < d.y_offset_of(vjk);
  auto ax = [&](int a, int b) { return wx.arc(a, b, dx); };
  auto ay = [&](int a, int b) { return wy.arc(a, b, dy); };

  std::vector<int> q1;
  append(q1, pik);
  append(q1, reversed(ay(vjl, vik)));
  append(q1, reversed(pjl));
  append(q1, wx.inner(ujl, ujk));
  append(q1, pjk);
  append(q1, ay(vjk, vil));
  append(q1, reversed(pil));
  append(q1, wx.inner(uil, uik));

  std::vector<int> q2;
  append(q2, pik);
  append(q2, wy.inner(vik, vjk));
  append(q2, reversed(pjk));
  append(q2, reversed(ax(uil, ujk)));
  append(q2, pil);
  append(q2, wy.inner(vil, vjl));
  append(q2, reversed(pjl));
  append(q2, ax(ujl, uik));

  return make_certificate(g, x, y, closed(q1), closed(q2), CertificateOrigin::Type00);
}

std::optional<WinningCertificate> alternating_certificate(const Graph& g, const AuxGraph& f,
                                                          const std::vector<int>& edge_ids, CertificateOrigin origin) {
  const auto& d = f.dec;
  const Cycle x(d.x_walk), y(d.y_walk);
  const VertexSet on_cycles = x.vertex_set() | y.vertex_set();
  std::vector<int> xs, ys;
  std::vector<Edge> shared;
  for (int id : edge_ids) {
    const auto& p = f.edges.at(id).path;
    require_clear_interior(p, on_cycles);
    add_path_edges(shared, p);
    xs.push_back(p.front());
    ys.push_back(p.back());
  }
  const Walk wx(d.x_walk, g.order()), wy(d.y_walk, g.order());
  // Arcs between cyclically consecutive endpoints, split into those inside a
  // segment and those running between segments.
  auto split_arcs = [](const Walk& w, std::vector<int> ends, auto segment_of, std::vector<Edge>& inside,
                       std::vector<Edge>& between) {
    std::sort(ends.begin(), ends.end(), [&](int a, int b) { return w.pos[a] < w.pos[b]; });
    std::vector<int> per(w.size(), 0);
    for (int e : ends) ++per[segment_of(e)];
    for (int e : ends)
      if (per[segment_of(e)] != 2) throw InvalidArgument("each used segment needs exactly two endpoints");
    for (std::size_t t = 0; t < ends.size(); ++t) {
      const int a = ends[t], b = ends[(t + 1) % ends.size()];
      add_path_edges(segment_of(a) == segment_of(b) && w.pos[a] < w.pos[b] ? inside : between, w.arc(a, b, true));
    }
  };
  std::vector<Edge> x_in, x_between, y_in, y_between;
  split_arcs(wx, xs, [&](int v) { return d.x_segment_of(v); }, x_in, x_between);
  split_arcs(wy, ys, [&](int v) { return d.y_segment_of(v); }, y_in, y_between);

  std::vector<Edge> e1 = shared, e2 = shared;
  e1.insert(e1.end(), x_in.begin(), x_in.end());
  e1.insert(e1.end(), y_between.begin(), y_between.end());
  e2.insert(e2.end(), x_between.begin(), x_between.end());
  e2.insert(e2.end(), y_in.begin(), y_in.end());
  const auto q1 = cycle_from_edges(e1, g.order());
  const auto q2 = cycle_from_edges(e2, g.order());
  if (!q1 || !q2) return std::nullopt;
  return make_certificate(g, x, y, *q1, *q2, origin);
}

int crossing_case(const AuxGraph& f, const FourCycle& c1, const FourCycle& c2) {
  const auto& d = f.dec;
  auto xb = [&](int i, int k, int l) {
    return d.x_position_of(f.edge(i, k).u()) < d.x_position_of(f.edge(i, l).u());
  };
  auto yb = [&](int i, int j, int k) {
    return d.y_position_of(f.edge(i, k).v()) < d.y_position_of(f.edge(j, k).v());
  };
  const bool flip_x = !xb(c1.i, c1.k, c1.l);
  const bool flip_y = !yb(c1.i, c1.j, c1.k);
  const bool tri = xb(c2.i, c2.k, c2.l) != flip_x;
  const bool rect = yb(c2.i, c2.j, c2.k) != flip_y;
  return 2 * static_cast<int>(tri) + static_cast<int>(rect);
}

std::optional<WinningCertificate> crossing_pair_certificate(const Graph& g, const AuxGraph& f, const FourCycle& c1,
                                                            const FourCycle& c2) {
  const FourCycleType t10{1, 0};
  if (!(classify_four_cycle(f, c1.i, c1.j, c1.k, c1.l) == t10)) return std::nullopt;
  if (!(classify_four_cycle(f, c2.i, c2.j, c2.k, c2.l) == t10)) return std::nullopt;
  if (!is_crossing({c1.i, c1.j}, {c2.i, c2.j})) return std::nullopt;
  if (c1.k == c2.k || c1.k == c2.l || c1.l == c2.k || c1.l == c2.l) return std::nullopt;
  if (is_crossing({c1.k, c1.l}, {c2.k, c2.l})) return std::nullopt;
  std::vector<int> ids;
  for (const auto& c : {c1, c2})
    for (auto [a, b] : {std::pair{c.i, c.k}, {c.i, c.l}, {c.j, c.k}, {c.j, c.l}}) ids.push_back(f.edge_index(a, b));
  auto cert = alternating_certificate(g, f, ids, CertificateOrigin::CrossingPairs);
  if (!cert) throw std::logic_error("crossing configuration without certificate");
  cert->case_id = crossing_case(f, c1, c2);
  return cert;
}

Cycle cycle_merge(const Graph& g, const Cycle& x, const Cycle& donor, const MergePlan& plan) {
  if (plan.p.size() != plan.q.size()) throw InvalidArgument("merge plan: p and q differ in size");
  if (plan.p.empty()) return x;
  const Walk wx(x.vertices(), g.order()), wd(donor.vertices(), g.order());
  auto is_subpath = [](const Walk& w, const std::vector<int>& path) {
    if (path.size() < 2 || static_cast<int>(path.size()) > w.size()) return false;
    for (int v : path)
      if (v < 0 || v >= static_cast<int>(w.pos.size()) || w.pos[v] < 0) return false;
    const int step = (w.pos[path[0]] + 1) % w.size() == w.pos[path[1]] ? 1 : w.size() - 1;
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
      if ((w.pos[path[t]] + step) % w.size() != w.pos[path[t + 1]]) return false;
    return true;
  };
  VertexSet p_cover, q_cover;
  for (std::size_t t = 0; t < plan.p.size(); ++t) {
    const auto& p = plan.p[t];
    const auto& q = plan.q[t];
    if (!is_subpath(wx, p)) throw InvalidArgument("merge plan: p[" + std::to_string(t) + "] is not a subpath of x");
    if (!is_subpath(wd, q)) throw InvalidArgument("merge plan: q[" + std::to_string(t) + "] is not a subpath of the donor");
    const VertexSet ps = VertexSet::from(p), qs = VertexSet::from(q);
    if (ps.intersects(p_cover)) throw InvalidArgument("merge plan: the p paths are not disjoint");
    if (qs.intersects(q_cover)) throw InvalidArgument("merge plan: the q paths are not disjoint");
    p_cover |= ps;
    q_cover |= qs;
    if (norm(p.front(), p.back()) != norm(q.front(), q.back()))
      throw InvalidArgument("merge bullet 1: p[" + std::to_string(t) + "] and q[" + std::to_string(t) +
                            "] have different endpoints");
  }
  std::vector<int> ends;
  for (const auto& p : plan.p) ends.insert(ends.end(), {p.front(), p.back()});
  auto along = [&](const Walk& w) {
    auto e = ends;
    std::sort(e.begin(), e.end(), [&](int a, int b) { return w.pos[a] < w.pos[b]; });
    return e;
  };
  const auto ex = along(wx);
  const auto ed = along(wd);
  bool same_order = false;
  for (const auto& cand : {ed, reversed(ed)}) {
    auto it = std::find(cand.begin(), cand.end(), ex.front());
    std::vector<int> rot(it, cand.end());
    rot.insert(rot.end(), cand.begin(), it);
    same_order = same_order || rot == ex;
  }
  if (!same_order) throw InvalidArgument("merge bullet 2: endpoints appear in different cyclic orders");
  for (std::size_t t = 0; t < plan.q.size(); ++t)
    for (int v : plan.q[t])
      if (wx.pos[v] >= 0 && !p_cover.test(v))
        throw InvalidArgument("merge bullet 3: q[" + std::to_string(t) + "] meets x outside the p paths");

  std::set<Edge> removed;
  for (const auto& p : plan.p)
    for (std::size_t t = 0; t + 1 < p.size(); ++t) removed.insert(norm(p[t], p[t + 1]));
  std::vector<Edge> edges;
  for (const Edge& e : x.edges())
    if (!removed.count(e)) edges.push_back(e);
  for (const auto& q : plan.q) add_path_edges(edges, q);
  const auto seq = cycle_from_edges(edges, g.order());
  if (!seq) throw std::logic_error("exchange produced non-cycle");
  return checked_cycle(g, *seq);
}

std::optional<Improvement> improve_by_exchange(const Graph& g, const Cycle& x, const Cycle& y) {
  if (!x.is_cycle_of(g) || !y.is_cycle_of(g)) throw InvalidArgument("inputs must be cycles of the graph");
  if (!x.vertex_set().intersects(y.vertex_set())) return std::nullopt;
  const auto dec = decompose(g, x, y);
  const VertexSet outside = g.vertices() - (x.vertex_set() | y.vertex_set());
  const int total = x.length() + y.length();
  for (int i = 0; i < dec.m; ++i) {
    if (dec.x_segments[i].empty()) continue;
    const VertexSet a = VertexSet::from(dec.x_segments[i]);
    for (int j = 0; j < dec.m; ++j) {
      if (dec.y_segments[j].empty()) continue;
      const VertexSet b = VertexSet::from(dec.y_segments[j]);
      const auto fam = max_disjoint_paths(g, a, b, outside | a | b);
      if (fam.size() < 2) continue;
      const auto s = same_segment_exchange(g, x, y, fam.paths[0], fam.paths[1]);
      if (s.replaced_x) return Improvement{s.cycle, y, CertificateOrigin::SameSegments};
      return Improvement{x, s.cycle, CertificateOrigin::SameSegments};
    }
  }
  const PathFamily family = cycle_path_family(g, x, y);
  std::optional<AuxGraph> f;
  try {
    f = build_aux(dec, g, family);
  } catch (const SegmentPairCollision& c) {
    const auto s = same_segment_exchange(g, x, y, c.first(), c.second());
    if (s.replaced_x) return Improvement{s.cycle, y, CertificateOrigin::SameSegments};
    return Improvement{x, s.cycle, CertificateOrigin::SameSegments};
  }
  const auto cycles = four_cycles(*f);
  std::vector<FourCycle> t10;
  for (const auto& c : cycles) {
    if (c.type == FourCycleType{0, 0}) {
      auto cert = type00_certificate(g, *f, c);
      if (cert.q1.length() + cert.q2.length() > total) return Improvement{cert.q1, cert.q2, cert.origin};
    }
    if (c.type == FourCycleType{1, 0}) t10.push_back(c);
  }
  for (std::size_t a = 0; a < t10.size(); ++a)
    for (std::size_t b = a + 1; b < t10.size(); ++b)
      if (auto cert = crossing_pair_certificate(g, *f, t10[a], t10[b]))
        return Improvement{cert->q1, cert->q2, cert->origin};
  return std::nullopt;
}

}  // namespace longcycle
