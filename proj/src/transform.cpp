#include "deg/transform.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace deg {

namespace {

std::string vd(const ColoredGraph& g, int v) {
  return g.vertex(v).word.empty() ? ("v" + std::to_string(v))
                                  : word_to_string(g.vertex(v).word);
}

bool has_itype_W(const ColoredGraph& g, int v, int i) {
  if (!g.admits_neighbor(v, i - 1)) return false;
  int u = g.neighbor(v, i - 1);
  if (u < 0) return false;
  return g.vertex(v).sigma.get(i) == -g.vertex(u).sigma.get(i);
}

}  // namespace

std::vector<int> witnesses_W(const ColoredGraph& g, int i) {
  std::vector<int> out;
  if (i < 3 || i >= g.n()) return out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!has_itype_W(g, v, i)) continue;
    int u = g.neighbor(v, i - 1);
    int x = g.neighbor(v, i);
    if (x < 0) continue;  // axiom 3 would be broken; not a phi witness
    if (u != x) out.push_back(v);
  }
  return out;
}

std::vector<int> witnesses_X(const ColoredGraph& g, int i) {
  std::vector<int> out;
  if (i < 4 || i >= g.n()) return out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.admits_neighbor(v, i - 1)) continue;
    if (!g.admits_neighbor(v, i - 2) || !g.admits_neighbor(v, i)) continue;
    IType t;
    try {
      t = i_type(g, v, i);
    } catch (const std::exception&) {
      continue;
    }
    if (t != IType::C) continue;
    int ei = g.neighbor(v, i), em2 = g.neighbor(v, i - 2);
    if (ei < 0 || em2 < 0) continue;
    int lhs = g.admits_neighbor(ei, i - 2) ? g.neighbor(ei, i - 2) : -1;
    int rhs = g.admits_neighbor(em2, i) ? g.neighbor(em2, i) : -1;
    if (lhs != rhs) out.push_back(v);
  }
  return out;
}

std::optional<std::map<int, int>> package_isomorphism(const ColoredGraph& g,
                                                      int a, int b, int i) {
  Package pa = i_package(g, a, i);
  Package pb = i_package(g, b, i);
  if (pa.vertices.size() != pb.vertices.size()) return std::nullopt;
  auto sig_ok = [&](int va, int vb) {
    for (int p : pa.sigma_positions)
      if (g.vertex(va).sigma.get(p) != g.vertex(vb).sigma.get(p)) return false;
    return true;
  };
  std::map<int, int> map;
  std::map<int, int> rmap;
  if (!sig_ok(a, b)) return std::nullopt;
  map[a] = b;
  rmap[b] = a;
  std::deque<int> q{a};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int c : pa.colors) {
      int vn = g.neighbor(v, c);
      int wn = g.neighbor(map[v], c);
      if ((vn < 0) != (wn < 0)) return std::nullopt;
      if (vn < 0) continue;
      auto it = map.find(vn);
      if (it != map.end()) {
        if (it->second != wn) return std::nullopt;
        continue;
      }
      if (rmap.count(wn)) return std::nullopt;
      if (!sig_ok(vn, wn)) return std::nullopt;
      map[vn] = wn;
      rmap[wn] = vn;
      q.push_back(vn);
    }
  }
  if (map.size() != pa.vertices.size()) return std::nullopt;  // package not connected?
  // the involution view: fold in the inverse direction
  std::map<int, int> both = map;
  for (const auto& [x, y] : map) both[y] = x;
  return both;
}

namespace {

// Rewires E_i by the common pattern of phi and psi: vertices on the two
// packages pair through pi, vertices whose partner lies on a package
// pair through E_i pi E_i, everything else keeps its partner.
ColoredGraph rewire_by_packages(const ColoredGraph& g, int i,
                                const std::map<int, int>& pi,
                                const std::set<int>& pkg_vertices) {
  std::map<int, int> partner;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.admits_neighbor(v, i)) continue;
    int old = g.neighbor(v, i);
    if (old < 0)
      throw TransformFailed("rewire: vertex admitting E_" + std::to_string(i) +
                            " has no partner at " + vd(g, v));
    int next;
    if (pkg_vertices.count(v)) {
      next = pi.at(v);
    } else if (pkg_vertices.count(old)) {
      next = g.neighbor(pi.at(old), i);
      if (next < 0)
        throw TransformFailed("rewire: E_i undefined on the mapped package at " +
                              vd(g, old));
    } else {
      next = old;
    }
    partner[v] = next;
  }
  for (const auto& [v, w] : partner) {
    if (w == v)
      throw TransformFailed("rewire produced a fixed point at " + vd(g, v));
    auto it = partner.find(w);
    if (it == partner.end() || it->second != v)
      throw TransformFailed("rewire is not an involution at " + vd(g, v));
  }
  ColoredGraph out = g;
  std::vector<GraphEdge> es;
  for (const auto& [v, w] : partner) {
    if (v < w) {
      EdgeKind kind = EdgeKind::Plain;
      if (g.neighbor(v, i) == w) {  // edge kept: preserve its kind
        for (const auto& e : g.edges(i))
          if (e.a == std::min(v, w) && e.b == std::max(v, w)) kind = e.kind;
      }
      es.push_back({v, w, kind});
    }
  }
  out.set_edges(i, std::move(es));
  return out;
}

}  // namespace

ColoredGraph apply_phi(const ColoredGraph& g, int i, int w) {
  if (!has_itype_W(g, w, i))
    throw TransformFailed("phi: anchor lacks i-type W at " + vd(g, w));
  int u = g.neighbor(w, i - 1);
  if (g.neighbor(w, i) == u)
    throw TransformFailed("phi: anchor already a double edge at " + vd(g, w));
  // side condition: sigma_{i-3} constant under E_{i-1} on the
  // (i-1)-package of w
  if (i - 3 >= 1) {
    Package p = i_package(g, w, i - 1);
    for (int v : p.vertices) {
      if (!g.admits_neighbor(v, i - 1)) continue;
      int vn = g.neighbor(v, i - 1);
      if (vn >= 0 &&
          g.vertex(v).sigma.get(i - 3) != g.vertex(vn).sigma.get(i - 3))
        throw TransformFailed("phi: sigma_{i-3} side condition fails at " +
                              vd(g, v));
    }
  }
  auto pi = package_isomorphism(g, w, u, i);
  if (!pi.has_value())
    throw TransformFailed("phi: packages of " + vd(g, w) + " and " + vd(g, u) +
                          " are not isomorphic");
  std::set<int> pkg;
  for (const auto& [x, y] : *pi) pkg.insert(x);
  return rewire_by_packages(g, i, *pi, pkg);
}

ColoredGraph apply_psi(const ColoredGraph& g, int i, int x) {
  // membership conditions of X_i
  {
    auto X = witnesses_X(g, i);
    if (!std::binary_search(X.begin(), X.end(), x))
      throw TransformFailed("psi: anchor not in X_i at " + vd(g, x));
  }
  int ei = g.neighbor(x, i);
  int em2ei = g.admits_neighbor(ei, i - 2) ? g.neighbor(ei, i - 2) : -1;
  int u;
  if (em2ei >= 0 && g.admits_neighbor(em2ei, i)) {
    u = ei;
  } else {
    if (em2ei < 0)
      throw TransformFailed("psi: E_{i-2}E_i(x) undefined at " + vd(g, x));
    u = g.neighbor(em2ei, i - 1);
    if (u < 0)
      throw TransformFailed("psi: E_{i-1}E_{i-2}E_i(x) undefined at " + vd(g, x));
    if (!g.admits_neighbor(u, i))
      throw TransformFailed("psi: selected partner admits no i-neighbor at " +
                            vd(g, x));
  }
  // side condition: sigma_{i-4} constant under E_{i-2} for x and E_i(x)
  if (i - 4 >= 1) {
    for (int v : {x, ei}) {
      int vn = g.admits_neighbor(v, i - 2) ? g.neighbor(v, i - 2) : -1;
      if (vn >= 0 &&
          g.vertex(v).sigma.get(i - 4) != g.vertex(vn).sigma.get(i - 4))
        throw TransformFailed("psi: sigma_{i-4} side condition fails at " +
                              vd(g, v));
    }
  }
  int a = g.neighbor(x, i - 2);
  int b = g.admits_neighbor(u, i - 2) ? g.neighbor(u, i - 2) : -1;
  if (a < 0 || b < 0)
    throw TransformFailed("psi: E_{i-2} anchors undefined at " + vd(g, x));
  auto pi = package_isomorphism(g, a, b, i);
  if (!pi.has_value())
    throw TransformFailed("psi: packages of " + vd(g, a) + " and " + vd(g, b) +
                          " are not isomorphic");
  std::set<int> pkg;
  for (const auto& [p, q] : *pi) pkg.insert(p);
  return rewire_by_packages(g, i, *pi, pkg);
}

namespace {

struct SubComponents {
  std::vector<std::vector<int>> subs;  // E_2..E_{i-1} components inside H
  std::vector<int> sub_of;             // vertex -> sub index (-1 outside)
};

SubComponents split_level(const ColoredGraph& g, const std::vector<int>& H, int i) {
  SubComponents sc;
  sc.sub_of.assign(g.vertex_count(), -1);
  std::vector<int> lo;
  for (int c = 2; c < i; ++c) lo.push_back(c);
  std::vector<char> seen(g.vertex_count(), 0);
  for (int v : H) {
    if (seen[v]) continue;
    auto comp = g.component_of(v, lo);
    std::vector<int> inside;
    for (int u : comp)
      if (std::binary_search(H.begin(), H.end(), u)) inside.push_back(u);
    for (int u : inside) {
      seen[u] = 1;
      sc.sub_of[u] = static_cast<int>(sc.subs.size());
    }
    sc.subs.push_back(std::move(inside));
  }
  return sc;
}

}  // namespace

int axiom6_defects(const ColoredGraph& g, int level) {
  int defects = 0;
  std::vector<int> colors;
  for (int c = 2; c <= level && c < g.n(); ++c) colors.push_back(c);
  for (const auto& H : g.components(colors)) {
    if (H.size() == 1) continue;
    SubComponents sc = split_level(g, H, level);
    size_t m = sc.subs.size();
    if (m <= 1) continue;
    std::vector<std::vector<char>> joined(m, std::vector<char>(m, 0));
    for (const auto& e : g.edges(level)) {
      if (sc.sub_of[e.a] >= 0 && sc.sub_of[e.b] >= 0)
        joined[sc.sub_of[e.a]][sc.sub_of[e.b]] = joined[sc.sub_of[e.b]][sc.sub_of[e.a]] = 1;
    }
    std::vector<ColoredGraph> subgraphs;
    for (const auto& s : sc.subs) {
      ColoredGraph is = g.induced(s);
      for (int c = level; c < g.n(); ++c) is.clear_color(c);
      subgraphs.push_back(std::move(is));
    }
    for (size_t s1 = 0; s1 < m; ++s1)
      for (size_t s2 = s1 + 1; s2 < m; ++s2) {
        if (!joined[s1][s2]) ++defects;
        if (find_isomorphism(subgraphs[s1], subgraphs[s2]).has_value()) ++defects;
      }
  }
  return defects;
}

ColoredGraph apply_theta(const ColoredGraph& g, int i, int anchor) {
  std::vector<int> colors;
  for (int c = 2; c <= i && c < g.n(); ++c) colors.push_back(c);
  std::vector<int> H = g.component_of(anchor, colors);
  SubComponents sc = split_level(g, H, i);
  size_t m = sc.subs.size();
  if (m <= 1) throw TransformFailed("theta: nothing to repair at " + vd(g, anchor));

  // restricted shapes of the subcomponents
  ColoredGraph low = g.restricted(i, std::max(i, 2));
  std::vector<std::optional<Partition>> shape(m);
  for (size_t s = 0; s < m; ++s) shape[s] = component_shape(low, sc.subs[s]);
  // sigma_{i+1} value per subcomponent, when the position exists
  bool have_sp1 = (i + 1 <= g.N() - 1);
  std::vector<int> sp1(m, +1);
  if (have_sp1)
    for (size_t s = 0; s < m; ++s) sp1[s] = g.vertex(sc.subs[s][0]).sigma.get(i + 1);

  // pivot selection: dominance-max shape among sigma_{i+1} = -1 subs,
  // else dominance-max overall; ties by lex, then least word
  auto better = [&](size_t s, std::optional<size_t> cur) {
    if (!shape[s].has_value()) return false;
    if (!cur.has_value()) return true;
    const Partition &a = *shape[s], &b = *shape[*cur];
    if (a == b) return false;  // keep the earlier (least-anchored) one
    if (dominance_leq(b, a)) return true;
    if (dominance_leq(a, b)) return false;
    return b.parts() < a.parts();
  };
  std::optional<size_t> pivot;
  if (have_sp1) {
    for (size_t s = 0; s < m; ++s)
      if (sp1[s] == -1 && better(s, pivot)) pivot = s;
  }
  if (!pivot.has_value()) {
    for (size_t s = 0; s < m; ++s)
      if (better(s, pivot)) pivot = s;
  }
  if (!pivot.has_value())
    throw TransformFailed("theta: no subcomponent has a standard shape at " +
                          vd(g, anchor));
  size_t C = *pivot;

  // E_i(C): subcomponents joined to C by a direct E_i edge
  std::set<size_t> eiC;
  for (const auto& e : g.edges(i)) {
    int sa = sc.sub_of[e.a], sb = sc.sub_of[e.b];
    if (sa < 0 || sb < 0) continue;
    if (sa == static_cast<int>(C) && sb != static_cast<int>(C)) eiC.insert(sb);
    if (sb == static_cast<int>(C) && sa != static_cast<int>(C)) eiC.insert(sa);
  }
  if (eiC.empty())
    throw TransformFailed("theta: pivot has no outgoing E_i edges at " +
                          vd(g, anchor));

  // unique isomorphism from each outside subcomponent onto its image in
  // E_i(C), where one exists
  std::vector<ColoredGraph> subgraphs;
  for (const auto& s : sc.subs) {
    ColoredGraph is = g.induced(s);
    for (int c = i; c < g.n(); ++c) is.clear_color(c);
    subgraphs.push_back(std::move(is));
  }
  // phi_map[v] for v in an outside subcomponent B' -> matched vertex in B
  std::map<int, int> phi_map;
  for (size_t s = 0; s < m; ++s) {
    if (s == C || eiC.count(s)) continue;
    std::optional<size_t> match;
    std::optional<std::vector<int>> iso;
    for (size_t b : eiC) {
      auto f = find_isomorphism(subgraphs[s], subgraphs[b]);
      if (f.has_value()) {
        if (match.has_value())
          throw TransformFailed("theta: ambiguous isomorphic image in E_i(C)");
        match = b;
        iso = f;
      }
    }
    if (!match.has_value()) continue;  // no image: edges stay put
    for (size_t j = 0; j < sc.subs[s].size(); ++j)
      phi_map[sc.subs[s][j]] = sc.subs[*match][(*iso)[j]];
  }

  // rewire per the theta rule
  std::map<int, int> partner;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.admits_neighbor(v, i)) continue;
    int old = g.neighbor(v, i);
    if (old < 0) throw TransformFailed("theta: missing E_i partner at " + vd(g, v));
    int sv = sc.sub_of[v], so = sc.sub_of[old];
    int next = old;
    bool v_in_eiC = sv >= 0 && eiC.count(sv);
    bool o_in_eiC = so >= 0 && eiC.count(so);
    if (v_in_eiC && !o_in_eiC && phi_map.count(old)) {
      next = phi_map.at(old);
    } else if (o_in_eiC && !v_in_eiC && phi_map.count(v)) {
      int img = phi_map.at(v);
      next = g.neighbor(img, i);
      if (next < 0)
        throw TransformFailed("theta: image lacks an E_i partner at " + vd(g, img));
    }
    partner[v] = next;
  }
  for (const auto& [v, w] : partner) {
    auto it = partner.find(w);
    if (w == v || it == partner.end() || it->second != v)
      throw TransformFailed("theta rewiring is not an involution at " + vd(g, v));
  }
  ColoredGraph out = g;
  std::vector<GraphEdge> es;
  for (const auto& [v, w] : partner)
    if (v < w) es.push_back({v, w, EdgeKind::Plain});
  out.set_edges(i, std::move(es));
  return out;
}

// ---------------------------------------------------------------------------
// the driver

namespace {

struct PendingMap {
  std::string map;  // phi/psi/theta
  int color = 0;
  int anchor = -1;
  bool operator<(const PendingMap& o) const {
    if (map != o.map) return map < o.map;
    if (color != o.color) return color < o.color;
    return anchor < o.anchor;
  }
};

ColoredGraph apply_map(const ColoredGraph& g, const PendingMap& m) {
  if (m.map == "phi") return apply_phi(g, m.color, m.anchor);
  if (m.map == "psi") return apply_psi(g, m.color, m.anchor);
  return apply_theta(g, m.color, m.anchor);
}

// Local Schur positivity and string-length sanity of the windows fully
// below or at stage color i.
bool windows_ok(const ColoredGraph& g, int i) {
  auto lsp = [&](const std::vector<int>& comp, int lo, int hi) {
    QSymAggregate f(hi - lo + 2);
    for (int v : comp) f.add(g.vertex(v).sigma.slice(lo, hi), Poly(1));
    try {
      extract_schur(f);
      return true;
    } catch (const NotSchurPositive&) {
      return false;
    }
  };
  for (int j = 3; j <= i && j < g.n(); ++j)
    for (const auto& comp : g.components({j - 1, j}))
      if (!lsp(comp, j - 2, j)) return false;
  for (int j = 4; j <= i && j < g.n(); ++j)
    for (const auto& comp : g.components({j - 2, j - 1, j}))
      if (!lsp(comp, j - 3, j)) return false;
  return true;
}

// axioms 1,2,3,5 only, without the catalog machinery of check_axioms
bool core_axioms_ok(const ColoredGraph& g) {
  const int n = g.n(), N = g.N();
  std::vector<std::vector<int>> deg(n + 1, std::vector<int>(g.vertex_count(), 0));
  for (int c = 2; c < n; ++c)
    for (const auto& e : g.edges(c)) {
      deg[c][e.a]++;
      deg[c][e.b]++;
    }
  for (int c = 2; c < n; ++c)
    for (int v = 0; v < g.vertex_count(); ++v)
      if (deg[c][v] != (g.admits_neighbor(v, c) ? 1 : 0)) return false;
  for (int c = 2; c < n; ++c)
    for (const auto& e : g.edges(c)) {
      const SignVec &a = g.vertex(e.a).sigma, &b = g.vertex(e.b).sigma;
      for (int j = 1; j <= N - 1; ++j) {
        bool flip = (j == c - 1 || j == c);
        bool free_pos = (j == c - 2 || j == c + 1);
        if (flip && a.get(j) != -b.get(j)) return false;
        if (!flip && !free_pos && a.get(j) != b.get(j)) return false;
      }
      if (c - 2 >= 1 && a.get(c - 2) == -b.get(c - 2) && a.get(c - 2) != -a.get(c - 1))
        return false;
      if (c + 1 <= N - 1 && a.get(c + 1) == -b.get(c + 1) && a.get(c + 1) != -a.get(c))
        return false;
    }
  for (int ci = 2; ci < n; ++ci)
    for (int cj = ci + 3; cj < n; ++cj)
      for (int x = 0; x < g.vertex_count(); ++x) {
        int w = g.neighbor(x, ci);
        int y = g.neighbor(x, cj);
        if (w < 0 || y < 0) continue;
        int v = g.neighbor(w, cj);
        if (v < 0 || g.neighbor(v, ci) != y) return false;
      }
  return true;
}

// Applies base after optional pre-repairs, committing the first variant
// that preserves the stage invariants and makes progress.
struct StageContext {
  ColoredGraph& work;
  TransformLog& log;
  int i;
  int& step;

  bool stage_ok(const ColoredGraph& cand) const {
    return core_axioms_ok(cand) && windows_ok(cand, i);
  }

  void commit(const ColoredGraph& g2, const std::vector<PendingMap>& seq) {
    for (const auto& mm : seq) {
      TransformEvent ev;
      ev.step = ++step;
      ev.map = mm.map;
      ev.color = mm.color;
      ev.anchor = work.vertex(mm.anchor).word;
      log.push_back(ev);
    }
    work = g2;
  }

  // candidate pre-repairs drawn from the §4.3-style case analysis,
  // focused near the base anchor
  std::vector<PendingMap> repair_candidates(const PendingMap& base) const {
    std::vector<PendingMap> out;
    auto add = [&](const std::string& map, int color, int anchor) {
      if (anchor < 0 || color < 3 || color >= work.n()) return;
      if (map == base.map && color == base.color && anchor == base.anchor) return;
      out.push_back({map, color, anchor});
    };
    auto nb = [&](int v, int c) -> int {
      if (v < 0 || c < 2 || c >= work.n()) return -1;
      return work.admits_neighbor(v, c) ? work.neighbor(v, c) : -1;
    };
    int i0 = base.color;
    std::vector<int> near{base.anchor};
    if (base.map == "phi") near.push_back(nb(base.anchor, i0 - 1));
    if (base.map == "psi") near.push_back(nb(base.anchor, i0));
    std::vector<int> ring = near;
    for (int v : near)
      for (int c = 2; c < work.n(); ++c) ring.push_back(nb(v, c));
    std::sort(ring.begin(), ring.end());
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());

    for (int c : {i0, i0 + 1, i0 + 2}) {
      if (c < 3 || c >= work.n()) continue;
      auto W = witnesses_W(work, c);
      auto X = witnesses_X(work, c);
      for (int v : ring) {
        if (v < 0) continue;
        if (std::binary_search(W.begin(), W.end(), v)) add("phi", c, v);
        if (std::binary_search(X.begin(), X.end(), v)) add("psi", c, v);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(),
                          [](const PendingMap& a, const PendingMap& b) {
                            return a.map == b.map && a.color == b.color &&
                                   a.anchor == b.anchor;
                          }),
              out.end());
    return out;
  }

  // progress measure for the base map
  bool progressed(const ColoredGraph& before, const ColoredGraph& after,
                  const PendingMap& base) const {
    if (base.map == "phi")
      return witnesses_W(after, i).size() < witnesses_W(before, i).size();
    if (base.map == "psi")
      return witnesses_X(after, i).size() < witnesses_X(before, i).size();
    return axiom6_defects(after, i) < axiom6_defects(before, i);
  }

  bool try_apply(const PendingMap& base) {
    std::vector<std::vector<PendingMap>> candidates;
    candidates.push_back({base});
    auto repairs = repair_candidates(base);
    for (const auto& r : repairs) candidates.push_back({r, base});
    for (const auto& r1 : repairs)
      for (const auto& r2 : repairs)
        if (!(r1.map == r2.map && r1.color == r2.color && r1.anchor == r2.anchor))
          candidates.push_back({r1, r2, base});
    for (const auto& seq : candidates) {
      ColoredGraph cand = work;
      bool ok = true;
      std::vector<PendingMap> applied;
      for (const auto& mm : seq) {
        // anchors are vertex ids in `work`; ids are stable (vertex set
        // never changes)
        try {
          cand = apply_map(cand, mm);
          applied.push_back(mm);
        } catch (const TransformFailed&) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (!stage_ok(cand)) continue;
      if (!progressed(work, cand, base)) continue;
      commit(cand, applied);
      return true;
    }
    return false;
  }
};

int least_word_vertex(const ColoredGraph& g, const std::vector<int>& vs) {
  int best = vs[0];
  for (int v : vs)
    if (g.vertex(v).word < g.vertex(best).word) best = v;
  return best;
}

// Witness list in lexicographic word order: the application order is
// deterministic, and a witness whose map lies outside the lemma cases
// is passed over for the next one.
std::vector<int> by_word(const ColoredGraph& g, std::vector<int> vs) {
  std::sort(vs.begin(), vs.end(), [&](int a, int b) {
    return g.vertex(a).word < g.vertex(b).word;
  });
  return vs;
}

}  // namespace

TransformResult transform_to_deg(const ColoredGraph& g) {
  {
    AxiomReport rep = check_axioms(g);
    if (!rep.is_d_graph())
      throw std::invalid_argument("transform_to_deg: input is not a D graph:\n" +
                                  rep.summary());
  }
  TransformResult res{g, {}};
  ColoredGraph& work = res.graph;
  int step = 0;
  const int n = g.n();
  for (int i = 2; i < n; ++i) {
    StageContext ctx{work, res.log, i, step};
    // phase W
    for (int guard = 0;; ++guard) {
      auto W = witnesses_W(work, i);
      if (W.empty()) break;
      if (guard > 4 * g.vertex_count())
        throw TransformFailed("stage " + std::to_string(i) + ": W-phase stalled",
                              res.log);
      bool done = false;
      for (int w : by_word(work, W))
        if (ctx.try_apply({"phi", i, w})) {
          done = true;
          break;
        }
      if (!done)
        throw TransformFailed("stage " + std::to_string(i) +
                                  ": no applicable repair for phi, witnesses at " +
                                  vd(work, W[0]),
                              res.log);
    }
    // phase X
    for (int guard = 0;; ++guard) {
      auto X = witnesses_X(work, i);
      if (X.empty()) break;
      if (guard > 4 * g.vertex_count())
        throw TransformFailed("stage " + std::to_string(i) + ": X-phase stalled",
                              res.log);
      bool done = false;
      for (int x : by_word(work, X))
        if (ctx.try_apply({"psi", i, x})) {
          done = true;
          break;
        }
      if (!done)
        throw TransformFailed("stage " + std::to_string(i) +
                                  ": no applicable repair for psi, witnesses at " +
                                  vd(work, X[0]),
                              res.log);
    }
    // phase theta
    for (int guard = 0;; ++guard) {
      if (axiom6_defects(work, i) == 0) break;
      if (guard > 4 * g.vertex_count())
        throw TransformFailed("stage " + std::to_string(i) + ": theta-phase stalled",
                              res.log);
      // anchor: least word inside a defective component
      std::vector<int> colors;
      for (int c = 2; c <= i && c < n; ++c) colors.push_back(c);
      int anchor = -1;
      for (const auto& H : work.components(colors)) {
        SubComponents sc = split_level(work, H, i);
        if (sc.subs.size() <= 1) continue;
        // defective iff some pair unjoined or isomorphic
        bool defective = false;
        {
          size_t m = sc.subs.size();
          std::vector<std::vector<char>> joined(m, std::vector<char>(m, 0));
          for (const auto& e : work.edges(i))
            if (sc.sub_of[e.a] >= 0 && sc.sub_of[e.b] >= 0)
              joined[sc.sub_of[e.a]][sc.sub_of[e.b]] =
                  joined[sc.sub_of[e.b]][sc.sub_of[e.a]] = 1;
          std::vector<ColoredGraph> subgraphs;
          for (const auto& s : sc.subs) {
            ColoredGraph is = work.induced(s);
            for (int c = i; c < work.n(); ++c) is.clear_color(c);
            subgraphs.push_back(std::move(is));
          }
          for (size_t s1 = 0; s1 < m && !defective; ++s1)
            for (size_t s2 = s1 + 1; s2 < m && !defective; ++s2)
              if (!joined[s1][s2] ||
                  find_isomorphism(subgraphs[s1], subgraphs[s2]).has_value())
                defective = true;
        }
        if (defective) {
          anchor = least_word_vertex(work, H);
          break;
        }
      }
      if (anchor < 0) break;
      PendingMap base{"theta", i, anchor};
      if (!ctx.try_apply(base))
        throw TransformFailed("stage " + std::to_string(i) +
                                  ": no applicable repair for theta at " +
                                  vd(work, anchor),
                              res.log);
    }
    // stage postcondition: the (i+1, N)-restriction is a DEG
    {
      ColoredGraph r = work.restricted(std::min(i + 1, n), work.N());
      AxiomReport rep = check_axioms(r);
      if (!rep.is_deg())
        throw TransformFailed("stage " + std::to_string(i) +
                                  " postcondition failed:\n" + rep.summary(),
                              res.log);
    }
  }
  {
    AxiomReport rep = check_axioms(work);
    if (!rep.is_deg())
      throw TransformFailed("final graph is not a dual equivalence graph:\n" +
                                rep.summary(),
                            res.log);
  }
  return res;
}

ColoredGraph replay_transform(const ColoredGraph& g, const TransformLog& log) {
  ColoredGraph work = g;
  for (const auto& ev : log) {
    int anchor = work.find_vertex_by_word(ev.anchor);
    if (anchor < 0) throw TransformFailed("replay: anchor word not found");
    if (ev.map == "phi") work = apply_phi(work, ev.color, anchor);
    else if (ev.map == "psi") work = apply_psi(work, ev.color, anchor);
    else work = apply_theta(work, ev.color, anchor);
  }
  return work;
}

}  // namespace deg
