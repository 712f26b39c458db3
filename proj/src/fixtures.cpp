#include "deg/fixtures.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace deg {
namespace fixtures {

ColoredGraph solve_signatures(
    int n, const std::vector<std::vector<std::pair<int, int>>>& edges_by_color) {
  if (static_cast<int>(edges_by_color.size()) != n + 1)
    throw std::invalid_argument("edges_by_color must be indexed by color up to n");
  int V = 0;
  for (int c = 2; c < n; ++c)
    for (const auto& [a, b] : edges_by_color[c]) V = std::max({V, a + 1, b + 1});

  // which colors each vertex admits = which edges it carries (axiom 1)
  std::vector<std::vector<int>> nbr(n + 1, std::vector<int>(V, -1));
  for (int c = 2; c < n; ++c)
    for (const auto& [a, b] : edges_by_color[c]) {
      if (nbr[c][a] >= 0 || nbr[c][b] >= 0)
        throw std::invalid_argument("vertex carries two edges of one color");
      nbr[c][a] = b;
      nbr[c][b] = a;
    }
  auto chain_from_sigma1 = [&](int v, int s1) {
    SignVec sig(n - 1, 0);
    sig.set(1, s1);
    for (int i = 2; i <= n - 1; ++i) {
      int prev = sig.get(i - 1);
      sig.set(i, nbr[i][v] >= 0 ? -prev : prev);
    }
    return sig;
  };

  std::vector<int> sigma1(V, 0);
  for (int root = 0; root < V; ++root) {
    if (sigma1[root] != 0) continue;
    sigma1[root] = +1;
    std::deque<int> q{root};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      SignVec sv = chain_from_sigma1(v, sigma1[v]);
      for (int c = 2; c < n; ++c) {
        int u = nbr[c][v];
        if (u < 0) continue;
        int s1;
        if (c == 2) {
          s1 = -sv.get(1);
        } else if (c == 3) {
          // sigma_2 flips; walk back down u's own chain
          int s2 = -sv.get(2);
          s1 = nbr[2][u] >= 0 ? -s2 : s2;
        } else {
          s1 = sv.get(1);
        }
        if (sigma1[u] == 0) {
          sigma1[u] = s1;
          q.push_back(u);
        } else if (sigma1[u] != s1) {
          throw std::invalid_argument("signature solving hit a contradiction");
        }
      }
    }
  }

  ColoredGraph g(n, n);
  for (int v = 0; v < V; ++v) {
    GraphVertex gv;
    gv.sigma = chain_from_sigma1(v, sigma1[v]);
    gv.stat = 0;
    g.add_vertex(std::move(gv));
  }
  for (int c = 2; c < n; ++c)
    for (const auto& [a, b] : edges_by_color[c]) g.add_edge(c, a, b);

  // re-verify axiom 2 on every edge: catches mistranscription
  for (int c = 2; c < n; ++c)
    for (const auto& e : g.edges(c)) {
      const SignVec &a = g.vertex(e.a).sigma, &b = g.vertex(e.b).sigma;
      for (int j = 1; j <= n - 1; ++j) {
        bool flip = (j == c - 1 || j == c);
        bool free_pos = (j == c - 2 || j == c + 1);
        if (flip && a.get(j) != -b.get(j))
          throw std::invalid_argument("solved signatures violate axiom 2 (flip)");
        if (!flip && !free_pos && a.get(j) != b.get(j))
          throw std::invalid_argument("solved signatures violate axiom 2 (keep)");
      }
    }
  return g;
}

ColoredGraph gregg_cover() {
  ColoredGraph base = build_standard_deg(Partition({3, 2, 1}));
  int V = base.vertex_count();
  ColoredGraph g(6, 6);
  for (int copy = 0; copy < 2; ++copy)
    for (int v = 0; v < V; ++v) {
      GraphVertex gv = base.vertex(v);
      if (copy == 1)
        for (int& x : gv.word) x += 6;  // distinct payloads for the cover
      g.add_vertex(std::move(gv));
    }
  int g4 = base.find_vertex_by_word({6, 4, 1, 5, 2, 3});
  int f5 = base.find_vertex_by_word({5, 4, 1, 6, 2, 3});
  if (g4 < 0 || f5 < 0) throw std::logic_error("gregg: anchor tableaux not found");
  for (int c = 2; c <= 5; ++c)
    for (const auto& e : base.edges(c)) {
      bool swapped = (c == 5 && ((e.a == g4 && e.b == f5) || (e.a == f5 && e.b == g4)));
      if (swapped) {
        g.add_edge(5, g4, f5 + V);
        g.add_edge(5, g4 + V, f5);
      } else {
        g.add_edge(c, e.a, e.b);
        g.add_edge(c, e.a + V, e.b + V);
      }
    }
  return g;
}

ColoredGraph axiom4c_violator() {
  // 35 vertices named row by row in the appendix figure
  enum {
    b1, c1, d1, e1, f1, h1,
    a2, b2, c2, d2, e2, g2, h2,
    b4, b3, c3, d3, e3, f3, g3, h3,
    b5, c5, e4, f4, g4, h4,
    b6, c6, d6, e6, f6, f5, g5, g6
  };
  std::vector<std::vector<std::pair<int, int>>> E(7);
  auto add = [&](int c, int a, int b) { E[c].push_back({a, b}); };
  add(3, b1, c1); add(4, b1, c1);
  add(5, c1, d1);
  add(3, d1, e1);
  add(4, e1, f1);
  add(2, c1, c2);
  add(2, d1, d2);
  add(5, e1, e2);
  add(4, h1, h2);
  add(2, a2, b2); add(3, a2, b2);
  add(4, b2, c2);
  add(5, c2, d2);
  add(5, g2, h2);
  add(3, e2, e3);
  add(3, g2, g3);
  add(3, h2, h3);
  add(3, b3, c3); add(4, b3, c3);
  add(2, c3, d3);
  add(4, d3, e3);
  add(2, e3, f3);
  add(4, f3, g3);
  add(5, g3, h3);
  add(5, b3, b4);
  add(5, e3, e4);
  add(5, f3, f4);
  add(2, g3, g4);
  add(2, h3, h4);
  add(2, e4, f4); add(3, e4, f4);
  add(5, g4, h4);
  add(3, b4, b5);
  add(4, f4, f5);
  add(4, g4, g5);
  add(4, b5, c5); add(5, b5, c5);
  add(2, b5, b6);
  add(2, c5, c6);
  add(2, f5, f6);
  add(2, g5, g6); add(3, g5, g6);
  add(4, b6, c6); add(5, b6, c6);
  add(3, c6, d6);
  add(5, d6, e6);
  add(3, e6, f6); add(4, e6, f6);
  return solve_signatures(6, E);
}

ColoredGraph axiom4b_violator() {
  // 36 vertices named row by row in the appendix figure
  enum {
    z1, a0, b0, c0, g0, h0, i0, y1,
    e1,
    c2, d2, f2, g2,
    e3,
    a4, b4, c4, g4, h4, i4,
    e5,
    a6, b6, c6, d6, f6, g6, h6, i6,
    e7,
    z8, a8, b8, h8, i8, y8
  };
  std::vector<std::vector<std::pair<int, int>>> E(7);
  auto add = [&](int c, int a, int b) { E[c].push_back({a, b}); };
  add(2, z1, a0);
  add(3, a0, b0);
  add(4, b0, c0);
  add(4, g0, h0);
  add(3, h0, i0);
  add(2, i0, y1);
  add(5, c0, c2);
  add(5, g0, g2);
  add(4, c2, d2);
  add(2, d2, e1); add(3, d2, e1);
  add(5, d2, e3);
  add(2, e3, f2); add(3, e3, f2);
  add(5, e1, f2);
  add(4, f2, g2);
  add(3, c2, c4);
  add(3, g2, g4);
  add(5, a4, b4);
  add(4, b4, c4);
  add(4, g4, h4);
  add(5, h4, i4);
  add(2, a4, a6);
  add(2, b4, b6);
  add(2, c4, c6);
  add(2, g4, g6);
  add(2, h4, h6);
  add(2, i4, i6);
  add(5, a6, b6);
  add(4, c6, d6);
  add(2, d6, e7); add(3, d6, e7);
  add(5, d6, e5);
  add(2, e5, f6); add(3, e5, f6);
  add(5, e7, f6);
  add(4, f6, g6);
  add(5, h6, i6);
  add(3, a6, a8);
  add(3, b6, b8); add(4, b6, b8);
  add(3, h6, h8); add(4, h6, h8);
  add(3, i6, i8);
  add(4, z8, a8); add(5, z8, a8);
  add(4, i8, y8); add(5, i8, y8);
  return solve_signatures(6, E);
}

}  // namespace fixtures
}  // namespace deg
