#include "deg/llt.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace deg {

KDescentSet k_descents(const Word& w, const std::vector<int>& c, int k) {
  if (w.size() != c.size()) throw std::invalid_argument("k_descents: length mismatch");
  for (size_t j = 1; j < c.size(); ++j)
    if (c[j] < c[j - 1]) throw std::invalid_argument("contents must be nondecreasing");
  KDescentSet d;
  int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j] && c[j] - c[i] == k) d.insert({i + 1, j + 1});
  return d;
}

std::vector<std::pair<int, int>> k_inversion_pairs(const Word& w,
                                                   const std::vector<int>& c, int k) {
  std::vector<std::pair<int, int>> out;
  int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j] && c[j] - c[i] > 0 && c[j] - c[i] < k)
        out.push_back({i + 1, j + 1});
  return out;
}

int inv_k(const Word& w, const std::vector<int>& c, int k) {
  return static_cast<int>(k_inversion_pairs(w, c, k).size());
}

bool is_k_ribbon_word(const Word& w, const std::vector<int>& c, int k) {
  int n = static_cast<int>(w.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (c[i] != c[i + 1]) continue;
    // need h with c_h = c_i - k, w_i < w_h <= w_{i+1},
    // and j with c_j = c_i + k, w_i <= w_j < w_{i+1}
    bool has_h = false, has_j = false;
    for (int p = 0; p < n; ++p) {
      if (c[p] == c[i] - k && w[i] < w[p] && w[p] <= w[i + 1]) has_h = true;
      if (c[p] == c[i] + k && w[i] <= w[p] && w[p] < w[i + 1]) has_j = true;
    }
    if (!has_h || !has_j) return false;
  }
  return true;
}

int tuple_inv_k(const StandardTupleTableau& t) {
  RibbonWord rw = tuple_to_word(t);
  return inv_k(rw.w, rw.c, t.shape().k());
}

RibbonWord tuple_to_word(const StandardTupleTableau& t) {
  RibbonWord rw;
  rw.w = t.content_reading_word();
  for (const TupleCell& tc : t.cell_order())
    rw.c.push_back(t.shape().shifted_content(tc.comp, tc.cell));
  return rw;
}

StandardTupleTableau word_to_tuple(const RibbonWord& rw, int k,
                                   const KDescentSet& D) {
  const Word& w = rw.w;
  const std::vector<int>& c = rw.c;
  if (w.size() != c.size()) throw std::invalid_argument("word_to_tuple: length mismatch");
  if (!is_k_ribbon_word(w, c, k))
    throw std::invalid_argument("word_to_tuple: not a k-ribbon word");
  if (k_descents(w, c, k) != D)
    throw std::invalid_argument("word_to_tuple: descent set mismatch");

  int n = static_cast<int>(w.size());
  // split by component: shifted content mod k
  std::vector<SkewShape> comps(k);
  std::map<std::pair<int, int>, int> entry_at_abs_per_comp;  // ((comp<<?..) use map
  std::vector<std::vector<std::pair<Cell, int>>> placed(k);  // (abs cell, entry)
  for (int comp = 0; comp < k; ++comp) {
    // diagonals of this component: content -> entries in word order
    std::map<int, std::vector<int>> diag;
    for (int p = 0; p < n; ++p) {
      int m = ((c[p] % k) + k) % k;
      if (m != comp) continue;
      diag[(c[p] - comp) / k].push_back(w[p]);
    }
    if (diag.empty()) continue;
    // process contents in decreasing order; a new content cluster is
    // stacked strictly above all rows used so far
    int max_row_used = 0;
    std::pair<int, int> prev_sw{0, 0};
    int prev_ct = 0, prev_min = 0;
    bool have_prev = false;
    for (auto it = diag.rbegin(); it != diag.rend(); ++it) {
      int ct = it->first;
      const std::vector<int>& entries = it->second;  // increasing along NE
      int my_min = entries.front();
      std::pair<int, int> sw;
      if (have_prev && ct == prev_ct - 1) {
        // paper rule: this diagonal's SW corner sits immediately north of
        // the previous one's when its least letter is greater, west otherwise
        if (my_min > prev_min)
          sw = {prev_sw.first, prev_sw.second + 1};  // north
        else
          sw = {prev_sw.first - 1, prev_sw.second};  // west
      } else {
        // first diagonal of a content cluster: fresh rows above
        int row = max_row_used + 1;
        sw = {ct + row, row};
      }
      for (size_t s = 0; s < entries.size(); ++s) {
        Cell cell{sw.first + static_cast<int>(s), sw.second + static_cast<int>(s)};
        placed[comp].push_back({cell, entries[s]});
        max_row_used = std::max(max_row_used, cell.row);
      }
      prev_sw = sw;
      prev_ct = ct;
      prev_min = my_min;
      have_prev = true;
    }
    // slide to the canonical touching position before building the shape
    int mincol = placed[comp][0].first.col, minrow = placed[comp][0].first.row;
    for (const auto& [cell, e] : placed[comp]) {
      mincol = std::min(mincol, cell.col);
      minrow = std::min(minrow, cell.row);
    }
    int t = std::max(1 - mincol, 1 - minrow);
    std::vector<Cell> cells;
    for (auto& [cell, e] : placed[comp]) {
      cell.col += t;
      cell.row += t;
      cells.push_back(cell);
    }
    comps[comp] = SkewShape::from_absolute_cells(cells);
  }
  TupleShape shape(std::move(comps));
  // collect entries in the content reading order
  std::vector<int> entries;
  for (const TupleCell& tc : content_reading_order(shape)) {
    int e = 0;
    for (const auto& [cell, val] : placed[tc.comp])
      if (cell == tc.cell) { e = val; break; }
    if (e == 0) throw std::logic_error("word_to_tuple: lost a cell");
    entries.push_back(e);
  }
  StandardTupleTableau t(shape, entries);
  if (t.content_reading_word() != w)
    throw std::logic_error("word_to_tuple: reading word mismatch");
  return t;
}

std::pair<Word, EdgeKind> involution_D(const Word& w, const std::vector<int>& c,
                                       int k, int i) {
  int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 2, -1);
  for (int p = 0; p < n; ++p) pos[w[p]] = p;
  int dist = 0;
  for (int a : {i - 1, i, i + 1})
    for (int b : {i - 1, i, i + 1})
      dist = std::max(dist, std::abs(c[pos[a]] - c[pos[b]]));
  if (dist > k) return {elementary_dual_equivalence(w, i), EdgeKind::Plain};
  return {twisted_dual_equivalence(w, i), EdgeKind::Twisted};
}

ColoredGraph build_llt_graph(const TupleShape& shape, int size_bound) {
  int n = shape.total_size();
  int k = shape.k();
  auto tuples = enumerate_standard(shape, size_bound);
  if (n < 1) throw std::invalid_argument("build_llt_graph: empty shape");
  // all tuples share one content vector
  std::vector<int> c;
  if (!tuples.empty()) c = tuple_to_word(tuples[0]).c;
  ColoredGraph g(n, n);
  for (const auto& t : tuples) {
    GraphVertex v;
    v.word = t.content_reading_word();
    v.sigma = descent_signature(v.word);
    v.stat = inv_k(v.word, c, k);
    g.add_vertex(std::move(v));
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Word& w = g.vertex(v).word;
    for (int i = 2; i < n; ++i) {
      if (!g.admits_neighbor(v, i)) continue;
      auto [u, kind] = involution_D(w, c, k, i);
      if (u == w)
        throw std::logic_error("involution fixed a vertex that admits a neighbor");
      int uv = g.find_vertex_by_word(u);
      if (uv < 0) throw std::logic_error("involution left the vertex set");
      g.add_edge(i, v, uv, kind);
    }
  }
  return g;
}

QSymAggregate llt_polynomial(const TupleShape& shape, Exec exec, int size_bound) {
  int n = shape.total_size();
  int k = shape.k();
  auto tuples = enumerate_standard(shape, size_bound, exec);
  std::vector<int> c;
  if (!tuples.empty()) c = tuple_to_word(tuples[0]).c;
  QSymAggregate f(n);
  int m = static_cast<int>(tuples.size());
  if (exec == Exec::Serial) {
    for (int j = 0; j < m; ++j) {
      const Word& w = tuples[j].entries();
      f.add(descent_signature(w), Poly::monomial(1, inv_k(w, c, k)));
    }
    return f;
  }
#ifdef _OPENMP
  std::vector<QSymAggregate> partial;
#pragma omp parallel
  {
#pragma omp single
    partial.assign(omp_get_num_threads(), QSymAggregate(n));
#pragma omp for schedule(static)
    for (int j = 0; j < m; ++j) {
      const Word& w = tuples[j].entries();
      partial[omp_get_thread_num()].add(descent_signature(w),
                                        Poly::monomial(1, inv_k(w, c, k)));
    }
  }
  for (const auto& p : partial) f += p;
  return f;
#else
  for (int j = 0; j < m; ++j) {
    const Word& w = tuples[j].entries();
    f.add(descent_signature(w), Poly::monomial(1, inv_k(w, c, k)));
  }
  return f;
#endif
}

LltSchurResult llt_schur(const TupleShape& shape, LltMethod method, Exec exec,
                         int size_bound) {
  LltSchurResult res;
  if (method == LltMethod::Oracle) {
    res.poly = extract_schur(llt_polynomial(shape, exec, size_bound));
    return res;
  }
  ColoredGraph g = build_llt_graph(shape, size_bound);
  int n = g.n();
  auto comps = g.components(g.all_colors());
  int m = static_cast<int>(comps.size());
  std::vector<std::optional<TransformResult>> results(m);
  std::vector<std::string> failures(m);
  auto run_one = [&](int j) {
    try {
      results[j] = transform_to_deg(g.induced(comps[j]));
    } catch (const TransformFailed& e) {
      failures[j] = e.what();
    }
  };
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < m; ++j) run_one(j);
#else
    for (int j = 0; j < m; ++j) run_one(j);
#endif
  } else {
    for (int j = 0; j < m; ++j) run_one(j);
  }
  SchurPoly total(n);
  bool fell_back = false;
  for (int j = 0; j < m; ++j) {
    if (!results[j].has_value()) {
      fell_back = true;
      continue;
    }
    const ColoredGraph& t = results[j]->graph;
    for (const auto& tc : t.components(t.all_colors())) {
      auto lambda = component_shape(t, tc);
      if (!lambda.has_value()) {
        fell_back = true;
        results[j].reset();
        break;
      }
      long long stat = t.vertex(tc[0]).stat.value_or(0);
      for (int v : tc)
        if (t.vertex(v).stat.value_or(0) != stat)
          throw std::logic_error("inv_k not constant on a transformed component");
      total.add(*lambda, Poly::monomial(1, static_cast<int>(stat)));
    }
    if (results[j].has_value())
      for (const auto& ev : results[j]->log) res.log.push_back(ev);
  }
  if (fell_back) {
    // oracle fallback for the whole polynomial keeps the result exact
    res.poly = extract_schur(llt_polynomial(shape, exec, size_bound));
    res.transform_fell_back = true;
    return res;
  }
  res.poly = total;
  return res;
}

AxiomReport check_domino_theorem(const TupleShape& shape, int size_bound) {
  if (shape.k() != 2)
    throw std::invalid_argument("domino theorem check requires k = 2");
  ColoredGraph g = build_llt_graph(shape, size_bound);
  AxiomReport rep = check_axioms(g);
  AxiomVerdict con;
  for (const auto& comp : g.components(g.all_colors())) {
    long long stat = g.vertex(comp[0]).stat.value_or(0);
    for (int v : comp)
      if (g.vertex(v).stat.value_or(0) != stat) {
        con.holds = false;
        con.witness = "inv_2 differs inside the component of v" + std::to_string(v);
      }
  }
  rep.verdicts["inv_constant"] = con;
  return rep;
}

RibbonTheoremVerdict check_ribbon_theorem(const ColoredGraph& g,
                                          const std::vector<int>& component) {
  RibbonTheoremVerdict out;
  int n = g.n();
  for (int c = 2; c < n; ++c)
    for (const auto& e : g.edges(c))
      if (std::binary_search(component.begin(), component.end(), e.a) &&
          e.kind != EdgeKind::Twisted) {
        out.detail = "component has a non-twisted edge";
        return out;
      }
  long long inv = g.vertex(component[0]).stat.value_or(0);
  const Word& w0 = g.vertex(component[0]).word;
  bool inv1n = w0.front() > w0.back();
  for (int v : component) {
    if (g.vertex(v).stat.value_or(0) != inv) {
      out.detail = "inv_k not constant on component";
      return out;
    }
    const Word& w = g.vertex(v).word;
    if ((w.front() > w.back()) != inv1n) {
      out.detail = "(1,n) inversion not constant on component";
      return out;
    }
  }
  SchurPoly lhs = extract_schur(g.generating_function(component, false));
  QSymAggregate expect(n);
  for (const Ribbon& nu : all_ribbons(n)) {
    if (ribbon_maj(nu) != inv) continue;
    if ((nu.descents.count(n - 1) > 0) != inv1n) continue;
    expect += ribbon_schur_qsym(nu);
  }
  SchurPoly rhs = extract_schur(expect);
  if (lhs == rhs) {
    out.passed = true;
  } else {
    out.detail = "expansion mismatch: got " + lhs.to_string() + ", expected " +
                 rhs.to_string();
  }
  return out;
}

}  // namespace deg
