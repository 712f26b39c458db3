// Acceptance suite: one pass/fail line per criterion, with timings.
#include <chrono>
#include <cmath>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "deg/fixtures.hpp"
#include "deg/llt.hpp"
#include "deg/macdonald.hpp"
#include "deg/transform.hpp"
#include "oracles.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace deg;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  std::chrono::steady_clock::time_point start;
  bool ok = true;
  std::ostringstream why;

  explicit Criterion(std::string n)
      : name(std::move(n)), start(std::chrono::steady_clock::now()) {}
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      ok = false;
      why << what;
    }
  }
  ~Criterion() {
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "  (" << ms / 1000.0
              << " s)";
    if (!ok) {
      std::cout << "  -- " << why.str();
      ++failures;
    }
    std::cout << "\n" << std::flush;
  }
};

TupleShape singles(int n) {
  std::vector<SkewShape> comps(n, SkewShape(Partition({1}), Partition()));
  return TupleShape(comps);
}

// all k-tuples of straight shapes (empty components allowed, at least
// one cell) with total size in 1..max_total
std::vector<TupleShape> tuple_family(int max_k, int max_total) {
  std::vector<TupleShape> out;
  std::vector<std::vector<Partition>> by_size(max_total + 1);
  for (int s = 0; s <= max_total; ++s)
    by_size[s] = s == 0 ? std::vector<Partition>{Partition()} : partitions_of(s);
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> sizes(k, 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
      if (pos == k) {
        if (used == 0) return;
        std::vector<std::vector<Partition>::const_iterator> it(k);
        std::vector<SkewShape> comps(k);
        auto fill = [&](auto&& self2, int p) -> void {
          if (p == k) {
            out.emplace_back(comps);
            return;
          }
          for (const Partition& part : by_size[sizes[p]]) {
            comps[p] = part.empty() ? SkewShape() : SkewShape(part, Partition());
            self2(self2, p + 1);
          }
        };
        fill(fill, 0);
        return;
      }
      for (int s = 0; used + s <= max_total; ++s) {
        sizes[pos] = s;
        self(self, pos + 1, used + s);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

// deterministic congruential picks; no global randomness
struct Lcg {
  uint64_t state = 0x853c49e6748fea9bull;
  int next(int m) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % m);
  }
};

std::vector<SkewShape> skew_pool(int max_cells) {
  std::vector<SkewShape> pool;
  for (int outer_size = 1; outer_size <= max_cells + 3; ++outer_size)
    for (const Partition& outer : partitions_of(outer_size))
      for (int inner_size = 0; inner_size < outer_size; ++inner_size)
        for (const Partition& inner :
             inner_size == 0 ? std::vector<Partition>{Partition()}
                             : partitions_of(inner_size)) {
          if (!outer.contains(inner)) continue;
          if (outer_size - inner_size > max_cells) continue;
          pool.emplace_back(outer, inner);
        }
  return pool;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "acceptance suite (" << omp_get_max_threads() << " threads)\n";
#else
  std::cout << "acceptance suite (serial)\n";
#endif

  {  // 1 -------------------------------------------------------------
    Criterion c("1. statistics fidelity: inv_4 = 13, maj = 8, inv = 9, |Inv| = 17");
    TupleShape shape({SkewShape(Partition({3, 2}), Partition()),
                      SkewShape(Partition({2, 1}), Partition()), SkewShape(),
                      SkewShape(Partition({2, 2, 1}), Partition({1}))});
    StandardTupleTableau t(shape, Word{9, 7, 8, 3, 2, 11, 1, 5, 6, 12, 4, 10});
    c.require(tuple_inv_k(t) == 13, "inv_4 of the 4-tuple");
    Filling S(Partition({5, 4, 4, 1}),
              {8, 1, 13, 7, 12, 6, 3, 4, 10, 11, 14, 9, 2, 5});
    c.require(maj(S) == 8, "maj");
    c.require(static_cast<int>(inversion_pairs(S).size()) == 17, "|Inv|");
    c.require(inv(S) == 9, "inv");
  }

  {  // 2 -------------------------------------------------------------
    Criterion c("2. LLT expansion of ((2),(1,1)), k=2, both methods");
    TupleShape shape({SkewShape(Partition({2}), Partition()),
                      SkewShape(Partition({1, 1}), Partition())});
    SchurPoly expect(4);
    expect.add(Partition({3, 1}), Poly::monomial(1, 1));
    expect.add(Partition({2, 1, 1}), Poly::monomial(1, 2));
    auto oracle = llt_schur(shape, LltMethod::Oracle);
    auto trans = llt_schur(shape, LltMethod::Transform);
    c.require(oracle.poly == expect, "oracle expansion");
    c.require(!trans.transform_fell_back, "transform completed");
    c.require(trans.poly == expect, "transform expansion");
  }

  {  // 3 -------------------------------------------------------------
    Criterion c("3. standard graph suite, all |lambda| <= 7");
    std::vector<Partition> all;
    for (int n = 1; n <= 7; ++n)
      for (const Partition& p : partitions_of(n)) all.push_back(p);
    int m = static_cast<int>(all.size());
    std::vector<std::string> errs(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int j = 0; j < m; ++j) {
      const Partition& lambda = all[j];
      std::ostringstream err;
      ColoredGraph g = build_standard_deg(lambda);
      if (g.vertex_count() != hook_length_count(lambda)) err << "|SYT| mismatch; ";
      if (g.components(g.all_colors()).size() != 1) err << "not connected; ";
      AxiomReport rep = check_axioms(g);
      if (!rep.is_deg()) err << "axioms 1-6 fail; ";
      if (!rep.is_d_graph()) err << "4'/LSP fail; ";
      SchurPoly p = extract_schur(g.generating_function({}, false));
      if (!(p.terms().size() == 1 && p.coeff(lambda) == Poly(1)))
        err << "aggregate is not s_lambda; ";
      errs[j] = err.str();
    }
    for (int j = 0; j < m; ++j)
      c.require(errs[j].empty(), all[j].to_string() + ": " + errs[j]);
  }

  {  // 4 -------------------------------------------------------------
    Criterion c("4. domino theorem, pairs of total size <= 8");
    std::vector<TupleShape> cases;
    for (int a = 1; a <= 7; ++a)
      for (const Partition& pa : partitions_of(a))
        for (int b = 1; a + b <= 8; ++b)
          for (const Partition& pb : partitions_of(b))
            cases.push_back(TupleShape(
                {SkewShape(pa, Partition()), SkewShape(pb, Partition())}));
    // 50 deterministic skew pairs
    auto pool = skew_pool(7);
    Lcg rng;
    int picked = 0;
    while (picked < 50) {
      const SkewShape& a = pool[rng.next(static_cast<int>(pool.size()))];
      const SkewShape& b = pool[rng.next(static_cast<int>(pool.size()))];
      if (a.size() + b.size() > 8) continue;
      cases.push_back(TupleShape({a, b}));
      ++picked;
    }
    int m = static_cast<int>(cases.size());
    std::vector<std::string> errs(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int j = 0; j < m; ++j) {
      AxiomReport rep = check_domino_theorem(cases[j]);
      if (!rep.is_deg() || !rep.holds("inv_constant")) {
        std::ostringstream err;
        err << cases[j].to_string() << ": ";
        for (const auto& [k, v] : rep.verdicts)
          if (!v.holds) err << k << " fails; ";
        errs[j] = err.str();
      }
    }
    for (int j = 0; j < m; ++j) c.require(errs[j].empty(), errs[j]);
    // the appendix component is the standard graph of (4,2)
    TupleShape dom({SkewShape(Partition({3}), Partition()),
                    SkewShape(Partition({2, 1}), Partition())});
    ColoredGraph g = build_llt_graph(dom);
    int probe = g.find_vertex_by_word({3, 4, 1, 5, 2, 6});
    c.require(probe >= 0, "figure vertex present");
    auto comp = g.component_of(probe, g.all_colors());
    auto shape = component_shape(g, comp);
    c.require(shape.has_value() && *shape == Partition({4, 2}),
              "domino component is G_{(4,2)}");
  }

  auto family = tuple_family(3, 6);

  {  // 5 -------------------------------------------------------------
    Criterion c("5. D-graph suite: size <= 6, k <= 3 pass 1,2,3,5,4',LSP");
    int m = static_cast<int>(family.size());
    std::vector<std::string> errs(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int j = 0; j < m; ++j) {
      ColoredGraph g = build_llt_graph(family[j]);
      AxiomReport rep = check_axioms(g);
      if (!rep.is_d_graph()) {
        std::ostringstream err;
        err << family[j].to_string() << ": ";
        for (const char* key : {"1", "2", "3", "5", "4'a", "4'b", "4'c", "LSP"})
          if (!rep.holds(key)) err << key << " fails; ";
        errs[j] = err.str();
      }
    }
    for (int j = 0; j < m; ++j) c.require(errs[j].empty(), errs[j]);
    c.require(m > 500, "family enumerates hundreds of shapes");
  }

  {  // 6 -------------------------------------------------------------
    Criterion c("6. transform fixtures: box and frog components");
    std::vector<SkewShape> sing(5, SkewShape(Partition({1}), Partition()));
    ColoredGraph g = build_llt_graph(TupleShape(sing));
    ColoredGraph box, frog;
    bool found_box = false, found_frog = false;
    for (const auto& comp : g.components(g.all_colors())) {
      SchurPoly p = extract_schur(g.generating_function(comp, false));
      if (p.to_string() == "s[3,2] + s[3,1,1] + s[2,2,1]" && !found_box) {
        box = g.induced(comp);
        found_box = true;
      }
      if (p.to_string() == "s[4,1] + s[3,2] + s[3,1,1]" && !found_frog) {
        frog = g.induced(comp);
        found_frog = true;
      }
    }
    c.require(found_box && found_frog, "locating the components");
    if (found_box && found_frog) {
      auto run = [&](const ColoredGraph& in, std::multiset<std::string> expect,
                     std::set<std::pair<std::string, int>> need,
                     const std::string& tag) {
        TransformResult res = transform_to_deg(in);
        std::multiset<std::string> shapes;
        for (const auto& comp : res.graph.components(res.graph.all_colors())) {
          auto s = component_shape(res.graph, comp);
          if (s.has_value()) shapes.insert(s->to_string());
        }
        c.require(shapes == expect, tag + ": component shapes");
        std::set<std::pair<std::string, int>> kinds;
        for (const auto& ev : res.log) kinds.insert({ev.map, ev.color});
        for (const auto& k : need)
          c.require(kinds.count(k) == 1,
                    tag + ": log needs " + k.first + "_" + std::to_string(k.second));
      };
      run(box, {"3,2", "3,1,1", "2,2,1"}, {{"phi", 3}, {"phi", 4}}, "box");
      run(frog, {"4,1", "3,2", "3,1,1"}, {{"phi", 3}, {"phi", 4}, {"psi", 4}},
          "frog");
    }
  }

  {  // 7 -------------------------------------------------------------
    Criterion c("7. oracle/transform agreement: size <= 6, k <= 3");
    int m = static_cast<int>(family.size());
    std::vector<std::string> errs(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int j = 0; j < m; ++j) {
      auto oracle = llt_schur(family[j], LltMethod::Oracle, Exec::Serial);
      auto trans = llt_schur(family[j], LltMethod::Transform, Exec::Serial);
      std::ostringstream err;
      if (trans.transform_fell_back) err << "transform fell back; ";
      if (!(oracle.poly == trans.poly)) err << "disagreement; ";
      if (!oracle.poly.nonnegative()) err << "negative coefficient; ";
      for (const auto& [lambda, poly] : oracle.poly.terms())
        for (const auto& [exps, coef] : poly.terms())
          if (exps.second != 0) err << "t appeared in a q-polynomial; ";
      if (!err.str().empty()) errs[j] = family[j].to_string() + ": " + err.str();
    }
    for (int j = 0; j < m; ++j) c.require(errs[j].empty(), errs[j]);
  }

  {  // 8 -------------------------------------------------------------
    Criterion c("8. Haglund consistency, |mu| <= 5");
    for (int n = 1; n <= 5; ++n)
      for (const Partition& mu : partitions_of(n)) {
        QSymAggregate a = macdonald_qsym(mu);
        QSymAggregate b = macdonald_via_llt(mu);
        c.require(a == b, mu.to_string() + ": qsym != via_llt");
        SchurPoly table = extract_schur(a);
        c.require(table.nonnegative(), mu.to_string() + ": not in N[q,t]");
        for (const auto& [lambda, coeff] : table.terms())
          c.require(coeff.eval_at_one() == hook_length_count(lambda),
                    mu.to_string() + ": K(1,1) != |SYT|");
      }
  }

  {  // 9 -------------------------------------------------------------
    Criterion c("9. q=1 product law, size <= 6");
    int m = static_cast<int>(family.size());
    std::vector<std::string> errs(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int j = 0; j < m; ++j) {
      SchurPoly got =
          extract_schur(llt_polynomial(family[j], Exec::Serial).q_specialized_to_one());
      SchurPoly expect = oracles::product_schur_expansion(family[j]);
      if (!(got == expect)) errs[j] = family[j].to_string() + ": mismatch";
    }
    for (int j = 0; j < m; ++j) c.require(errs[j].empty(), errs[j]);
  }

  {  // 10 ------------------------------------------------------------
    Criterion c("10. k=n ribbon theorem, n <= 6");
    for (int n = 2; n <= 6; ++n) {
      ColoredGraph g = build_llt_graph(singles(n));
      for (const auto& comp : g.components(g.all_colors())) {
        auto verdict = check_ribbon_theorem(g, comp);
        c.require(verdict.passed, "n=" + std::to_string(n) + ": " + verdict.detail);
        if (!verdict.passed) break;
      }
    }
  }

  {  // 11 ------------------------------------------------------------
    Criterion c("11. negative fixtures: 4'b, 4'c, gregg");
    ColoredGraph c4c = fixtures::axiom4c_violator();
    AxiomReport rep_c = check_axioms(c4c);
    for (const char* key : {"1", "2", "3", "5", "4'a", "4'b", "LSP"})
      c.require(rep_c.holds(key), std::string("4'c fixture should satisfy ") + key);
    c.require(!rep_c.holds("4'c"), "4'c fixture must fail 4'c");

    ColoredGraph c4b = fixtures::axiom4b_violator();
    AxiomReport rep_b = check_axioms(c4b);
    for (const char* key : {"1", "2", "3", "5", "4'a", "4'c", "LSP"})
      c.require(rep_b.holds(key), std::string("4'b fixture should satisfy ") + key);
    c.require(!rep_b.holds("4'b"), "4'b fixture must fail 4'b");

    ColoredGraph gregg = fixtures::gregg_cover();
    AxiomReport rep_g = check_axioms(gregg);
    for (const char* key : {"1", "2", "3", "4", "5", "4'a", "4'b", "4'c", "LSP"})
      c.require(rep_g.holds(key), std::string("gregg should satisfy ") + key);
    c.require(!rep_g.holds("6"), "gregg must fail 6");
  }

  std::cout << (failures == 0 ? "all criteria passed\n"
                              : std::to_string(failures) + " criteria FAILED\n");
  return failures == 0 ? 0 : 1;
}
