#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "deg/fixtures.hpp"
#include "deg/llt.hpp"
#include "deg/transform.hpp"

using namespace deg;

namespace {

// components of the k=5 singleton graph keyed by their Schur expansion
std::map<std::string, std::vector<int>> five_singleton_components(
    const ColoredGraph& g) {
  std::map<std::string, std::vector<int>> out;
  for (const auto& comp : g.components(g.all_colors())) {
    SchurPoly p = extract_schur(g.generating_function(comp, false));
    out[p.to_string()] = comp;
  }
  return out;
}

ColoredGraph five_singleton_graph() {
  std::vector<SkewShape> singles(5, SkewShape(Partition({1}), Partition()));
  return build_llt_graph(TupleShape(singles));
}

}  // namespace

TEST_CASE("standard graphs have no witnesses and transform to themselves") {
  for (int n = 4; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      ColoredGraph g = build_standard_deg(lambda);
      for (int i = 3; i < n; ++i) {
        CHECK(witnesses_W(g, i).empty());
        CHECK(witnesses_X(g, i).empty());
      }
      TransformResult res = transform_to_deg(g);
      CHECK(res.log.empty());
      CHECK(res.graph.same_structure(g));
    }
}

TEST_CASE("box component: witnesses, transform, event log") {
  ColoredGraph g = five_singleton_graph();
  auto comps = five_singleton_components(g);
  // generating function s_{3,2} + s_{3,1,1} + s_{2,2,1}
  auto it = comps.find("s[3,2] + s[3,1,1] + s[2,2,1]");
  REQUIRE(it != comps.end());
  ColoredGraph box = g.induced(it->second);
  CHECK(box.vertex_count() == 16);

  AxiomReport rep = check_axioms(box);
  CHECK(rep.is_d_graph());
  CHECK(!rep.holds("4"));
  CHECK(!witnesses_W(box, 3).empty());

  TransformResult res = transform_to_deg(box);
  AxiomReport post = check_axioms(res.graph);
  CHECK(post.is_deg());
  std::multiset<std::string> shapes;
  for (const auto& comp : res.graph.components(res.graph.all_colors())) {
    auto s = component_shape(res.graph, comp);
    REQUIRE(s.has_value());
    shapes.insert(s->to_string());
  }
  CHECK(shapes == std::multiset<std::string>{"3,2", "3,1,1", "2,2,1"});
  std::set<std::pair<std::string, int>> kinds;
  for (const auto& ev : res.log) kinds.insert({ev.map, ev.color});
  CHECK(kinds.count({"phi", 3}) == 1);
  CHECK(kinds.count({"phi", 4}) == 1);
  // the generating function is conserved
  CHECK(res.graph.generating_function({}, false) ==
        box.generating_function({}, false));
  // replaying the log reproduces the output
  CHECK(replay_transform(box, res.log).same_structure(res.graph));
}

TEST_CASE("frog component requires psi_4 and splits correctly") {
  ColoredGraph g = five_singleton_graph();
  auto comps = five_singleton_components(g);
  auto it = comps.find("s[4,1] + s[3,2] + s[3,1,1]");
  REQUIRE(it != comps.end());
  ColoredGraph frog = g.induced(it->second);
  CHECK(frog.vertex_count() == 15);

  TransformResult res = transform_to_deg(frog);
  CHECK(check_axioms(res.graph).is_deg());
  std::multiset<std::string> shapes;
  for (const auto& comp : res.graph.components(res.graph.all_colors())) {
    auto s = component_shape(res.graph, comp);
    REQUIRE(s.has_value());
    shapes.insert(s->to_string());
  }
  CHECK(shapes == std::multiset<std::string>{"4,1", "3,2", "3,1,1"});
  std::set<std::pair<std::string, int>> kinds;
  for (const auto& ev : res.log) kinds.insert({ev.map, ev.color});
  CHECK(kinds.count({"phi", 3}) == 1);
  CHECK(kinds.count({"phi", 4}) == 1);
  CHECK(kinds.count({"psi", 4}) == 1);
}

TEST_CASE("gregg cover fails exactly axiom 6") {
  ColoredGraph g = fixtures::gregg_cover();
  CHECK(g.vertex_count() == 32);
  AxiomReport rep = check_axioms(g);
  for (const char* key : {"1", "2", "3", "4", "5", "4'a", "4'b", "4'c", "LSP"})
    CHECK(rep.holds(key));
  CHECK(!rep.holds("6"));
  // restricted to level 5: six components, two per shape
  ColoredGraph r = g.restricted(5, 6);
  auto comps = r.components(r.all_colors());
  CHECK(comps.size() == 6);
  std::multiset<std::string> shapes;
  for (const auto& comp : comps) {
    auto s = component_shape(r.restricted(5, 5), comp);
    REQUIRE(s.has_value());
    shapes.insert(s->to_string());
  }
  CHECK(shapes ==
        std::multiset<std::string>{"3,2", "3,2", "2,2,1", "2,2,1", "3,1,1", "3,1,1"});
  // theta splits the cover into two standard components
  TransformResult res = transform_to_deg(g);
  auto tcomps = res.graph.components(res.graph.all_colors());
  REQUIRE(tcomps.size() == 2);
  for (const auto& comp : tcomps) {
    auto s = component_shape(res.graph, comp);
    REQUIRE(s.has_value());
    CHECK(*s == Partition({3, 2, 1}));
  }
  bool used_theta = false;
  for (const auto& ev : res.log) used_theta |= (ev.map == "theta");
  CHECK(used_theta);
}

TEST_CASE("appendix fixtures fail exactly their stated axiom") {
  ColoredGraph c4c = fixtures::axiom4c_violator();
  CHECK(c4c.vertex_count() == 35);
  AxiomReport rep_c = check_axioms(c4c);
  for (const char* key : {"1", "2", "3", "5", "4'a", "4'b", "LSP"})
    CHECK(rep_c.holds(key));
  CHECK(!rep_c.holds("4'c"));

  ColoredGraph c4b = fixtures::axiom4b_violator();
  CHECK(c4b.vertex_count() == 36);
  AxiomReport rep_b = check_axioms(c4b);
  for (const char* key : {"1", "2", "3", "5", "4'a", "4'c", "LSP"})
    CHECK(rep_b.holds(key));
  CHECK(!rep_b.holds("4'b"));
}

TEST_CASE("oracle agrees with transform on a skew domino family") {
  TupleShape shape({SkewShape(Partition({2, 2}), Partition({1})),
                    SkewShape(Partition({2}), Partition())});
  auto oracle = llt_schur(shape, LltMethod::Oracle);
  auto trans = llt_schur(shape, LltMethod::Transform);
  CHECK(!trans.transform_fell_back);
  CHECK(oracle.poly == trans.poly);
}
