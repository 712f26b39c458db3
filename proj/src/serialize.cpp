#include "deg/serialize.hpp"

#include <json.hpp>

#include <map>
#include <sstream>

namespace deg {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string graph_to_json(const ColoredGraph& g) {
  ordered j;
  j["n"] = g.n();
  j["N"] = g.N();
  ordered verts = ordered::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    ordered jv;
    jv["id"] = v;
    jv["sigma"] = g.vertex(v).sigma.to_string();
    if (!g.vertex(v).word.empty()) jv["word"] = g.vertex(v).word;
    if (g.vertex(v).stat.has_value()) jv["stat"] = *g.vertex(v).stat;
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  ordered edges = ordered::object();
  ordered twisted = ordered::object();
  bool any_twisted = false;
  for (int c = 2; c < g.n(); ++c) {
    if (g.edges(c).empty()) continue;
    ordered lst = ordered::array();
    ordered tw = ordered::array();
    for (const auto& e : g.edges(c)) {
      lst.push_back(ordered::array({e.a, e.b}));
      if (e.kind == EdgeKind::Twisted) {
        tw.push_back(ordered::array({e.a, e.b}));
        any_twisted = true;
      }
    }
    edges[std::to_string(c)] = std::move(lst);
    if (!tw.empty()) twisted[std::to_string(c)] = std::move(tw);
  }
  j["edges"] = std::move(edges);
  if (any_twisted) j["twisted"] = std::move(twisted);
  return j.dump(2) + "\n";
}

ColoredGraph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  ColoredGraph g(j.at("n").get<int>(), j.at("N").get<int>());
  for (const auto& jv : j.at("vertices")) {
    GraphVertex v;
    v.sigma = SignVec::from_string(jv.at("sigma").get<std::string>());
    if (jv.contains("word")) v.word = jv.at("word").get<Word>();
    if (jv.contains("stat")) v.stat = jv.at("stat").get<long long>();
    int id = g.add_vertex(std::move(v));
    if (id != jv.at("id").get<int>())
      throw std::invalid_argument("graph json: ids must be 0..V-1 in order");
  }
  std::map<int, std::set<std::pair<int, int>>> twisted;
  if (j.contains("twisted"))
    for (const auto& [key, lst] : j.at("twisted").items())
      for (const auto& e : lst)
        twisted[std::stoi(key)].insert({e.at(0).get<int>(), e.at(1).get<int>()});
  if (j.contains("edges"))
    for (const auto& [key, lst] : j.at("edges").items()) {
      int c = std::stoi(key);
      for (const auto& e : lst) {
        int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        EdgeKind kind = twisted[c].count({a, b}) || twisted[c].count({b, a})
                            ? EdgeKind::Twisted
                            : EdgeKind::Plain;
        g.add_edge(c, a, b, kind);
      }
    }
  return g;
}

std::string graph_to_dot(const ColoredGraph& g, bool show_words) {
  std::ostringstream os;
  os << "graph deg {\n  node [shape=box];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    os << "  v" << v << " [label=\"" << g.vertex(v).sigma.to_string();
    if (show_words && !g.vertex(v).word.empty())
      os << "\\n" << word_to_string(g.vertex(v).word);
    if (g.vertex(v).stat.has_value()) os << "\\ninv=" << *g.vertex(v).stat;
    os << "\"];\n";
  }
  // merge parallel edges into one labeled edge
  std::map<std::pair<int, int>, std::vector<std::string>> labels;
  for (int c = 2; c < g.n(); ++c)
    for (const auto& e : g.edges(c)) {
      std::string lab = std::to_string(c);
      if (e.kind == EdgeKind::Twisted) lab += "\xCC\x83";  // combining tilde
      labels[{e.a, e.b}].push_back(lab);
    }
  for (const auto& [pair, labs] : labels) {
    os << "  v" << pair.first << " -- v" << pair.second << " [label=\"";
    for (size_t i = 0; i < labs.size(); ++i) {
      if (i) os << ",";
      os << labs[i];
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string schur_to_json(const SchurPoly& p) {
  ordered j;
  j["degree"] = p.degree();
  ordered terms = ordered::array();
  for (const auto& [lambda, c] : p.terms()) {
    ordered t;
    t["partition"] = lambda.parts();
    ordered monomials = ordered::array();
    for (const auto& [exps, coef] : c.terms()) {
      ordered m;
      m["q"] = exps.first;
      m["t"] = exps.second;
      m["coeff"] = coef;
      monomials.push_back(std::move(m));
    }
    t["coeff"] = std::move(monomials);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

std::string log_to_json(const TransformLog& log) {
  ordered arr = ordered::array();
  for (const auto& ev : log) {
    ordered e;
    e["step"] = ev.step;
    e["map"] = ev.map;
    e["i"] = ev.color;
    e["anchor"] = ev.anchor;
    arr.push_back(std::move(e));
  }
  return arr.dump(2) + "\n";
}

TransformLog log_from_json(const std::string& text) {
  json arr = json::parse(text);
  TransformLog log;
  for (const auto& e : arr) {
    TransformEvent ev;
    ev.step = e.at("step").get<int>();
    ev.map = e.at("map").get<std::string>();
    ev.color = e.at("i").get<int>();
    ev.anchor = e.at("anchor").get<Word>();
    log.push_back(std::move(ev));
  }
  return log;
}

}  // namespace deg
