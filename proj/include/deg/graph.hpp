#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deg/partition.hpp"
#include "deg/qsym.hpp"
#include "deg/shapes.hpp"
#include "deg/words.hpp"

namespace deg {

// How an LLT edge was produced; Plain is Haiman's d_i, Twisted the
// content-local variant.
enum class EdgeKind : uint8_t { Plain, Twisted };

struct GraphEdge {
  int a = 0, b = 0;                       // a < b, vertex indices
  EdgeKind kind = EdgeKind::Plain;
  bool operator==(const GraphEdge& o) const { return a == o.a && b == o.b; }
  bool operator<(const GraphEdge& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

struct GraphVertex {
  SignVec sigma;
  Word word;                              // payload; may be empty
  std::optional<long long> stat;          // payload statistic (inv_k)
};

// Signed, colored graph of type (n, N): signatures of length N-1, edge
// sets E_i for 1 < i < n.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(int n, int N);

  int n() const { return n_; }
  int N() const { return N_; }
  int vertex_count() const { return static_cast<int>(verts_.size()); }

  int add_vertex(GraphVertex v);
  const GraphVertex& vertex(int id) const { return verts_[id]; }
  GraphVertex& vertex(int id) { return verts_[id]; }

  void add_edge(int color, int a, int b, EdgeKind kind = EdgeKind::Plain);
  void clear_color(int color);
  const std::vector<GraphEdge>& edges(int color) const;
  // Replaces the whole edge set of one color.
  void set_edges(int color, std::vector<GraphEdge> edges);

  // Unique neighbor under E_i, or -1; throws if the vertex has several
  // (axiom 1 violated).
  int neighbor(int v, int color) const;
  bool has_neighbor(int v, int color) const { return neighbor(v, color) >= 0; }
  // sigma_{i-1} = -sigma_i, i.e. an i-edge is admissible at v (defined
  // whenever 1 < i < N).
  bool admits_neighbor(int v, int color) const;

  // BFS component of v under the given colors (sorted vertex ids).
  std::vector<int> component_of(int v, const std::vector<int>& colors) const;
  // All components under the given colors, each sorted, ordered by least
  // vertex id.
  std::vector<std::vector<int>> components(const std::vector<int>& colors) const;
  std::vector<int> all_colors() const;    // 2..n-1

  // (m,M)-restriction: truncate signatures, keep E_2..E_{m-1}.
  ColoredGraph restricted(int m, int M) const;
  // The induced subgraph on a vertex set (all colors kept); vertex ids
  // are re-numbered in the order given.
  ColoredGraph induced(const std::vector<int>& vertex_set) const;

  // Generating function sum q^{stat(v)} Q_{sigma(v)} over the given
  // vertices (whole graph when empty). use_stat=false forces exponent 0.
  QSymAggregate generating_function(const std::vector<int>& vertex_set,
                                    bool use_stat = true) const;

  int find_vertex_by_word(const Word& w) const;  // -1 when absent

  bool same_structure(const ColoredGraph& o) const;  // ids, sigmas, edges

 private:
  void check_color(int color) const;
  void invalidate(int color);
  int n_ = 2, N_ = 2;
  std::vector<GraphVertex> verts_;
  std::vector<std::vector<GraphEdge>> edges_;          // per color
  mutable std::vector<std::vector<std::vector<int>>> nbrs_;  // cache
  mutable std::vector<bool> nbrs_valid_;
};

struct AxiomVerdict {
  bool holds = true;
  std::string witness;  // human-readable description of one violation
};

// Verdicts for axioms 1,2,3,4,5,6, 4'a,4'b,4'c and local Schur
// positivity. Witnesses re-check as genuine violations.
struct AxiomReport {
  std::map<std::string, AxiomVerdict> verdicts;
  std::vector<std::string> notes;  // skipped boundary clauses etc.

  bool holds(const std::string& key) const;
  bool all_of(const std::vector<std::string>& keys) const;
  bool is_deg() const {  // axioms 1-6
    return all_of({"1", "2", "3", "4", "5", "6"});
  }
  bool is_d_graph() const {  // axioms 1,2,3,5 + 4' + LSP
    return all_of({"1", "2", "3", "5", "4'a", "4'b", "4'c", "LSP"});
  }
  std::string summary() const;
};

AxiomReport check_axioms(const ColoredGraph& g);

// Standard dual equivalence graph on SYT(lambda); with an augmenting
// tableau A (entries n+1..N in the cells of A's shape) the vertex set is
// ASYT(lambda,A) and the type is (n, N).
struct AugmentTableau {
  SkewShape shape;           // cells of rho/lambda
  std::vector<int> entries;  // aligned with shape.cells(), values n+1..N
};

ColoredGraph build_standard_deg(const Partition& lambda);
ColoredGraph build_standard_deg_augmented(const Partition& lambda,
                                          const AugmentTableau& A);

// Shape identification of a connected component: the dominance-maximal
// partition-shaped signature, validated by isomorphism against
// G_lambda. nullopt when no unique candidate or the isomorphism fails.
std::optional<Partition> component_shape(const ColoredGraph& g,
                                         const std::vector<int>& component);

// Sign-preserving color-adjacency-preserving bijection, or nullopt.
// Both graphs must satisfy axiom 1. map[v in g] = vertex in h.
std::optional<std::vector<int>> find_isomorphism(const ColoredGraph& g,
                                                 const ColoredGraph& h);

// i-package of v: component under E_2..E_{i-3} and E_{i+3}..E_{n-1},
// with signature positions 1..i-3 and i+2..N-1 retained.
struct Package {
  std::vector<int> vertices;       // sorted
  std::vector<int> colors;         // retained colors
  std::vector<int> sigma_positions;  // retained signature positions
};
Package i_package(const ColoredGraph& g, int v, int i);

enum class IType { W, A, B, C };
std::string itype_name(IType t);

// i-type classification per the W/A/B/C case split; requires axioms
// 1,2,3,5 and 4 <= i <= min(n, N-1).
IType i_type(const ColoredGraph& g, int v, int i);

}  // namespace deg
