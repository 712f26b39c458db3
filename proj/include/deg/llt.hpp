#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "deg/graph.hpp"
#include "deg/qsym.hpp"
#include "deg/shapes.hpp"
#include "deg/transform.hpp"
#include "deg/words.hpp"

namespace deg {

// A word paired with a nondecreasing content vector.
struct RibbonWord {
  Word w;
  std::vector<int> c;
};

// Position pairs (i,j), 1-based, with w_i > w_j and c_j - c_i = k.
using KDescentSet = std::set<std::pair<int, int>>;

KDescentSet k_descents(const Word& w, const std::vector<int>& c, int k);
std::vector<std::pair<int, int>> k_inversion_pairs(const Word& w,
                                                   const std::vector<int>& c, int k);
int inv_k(const Word& w, const std::vector<int>& c, int k);
bool is_k_ribbon_word(const Word& w, const std::vector<int>& c, int k);

// T(x) > T(y) with 0 < c(y) - c(x) < k over cell pairs of a standard tuple.
int tuple_inv_k(const StandardTupleTableau& t);

RibbonWord tuple_to_word(const StandardTupleTableau& t);
// Inverse construction (corner alignment of adjacent diagonals). Each
// component is rebuilt at the canonical diagonal position, content
// clusters stacked bottom-up; requires Des_k(w,c) = D.
StandardTupleTableau word_to_tuple(const RibbonWord& rw, int k,
                                   const KDescentSet& D);

// D_i^{(k)}: d_i when dist(i-1,i,i+1) > k, else the twisted variant.
// Fixed point when i lies between i-1 and i+1.
std::pair<Word, EdgeKind> involution_D(const Word& w, const std::vector<int>& c,
                                       int k, int i);

// The graph G^{(k)}_{c,D} on the standard k-ribbon words of the shape,
// with inv_k payloads and edge kinds recorded. Type (n,n), k = shape.k().
ColoredGraph build_llt_graph(const TupleShape& shape, int size_bound = 16);

// sum over standard tuples of q^{inv_k} Q_sigma
QSymAggregate llt_polynomial(const TupleShape& shape, Exec exec = Exec::Parallel,
                             int size_bound = 16);

enum class LltMethod { Oracle, Transform };

struct LltSchurResult {
  SchurPoly poly;
  bool transform_fell_back = false;  // transform failed, oracle used
  TransformLog log;                  // transform events (empty for oracle)
};

LltSchurResult llt_schur(const TupleShape& shape, LltMethod method,
                         Exec exec = Exec::Parallel, int size_bound = 16);

// Full axiom check plus per-component constancy of inv_2 (k = 2 only).
AxiomReport check_domino_theorem(const TupleShape& shape, int size_bound = 16);

struct RibbonTheoremVerdict {
  bool passed = false;
  std::string detail;
};

// For a component all of whose edges used the twisted involution:
// its q=1 Schur expansion equals the sum of s_nu over ribbons nu of
// size n with maj(nu) = inv_k(C), with n-1 a descent iff (1,n) inverts.
RibbonTheoremVerdict check_ribbon_theorem(const ColoredGraph& g,
                                          const std::vector<int>& component);

}  // namespace deg
