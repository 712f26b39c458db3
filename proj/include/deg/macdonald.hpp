#pragma once

#include <set>
#include <vector>

#include "deg/llt.hpp"
#include "deg/partition.hpp"
#include "deg/qsym.hpp"
#include "deg/shapes.hpp"

namespace deg {

// A standard filling of a partition diagram: bijection cells -> 1..n.
// Cells are indexed in (row, col) order, row 1 first.
class Filling {
 public:
  Filling(Partition shape, std::vector<int> entries);

  const Partition& shape() const { return shape_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int entry(const Cell& c) const;
  int size() const { return static_cast<int>(entries_.size()); }

  // Cells above row 1 whose entry exceeds the one just south.
  std::vector<Cell> descents() const;
  // Rows north to south, west to east inside each row.
  Word row_reading_word() const;

 private:
  Partition shape_;
  std::vector<Cell> cells_;
  std::vector<int> entries_;  // aligned with cells_
};

int arm(const Partition& mu, const Cell& c);
int leg(const Partition& mu, const Cell& c);

int maj(const Filling& S);
// Attacking pairs (c,d): same row with c west of d, or c in the row
// immediately north with c strictly east; ordered with S(c) > S(d).
std::vector<std::pair<Cell, Cell>> inversion_pairs(const Filling& S);
int inv(const Filling& S);

// Haglund generating function: sum over standard fillings of
// q^{inv} t^{maj} Q_{sigma(row word)}.
QSymAggregate macdonald_qsym(const Partition& mu, Exec exec = Exec::Parallel,
                             int size_bound = 9);

using DescentSet = std::set<Cell>;  // cells with row >= 2

std::vector<DescentSet> all_descent_sets(const Partition& mu);

struct RibbonTuple {
  TupleShape shape;  // mu_1 ribbons with explicit offsets
  int arm_total = 0;  // a(D)
  int maj_value = 0;  // maj(D)
};

// Column-by-column ribbon construction: cell (i,j) goes south of
// (i,j+1) when (i,j+1) is a descent, east otherwise; each ribbon is
// translated so its southeastern cell has content 0.
RibbonTuple ribbons_of_descent_set(const Partition& mu, const DescentSet& D);

// The descent-set decomposition into LLT polynomials; must equal
// macdonald_qsym term by term.
QSymAggregate macdonald_via_llt(const Partition& mu, Exec exec = Exec::Parallel,
                                int size_bound = 9);

SchurPoly kostka_macdonald(const Partition& mu, Exec exec = Exec::Parallel,
                           int size_bound = 9);

// The tuple tableau obtained by reshaping a filling with Des(S) = D into
// its ribbon tuple (entries carried along).
StandardTupleTableau filling_to_ribbon_tuple(const Filling& S);

}  // namespace deg
