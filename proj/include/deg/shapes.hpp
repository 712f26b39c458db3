#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deg/partition.hpp"
#include "deg/words.hpp"

namespace deg {

// Execution policy for the data-parallel kernels. Serial is the
// reference implementation; both must produce identical results.
enum class Exec { Serial, Parallel };

// Lattice cell in (col,row) coordinates, French convention: row 1 at the
// bottom, content = col - row.
struct Cell {
  int col = 0;
  int row = 0;
  bool operator==(const Cell& o) const { return col == o.col && row == o.row; }
  bool operator<(const Cell& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

// A skew diagram in content-true coordinates: content(cell) = col - row
// directly. An input offset translates the diagram before contents are
// read off; shapes are then stored at the canonical position touching
// the axes, reached by the (content-preserving) diagonal slide. Two
// shapes are equal iff they occupy the same cells, so translates that
// change contents stay distinct.
class SkewShape {
 public:
  SkewShape() = default;  // empty shape
  SkewShape(const Partition& outer, const Partition& inner,
            std::pair<int, int> offset = {0, 0});

  // From cell positions carrying the intended contents.
  static SkewShape from_absolute_cells(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }  // sorted
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  bool has_cell(const Cell& c) const;

  int content(const Cell& c) const;  // col - row; c must be a cell

  Partition outer() const { return outer_; }
  Partition inner() const { return inner_; }

  // True iff the cells form a connected rim hook (no 2x2 block).
  bool is_ribbon() const;

  std::string to_string() const;  // "outer/inner" of the canonical position

  bool operator==(const SkewShape& o) const { return cells_ == o.cells_; }
  bool operator!=(const SkewShape& o) const { return !(*this == o); }

 private:
  void derive_partitions();
  Partition outer_, inner_;
  std::vector<Cell> cells_;  // canonical position, sorted
};

// Ordered k-tuple of skew shapes; component index feeds shifted content.
class TupleShape {
 public:
  TupleShape() = default;
  explicit TupleShape(std::vector<SkewShape> components);

  const std::vector<SkewShape>& components() const { return comps_; }
  int k() const { return static_cast<int>(comps_.size()); }
  int total_size() const;

  // k*content(cell) + component_index
  int shifted_content(int comp, const Cell& c) const;

  std::string to_string() const;  // ';'-joined component literals

  bool operator==(const TupleShape& o) const { return comps_ == o.comps_; }

 private:
  std::vector<SkewShape> comps_;
};

// Cell of a tuple identified by component index plus local cell.
struct TupleCell {
  int comp = 0;
  Cell cell;
  bool operator==(const TupleCell& o) const { return comp == o.comp && cell == o.cell; }
};

// A standard filling of a tuple shape: bijection cells -> 1..n, rows
// weakly and columns strictly increasing within each component. The
// shape and cell order are shared between tableaux, so copies are cheap.
class StandardTupleTableau {
 public:
  StandardTupleTableau(TupleShape shape, std::vector<int> entries);

  const TupleShape& shape() const { return *shape_; }
  // Entry of the j-th cell in the canonical cell order (see cell_order()).
  int entry(int idx) const { return entries_[idx]; }
  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }

  // Cells listed in content reading order: increasing shifted content,
  // then increasing row (southwest to northeast along each diagonal).
  const std::vector<TupleCell>& cell_order() const { return *order_; }

  Word content_reading_word() const { return entries_; }
  SignVec signature() const { return descent_signature(entries_); }

  int entry_at(int comp, const Cell& c) const;

  bool operator==(const StandardTupleTableau& o) const {
    return *shape_ == *o.shape_ && entries_ == o.entries_;
  }

 private:
  struct Trusted {};
  StandardTupleTableau(std::shared_ptr<const TupleShape> shape,
                       std::shared_ptr<const std::vector<TupleCell>> order,
                       std::vector<int> entries, Trusted);
  friend std::vector<StandardTupleTableau> enumerate_standard(const TupleShape&,
                                                              int, Exec);
  std::shared_ptr<const TupleShape> shape_;
  std::shared_ptr<const std::vector<TupleCell>> order_;  // reading order
  std::vector<int> entries_;                             // aligned with order_
};

// Content reading order of a tuple shape's cells.
std::vector<TupleCell> content_reading_order(const TupleShape& shape);

// Exhaustive enumeration of standard tuple tableaux, sorted
// lexicographically by content reading word. The parallel kernel
// branches on the cell receiving entry 1; the result is identical.
std::vector<StandardTupleTableau> enumerate_standard(const TupleShape& shape,
                                                     int size_bound = 16,
                                                     Exec exec = Exec::Parallel);

// Single straight shape helpers (k = 1, zero offset).
TupleShape single_shape(const Partition& lambda);
std::vector<StandardTupleTableau> enumerate_syt(const Partition& lambda);

// Row reading word (north row first, west to east) and column reading word
// (west column first, north to south) of a single-shape standard tableau.
Word row_reading_word(const StandardTupleTableau& t);
Word column_reading_word(const StandardTupleTableau& t);

// Census of semi-standard fillings of a tuple shape with entries in
// 1..max_entry: weight vector (multiplicity of each letter) -> count.
std::map<std::vector<int>, long long> ssyt_tuple_weight_census(
    const TupleShape& shape, int max_entry);

// Shape literal grammar: ';'-separated "outer/inner@dc,dr" items.
TupleShape parse_tuple_shape(const std::string& s);

}  // namespace deg
