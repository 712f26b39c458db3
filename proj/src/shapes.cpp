#include "deg/shapes.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace deg {

SkewShape::SkewShape(const Partition& outer, const Partition& inner,
                     std::pair<int, int> offset) {
  if (!outer.contains(inner))
    throw std::invalid_argument("skew shape: inner not contained in outer");
  std::vector<Cell> cells;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c)
      cells.push_back({c + offset.first, r + offset.second});
  *this = from_absolute_cells(std::move(cells));
}

SkewShape SkewShape::from_absolute_cells(std::vector<Cell> cells) {
  SkewShape s;
  if (cells.empty()) return s;
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  int mincol = cells[0].col, minrow = cells[0].row;
  for (const Cell& c : cells) {
    mincol = std::min(mincol, c.col);
    minrow = std::min(minrow, c.row);
  }
  // diagonal slide to the touching position; contents are unchanged
  int t = std::max(1 - mincol, 1 - minrow);
  for (Cell& c : cells) {
    c.col += t;
    c.row += t;
  }
  s.cells_ = std::move(cells);
  s.derive_partitions();
  return s;
}

void SkewShape::derive_partitions() {
  // recover the outer/inner pair; reject non-skew cell sets
  int maxrow = cells_.back().row;
  std::vector<int> lo(maxrow + 1, 0), hi(maxrow + 1, 0);  // per-row col range
  std::vector<int> count(maxrow + 1, 0);
  for (const Cell& c : cells_) {
    if (count[c.row] == 0) { lo[c.row] = hi[c.row] = c.col; }
    lo[c.row] = std::min(lo[c.row], c.col);
    hi[c.row] = std::max(hi[c.row], c.col);
    ++count[c.row];
  }
  std::vector<int> out(maxrow, 0), in(maxrow, 0);
  for (int r = maxrow; r >= 1; --r) {
    if (count[r] > 0) {
      if (hi[r] - lo[r] + 1 != count[r])
        throw std::invalid_argument("cells do not form a skew diagram (row gap)");
      out[r - 1] = hi[r];
      in[r - 1] = lo[r] - 1;
    } else {
      int v = (r == maxrow) ? 0 : out[r];  // copy the row above
      out[r - 1] = in[r - 1] = v;
    }
  }
  for (int r = 1; r < maxrow; ++r) {
    if (out[r - 1] < out[r] || in[r - 1] < in[r])
      throw std::invalid_argument("cells do not form a skew diagram");
  }
  outer_ = Partition(out);
  inner_ = Partition(in);
}

bool SkewShape::has_cell(const Cell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

int SkewShape::content(const Cell& c) const {
  if (!has_cell(c)) throw std::invalid_argument("content: cell not in shape");
  return c.col - c.row;
}

bool SkewShape::is_ribbon() const {
  if (cells_.empty()) return false;
  std::set<int> contents;
  int lo = 0, hi = 0;
  bool first = true;
  for (const Cell& c : cells_) {
    int ct = c.col - c.row;  // offset shifts all contents equally
    if (!contents.insert(ct).second) return false;  // 2x2 block or repeat
    if (first) { lo = hi = ct; first = false; }
    lo = std::min(lo, ct);
    hi = std::max(hi, ct);
  }
  if (hi - lo + 1 != size()) return false;
  // consecutive contents must be edge-adjacent
  std::map<int, Cell> by_content;
  for (const Cell& c : cells_) by_content[c.col - c.row] = c;
  for (int ct = lo; ct < hi; ++ct) {
    const Cell& a = by_content[ct];
    const Cell& b = by_content[ct + 1];
    bool east = (b.col == a.col + 1 && b.row == a.row);
    bool south = (b.col == a.col && b.row == a.row - 1);
    if (!east && !south) return false;
  }
  return true;
}

std::string SkewShape::to_string() const {
  std::string s = outer_.to_string();
  if (s.empty()) s = "0";
  if (!inner_.empty()) s += "/" + inner_.to_string();
  return s;
}

TupleShape::TupleShape(std::vector<SkewShape> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("tuple shape needs k >= 1");
}

int TupleShape::total_size() const {
  int n = 0;
  for (const auto& c : comps_) n += c.size();
  return n;
}

int TupleShape::shifted_content(int comp, const Cell& c) const {
  return k() * comps_[comp].content(c) + comp;
}

std::string TupleShape::to_string() const {
  std::string s;
  for (int i = 0; i < k(); ++i) {
    if (i) s += ";";
    s += comps_[i].to_string();
  }
  return s;
}

std::vector<TupleCell> content_reading_order(const TupleShape& shape) {
  std::vector<std::pair<std::pair<int, int>, TupleCell>> keyed;
  for (int i = 0; i < shape.k(); ++i)
    for (const Cell& c : shape.components()[i].cells())
      keyed.push_back({{shape.shifted_content(i, c), c.row}, {i, c}});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<TupleCell> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(kv.second);
  return out;
}

StandardTupleTableau::StandardTupleTableau(TupleShape shape,
                                           std::vector<int> entries)
    : shape_(std::make_shared<const TupleShape>(std::move(shape))),
      order_(std::make_shared<const std::vector<TupleCell>>(
          content_reading_order(*shape_))),
      entries_(std::move(entries)) {
  int n = shape_->total_size();
  if (static_cast<int>(entries_.size()) != n)
    throw std::invalid_argument("tableau entry count mismatch");
  std::vector<char> seen(n + 1, 0);
  for (int e : entries_) {
    if (e < 1 || e > n || seen[e]) throw std::invalid_argument("entries not a bijection");
    seen[e] = 1;
  }
  // semistandard along rows and columns of each component
  for (int i = 0; i < shape_->k(); ++i) {
    const SkewShape& s = shape_->components()[i];
    for (const Cell& c : s.cells()) {
      Cell west{c.col - 1, c.row}, south{c.col, c.row - 1};
      if (s.has_cell(west) && entry_at(i, west) > entry_at(i, c))
        throw std::invalid_argument("rows must weakly increase");
      if (s.has_cell(south) && entry_at(i, south) >= entry_at(i, c))
        throw std::invalid_argument("columns must strictly increase");
    }
  }
}

StandardTupleTableau::StandardTupleTableau(
    std::shared_ptr<const TupleShape> shape,
    std::shared_ptr<const std::vector<TupleCell>> order, std::vector<int> entries,
    Trusted)
    : shape_(std::move(shape)), order_(std::move(order)), entries_(std::move(entries)) {}

int StandardTupleTableau::entry_at(int comp, const Cell& c) const {
  for (size_t j = 0; j < order_->size(); ++j)
    if ((*order_)[j].comp == comp && (*order_)[j].cell == c) return entries_[j];
  throw std::invalid_argument("entry_at: cell not in shape");
}

std::vector<StandardTupleTableau> enumerate_standard(const TupleShape& shape,
                                                     int size_bound, Exec exec) {
  int n = shape.total_size();
  if (n > size_bound)
    throw std::length_error("enumerate_standard: size bound exceeded");
  auto shared_shape = std::make_shared<const TupleShape>(shape);
  auto shared_order = std::make_shared<const std::vector<TupleCell>>(
      content_reading_order(shape));
  const std::vector<TupleCell>& order = *shared_order;
  // precedence: a cell waits for its west and south neighbors
  int m = static_cast<int>(order.size());
  auto index_of = [&](int comp, const Cell& c) -> int {
    for (int j = 0; j < m; ++j)
      if (order[j].comp == comp && order[j].cell == c) return j;
    return -1;
  };
  std::vector<std::vector<int>> preds(m);
  for (int j = 0; j < m; ++j) {
    const auto& tc = order[j];
    for (Cell nb : {Cell{tc.cell.col - 1, tc.cell.row}, Cell{tc.cell.col, tc.cell.row - 1}}) {
      int p = index_of(tc.comp, nb);
      if (p >= 0) preds[j].push_back(p);
    }
  }
  auto fill_from = [&](std::vector<int>& entries, int first,
                       std::vector<StandardTupleTableau>& sink) {
    entries.assign(m, 0);
    entries[first] = 1;
    auto rec = [&](auto&& self, int next_value) -> void {
      if (next_value > m) {
        sink.push_back(StandardTupleTableau(shared_shape, shared_order, entries,
                                            StandardTupleTableau::Trusted{}));
        return;
      }
      for (int j = 0; j < m; ++j) {
        if (entries[j] != 0) continue;
        bool ready = true;
        for (int p : preds[j])
          if (entries[p] == 0) { ready = false; break; }
        if (!ready) continue;
        entries[j] = next_value;
        self(self, next_value + 1);
        entries[j] = 0;
      }
    };
    rec(rec, 2);
  };
  // branch on the cell receiving entry 1: any source of the precedence order
  std::vector<int> sources;
  for (int j = 0; j < m; ++j)
    if (preds[j].empty()) sources.push_back(j);
  std::vector<StandardTupleTableau> out;
  if (m == 0) {
    out.emplace_back(shape, std::vector<int>{});
    return out;
  }
  int nsrc = static_cast<int>(sources.size());
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
    std::vector<std::vector<StandardTupleTableau>> partial(nsrc);
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < nsrc; ++s) {
      std::vector<int> entries;
      fill_from(entries, sources[s], partial[s]);
    }
    for (auto& p : partial)
      for (auto& t : p) out.push_back(std::move(t));
  } else
#else
  (void)exec;
#endif
  {
    std::vector<int> entries;
    for (int s = 0; s < nsrc; ++s) fill_from(entries, sources[s], out);
  }
  std::sort(out.begin(), out.end(),
            [](const StandardTupleTableau& a, const StandardTupleTableau& b) {
              return a.entries() < b.entries();
            });
  return out;
}

TupleShape single_shape(const Partition& lambda) {
  return TupleShape({SkewShape(lambda, Partition())});
}

std::vector<StandardTupleTableau> enumerate_syt(const Partition& lambda) {
  return enumerate_standard(single_shape(lambda));
}

Word row_reading_word(const StandardTupleTableau& t) {
  if (t.shape().k() != 1)
    throw std::invalid_argument("row_reading_word: single shapes only");
  const SkewShape& s = t.shape().components()[0];
  std::vector<Cell> cells = s.cells();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row > b.row : a.col < b.col;
  });
  Word w;
  for (const Cell& c : cells) w.push_back(t.entry_at(0, c));
  return w;
}

Word column_reading_word(const StandardTupleTableau& t) {
  if (t.shape().k() != 1)
    throw std::invalid_argument("column_reading_word: single shapes only");
  const SkewShape& s = t.shape().components()[0];
  std::vector<Cell> cells = s.cells();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.col != b.col ? a.col < b.col : a.row > b.row;
  });
  Word w;
  for (const Cell& c : cells) w.push_back(t.entry_at(0, c));
  return w;
}

namespace {

// Per-component SSYT weight census by backtracking over cells in
// (row, col) order; entry must be >= west and > south.
void component_weight_census(const SkewShape& s, int max_entry,
                             std::map<std::vector<int>, long long>& census) {
  std::vector<Cell> cells = s.cells();  // sorted by (row, col)
  int m = static_cast<int>(cells.size());
  std::vector<int> value(m, 0);
  auto find_index = [&](const Cell& c) -> int {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it != cells.end() && *it == c) return static_cast<int>(it - cells.begin());
    return -1;
  };
  std::vector<int> weight(max_entry, 0);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == m) {
      census[weight] += 1;
      return;
    }
    int lo = 1;
    int west = find_index({cells[j].col - 1, cells[j].row});
    int south = find_index({cells[j].col, cells[j].row - 1});
    if (west >= 0) lo = std::max(lo, value[west]);
    if (south >= 0) lo = std::max(lo, value[south] + 1);
    for (int v = lo; v <= max_entry; ++v) {
      value[j] = v;
      ++weight[v - 1];
      self(self, j + 1);
      --weight[v - 1];
      value[j] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::map<std::vector<int>, long long> ssyt_tuple_weight_census(
    const TupleShape& shape, int max_entry) {
  std::map<std::vector<int>, long long> acc;
  acc[std::vector<int>(max_entry, 0)] = 1;
  for (const SkewShape& s : shape.components()) {
    if (s.empty()) continue;
    std::map<std::vector<int>, long long> comp;
    component_weight_census(s, max_entry, comp);
    std::map<std::vector<int>, long long> next;
    for (const auto& [wa, ca] : acc)
      for (const auto& [wb, cb] : comp) {
        std::vector<int> w(max_entry);
        for (int i = 0; i < max_entry; ++i) w[i] = wa[i] + wb[i];
        next[w] += ca * cb;
      }
    acc = std::move(next);
  }
  return acc;
}

TupleShape parse_tuple_shape(const std::string& text) {
  std::vector<SkewShape> comps;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ';')) {
    std::string body = item, off;
    std::pair<int, int> offset{0, 0};
    if (auto at = item.find('@'); at != std::string::npos) {
      body = item.substr(0, at);
      off = item.substr(at + 1);
      auto comma = off.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("bad offset in shape literal: " + item);
      offset = {std::stoi(off.substr(0, comma)), std::stoi(off.substr(comma + 1))};
    }
    std::string outer = body, inner;
    if (auto slash = body.find('/'); slash != std::string::npos) {
      outer = body.substr(0, slash);
      inner = body.substr(slash + 1);
    }
    comps.emplace_back(parse_partition(outer), parse_partition(inner), offset);
  }
  if (comps.empty()) throw std::invalid_argument("empty shape literal");
  return TupleShape(std::move(comps));
}

}  // namespace deg
