#include "deg/macdonald.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace deg {

namespace {

std::vector<Cell> partition_cells(const Partition& mu) {
  std::vector<Cell> cells;
  for (int r = 1; r <= mu.length(); ++r)
    for (int c = 1; c <= mu.part(r); ++c) cells.push_back({c, r});
  return cells;
}

}  // namespace

Filling::Filling(Partition shape, std::vector<int> entries)
    : shape_(std::move(shape)), cells_(partition_cells(shape_)),
      entries_(std::move(entries)) {
  int n = shape_.size();
  if (static_cast<int>(entries_.size()) != n)
    throw std::invalid_argument("filling entry count mismatch");
  std::vector<char> seen(n + 1, 0);
  for (int e : entries_) {
    if (e < 1 || e > n || seen[e]) throw std::invalid_argument("filling not a bijection");
    seen[e] = 1;
  }
}

int Filling::entry(const Cell& c) const {
  for (size_t j = 0; j < cells_.size(); ++j)
    if (cells_[j] == c) return entries_[j];
  throw std::invalid_argument("entry: cell not in shape");
}

std::vector<Cell> Filling::descents() const {
  std::vector<Cell> d;
  for (size_t j = 0; j < cells_.size(); ++j) {
    const Cell& c = cells_[j];
    if (c.row <= 1) continue;
    if (entries_[j] > entry({c.col, c.row - 1})) d.push_back(c);
  }
  return d;
}

Word Filling::row_reading_word() const {
  Word w;
  for (int r = shape_.length(); r >= 1; --r)
    for (int c = 1; c <= shape_.part(r); ++c) w.push_back(entry({c, r}));
  return w;
}

int arm(const Partition& mu, const Cell& c) {
  if (c.row < 1 || c.row > mu.length() || c.col < 1 || c.col > mu.part(c.row))
    throw std::invalid_argument("arm: cell outside shape");
  return mu.part(c.row) - c.col;
}

int leg(const Partition& mu, const Cell& c) {
  if (c.row < 1 || c.row > mu.length() || c.col < 1 || c.col > mu.part(c.row))
    throw std::invalid_argument("leg: cell outside shape");
  int l = 0;
  for (int r = c.row + 1; r <= mu.length(); ++r)
    if (mu.part(r) >= c.col) ++l;
  return l;
}

int maj(const Filling& S) {
  int m = 0;
  for (const Cell& c : S.descents()) m += 1 + leg(S.shape(), c);
  return m;
}

std::vector<std::pair<Cell, Cell>> inversion_pairs(const Filling& S) {
  std::vector<std::pair<Cell, Cell>> out;
  const auto& cells = S.cells();
  for (const Cell& a : cells)
    for (const Cell& b : cells) {
      bool attacking = (a.row == b.row && a.col < b.col) ||
                       (a.row == b.row + 1 && a.col > b.col);
      if (attacking && S.entry(a) > S.entry(b)) out.push_back({a, b});
    }
  return out;
}

int inv(const Filling& S) {
  int v = static_cast<int>(inversion_pairs(S).size());
  for (const Cell& c : S.descents()) v -= arm(S.shape(), c);
  return v;
}

QSymAggregate macdonald_qsym(const Partition& mu, Exec exec, int size_bound) {
  int n = mu.size();
  if (n > size_bound)
    throw std::length_error("macdonald_qsym: size bound exceeded");
  QSymAggregate f(n);
  auto accumulate_block = [&mu, n](int first_entry, QSymAggregate& acc) {
    // fillings whose first cell holds first_entry
    std::vector<int> rest;
    for (int e = 1; e <= n; ++e)
      if (e != first_entry) rest.push_back(e);
    std::vector<int> entries(n);
    entries[0] = first_entry;
    do {
      std::copy(rest.begin(), rest.end(), entries.begin() + 1);
      Filling S(mu, entries);
      acc.add(descent_signature(S.row_reading_word()),
              Poly::monomial(1, inv(S), maj(S)));
    } while (std::next_permutation(rest.begin(), rest.end()));
  };
  if (n == 1) {
    Filling S(mu, {1});
    f.add(descent_signature(S.row_reading_word()), Poly::monomial(1, 0, 0));
    return f;
  }
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
    std::vector<QSymAggregate> partial(n, QSymAggregate(n));
#pragma omp parallel for schedule(dynamic)
    for (int first = 1; first <= n; ++first)
      accumulate_block(first, partial[first - 1]);
    for (const auto& p : partial) f += p;
    return f;
#endif
  }
  for (int first = 1; first <= n; ++first) accumulate_block(first, f);
  return f;
}

std::vector<DescentSet> all_descent_sets(const Partition& mu) {
  std::vector<Cell> upper;
  for (const Cell& c : partition_cells(mu))
    if (c.row >= 2) upper.push_back(c);
  std::vector<DescentSet> out;
  int m = static_cast<int>(upper.size());
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    DescentSet d;
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) d.insert(upper[j]);
    out.push_back(std::move(d));
  }
  return out;
}

RibbonTuple ribbons_of_descent_set(const Partition& mu, const DescentSet& D) {
  for (const Cell& c : D)
    if (c.row < 2 || c.row > mu.length() || c.col < 1 || c.col > mu.part(c.row))
      throw std::invalid_argument("descent set contains an invalid cell");
  RibbonTuple out;
  Partition conj = mu.conjugate();
  std::vector<SkewShape> comps;
  for (int i = 1; i <= mu.part(1); ++i) {
    int m = conj.part(i);  // column height
    // place top cell (i,m), then each (i,j) south/east of (i,j+1)
    std::vector<Cell> abs(m + 1);
    abs[m] = {0, 0};
    for (int j = m - 1; j >= 1; --j) {
      if (D.count({i, j + 1}))
        abs[j] = {abs[j + 1].col, abs[j + 1].row - 1};  // south
      else
        abs[j] = {abs[j + 1].col + 1, abs[j + 1].row};  // east
    }
    // translate so the southeastern cell (i,1)'s position has content 0
    int shift = -(abs[1].col - abs[1].row);
    std::vector<Cell> cells;
    for (int j = 1; j <= m; ++j) cells.push_back({abs[j].col + shift, abs[j].row});
    SkewShape ribbon = SkewShape::from_absolute_cells(cells);
    if (!ribbon.is_ribbon())
      throw std::logic_error("column did not fold into a ribbon");
    comps.push_back(std::move(ribbon));
  }
  out.shape = TupleShape(std::move(comps));
  for (const Cell& c : D) {
    out.arm_total += arm(mu, c);
    out.maj_value += 1 + leg(mu, c);
  }
  return out;
}

StandardTupleTableau filling_to_ribbon_tuple(const Filling& S) {
  const Partition& mu = S.shape();
  std::vector<Cell> des = S.descents();
  DescentSet D(des.begin(), des.end());
  RibbonTuple rt = ribbons_of_descent_set(mu, D);
  // each ribbon has pairwise distinct contents, so the column cell of a
  // given content is unambiguous: content of (i,j)'s ribbon cell
  std::vector<int> entries;
  for (const TupleCell& tc : content_reading_order(rt.shape)) {
    int i = tc.comp + 1;
    int m = mu.conjugate().part(i);
    int want = tc.cell.col - tc.cell.row;
    std::vector<Cell> pos(m + 1);
    pos[m] = {0, 0};
    for (int j = m - 1; j >= 1; --j) {
      if (D.count({i, j + 1}))
        pos[j] = {pos[j + 1].col, pos[j + 1].row - 1};
      else
        pos[j] = {pos[j + 1].col + 1, pos[j + 1].row};
    }
    int shift = -(pos[1].col - pos[1].row);
    int found = 0;
    for (int j = 1; j <= m; ++j) {
      if ((pos[j].col + shift) - pos[j].row == want) {
        entries.push_back(S.entry({i, j}));
        found = 1;
        break;
      }
    }
    if (!found) throw std::logic_error("ribbon cell lost its filling entry");
  }
  return StandardTupleTableau(rt.shape, entries);
}

QSymAggregate macdonald_via_llt(const Partition& mu, Exec exec, int size_bound) {
  int n = mu.size();
  if (n > size_bound)
    throw std::length_error("macdonald_via_llt: size bound exceeded");
  QSymAggregate f(n);
  auto descent_sets = all_descent_sets(mu);
  int m = static_cast<int>(descent_sets.size());
  std::vector<QSymAggregate> partial(m, QSymAggregate(n));
  auto run_one = [&](int j) {
    RibbonTuple rt = ribbons_of_descent_set(mu, descent_sets[j]);
    QSymAggregate g = llt_polynomial(rt.shape, Exec::Serial, size_bound);
    for (const auto& [sigma, p] : g.terms())
      partial[j].add(sigma, p.shifted(-rt.arm_total, rt.maj_value));
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
  for (const auto& p : partial) f += p;
  for (const auto& [sigma, p] : f.terms())
    if (p.min_q_degree() < 0)
      throw std::logic_error("macdonald_via_llt: negative q power failed to cancel");
  return f;
}

SchurPoly kostka_macdonald(const Partition& mu, Exec exec, int size_bound) {
  return extract_schur(macdonald_qsym(mu, exec, size_bound));
}

}  // namespace deg
