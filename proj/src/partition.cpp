#include "deg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i - 1] < parts_[i])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1 || i > length()) return 0;
  return parts_[i - 1];
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> c(parts_[0], 0);
  for (int col = 1; col <= parts_[0]; ++col)
    for (int p : parts_)
      if (p >= col) ++c[col - 1];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

std::vector<std::pair<int, int>> Partition::corners() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= length(); ++r)
    if (part(r) > part(r + 1)) out.emplace_back(part(r), r);
  return out;
}

Partition Partition::remove_corner(std::pair<int, int> corner) const {
  auto [col, row] = corner;
  if (part(row) != col || part(row + 1) >= col)
    throw std::invalid_argument("not a removable corner");
  std::vector<int> p = parts_;
  p[row - 1] -= 1;
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw std::invalid_argument("dominance_leq requires equal sizes");
  int pm = 0, pl = 0;
  int len = std::max(mu.length(), lambda.length());
  for (int i = 1; i <= len; ++i) {
    pm += mu.part(i);
    pl += lambda.part(i);
    if (pm > pl) return false;
  }
  return true;
}

bool is_partition_shaped(const Composition& pi) {
  int last = -1;
  bool seen_zero = false;
  for (int p : pi) {
    if (p < 0) return false;
    if (p == 0) { seen_zero = true; continue; }
    if (seen_zero) return false;  // zero before a positive part
    if (last >= 0 && p > last) return false;
    last = p;
  }
  return true;
}

Partition to_partition(const Composition& pi) {
  std::vector<int> parts;
  for (int p : pi)
    if (p > 0) parts.push_back(p);
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // descending lexicographic: largest first part first
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

long long hook_length_count(const Partition& lambda) {
  int n = lambda.size();
  if (n > 20) throw std::invalid_argument("hook_length_count: size too large");
  Partition conj = lambda.conjugate();
  __int128 num = 1, den = 1;
  for (int k = 2; k <= n; ++k) num *= k;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c)
      den *= (lambda.part(r) - c) + (conj.part(c) - r) + 1;
  return static_cast<long long>(num / den);
}

Partition parse_partition(const std::string& s) {
  if (s.empty() || s == "0") return Partition();
  std::vector<int> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("bad partition literal: " + s);
    parts.push_back(std::stoi(tok));
  }
  return Partition(std::move(parts));
}

}  // namespace deg
