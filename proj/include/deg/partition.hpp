#pragma once

#include <string>
#include <vector>

namespace deg {

// A composition: finite sequence of non-negative integers.
using Composition = std::vector<int>;

// An integer partition stored as its weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;                       // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;                  // 1-based, 0 beyond length
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;   // mu_i <= lambda_i for all i

  // Northeastern corner cells (col,row) whose removal leaves a partition.
  std::vector<std::pair<int, int>> corners() const;
  Partition remove_corner(std::pair<int, int> corner) const;

  std::string to_string() const;          // "3,2,1"; "" for the empty partition

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  // Lexicographic on part vectors; a total order used for map keys.
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// True iff mu <= lambda in dominance order. Requires |mu| == |lambda|.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// True iff the composition is weakly decreasing with positive parts
// (trailing zeros allowed).
bool is_partition_shaped(const Composition& pi);
Partition to_partition(const Composition& pi);  // strips trailing zeros

// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(int n);

// Exact count of standard Young tableaux of shape lambda.
long long hook_length_count(const Partition& lambda);

Partition parse_partition(const std::string& s);  // "3,2,1"; "" or "0" = empty

}  // namespace deg
