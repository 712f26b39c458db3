#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deg/partition.hpp"

namespace deg {

// A word on positive letters; permutations of [n] throughout.
using Word = std::vector<int>;

// Descent signature of length N-1: entry i is +1 iff i appears to the
// left of i+1. Packed into a bitmask, bit (i-1) set means +1.
class SignVec {
 public:
  SignVec() = default;
  SignVec(int len, uint32_t plus_bits) : len_(len), bits_(plus_bits & mask()) {}

  int length() const { return len_; }
  int get(int i) const {  // 1-based; returns +1 or -1
    return (bits_ >> (i - 1)) & 1u ? +1 : -1;
  }
  void set(int i, int sign) {
    if (sign > 0) bits_ |= (1u << (i - 1));
    else bits_ &= ~(1u << (i - 1));
  }

  SignVec truncated(int new_len) const { return SignVec(new_len, bits_); }
  // Keeps 1-based positions [lo,hi], reindexed from 1.
  SignVec slice(int lo, int hi) const {
    return SignVec(hi - lo + 1, bits_ >> (lo - 1));
  }
  SignVec negated() const { return SignVec(len_, ~bits_); }

  std::string to_string() const;           // "+-++"
  static SignVec from_string(const std::string& s);

  bool operator==(const SignVec& o) const { return len_ == o.len_ && bits_ == o.bits_; }
  bool operator!=(const SignVec& o) const { return !(*this == o); }
  bool operator<(const SignVec& o) const {
    return len_ != o.len_ ? len_ < o.len_ : bits_ < o.bits_;
  }

 private:
  uint32_t mask() const { return len_ >= 32 ? ~0u : (1u << len_) - 1u; }
  int len_ = 0;
  uint32_t bits_ = 0;
};

// sigma(w) for w a permutation of [n]; sign i is +1 iff i precedes i+1.
SignVec descent_signature(const Word& w);

// Composition whose partial sums are the positions of the -1's of sigma,
// with a virtual trailing -1 at position N.
Composition runs_composition(const SignVec& sigma);

// Haiman's elementary dual equivalence d_i: if i lies between i-1 and i+1
// the word is fixed; otherwise the outer two of the three letters swap.
Word elementary_dual_equivalence(const Word& w, int i);

// The twisted involution: i jumps over the other two letters, whose
// relative order is kept.
Word twisted_dual_equivalence(const Word& w, int i);

// Descent set {i : w_i > w_{i+1}} of the word itself.
std::vector<int> word_descents(const Word& w);

std::string word_to_string(const Word& w);

}  // namespace deg
