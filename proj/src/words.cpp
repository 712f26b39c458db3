#include "deg/words.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace deg {

std::string SignVec::to_string() const {
  std::string s;
  for (int i = 1; i <= len_; ++i) s += (get(i) > 0 ? '+' : '-');
  return s;
}

SignVec SignVec::from_string(const std::string& s) {
  SignVec v(static_cast<int>(s.size()), 0);
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '+') v.set(static_cast<int>(i) + 1, +1);
    else if (s[i] == '-') v.set(static_cast<int>(i) + 1, -1);
    else throw std::invalid_argument("bad signature string: " + s);
  }
  return v;
}

SignVec descent_signature(const Word& w) {
  int n = static_cast<int>(w.size());
  std::vector<int> pos(n + 2, 0);
  for (int p = 0; p < n; ++p) {
    if (w[p] < 1 || w[p] > n || pos[w[p]] != 0)
      throw std::invalid_argument("descent_signature: not a permutation");
    pos[w[p]] = p + 1;
  }
  SignVec sigma(n - 1, 0);
  for (int i = 1; i < n; ++i) sigma.set(i, pos[i] < pos[i + 1] ? +1 : -1);
  return sigma;
}

Composition runs_composition(const SignVec& sigma) {
  Composition pi;
  int prev = 0;
  for (int i = 1; i <= sigma.length(); ++i) {
    if (sigma.get(i) < 0) {
      pi.push_back(i - prev);
      prev = i;
    }
  }
  pi.push_back(sigma.length() + 1 - prev);  // virtual -1 at position N
  return pi;
}

namespace {

// Positions (0-based) of letters i-1, i, i+1, sorted by position.
std::array<std::pair<int, int>, 3> triple_positions(const Word& w, int i) {
  std::array<std::pair<int, int>, 3> t;  // (position, letter)
  int found = 0;
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    if (w[p] >= i - 1 && w[p] <= i + 1) {
      t[found++] = {p, w[p]};
      if (found == 3) break;
    }
  }
  if (found != 3)
    throw std::invalid_argument("word does not contain all of i-1,i,i+1");
  return t;
}

}  // namespace

Word elementary_dual_equivalence(const Word& w, int i) {
  auto t = triple_positions(w, i);
  if (t[1].second == i) return w;  // i in the middle: fixed point
  Word out = w;
  std::swap(out[t[0].first], out[t[2].first]);
  return out;
}

Word twisted_dual_equivalence(const Word& w, int i) {
  auto t = triple_positions(w, i);
  if (t[1].second == i) return w;
  Word out = w;
  if (t[0].second == i) {  // (i,a,b) -> (a,b,i)
    out[t[0].first] = t[1].second;
    out[t[1].first] = t[2].second;
    out[t[2].first] = i;
  } else {                 // (a,b,i) -> (i,a,b)
    out[t[0].first] = i;
    out[t[1].first] = t[0].second;
    out[t[2].first] = t[1].second;
  }
  return out;
}

std::vector<int> word_descents(const Word& w) {
  std::vector<int> d;
  for (int p = 0; p + 1 < static_cast<int>(w.size()); ++p)
    if (w[p] > w[p + 1]) d.push_back(p + 1);
  return d;
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

}  // namespace deg
