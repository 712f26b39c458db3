#include "deg/poly.hpp"

#include <sstream>

namespace deg {

Poly Poly::monomial(long long c, int qexp, int texp) {
  Poly p;
  if (c) p.terms_[{qexp, texp}] = c;
  return p;
}

void Poly::prune(std::pair<int, int> key) {
  auto it = terms_.find(key);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) {
    terms_[k] += c;
    prune(k);
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [k, c] : o.terms_) {
    terms_[k] -= c;
    prune(k);
  }
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      r.terms_[k] += ca * cb;
      r.prune(k);
    }
  return r;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

bool Poly::nonnegative() const {
  for (const auto& [k, c] : terms_)
    if (c < 0) return false;
  return true;
}

int Poly::min_q_degree() const {
  int m = 0;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first || k.first < m) m = k.first;
    first = false;
  }
  return m;
}

long long Poly::eval_at_one() const {
  long long v = 0;
  for (const auto& [k, c] : terms_) v += c;
  return v;
}

long long Poly::coeff(int qexp, int texp) const {
  auto it = terms_.find({qexp, texp});
  return it == terms_.end() ? 0 : it->second;
}

Poly Poly::shifted(int dq, int dt) const {
  Poly r;
  for (const auto& [k, c] : terms_) r.terms_[{k.first + dq, k.second + dt}] = c;
  return r;
}

Poly Poly::q_specialized_to_one() const {
  Poly r;
  for (const auto& [k, c] : terms_) {
    r.terms_[{0, k.second}] += c;
    r.prune({0, k.second});
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    long long coef = c;
    if (first) {
      if (coef < 0) { os << "-"; coef = -coef; }
    } else {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    }
    first = false;
    bool has_var = k.first != 0 || k.second != 0;
    if (coef != 1 || !has_var) os << coef;
    if (k.first != 0) {
      if (coef != 1) os << "*";
      os << "q";
      if (k.first != 1) os << "^" << k.first;
    }
    if (k.second != 0) {
      if (coef != 1 || k.first != 0) os << "*";
      os << "t";
      if (k.second != 1) os << "^" << k.second;
    }
  }
  return os.str();
}

}  // namespace deg
