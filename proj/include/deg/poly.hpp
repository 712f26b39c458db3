#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace deg {

// Sparse Laurent polynomial in q and t with exact integer coefficients.
// Exponents may go negative transiently (the q^{-a(D)} shift); callers
// that require honest polynomials check min_q_degree().
class Poly {
 public:
  Poly() = default;
  Poly(long long c) { if (c) terms_[{0, 0}] = c; }
  static Poly monomial(long long c, int qexp, int texp = 0);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::pair<int, int>, long long>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
  Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
  Poly operator*(const Poly& o) const;
  Poly operator-() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const { return terms_ < o.terms_; }

  bool nonnegative() const;       // every coefficient >= 0
  int min_q_degree() const;       // 0 for the zero polynomial
  long long eval_at_one() const;  // q = t = 1
  long long coeff(int qexp, int texp = 0) const;

  Poly shifted(int dq, int dt = 0) const;  // multiply by q^dq t^dt
  Poly q_specialized_to_one() const;

  std::string to_string() const;  // "q^2*t + 3*q + 1"; "0" when zero

 private:
  void prune(std::pair<int, int> key);
  std::map<std::pair<int, int>, long long> terms_;  // (qexp,texp) -> coeff
};

}  // namespace deg
