#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "deg/partition.hpp"
#include "deg/poly.hpp"
#include "deg/words.hpp"

namespace deg {

// Thrown by extract_schur when greedy subtraction witnesses that the
// input is not a nonnegative sum of Schur functions.
class NotSchurPositive : public std::runtime_error {
 public:
  NotSchurPositive(const std::string& what, SignVec witness)
      : std::runtime_error(what), witness_(witness) {}
  const SignVec& witness() const { return witness_; }

 private:
  SignVec witness_;
};

// Finite sum of fundamental quasisymmetric functions of degree N with
// polynomial coefficients: map sigma -> coefficient.
class QSymAggregate {
 public:
  QSymAggregate() = default;
  explicit QSymAggregate(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<SignVec, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const SignVec& sigma, const Poly& c);
  Poly coeff(const SignVec& sigma) const;

  QSymAggregate& operator+=(const QSymAggregate& o);
  QSymAggregate& operator-=(const QSymAggregate& o);
  QSymAggregate scaled(const Poly& c) const;
  QSymAggregate q_specialized_to_one() const;

  bool operator==(const QSymAggregate& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  int degree_ = 0;
  std::map<SignVec, Poly> terms_;
};

// descending lexicographic order on partitions: a linear extension of
// dominance, used for canonical rendering
struct LexDescending {
  bool operator()(const Partition& a, const Partition& b) const {
    return b.parts() < a.parts();
  }
};

// Schur expansion of degree n: map partition -> coefficient polynomial.
class SchurPoly {
 public:
  SchurPoly() = default;
  explicit SchurPoly(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Partition, Poly, LexDescending>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Partition& lambda, const Poly& c);
  Poly coeff(const Partition& lambda) const;

  SchurPoly& operator+=(const SchurPoly& o);
  SchurPoly scaled(const Poly& c) const;
  SchurPoly q_specialized_to_one() const;
  bool nonnegative() const;

  // "q*s[3,1] + q^2*s[2,1,1]": terms in descending lex (refines dominance).
  std::string to_string() const;

  bool operator==(const SchurPoly& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const SchurPoly& o) const { return !(*this == o); }

 private:
  int degree_ = 0;
  std::map<Partition, Poly, LexDescending> terms_;
};

// Gessel expansion of s_lambda: sum of Q_{sigma(T)} over SYT(lambda).
QSymAggregate schur_qsym(const Partition& lambda);

// Greedy Schur extraction: repeatedly subtract the dominance-maximal
// partition-shaped signature. Sound for Schur-positive input; throws
// NotSchurPositive otherwise. Never looks at anything but signatures.
SchurPoly extract_schur(const QSymAggregate& f);

// A ribbon of size n given by its descent set D \subseteq [n-1].
struct Ribbon {
  int size = 0;
  std::set<int> descents;
};

int ribbon_maj(const Ribbon& nu);

// s_nu = sum over permutations w with Des(w) = Des(nu) of Q_{sigma(w)}.
QSymAggregate ribbon_schur_qsym(const Ribbon& nu);

std::vector<Ribbon> all_ribbons(int n);

}  // namespace deg
