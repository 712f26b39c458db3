#include "deg/qsym.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "deg/shapes.hpp"

namespace deg {

void QSymAggregate::add(const SignVec& sigma, const Poly& c) {
  if (sigma.length() != degree_ - 1)
    throw std::invalid_argument("QSymAggregate: signature length mismatch");
  Poly& slot = terms_[sigma];
  slot += c;
  if (slot.is_zero()) terms_.erase(sigma);
}

Poly QSymAggregate::coeff(const SignVec& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Poly() : it->second;
}

QSymAggregate& QSymAggregate::operator+=(const QSymAggregate& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

QSymAggregate& QSymAggregate::operator-=(const QSymAggregate& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

QSymAggregate QSymAggregate::scaled(const Poly& c) const {
  QSymAggregate r(degree_);
  if (c.is_zero()) return r;
  for (const auto& [s, p] : terms_) r.add(s, p * c);
  return r;
}

QSymAggregate QSymAggregate::q_specialized_to_one() const {
  QSymAggregate r(degree_);
  for (const auto& [s, p] : terms_) r.add(s, p.q_specialized_to_one());
  return r;
}

void SchurPoly::add(const Partition& lambda, const Poly& c) {
  if (lambda.size() != degree_)
    throw std::invalid_argument("SchurPoly: partition size mismatch");
  Poly& slot = terms_[lambda];
  slot += c;
  if (slot.is_zero()) terms_.erase(lambda);
}

Poly SchurPoly::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Poly() : it->second;
}

SchurPoly& SchurPoly::operator+=(const SchurPoly& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("degree mismatch");
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

SchurPoly SchurPoly::scaled(const Poly& c) const {
  SchurPoly r(degree_);
  if (c.is_zero()) return r;
  for (const auto& [l, p] : terms_) r.add(l, p * c);
  return r;
}

SchurPoly SchurPoly::q_specialized_to_one() const {
  SchurPoly r(degree_);
  for (const auto& [l, p] : terms_) r.add(l, p.q_specialized_to_one());
  return r;
}

bool SchurPoly::nonnegative() const {
  for (const auto& [l, p] : terms_)
    if (!p.nonnegative()) return false;
  return true;
}

std::string SchurPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = p.to_string();
    bool needs_wrap = cs.find(" + ") != std::string::npos ||
                      cs.find(" - ") != std::string::npos || cs[0] == '-';
    if (cs == "1") {
      // bare Schur term
    } else if (needs_wrap) {
      os << "(" << cs << ")*";
    } else {
      os << cs << "*";
    }
    os << "s[" << l.to_string() << "]";
  }
  return os.str();
}

QSymAggregate schur_qsym(const Partition& lambda) {
  QSymAggregate f(lambda.size());
  for (const auto& t : enumerate_syt(lambda)) f.add(t.signature(), Poly(1));
  return f;
}

SchurPoly extract_schur(const QSymAggregate& f) {
  int n = f.degree();
  SchurPoly out(n);
  QSymAggregate rest = f;
  while (!rest.is_zero()) {
    // candidates: signatures whose +1-run composition is a partition
    std::vector<Partition> cands;
    for (const auto& [sigma, c] : rest.terms()) {
      Composition pi = runs_composition(sigma);
      if (is_partition_shaped(pi)) cands.push_back(to_partition(pi));
    }
    if (cands.empty()) {
      throw NotSchurPositive("leftover terms with no partition-shaped signature",
                             rest.terms().begin()->first);
    }
    // dominance-maximal candidates, processed in reverse-lex order
    Partition best;
    bool found = false;
    for (const Partition& cand : cands) {
      bool dominated = false;
      for (const Partition& other : cands)
        if (!(other == cand) && dominance_leq(cand, other)) { dominated = true; break; }
      if (dominated) continue;
      if (!found || best.parts() < cand.parts()) { best = cand; found = true; }
    }
    // signature of T_best: runs of +1's of lengths best_1, best_2, ...
    SignVec lead(n - 1, 0);
    int pos = 0;
    for (int r = 1; r <= best.length(); ++r) {
      for (int j = 1; j < best.part(r); ++j) lead.set(pos + j, +1);
      pos += best.part(r);
      if (pos < n) lead.set(pos, -1);
    }
    Poly c = rest.coeff(lead);
    if (!c.nonnegative())
      throw NotSchurPositive("negative leading coefficient at " + lead.to_string(), lead);
    out.add(best, c);
    rest -= schur_qsym(best).scaled(c);
    for (const auto& [sigma, p] : rest.terms())
      if (!p.nonnegative())
        throw NotSchurPositive("subtraction drove coefficient negative at " +
                                   sigma.to_string(),
                               sigma);
  }
  return out;
}

int ribbon_maj(const Ribbon& nu) {
  return std::accumulate(nu.descents.begin(), nu.descents.end(), 0);
}

QSymAggregate ribbon_schur_qsym(const Ribbon& nu) {
  int n = nu.size;
  QSymAggregate f(n);
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    bool match = true;
    for (int p = 1; p < n; ++p) {
      bool desc = w[p - 1] > w[p];
      if (desc != (nu.descents.count(p) > 0)) { match = false; break; }
    }
    if (match) f.add(descent_signature(w), Poly(1));
  } while (std::next_permutation(w.begin(), w.end()));
  return f;
}

std::vector<Ribbon> all_ribbons(int n) {
  std::vector<Ribbon> out;
  for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    Ribbon r;
    r.size = n;
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) r.descents.insert(i);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace deg
