#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "tkklab/order.hpp"
#include "tkklab/rational.hpp"

namespace tkk {

/// Sparse polynomial over exact rationals. Terms are kept sorted strictly
/// descending with respect to the order passed to each operation, zero
/// coefficients pruned; terms().front() is the leading term.
template <class M>
class Poly {
 public:
  struct Term {
    M mono;
    Rational coeff;
  };

  Poly() = default;

  static Poly zero() { return Poly(); }

  static Poly term(M m, Rational c) {
    Poly p;
    if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  /// Adopts a list that is already sorted strictly descending.
  static Poly unsafe_from_sorted(std::vector<Term> ts) {
    Poly p;
    p.terms_ = std::move(ts);
    return p;
  }

  /// Normalizes an arbitrary term list: sort descending, merge, prune.
  static Poly from_terms(std::vector<Term> ts, const MonomialOrder& ord) {
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    Poly p;
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
        p.terms_.back().coeff += t.coeff;
      else
        p.terms_.push_back(std::move(t));
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  const M& leading_mono() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono && a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly negated() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Poly scaled(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coeff());
  }

  /// this + c * q, merged in one pass.
  Poly axpy(const Rational& c, const Poly& q, const MonomialOrder& ord) const {
    Poly r;
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < q.terms_.size()) {
      int side;
      if (i == terms_.size())
        side = 1;
      else if (j == q.terms_.size())
        side = -1;
      else
        side = -ord.cmp(terms_[i].mono, q.terms_[j].mono);  // -1: take ours (greater)
      if (side < 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (side > 0) {
        r.terms_.push_back({q.terms_[j].mono, c * q.terms_[j].coeff});
        ++j;
      } else {
        Rational v = terms_[i].coeff + c * q.terms_[j].coeff;
        if (v != 0) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i, ++j;
      }
      if (!r.terms_.empty() && r.terms_.back().coeff == 0) r.terms_.pop_back();
    }
    return r;
  }

  Poly add(const Poly& q, const MonomialOrder& ord) const { return axpy(Rational(1), q, ord); }
  Poly sub(const Poly& q, const MonomialOrder& ord) const { return axpy(Rational(-1), q, ord); }

 private:
  std::vector<Term> terms_;
};

using NCPoly = Poly<Word>;
using CommPoly = Poly<CommMono>;

/// Bilinear product; concatenation on words, exponent sum on commutative
/// monomials.
template <class M>
Poly<M> multiply(const Poly<M>& p, const Poly<M>& q, const MonomialOrder& ord) {
  std::vector<typename Poly<M>::Term> ts;
  ts.reserve(static_cast<size_t>(p.num_terms()) * q.num_terms());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) ts.push_back({a.mono * b.mono, a.coeff * b.coeff});
  return Poly<M>::from_terms(std::move(ts), ord);
}

template <class M>
Poly<M> mono_times(const M& left, const Poly<M>& p, const M& right) {
  // Multiplication by monomials preserves the relative order of terms for
  // any admissible order, so no re-sorting is needed.
  std::vector<typename Poly<M>::Term> ts;
  ts.reserve(p.num_terms());
  for (const auto& t : p.terms()) ts.push_back({left * t.mono * right, t.coeff});
  Poly<M> r;
  for (auto& t : ts) r = r.axpy(Rational(0), Poly<M>(), MonomialOrder());  // placeholder
  return r;
}

/// One-sided/two-sided monomial multiple; relies on admissibility (term
/// order preserved), so the sorted invariant survives without a comparator.
template <class M>
Poly<M> scaled_monomial_multiple(const M& left, const Poly<M>& p, const M& right,
                                 const Rational& c) {
  std::vector<typename Poly<M>::Term> ts;
  ts.reserve(p.num_terms());
  for (const auto& t : p.terms()) ts.push_back({left * t.mono * right, t.coeff * c});
  return Poly<M>::unsafe_from_sorted(std::move(ts));
}

/// Per-grading report: value if homogeneous, std::nullopt for "mixed".
struct Grading {
  std::optional<int> degree;
  std::optional<int> weight;
  std::optional<int> parity;
};

template <class M>
Grading grading(const Poly<M>& p, const Alphabet& al) {
  Grading g;
  bool first = true;
  for (const auto& t : p.terms()) {
    int d = degree_of(t.mono), w = t.mono.weight(al), par = t.mono.parity(al);
    if (first) {
      g.degree = d, g.weight = w, g.parity = par;
      first = false;
    } else {
      if (g.degree && *g.degree != d) g.degree.reset();
      if (g.weight && *g.weight != w) g.weight.reset();
      if (g.parity && *g.parity != par) g.parity.reset();
    }
  }
  return g;
}

template <class M>
std::string poly_str(const Poly<M>& p, const Alphabet& al) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    if (!s.empty()) s += " + ";
    if (t.coeff == 1)
      s += t.mono.str(al);
    else
      s += to_string(t.coeff) + "*" + t.mono.str(al);
  }
  return s;
}

}  // namespace tkk
