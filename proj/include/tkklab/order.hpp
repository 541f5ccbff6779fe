#pragma once

#include <string>
#include <vector>

#include "tkklab/monomial.hpp"

namespace tkk {

enum class OrderKind { deglex, degrevlex, paper_inverse_lex };

inline std::string to_string(OrderKind k) {
  switch (k) {
    case OrderKind::deglex: return "deglex";
    case OrderKind::degrevlex: return "degrevlex";
    case OrderKind::paper_inverse_lex: return "paperInverseLex";
  }
  return "?";
}

inline OrderKind order_kind_from_string(const std::string& s) {
  if (s == "deglex") return OrderKind::deglex;
  if (s == "degrevlex") return OrderKind::degrevlex;
  if (s == "paperInverseLex") return OrderKind::paper_inverse_lex;
  throw SchemaError("unknown order kind: " + s);
}

/// Admissible monomial order: a kind plus a total order of the generators
/// given as a rank vector (higher rank = greater generator).
///
/// All kinds compare by total degree first. Ties:
///   deglex            scan letters / exponents from the greatest generator;
///                     greater entry wins.
///   degrevlex         scan exponents from the smallest generator; the
///                     monomial with the *smaller* exponent there is greater.
///   paperInverseLex   same tie-break rule as degrevlex (stated in terms of
///                     "smallest generator in which they differ"); kept as a
///                     separate name because presentations spell it that way.
///
/// Words support deglex only; the exponent-based tie-breaks are not total
/// on words.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<int> rank) : kind_(kind), rank_(std::move(rank)) {}

  /// Order with ranks taken from the generators' sortKey.
  static MonomialOrder from_sort_keys(OrderKind kind, const Alphabet& al) {
    std::vector<int> rank(al.size());
    for (int i = 0; i < al.size(); ++i) rank[i] = al[i].sort_key;
    return MonomialOrder(kind, std::move(rank));
  }

  /// Order given by the generators listed from greatest to smallest.
  static MonomialOrder from_descending(OrderKind kind, const Alphabet& al,
                                       const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != al.size())
      throw SchemaError("generatorOrder must list every generator exactly once");
    std::vector<int> rank(al.size(), -1);
    int r = al.size();
    for (const auto& n : names) {
      GenId g = al.index_of(n);
      if (rank[g] != -1) throw SchemaError("generatorOrder repeats " + n);
      rank[g] = r--;
    }
    return MonomialOrder(kind, std::move(rank));
  }

  OrderKind kind() const { return kind_; }
  int rank(GenId g) const { return rank_[g]; }
  int nvars() const { return static_cast<int>(rank_.size()); }

  std::vector<std::string> descending_names(const Alphabet& al) const {
    std::vector<GenId> ids(al.size());
    for (int i = 0; i < al.size(); ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](GenId a, GenId b) { return rank_[a] > rank_[b]; });
    std::vector<std::string> out;
    for (GenId g : ids) out.push_back(al[g].name);
    return out;
  }

  /// -1 / 0 / +1 for a < b, a == b, a > b.
  int cmp(const Word& a, const Word& b) const {
    if (kind_ != OrderKind::deglex)
      throw UnsupportedOrder("words support deglex only, got " + tkk::to_string(kind_));
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = 0; i < a.degree(); ++i) {
      int ra = rank_[a.letters[i]], rb = rank_[b.letters[i]];
      if (ra != rb) return ra < rb ? -1 : 1;
    }
    return 0;
  }

  int cmp(const CommMono& a, const CommMono& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    if (kind_ == OrderKind::deglex) {
      // greatest generator first; greater exponent wins
      for (GenId g : by_rank_desc()) {
        if (a.exp[g] != b.exp[g]) return a.exp[g] < b.exp[g] ? -1 : 1;
      }
      return 0;
    }
    // degrevlex / paperInverseLex: smallest generator first; smaller
    // exponent wins
    for (auto it = by_rank_desc().rbegin(); it != by_rank_desc().rend(); ++it) {
      GenId g = *it;
      if (a.exp[g] != b.exp[g]) return a.exp[g] < b.exp[g] ? 1 : -1;
    }
    return 0;
  }

  template <class M>
  bool less(const M& a, const M& b) const {
    return cmp(a, b) < 0;
  }
  template <class M>
  bool greater(const M& a, const M& b) const {
    return cmp(a, b) > 0;
  }

 private:
  const std::vector<GenId>& by_rank_desc() const {
    if (by_rank_desc_.empty() && !rank_.empty()) {
      by_rank_desc_.resize(rank_.size());
      for (size_t i = 0; i < rank_.size(); ++i) by_rank_desc_[i] = static_cast<GenId>(i);
      std::sort(by_rank_desc_.begin(), by_rank_desc_.end(),
                [this](GenId x, GenId y) { return rank_[x] > rank_[y]; });
    }
    return by_rank_desc_;
  }

  OrderKind kind_ = OrderKind::deglex;
  std::vector<int> rank_;
  mutable std::vector<GenId> by_rank_desc_;
};

}  // namespace tkk
