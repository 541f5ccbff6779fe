#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "tkklab/alphabet.hpp"

namespace tkk {

/// Word in the free monoid over an alphabet; letters are generator ids.
/// The empty word is the unit.
struct Word {
  std::vector<uint8_t> letters;

  Word() = default;
  explicit Word(std::vector<uint8_t> ls) : letters(std::move(ls)) {}
  static Word of(std::initializer_list<int> ids) {
    Word w;
    for (int i : ids) w.letters.push_back(static_cast<uint8_t>(i));
    return w;
  }

  int degree() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
  }
  friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {  // structural, for maps
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    return a.letters < b.letters;
  }

  Word subword(int pos, int len) const {
    return Word(std::vector<uint8_t>(letters.begin() + pos, letters.begin() + pos + len));
  }

  /// Position of the first occurrence of `factor`, or -1.
  int find_factor(const Word& factor) const {
    int n = degree(), m = factor.degree();
    if (m == 0) return 0;
    for (int i = 0; i + m <= n; ++i)
      if (std::equal(factor.letters.begin(), factor.letters.end(), letters.begin() + i))
        return i;
    return -1;
  }

  bool has_factor(const Word& factor) const { return find_factor(factor) >= 0; }

  int weight(const Alphabet& al) const {
    int w = 0;
    for (uint8_t g : letters) w += al[g].weight;
    return w;
  }
  int parity(const Alphabet& al) const {
    int p = 0;
    for (uint8_t g : letters) p ^= al[g].parity & 1;
    return p;
  }

  std::string str(const Alphabet& al) const {
    if (empty()) return "1";
    std::string s;
    for (size_t i = 0; i < letters.size(); ++i) {
      if (i) s += ".";
      s += al[letters[i]].name;
    }
    return s;
  }
};

/// Commutative monomial as a dense exponent vector over the alphabet.
struct CommMono {
  std::vector<uint16_t> exp;

  CommMono() = default;
  explicit CommMono(int nvars) : exp(nvars, 0) {}
  static CommMono one(const Alphabet& al) { return CommMono(al.size()); }
  static CommMono gen(const Alphabet& al, GenId g) {
    CommMono m(al.size());
    m.exp[g] = 1;
    return m;
  }

  int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
  bool empty() const { return degree() == 0; }

  friend CommMono operator*(const CommMono& a, const CommMono& b) {
    CommMono r = a;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
    return r;
  }
  friend bool operator==(const CommMono& a, const CommMono& b) { return a.exp == b.exp; }
  friend bool operator!=(const CommMono& a, const CommMono& b) { return !(a == b); }
  friend bool operator<(const CommMono& a, const CommMono& b) {  // structural
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exp < b.exp;
  }

  bool divisible_by(const CommMono& d) const {
    for (size_t i = 0; i < exp.size(); ++i)
      if (exp[i] < d.exp[i]) return false;
    return true;
  }
  CommMono divided_by(const CommMono& d) const {
    CommMono r = *this;
    for (size_t i = 0; i < exp.size(); ++i) r.exp[i] -= d.exp[i];
    return r;
  }
  static CommMono lcm(const CommMono& a, const CommMono& b) {
    CommMono r = a;
    for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
    return r;
  }
  static bool coprime(const CommMono& a, const CommMono& b) {
    for (size_t i = 0; i < a.exp.size(); ++i)
      if (a.exp[i] && b.exp[i]) return false;
    return true;
  }

  int weight(const Alphabet& al) const {
    int w = 0;
    for (size_t i = 0; i < exp.size(); ++i) w += al[static_cast<GenId>(i)].weight * exp[i];
    return w;
  }
  int parity(const Alphabet& al) const {
    int p = 0;
    for (size_t i = 0; i < exp.size(); ++i) p += al[static_cast<GenId>(i)].parity * exp[i];
    return p & 1;
  }

  std::string str(const Alphabet& al) const {
    if (empty()) return "1";
    std::string s;
    for (size_t i = 0; i < exp.size(); ++i) {
      if (!exp[i]) continue;
      if (!s.empty()) s += ".";
      s += al[static_cast<GenId>(i)].name;
      if (exp[i] > 1) s += "^" + std::to_string(exp[i]);
    }
    return s;
  }
};

inline int degree_of(const Word& m) { return m.degree(); }
inline int degree_of(const CommMono& m) { return m.degree(); }

}  // namespace tkk
