#pragma once

#include <map>
#include <string>
#include <vector>

#include "tkklab/error.hpp"

namespace tkk {

/// Role of a generator inside a TKK alphabet.
enum class Sl2Class : unsigned char { X, E, H, F };

struct Generator {
  std::string name;
  int weight = 0;  // sl2 h-eigenvalue
  int parity = 0;  // 0 or 1
  int sort_key = 0;  // position in the declared total order, distinct per alphabet
};

using GenId = int;

/// A finite ordered list of generators. Index into the list is the
/// canonical generator id used by words and exponent vectors.
class Alphabet {
 public:
  Alphabet() = default;

  GenId add(Generator g) {
    if (by_name_.count(g.name)) throw SchemaError("duplicate generator name: " + g.name);
    for (const auto& other : gens_)
      if (other.sort_key == g.sort_key)
        throw SchemaError("duplicate sortKey for generator " + g.name);
    GenId id = static_cast<GenId>(gens_.size());
    by_name_[g.name] = id;
    gens_.push_back(std::move(g));
    classes_.push_back(Sl2Class::X);
    partner_e_.push_back(-1);
    partner_h_.push_back(-1);
    partner_f_.push_back(-1);
    return id;
  }

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& operator[](GenId i) const { return gens_[i]; }

  GenId index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw SchemaError("unknown generator: " + name);
    return it->second;
  }
  bool has(const std::string& name) const { return by_name_.count(name) != 0; }

  Sl2Class sl2_class(GenId i) const { return classes_[i]; }
  bool is_tkk() const { return tkk_; }

  /// Partner with the requested class inside the same (e,h,f) triple.
  GenId partner(GenId i, Sl2Class c) const {
    switch (c) {
      case Sl2Class::E: return partner_e_[i];
      case Sl2Class::H: return partner_h_[i];
      case Sl2Class::F: return partner_f_[i];
      default: return -1;
    }
  }

  /// Marks (e,h,f) as one adjoint triple; weights must be (2,0,-2).
  void link_triple(GenId e, GenId h, GenId f) {
    if (gens_[e].weight != 2 || gens_[h].weight != 0 || gens_[f].weight != -2)
      throw SchemaError("adjoint triple must have weights (2, 0, -2)");
    for (GenId g : {e, h, f}) {
      classes_[g] = g == e ? Sl2Class::E : (g == h ? Sl2Class::H : Sl2Class::F);
      partner_e_[g] = e;
      partner_h_[g] = h;
      partner_f_[g] = f;
    }
    recheck_tkk();
  }

  /// Standard TKK alphabet: x_1..x_a singlets, then (e_j, h_j, f_j) triples.
  static Alphabet tkk(int a, int b) {
    Alphabet al;
    int key = 0;
    for (int i = 1; i <= a; ++i) al.add({"x" + std::to_string(i), 0, 0, key++});
    for (int j = 1; j <= b; ++j) {
      GenId e = al.add({"e" + std::to_string(j), 2, 0, key++});
      GenId h = al.add({"h" + std::to_string(j), 0, 0, key++});
      GenId f = al.add({"f" + std::to_string(j), -2, 0, key++});
      al.link_triple(e, h, f);
    }
    al.recheck_tkk();
    return al;
  }

  bool same_as(const Alphabet& other) const {
    if (size() != other.size()) return false;
    for (int i = 0; i < size(); ++i) {
      const Generator &a = gens_[i], &b = other.gens_[i];
      if (a.name != b.name || a.weight != b.weight || a.parity != b.parity) return false;
    }
    return true;
  }

  void recheck_tkk() {
    tkk_ = true;
    for (int i = 0; i < size(); ++i) {
      if (classes_[i] == Sl2Class::X && gens_[i].weight != 0) tkk_ = false;
      if (classes_[i] != Sl2Class::X && partner_e_[i] < 0) tkk_ = false;
    }
  }

 private:
  std::vector<Generator> gens_;
  std::map<std::string, GenId> by_name_;
  std::vector<Sl2Class> classes_;
  std::vector<GenId> partner_e_, partner_h_, partner_f_;
  bool tkk_ = true;
};

}  // namespace tkk
