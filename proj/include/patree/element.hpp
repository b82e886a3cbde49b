#pragma once

#include "patree/aroma.hpp"
#include "patree/rational.hpp"
#include "patree/tree.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace patree {

/// Binary bracket word over trees: a leaf tree or [left, right].
class LieWord {
 public:
  static LieWord leaf(Tree t);
  static LieWord bracket(LieWord left, LieWord right);

  bool is_leaf() const { return args_.empty(); }
  const Tree& tree() const { return leaf_; }
  const LieWord& left() const { return args_.at(0); }
  const LieWord& right() const { return args_.at(1); }

  int order() const { return order_; }
  int free_edge_count() const { return free_count_; }
  int depth() const;
  const std::string& code() const { return code_; }

  friend bool operator==(const LieWord& a, const LieWord& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const LieWord& a, const LieWord& b) {
    return a.code_.compare(b.code_) <=> 0;
  }

 private:
  LieWord() : leaf_(Tree::leaf()) {}

  Tree leaf_;
  std::vector<LieWord> args_;
  int order_ = 0;
  int free_count_ = 0;
  std::string code_;
};

/// Antisymmetry normal form: [x,x] -> nothing, [x,y] with code(x) > code(y)
/// -> -[y,x], applied recursively. Returns the sign and the rewritten word,
/// or nullopt when the word vanishes.
std::optional<std::pair<int, LieWord>> normalize_antisymmetry(const LieWord& w);

/// One basis monomial: a multi-aroma times an optional bracket word. A term
/// without word is a pure scalar (an element of the aroma ring).
struct Term {
  MultiAroma aromas;
  std::optional<LieWord> word;

  int order() const { return aromas.order() + (word ? word->order() : 0); }
  int free_edge_count() const { return aromas.free_edge_count() + (word ? word->free_edge_count() : 0); }
  /// Sort key: total order first, then aromas, then word.
  std::string key() const;
};

/// Finite rational combination of terms. Zero coefficients are never
/// stored and bracket words are kept in antisymmetry normal form, so two
/// values with the same terms are structurally identical. Structural
/// identity is finer than equality in the free Lie algebra; see equals().
///
/// The same container holds aromatic Lie elements, their images under d
/// (one free edge per term) and pure multi-aroma scalars.
class Element {
 public:
  struct Entry {
    Term term;
    Rational coeff;
  };
  using Map = std::map<std::string, Entry>;

  Element() = default;

  static Element tree(Tree t);
  static Element word(LieWord w);
  static Element scalar(MultiAroma a, Rational c = 1);
  static Element monomial(Term t, Rational c = 1);

  void add(const Term& t, const Rational& c);
  void add(const Element& other, const Rational& scale = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  Map::const_iterator begin() const { return terms_.begin(); }
  Map::const_iterator end() const { return terms_.end(); }

  /// True when every term has the same order; -1 for zero or mixed orders.
  int homogeneous_order() const;

  Element operator-() const;
  Element& operator+=(const Element& o) { add(o); return *this; }
  Element& operator-=(const Element& o) { add(o, -1); return *this; }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, const Element& e);
  /// Multiplies every term by a multi-aroma.
  friend Element operator*(const MultiAroma& a, const Element& e);

  friend bool operator==(const Element& a, const Element& b);

 private:
  Map terms_;
};

}  // namespace patree
