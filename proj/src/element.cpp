#include "patree/element.hpp"

#include "patree/errors.hpp"

#include <algorithm>

namespace patree {

LieWord LieWord::leaf(Tree t) {
  LieWord w;
  w.leaf_ = std::move(t);
  if (!w.leaf_.is_vertex()) throw DomainError("a Lie word leaf must be a tree");
  if (w.leaf_.crossed_edge_count() != 0) throw DomainError("crossed edges only occur inside aromas");
  w.order_ = w.leaf_.order();
  w.free_count_ = w.leaf_.free_edge_count();
  w.code_.push_back(static_cast<char>(w.order_));
  w.code_.push_back('L');
  w.code_ += w.leaf_.code();
  return w;
}

LieWord LieWord::bracket(LieWord left, LieWord right) {
  LieWord w;
  w.order_ = left.order_ + right.order_;
  w.free_count_ = left.free_count_ + right.free_count_;
  if (w.order_ > 255) throw DomainError("word order exceeds 255");
  w.code_.push_back(static_cast<char>(w.order_));
  w.code_.push_back('B');
  w.code_ += left.code_;
  w.code_ += right.code_;
  w.args_.push_back(std::move(left));
  w.args_.push_back(std::move(right));
  return w;
}

int LieWord::depth() const {
  if (is_leaf()) return 0;
  return 1 + std::max(left().depth(), right().depth());
}

std::optional<std::pair<int, LieWord>> normalize_antisymmetry(const LieWord& w) {
  if (w.is_leaf()) return std::pair{1, w};
  auto l = normalize_antisymmetry(w.left());
  if (!l) return std::nullopt;
  auto r = normalize_antisymmetry(w.right());
  if (!r) return std::nullopt;
  int sign = l->first * r->first;
  int cmp = l->second.code().compare(r->second.code());
  if (cmp == 0) return std::nullopt;
  if (cmp > 0) return std::pair{-sign, LieWord::bracket(std::move(r->second), std::move(l->second))};
  return std::pair{sign, LieWord::bracket(std::move(l->second), std::move(r->second))};
}

std::string Term::key() const {
  std::string k;
  k.push_back(static_cast<char>(order()));
  k += aromas.code();
  if (word) {
    k.push_back('W');
    k += word->code();
  } else {
    k.push_back('S');
  }
  return k;
}

// ---------------------------------------------------------------------------

Element Element::tree(Tree t) { return word(LieWord::leaf(std::move(t))); }

Element Element::word(LieWord w) { return monomial(Term{MultiAroma::unit(), std::move(w)}); }

Element Element::scalar(MultiAroma a, Rational c) { return monomial(Term{std::move(a), std::nullopt}, c); }

Element Element::monomial(Term t, Rational c) {
  Element e;
  e.add(t, c);
  return e;
}

void Element::add(const Term& t, const Rational& c) {
  if (c == 0) return;
  Term normal{t.aromas, std::nullopt};
  Rational coeff = c;
  if (t.word) {
    auto n = normalize_antisymmetry(*t.word);
    if (!n) return;
    if (n->first < 0) coeff = -coeff;
    normal.word = std::move(n->second);
  }
  auto key = normal.key();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Entry{std::move(normal), std::move(coeff)});
    return;
  }
  it->second.coeff += coeff;
  if (it->second.coeff == 0) terms_.erase(it);
}

void Element::add(const Element& other, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [key, e] : other.terms_) {
    // Terms of another Element are already normal.
    Rational c = e.coeff * scale;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, Entry{e.term, std::move(c)});
    } else {
      it->second.coeff += c;
      if (it->second.coeff == 0) terms_.erase(it);
    }
  }
}

int Element::homogeneous_order() const {
  int order = -1;
  for (const auto& [key, e] : terms_) {
    int o = e.term.order();
    if (order >= 0 && o != order) return -1;
    order = o;
  }
  return order;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [key, e] : out.terms_) e.coeff = -e.coeff;
  return out;
}

Element operator*(const Rational& s, const Element& e) {
  Element out;
  out.add(e, s);
  return out;
}

Element operator*(const MultiAroma& a, const Element& e) {
  if (a.is_unit()) return e;
  Element out;
  for (const auto& [key, entry] : e.terms_) out.add(Term{a * entry.term.aromas, entry.term.word}, entry.coeff);
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
  return true;
}

}  // namespace patree
