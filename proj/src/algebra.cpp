#include "patree/algebra.hpp"

#include "patree/errors.hpp"

namespace patree {

namespace {

Element act(const LieWord& w, const Term& target);

std::vector<LieWord> tree_on_word(const Tree& scion, const LieWord& w) {
  std::vector<LieWord> out;
  if (w.is_leaf()) {
    for (auto& t : graft_leftmost_each_vertex(w.tree(), scion)) out.push_back(LieWord::leaf(std::move(t)));
    return out;
  }
  for (auto& l : tree_on_word(scion, w.left())) out.push_back(LieWord::bracket(std::move(l), w.right()));
  for (auto& r : tree_on_word(scion, w.right())) out.push_back(LieWord::bracket(w.left(), std::move(r)));
  return out;
}

Element tree_on_term(const Tree& scion, const Term& target) {
  Element out;
  const auto& factors = target.aromas.factors();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& entries = factors[i].entries();
    for (std::size_t j = 0; j < entries.size(); ++j) {
      for (auto& grafted : graft_leftmost_each_vertex(entries[j], scion)) {
        auto changed = entries;
        changed[j] = std::move(grafted);
        out.add(Term{target.aromas.with_factor(i, Aroma::canonicalize(std::move(changed))), target.word}, 1);
      }
    }
  }
  if (target.word)
    for (auto& w : tree_on_word(scion, *target.word)) out.add(Term{target.aromas, std::move(w)}, 1);
  return out;
}

Element act_on_element(const LieWord& w, const Element& e) {
  Element out;
  for (const auto& [key, entry] : e) out.add(act(w, entry.term), entry.coeff);
  return out;
}

/// (a ↷ b) ↷ target, where a ↷ b is a combination of words without aromas.
Element composite_on(const LieWord& a, const LieWord& b, const Term& target) {
  Element ab = act(a, Term{MultiAroma::unit(), b});
  Element out;
  for (const auto& [key, entry] : ab) out.add(act(*entry.term.word, target), entry.coeff);
  return out;
}

Element associator(const LieWord& a, const LieWord& b, const Term& target) {
  Element out = act_on_element(a, act(b, target));
  out -= composite_on(a, b, target);
  return out;
}

Element act(const LieWord& w, const Term& target) {
  if (w.is_leaf()) return tree_on_term(w.tree(), target);
  Element out = associator(w.left(), w.right(), target);
  out -= associator(w.right(), w.left(), target);
  return out;
}

void require_word(const Term& t, const char* what) {
  if (!t.word) throw DomainError(std::string(what) + ": every term needs a tree part");
}

}  // namespace

Element graft(const Element& x, const Element& y) {
  Element out;
  for (const auto& [kx, ex] : x) {
    require_word(ex.term, "graft");
    if (ex.term.word->free_edge_count() != 0) throw DomainError("graft: left argument must not carry a free edge");
    for (const auto& [ky, ey] : y) out.add(ex.term.aromas * act(*ex.term.word, ey.term), ex.coeff * ey.coeff);
  }
  return out;
}

Element graft_into_free_edge_carrier(const Element& x, const Element& t) {
  for (const auto& [k, e] : t)
    if (e.term.free_edge_count() != 1) throw DomainError("carrier terms must hold exactly one free edge");
  return graft(x, t);
}

Element bracket(const Element& x, const Element& y) {
  Element out;
  for (const auto& [kx, ex] : x) {
    require_word(ex.term, "bracket");
    for (const auto& [ky, ey] : y) {
      require_word(ey.term, "bracket");
      out.add(Term{ex.term.aromas * ey.term.aromas, LieWord::bracket(*ex.term.word, *ey.term.word)},
              ex.coeff * ey.coeff);
    }
  }
  return out;
}

std::vector<std::pair<int, std::vector<Tree>>> expand_word(const LieWord& w) {
  if (w.is_leaf()) return {{1, {w.tree()}}};
  auto l = expand_word(w.left());
  auto r = expand_word(w.right());
  std::vector<std::pair<int, std::vector<Tree>>> out;
  out.reserve(2 * l.size() * r.size());
  for (const auto& [sl, u] : l)
    for (const auto& [sr, v] : r) {
      auto uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      out.emplace_back(sl * sr, std::move(uv));
      auto vu = v;
      vu.insert(vu.end(), u.begin(), u.end());
      out.emplace_back(-sl * sr, std::move(vu));
    }
  return out;
}

void AssocElement::add(const MultiAroma& a, const std::vector<Tree>& letters, const Rational& c) {
  if (c == 0) return;
  std::string key = a.code();
  key.push_back(static_cast<char>(letters.size()));
  for (const auto& t : letters) key += t.code();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), Entry{a, letters, c});
    return;
  }
  it->second.coeff += c;
  if (it->second.coeff == 0) terms_.erase(it);
}

AssocElement assoc_embed(const Element& x) {
  AssocElement out;
  for (const auto& [k, e] : x) {
    if (!e.term.word) {
      out.add(e.term.aromas, {}, e.coeff);
      continue;
    }
    for (const auto& [sign, letters] : expand_word(*e.term.word)) out.add(e.term.aromas, letters, sign * e.coeff);
  }
  return out;
}

bool equals(const Element& x, const Element& y) { return assoc_embed(x - y).empty(); }

}  // namespace patree
