#include "patree/divergence.hpp"

#include "patree/algebra.hpp"
#include "patree/errors.hpp"

#include <algorithm>

namespace patree {

ElementaryEndo ElementaryEndo::tree(FreeEdgeTree t) {
  ElementaryEndo e;
  e.factors_.emplace_back(std::move(t));
  return e;
}

ElementaryEndo ElementaryEndo::delta(LieWord x) {
  if (x.free_edge_count() != 0) throw DomainError("δ takes a word without free edge");
  ElementaryEndo e;
  e.factors_.emplace_back(std::move(x));
  return e;
}

ElementaryEndo ElementaryEndo::chain(std::span<const FreeEdgeTree> factors) {
  if (factors.empty()) throw DomainError("empty chain");
  ElementaryEndo e;
  for (const auto& f : factors) e.factors_.emplace_back(f);
  return e;
}

ElementaryEndo operator*(const ElementaryEndo& a, const ElementaryEndo& b) {
  ElementaryEndo e = a;
  e.factors_.insert(e.factors_.end(), b.factors_.begin(), b.factors_.end());
  return e;
}

namespace {

struct Sandwich {
  int sign;
  std::vector<Tree> prefix, suffix;
};

/// [c1,[c2,...[ck, Z]]] expanded in the tensor algebra as signed prefix·Z·suffix.
std::vector<Sandwich> expand_adjoints(std::span<const LieWord> cs) {
  std::vector<Sandwich> acc{{1, {}, {}}};
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    auto letters = expand_word(*it);
    std::vector<Sandwich> next;
    next.reserve(2 * acc.size() * letters.size());
    for (const auto& s : acc)
      for (const auto& [sign, seq] : letters) {
        Sandwich left{s.sign * sign, seq, s.suffix};
        left.prefix.insert(left.prefix.end(), s.prefix.begin(), s.prefix.end());
        next.push_back(std::move(left));
        Sandwich right{-s.sign * sign, s.prefix, s.suffix};
        right.suffix.insert(right.suffix.end(), seq.begin(), seq.end());
        next.push_back(std::move(right));
      }
    acc = std::move(next);
  }
  return acc;
}

Aroma close(const Tree& t) {
  auto chain = decompose_to_hat_chain(FreeEdgeTree(t));
  return Aroma::close_chain(chain);
}

std::vector<Tree> d_tree(const Tree& t) { return graft_leftmost_each_vertex(t, Tree::free_edge()); }

std::vector<LieWord> d_word(const LieWord& w) {
  std::vector<LieWord> out;
  if (w.is_leaf()) {
    for (auto& t : d_tree(w.tree())) out.push_back(LieWord::leaf(std::move(t)));
    return out;
  }
  for (auto& l : d_word(w.left())) out.push_back(LieWord::bracket(std::move(l), w.right()));
  for (auto& r : d_word(w.right())) out.push_back(LieWord::bracket(w.left(), std::move(r)));
  return out;
}

}  // namespace

Element trace(const ElementaryEndo& e) {
  const auto& f = e.factors();
  auto first = std::find_if(f.begin(), f.end(), [](const auto& x) { return x.index() == 0; });
  if (first == f.end()) return {};
  std::vector<ElementaryEndo::Factor> word(first, f.end());
  word.insert(word.end(), f.begin(), first);

  std::vector<std::pair<int, Tree>> current{{1, std::get<FreeEdgeTree>(word[0]).tree()}};
  std::size_t i = 1;
  while (i < word.size()) {
    if (word[i].index() == 0) {
      const Tree slot[] = {std::get<FreeEdgeTree>(word[i]).tree()};
      for (auto& [s, t] : current) t = fill_free_edge(t, slot);
      ++i;
      continue;
    }
    std::vector<LieWord> block;
    while (i < word.size() && word[i].index() == 1) block.push_back(std::get<LieWord>(word[i++]));
    std::vector<std::pair<int, Tree>> next;
    for (const auto& sw : expand_adjoints(block))
      for (const auto& [s, t] : current) {
        std::vector<Tree> seq = sw.prefix;
        seq.push_back(Tree::free_edge());
        seq.insert(seq.end(), sw.suffix.begin(), sw.suffix.end());
        next.emplace_back(s * sw.sign, fill_free_edge(t, seq));
      }
    current = std::move(next);
  }

  Element out;
  for (const auto& [s, t] : current) out.add(Term{MultiAroma({close(t)}), std::nullopt}, s);
  return out;
}

Element d(const Element& x) {
  Element out;
  for (const auto& [key, e] : x) {
    const Term& term = e.term;
    if (term.free_edge_count() != 0) throw DomainError("d: input already carries a free edge");
    const auto& factors = term.aromas.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& entries = factors[i].entries();
      for (std::size_t j = 0; j < entries.size(); ++j)
        for (auto& t : d_tree(entries[j])) {
          auto changed = entries;
          changed[j] = std::move(t);
          out.add(Term{term.aromas.with_factor(i, Aroma::canonicalize(std::move(changed))), term.word}, e.coeff);
        }
    }
    if (term.word)
      for (auto& w : d_word(*term.word)) out.add(Term{term.aromas, std::move(w)}, e.coeff);
  }
  return out;
}

Element tau_hat(const LieWord& w, const std::vector<LieWord>& deltas) {
  if (w.free_edge_count() != 1) throw DomainError("tau_hat: word must carry exactly one free edge");
  if (w.is_leaf()) {
    ElementaryEndo e = ElementaryEndo::tree(FreeEdgeTree(w.tree()));
    for (const auto& x : deltas) e = e * ElementaryEndo::delta(x);
    return trace(e);
  }
  auto more = deltas;
  if (w.left().free_edge_count() == 1) {
    more.push_back(w.right());
    return -tau_hat(w.left(), more);
  }
  more.push_back(w.left());
  return tau_hat(w.right(), more);
}

Element tau(const Element& x) {
  Element out;
  for (const auto& [key, e] : x) {
    const Term& term = e.term;
    if (term.free_edge_count() != 1) throw DomainError("tau: every term needs exactly one free edge");
    if (term.word && term.word->free_edge_count() == 1) {
      out.add(term.aromas * tau_hat(*term.word), e.coeff);
      continue;
    }
    if (!term.word) throw DomainError("tau: a free edge in an aroma needs a tree part to graft");
    const auto& factors = term.aromas.factors();
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].free_edge_count() == 0) continue;
      const auto& entries = factors[i].entries();
      for (std::size_t j = 0; j < entries.size(); ++j) {
        if (entries[j].free_edge_count() == 0) continue;
        for (const auto& [sign, letters] : expand_word(*term.word)) {
          auto changed = entries;
          changed[j] = fill_free_edge(entries[j], letters);
          out.add(Term{term.aromas.with_factor(i, Aroma::canonicalize(std::move(changed))), std::nullopt},
                  sign * e.coeff);
        }
      }
    }
  }
  return out;
}

Element div(const Element& x) { return tau(d(x)); }

}  // namespace patree
