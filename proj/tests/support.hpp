#pragma once

#include "patree/aroma.hpp"
#include "patree/errors.hpp"
#include "patree/element.hpp"
#include "patree/expr_io.hpp"
#include "patree/tree.hpp"

#include <random>
#include <vector>

namespace patree::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Uniformly shaped random composition of the n - 1 non-root vertices.
inline Tree random_tree(Rng& rng, int order) {
  std::vector<Tree> children;
  int left = order - 1;
  while (left > 0) {
    int k = uniform(rng, 1, left);
    children.push_back(random_tree(rng, k));
    left -= k;
  }
  return Tree::attach(std::move(children));
}

/// Random tree with one free edge inserted at a random vertex and slot.
inline FreeEdgeTree random_free_edge_tree(Rng& rng, int order) {
  Tree t = random_tree(rng, order);
  auto paths = vertex_paths(t);
  const auto& path = paths[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(paths.size()) - 1))];
  int slots = static_cast<int>(subtree_at(t, path).children().size());
  return FreeEdgeTree(insert_at(t, path, uniform(rng, 0, slots), Tree::free_edge()));
}

/// All hat trees (free edge at the root) of the given order.
inline std::vector<FreeEdgeTree> hat_trees(int order) {
  std::vector<FreeEdgeTree> out;
  for (const auto& t : enumerate_trees(order))
    for (int i = 0; i <= static_cast<int>(t.children().size()); ++i)
      out.emplace_back(insert_at(t, {}, i, Tree::free_edge()));
  return out;
}

inline MultiAroma random_multiaroma(Rng& rng, int order) {
  if (order == 0) return MultiAroma::unit();
  auto pool = enumerate_multiaromas(order);
  return pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
}

inline LieWord random_word(Rng& rng, int order) {
  if (order < 2 || uniform(rng, 0, 2) == 0) return LieWord::leaf(random_tree(rng, order));
  int k = uniform(rng, 1, order - 1);
  return LieWord::bracket(random_word(rng, k), random_word(rng, order - k));
}

/// One term with a tree part of total order `order`, coefficient in ±{1, 1/2, 2, 3/2}.
inline Element random_term(Rng& rng, int order) {
  int aroma_order = uniform(rng, 0, order - 1);
  static const Rational coeffs[] = {Rational(1), Rational(1, 2), Rational(2), Rational(3, 2)};
  Rational c = coeffs[uniform(rng, 0, 3)] * (uniform(rng, 0, 1) ? 1 : -1);
  return Element::monomial(Term{random_multiaroma(rng, aroma_order), random_word(rng, order - aroma_order)}, c);
}

/// Homogeneous element of the given order with one to three terms.
inline Element random_element(Rng& rng, int order) {
  Element e;
  int n = uniform(rng, 1, 3);
  for (int i = 0; i < n; ++i) e += random_term(rng, order);
  return e;
}

}  // namespace patree::testing
