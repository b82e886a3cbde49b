#pragma once

#include "patree/element.hpp"

#include <variant>
#include <vector>

namespace patree {

/// Formal composition f1 ∘ f2 ∘ ... ∘ fk of elementary endomorphisms, each
/// factor a tree with one free edge (grafting into the free edge) or a
/// left adjoint δ_x : z ↦ [x, z]. Only the trace is exposed; that is all
/// the divergence needs.
class ElementaryEndo {
 public:
  using Factor = std::variant<FreeEdgeTree, LieWord>;

  static ElementaryEndo tree(FreeEdgeTree t);
  /// Throws DomainError when x carries a free edge.
  static ElementaryEndo delta(LieWord x);
  /// Composition of hat factors u1 ∘ ... ∘ un.
  static ElementaryEndo chain(std::span<const FreeEdgeTree> factors);

  const std::vector<Factor>& factors() const { return factors_; }

  /// Composition: (a * b)(z) = a(b(z)).
  friend ElementaryEndo operator*(const ElementaryEndo& a, const ElementaryEndo& b);

 private:
  std::vector<Factor> factors_;
};

/// Cyclic trace of an elementary endomorphism, a combination of pure
/// multi-aromas. Rotates the word to start on a tree factor, absorbs every
/// run of δ factors into the free edge of the preceding tree, composes the
/// trees and closes the resulting free-edge tree into an aroma. Vanishes on
/// words made of δ factors only.
Element trace(const ElementaryEndo& e);

/// Inserts a free edge at the leftmost slot of every vertex, Leibniz over
/// multi-aroma factors, aroma entries and bracket arguments. Crossed edges
/// stay where they are. Throws DomainError on input that already carries a
/// free edge.
Element d(const Element& x);

/// Trace of a combination whose terms carry exactly one free edge each.
///  - free edge inside an aroma entry: the term's tree part is grafted into
///    it (a bracket grafts as the signed letter sequences of its expansion)
///    and the result is a pure multi-aroma;
///  - free edge inside the bracket word: tau_hat of the word with no δ.
/// Throws DomainError for terms with zero or several free edges, or with a
/// free edge in an aroma but no tree part.
Element tau(const Element& x);

/// τ̂(w)(δ_{x1} ∘ ... ∘ δ_{xk}) for a bracket word w with one free edge.
/// For w = [l, r]: the free edge in l contributes -τ̂(l)(… ∘ δ_r), the free
/// edge in r contributes τ̂(r)(… ∘ δ_l); a leaf u gives trace(u ∘ δ…).
Element tau_hat(const LieWord& w, const std::vector<LieWord>& deltas = {});

/// Div = τ ∘ d.
Element div(const Element& x);

}  // namespace patree
