#pragma once

#include "patree/element.hpp"

#include <map>
#include <string>
#include <vector>

namespace patree {

/// Left grafting x ↷ y, bilinear over the rationals and linear over the
/// aromas of x. Tree-on-tree sums over the vertices of the target and
/// attaches the root of the left tree as the leftmost child; the left
/// argument acts as a derivation on aromas, multi-aromas and brackets; a
/// bracket on the left acts through the associator rule
///   [a,b] ↷ z = Ass(a,b,z) - Ass(b,a,z),  Ass(a,b,z) = a↷(b↷z) - (a↷b)↷z.
/// Free and crossed edges of the target are never disturbed, so the same
/// routine grafts into free-edge carriers. Throws DomainError when a term of
/// x has no tree part.
Element graft(const Element& x, const Element& y);

/// x ↷ t for a carrier t holding exactly one free edge per term; the free
/// edge is preserved verbatim in every output term.
Element graft_into_free_edge_carrier(const Element& x, const Element& t);

/// Aroma-bilinear bracket, antisymmetry-normalized. Both arguments need a
/// tree part in every term.
Element bracket(const Element& x, const Element& y);

/// Signed expansion of a bracket word into the tensor algebra:
/// [u,v] -> uv - vu, recursively.
std::vector<std::pair<int, std::vector<Tree>>> expand_word(const LieWord& w);

/// Image in (aromas) ⊗ (tensor algebra on trees).
class AssocElement {
 public:
  struct Entry {
    MultiAroma aromas;
    std::vector<Tree> letters;
    Rational coeff;
  };

  void add(const MultiAroma& a, const std::vector<Tree>& letters, const Rational& c);
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<std::string, Entry>& terms() const { return terms_; }

 private:
  std::map<std::string, Entry> terms_;
};

AssocElement assoc_embed(const Element& x);

/// Equality in the free aromatic Lie algebra: x - y embeds to zero in the
/// enveloping algebra. Sound and complete because a free Lie algebra
/// injects into its tensor algebra.
bool equals(const Element& x, const Element& y);

}  // namespace patree
