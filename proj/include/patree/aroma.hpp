#pragma once

#include "patree/tree.hpp"

#include <compare>
#include <string>
#include <vector>

namespace patree {

/// Cyclic word of entries, each a tree whose crossed edge hangs from its
/// root. Stored in its rotation-minimal form, so equal aromas are equal
/// values. An entry may additionally carry one free edge (the aromas that
/// appear in images of d).
class Aroma {
 public:
  /// Canonicalizes any rotation. Throws DomainError for an empty word or an
  /// entry that is not crossed exactly once at its root.
  static Aroma canonicalize(std::vector<Tree> entries);

  /// Closes a chain of free-edge-at-root trees: each free edge becomes the
  /// crossed edge of its entry.
  static Aroma close_chain(std::span<const FreeEdgeTree> chain);

  const std::vector<Tree>& entries() const { return entries_; }
  int order() const { return order_; }
  int free_edge_count() const { return free_count_; }
  const std::string& code() const { return code_; }

  friend bool operator==(const Aroma& a, const Aroma& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const Aroma& a, const Aroma& b) {
    return a.code_.compare(b.code_) <=> 0;
  }

 private:
  Aroma() = default;

  std::vector<Tree> entries_;
  int order_ = 0;
  int free_count_ = 0;
  std::string code_;
};

/// True for a tree with a single crossed edge placed in the root's own
/// child list.
bool is_hat_entry(const Tree& t);

/// Commutative product of aromas; the empty product is the unit 1.
class MultiAroma {
 public:
  MultiAroma();
  explicit MultiAroma(std::vector<Aroma> factors);

  static MultiAroma unit() { return MultiAroma(); }

  const std::vector<Aroma>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int order() const { return order_; }
  int free_edge_count() const { return free_count_; }
  const std::string& code() const { return code_; }

  /// Copy with factor `i` replaced.
  MultiAroma with_factor(std::size_t i, Aroma replacement) const;
  /// Copy with factor `i` removed.
  MultiAroma without_factor(std::size_t i) const;

  friend MultiAroma operator*(const MultiAroma& a, const MultiAroma& b);
  friend bool operator==(const MultiAroma& a, const MultiAroma& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const MultiAroma& a, const MultiAroma& b) {
    return a.code_.compare(b.code_) <=> 0;
  }

 private:
  void finish();

  std::vector<Aroma> factors_;
  int order_ = 0;
  int free_count_ = 0;
  std::string code_;
};

/// All aromas of order n over the default colour set (free of free edges),
/// sorted by code.
std::vector<Aroma> enumerate_aromas(int n, const DecorationSet& colours = {});

/// All multi-aromas of order n (n = 0 gives the unit alone).
std::vector<MultiAroma> enumerate_multiaromas(int n, const DecorationSet& colours = {});

}  // namespace patree
