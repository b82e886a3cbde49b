#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace patree {

/// Vertex colour. The empty label is the default colour (printed `o`).
struct Decoration {
  std::string label;

  friend bool operator==(const Decoration&, const Decoration&) = default;
  friend auto operator<=>(const Decoration&, const Decoration&) = default;
};

/// Finite set of admissible decorations. The default set holds only the
/// unlabelled colour.
class DecorationSet {
 public:
  DecorationSet();
  explicit DecorationSet(std::vector<std::string> labels);

  bool contains(const Decoration& d) const;
  /// Throws DomainError for labels outside the set.
  void check(const Decoration& d) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
};

/// Planar rooted tree whose child lists may additionally hold edge markers:
/// a free edge (`?`, an open slot that turns the tree into an endomorphism)
/// or a crossed edge (`x`, the slot that closes an aroma entry).
///
/// Values are immutable; the canonical code is computed once at
/// construction and drives equality, ordering and hashing.
class Tree {
 public:
  enum class Kind : std::uint8_t { Vertex, FreeEdge, CrossedEdge };

  static Tree leaf(Decoration d = {});
  static Tree attach(std::vector<Tree> children, Decoration root = {});
  static Tree free_edge();
  static Tree crossed_edge();

  Kind kind() const { return kind_; }
  bool is_vertex() const { return kind_ == Kind::Vertex; }
  bool is_marker() const { return kind_ != Kind::Vertex; }
  const Decoration& decoration() const { return decoration_; }
  const std::vector<Tree>& children() const { return children_; }

  /// Number of vertices; markers do not count.
  int order() const { return order_; }
  int free_edge_count() const { return free_count_; }
  int crossed_edge_count() const { return crossed_count_; }
  bool is_plain() const { return free_count_ == 0 && crossed_count_ == 0; }

  /// Grading-first preorder serialization. Injective; its byte order is the
  /// total order on trees.
  const std::string& code() const { return code_; }

  friend bool operator==(const Tree& a, const Tree& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
    return a.code_.compare(b.code_) <=> 0;
  }

 private:
  Tree() = default;
  void finish();

  Kind kind_ = Kind::Vertex;
  Decoration decoration_;
  std::vector<Tree> children_;
  int order_ = 0;
  int free_count_ = 0;
  int crossed_count_ = 0;
  std::string code_;
};

/// Sequence of child indices from the root to a vertex.
using VertexPath = std::vector<int>;

/// Vertices in preorder, identified by their paths.
std::vector<VertexPath> vertex_paths(const Tree& t);

/// Subtree at `path`.
const Tree& subtree_at(const Tree& t, const VertexPath& path);

/// Copy of `t` with `slot` inserted into the child list of the vertex at
/// `path`, before the child currently at `index`.
Tree insert_at(const Tree& t, const VertexPath& path, int index, const Tree& slot);

/// One tree per vertex: `scion` becomes the leftmost child of that vertex.
/// Markers already present are left where they are.
std::vector<Tree> graft_leftmost_each_vertex(const Tree& target, const Tree& scion);

/// Replaces the unique free edge of `carrier` by the given slot sequence,
/// keeping it in place among its siblings. Throws DomainError unless the
/// carrier has exactly one free edge.
Tree fill_free_edge(const Tree& carrier, std::span<const Tree> replacement);

/// Relabels every free edge as a crossed edge.
Tree free_to_crossed(const Tree& t);

/// All planar trees of order exactly n over the decoration set, sorted by
/// code. Throws DomainError for n < 1.
std::vector<Tree> enumerate_trees(int n, const DecorationSet& colours = {});

/// A tree carrying exactly one free edge: an element of T0.
class FreeEdgeTree {
 public:
  /// Throws DomainError unless `t` has one free edge and no crossed edge.
  explicit FreeEdgeTree(Tree t);

  const Tree& tree() const { return tree_; }
  /// Path of the vertex whose child list holds the free edge.
  const VertexPath& slot_path() const { return path_; }
  /// Position of the free edge inside that child list.
  int insertion_index() const { return index_; }
  /// Free edge attached to the root.
  bool is_hat() const { return path_.empty(); }
  int order() const { return tree_.order(); }

  friend bool operator==(const FreeEdgeTree& a, const FreeEdgeTree& b) { return a.tree_ == b.tree_; }

 private:
  Tree tree_;
  VertexPath path_;
  int index_ = 0;
};

/// Unique factorization t = u1 o u2 o ... o uk into free-edge-at-root
/// factors; k = 1 + depth of the free edge.
std::vector<FreeEdgeTree> decompose_to_hat_chain(const FreeEdgeTree& t);

/// Inverse of decompose_to_hat_chain: grafts each factor into the free edge
/// of the previous one.
FreeEdgeTree compose_chain(std::span<const FreeEdgeTree> chain);

}  // namespace patree
