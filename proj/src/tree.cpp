#include "patree/tree.hpp"

#include "patree/errors.hpp"

#include <algorithm>
#include <map>

namespace patree {

DecorationSet::DecorationSet() : labels_{""} {}

DecorationSet::DecorationSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  if (labels_.empty()) throw DomainError("decoration set must not be empty");
}

bool DecorationSet::contains(const Decoration& d) const {
  return std::binary_search(labels_.begin(), labels_.end(), d.label);
}

void DecorationSet::check(const Decoration& d) const {
  if (!contains(d)) throw DomainError("unknown decoration '" + (d.label.empty() ? std::string("o") : d.label) + "'");
}

// ---------------------------------------------------------------------------

Tree Tree::leaf(Decoration d) { return attach({}, std::move(d)); }

Tree Tree::attach(std::vector<Tree> children, Decoration root) {
  Tree t;
  t.kind_ = Kind::Vertex;
  t.decoration_ = std::move(root);
  t.children_ = std::move(children);
  t.finish();
  return t;
}

Tree Tree::free_edge() {
  Tree t;
  t.kind_ = Kind::FreeEdge;
  t.finish();
  return t;
}

Tree Tree::crossed_edge() {
  Tree t;
  t.kind_ = Kind::CrossedEdge;
  t.finish();
  return t;
}

void Tree::finish() {
  std::string body;
  switch (kind_) {
    case Kind::FreeEdge:
      free_count_ = 1;
      body = "?";
      break;
    case Kind::CrossedEdge:
      crossed_count_ = 1;
      body = "x";
      break;
    case Kind::Vertex: {
      order_ = 1;
      if (decoration_.label.size() > 255 || children_.size() > 255) throw DomainError("tree too wide");
      body.push_back('V');
      body.push_back(static_cast<char>(decoration_.label.size()));
      body += decoration_.label;
      body.push_back(static_cast<char>(children_.size()));
      for (const auto& c : children_) {
        order_ += c.order_;
        free_count_ += c.free_count_;
        crossed_count_ += c.crossed_count_;
        body.append(c.code_, 1, std::string::npos);
      }
      break;
    }
  }
  if (order_ > 255) throw DomainError("tree order exceeds 255");
  code_.reserve(body.size() + 1);
  code_.push_back(static_cast<char>(order_));
  code_ += body;
}

// ---------------------------------------------------------------------------

namespace {

void collect_paths(const Tree& t, VertexPath& prefix, std::vector<VertexPath>& out) {
  out.push_back(prefix);
  for (int i = 0; i < static_cast<int>(t.children().size()); ++i) {
    if (!t.children()[i].is_vertex()) continue;
    prefix.push_back(i);
    collect_paths(t.children()[i], prefix, out);
    prefix.pop_back();
  }
}

Tree insert_rec(const Tree& t, const VertexPath& path, std::size_t depth, int index, const Tree& slot) {
  auto children = t.children();
  if (depth == path.size()) {
    if (index < 0 || index > static_cast<int>(children.size())) throw DomainError("insertion index out of range");
    children.insert(children.begin() + index, slot);
  } else {
    int c = path[depth];
    if (c < 0 || c >= static_cast<int>(children.size()) || !children[c].is_vertex())
      throw DomainError("invalid vertex path");
    children[c] = insert_rec(children[c], path, depth + 1, index, slot);
  }
  return Tree::attach(std::move(children), t.decoration());
}

Tree fill_rec(const Tree& t, std::span<const Tree> replacement) {
  std::vector<Tree> children;
  children.reserve(t.children().size() + replacement.size());
  for (const auto& c : t.children()) {
    if (c.kind() == Tree::Kind::FreeEdge) {
      children.insert(children.end(), replacement.begin(), replacement.end());
    } else if (c.free_edge_count() > 0) {
      children.push_back(fill_rec(c, replacement));
    } else {
      children.push_back(c);
    }
  }
  return Tree::attach(std::move(children), t.decoration());
}

Tree relabel_rec(const Tree& t) {
  if (t.kind() == Tree::Kind::FreeEdge) return Tree::crossed_edge();
  if (!t.is_vertex() || t.free_edge_count() == 0) return t;
  std::vector<Tree> children;
  children.reserve(t.children().size());
  for (const auto& c : t.children()) children.push_back(relabel_rec(c));
  return Tree::attach(std::move(children), t.decoration());
}

}  // namespace

std::vector<VertexPath> vertex_paths(const Tree& t) {
  std::vector<VertexPath> out;
  if (!t.is_vertex()) return out;
  VertexPath prefix;
  collect_paths(t, prefix, out);
  return out;
}

const Tree& subtree_at(const Tree& t, const VertexPath& path) {
  const Tree* cur = &t;
  for (int c : path) {
    if (c < 0 || c >= static_cast<int>(cur->children().size())) throw DomainError("invalid vertex path");
    cur = &cur->children()[c];
  }
  return *cur;
}

Tree insert_at(const Tree& t, const VertexPath& path, int index, const Tree& slot) {
  if (!t.is_vertex()) throw DomainError("cannot insert into a marker");
  return insert_rec(t, path, 0, index, slot);
}

std::vector<Tree> graft_leftmost_each_vertex(const Tree& target, const Tree& scion) {
  std::vector<Tree> out;
  for (const auto& p : vertex_paths(target)) out.push_back(insert_at(target, p, 0, scion));
  return out;
}

Tree fill_free_edge(const Tree& carrier, std::span<const Tree> replacement) {
  if (carrier.free_edge_count() != 1 || !carrier.is_vertex())
    throw DomainError("carrier must hold exactly one free edge");
  return fill_rec(carrier, replacement);
}

Tree free_to_crossed(const Tree& t) { return relabel_rec(t); }

std::vector<Tree> enumerate_trees(int n, const DecorationSet& colours) {
  if (n < 1) throw DomainError("tree order must be positive");
  // trees[k]: all trees of order k; forests[k]: all ordered forests of total order k.
  std::vector<std::vector<Tree>> trees(n + 1);
  std::vector<std::vector<std::vector<Tree>>> forests(n + 1);
  forests[0].push_back({});
  for (int k = 1; k <= n; ++k) {
    for (const auto& forest : forests[k - 1])
      for (const auto& label : colours.labels()) trees[k].push_back(Tree::attach(forest, Decoration{label}));
    // forests of order k: first tree of order j, then a forest of order k - j
    for (int j = 1; j <= k; ++j)
      for (const auto& first : trees[j])
        for (const auto& rest : forests[k - j]) {
          std::vector<Tree> f;
          f.reserve(rest.size() + 1);
          f.push_back(first);
          f.insert(f.end(), rest.begin(), rest.end());
          forests[k].push_back(std::move(f));
        }
  }
  auto out = std::move(trees[n]);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

FreeEdgeTree::FreeEdgeTree(Tree t) : tree_(std::move(t)) {
  if (!tree_.is_vertex() || tree_.free_edge_count() != 1 || tree_.crossed_edge_count() != 0)
    throw DomainError("a free-edge tree needs exactly one free edge and no crossed edge");
  const Tree* cur = &tree_;
  for (;;) {
    const auto& ch = cur->children();
    bool descended = false;
    for (int i = 0; i < static_cast<int>(ch.size()); ++i) {
      if (ch[i].kind() == Tree::Kind::FreeEdge) {
        index_ = i;
        return;
      }
      if (ch[i].free_edge_count() > 0) {
        path_.push_back(i);
        cur = &ch[i];
        descended = true;
        break;
      }
    }
    if (!descended) throw DomainError("free edge not found");
  }
}

std::vector<FreeEdgeTree> decompose_to_hat_chain(const FreeEdgeTree& t) {
  std::vector<FreeEdgeTree> chain;
  Tree rest = t.tree();
  for (;;) {
    FreeEdgeTree cur(rest);
    if (cur.is_hat()) {
      chain.push_back(std::move(cur));
      return chain;
    }
    // Cut the edge to the child on the path: the root part keeps a free edge
    // in that child's slot, the child becomes the rest of the chain.
    int c = cur.slot_path().front();
    auto children = rest.children();
    Tree below = children[c];
    children[c] = Tree::free_edge();
    chain.emplace_back(Tree::attach(std::move(children), rest.decoration()));
    rest = std::move(below);
  }
}

FreeEdgeTree compose_chain(std::span<const FreeEdgeTree> chain) {
  if (chain.empty()) throw DomainError("empty chain");
  Tree acc = chain.back().tree();
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
    const Tree slot[] = {acc};
    acc = fill_free_edge(it->tree(), slot);
  }
  return FreeEdgeTree(std::move(acc));
}

}  // namespace patree
