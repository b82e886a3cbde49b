#include "patree/aroma.hpp"

#include "patree/errors.hpp"

#include <algorithm>
#include <set>

namespace patree {

bool is_hat_entry(const Tree& t) {
  if (!t.is_vertex() || t.crossed_edge_count() != 1) return false;
  for (const auto& c : t.children())
    if (c.kind() == Tree::Kind::CrossedEdge) return true;
  return false;
}

Aroma Aroma::canonicalize(std::vector<Tree> entries) {
  if (entries.empty()) throw DomainError("an aroma needs at least one entry");
  for (const auto& e : entries)
    if (!is_hat_entry(e)) throw DomainError("aroma entry must carry its crossed edge at the root");

  const std::size_t n = entries.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& a = entries[(r + k) % n].code();
      const auto& b = entries[(best + k) % n].code();
      int cmp = a.compare(b);
      if (cmp < 0) {
        best = r;
        break;
      }
      if (cmp > 0) break;
    }
  }
  std::rotate(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(best), entries.end());

  Aroma a;
  a.entries_ = std::move(entries);
  for (const auto& e : a.entries_) {
    a.order_ += e.order();
    a.free_count_ += e.free_edge_count();
  }
  if (a.order_ > 255 || n > 255) throw DomainError("aroma too large");
  a.code_.push_back(static_cast<char>(a.order_));
  a.code_.push_back('A');
  a.code_.push_back(static_cast<char>(n));
  for (const auto& e : a.entries_) a.code_ += e.code();
  return a;
}

Aroma Aroma::close_chain(std::span<const FreeEdgeTree> chain) {
  std::vector<Tree> entries;
  entries.reserve(chain.size());
  for (const auto& u : chain) {
    if (!u.is_hat()) throw DomainError("aroma entries must have their free edge at the root");
    entries.push_back(free_to_crossed(u.tree()));
  }
  return canonicalize(std::move(entries));
}

// ---------------------------------------------------------------------------

MultiAroma::MultiAroma() { finish(); }

MultiAroma::MultiAroma(std::vector<Aroma> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
  finish();
}

void MultiAroma::finish() {
  order_ = 0;
  free_count_ = 0;
  for (const auto& a : factors_) {
    order_ += a.order();
    free_count_ += a.free_edge_count();
  }
  if (order_ > 255 || factors_.size() > 255) throw DomainError("multi-aroma too large");
  code_.clear();
  code_.push_back(static_cast<char>(order_));
  code_.push_back('M');
  code_.push_back(static_cast<char>(factors_.size()));
  for (const auto& a : factors_) code_ += a.code();
}

MultiAroma MultiAroma::with_factor(std::size_t i, Aroma replacement) const {
  auto f = factors_;
  f.at(i) = std::move(replacement);
  return MultiAroma(std::move(f));
}

MultiAroma MultiAroma::without_factor(std::size_t i) const {
  auto f = factors_;
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
  return MultiAroma(std::move(f));
}

MultiAroma operator*(const MultiAroma& a, const MultiAroma& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  auto f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  return MultiAroma(std::move(f));
}

// ---------------------------------------------------------------------------

namespace {

/// Free-edge-at-root trees of order k: a plain tree of order k with a
/// crossed edge inserted at one of the root positions.
std::vector<Tree> hat_entries(int k, const DecorationSet& colours) {
  std::vector<Tree> out;
  for (const auto& t : enumerate_trees(k, colours))
    for (int pos = 0; pos <= static_cast<int>(t.children().size()); ++pos)
      out.push_back(insert_at(t, {}, pos, Tree::crossed_edge()));
  return out;
}

void necklaces(int remaining, std::vector<Tree>& word, const std::vector<std::vector<Tree>>& entries_by_order,
               std::set<Aroma>& out) {
  if (remaining == 0) {
    if (!word.empty()) out.insert(Aroma::canonicalize(word));
    return;
  }
  for (int k = 1; k <= remaining; ++k)
    for (const auto& e : entries_by_order[k]) {
      word.push_back(e);
      necklaces(remaining - k, word, entries_by_order, out);
      word.pop_back();
    }
}

}  // namespace

std::vector<Aroma> enumerate_aromas(int n, const DecorationSet& colours) {
  if (n < 1) throw DomainError("aroma order must be positive");
  std::vector<std::vector<Tree>> entries(n + 1);
  for (int k = 1; k <= n; ++k) entries[k] = hat_entries(k, colours);
  std::set<Aroma> found;
  std::vector<Tree> word;
  necklaces(n, word, entries, found);
  return {found.begin(), found.end()};
}

std::vector<MultiAroma> enumerate_multiaromas(int n, const DecorationSet& colours) {
  if (n < 0) throw DomainError("multi-aroma order must be non-negative");
  std::vector<std::vector<Aroma>> by_order(n + 1);
  for (int k = 1; k <= n; ++k) by_order[k] = enumerate_aromas(k, colours);
  // Multisets as non-decreasing sequences of (order, index) pairs.
  std::set<MultiAroma> found;
  std::vector<Aroma> current;
  auto rec = [&](auto&& self, int remaining, int min_order, std::size_t min_index) -> void {
    if (remaining == 0) {
      found.insert(MultiAroma(current));
      return;
    }
    for (int k = min_order; k <= remaining; ++k)
      for (std::size_t i = (k == min_order ? min_index : 0); i < by_order[k].size(); ++i) {
        current.push_back(by_order[k][i]);
        self(self, remaining - k, k, i);
        current.pop_back();
      }
  };
  rec(rec, n, 1, 0);
  return {found.begin(), found.end()};
}

}  // namespace patree
