// Development aid: enumerates every way to fill the printed shape of a
// divergence-free combination (sign and term type per slot, all
// coefficients ±1) with order-4 basis elements, and prints the fillings
// whose divergence vanishes. Used once to produce data/psi.pat.

#include "patree/divergence.hpp"
#include "patree/expr_io.hpp"

#include <iostream>
#include <map>
#include <set>

using namespace patree;

namespace {

using Pool = std::vector<std::string>;

// Both orientations of each commutator are listed; the search reports the
// orientation it needs.
const std::map<std::string, Pool> kPools = {
    {"tree", {"(((o -> o) -> o) -> o)", "((o o -> o) -> o)", "((o -> o) o -> o)", "(o (o -> o) -> o)", "(o o o -> o)"}},
    {"a1", {"A[(x -> o)] ((o -> o) -> o)", "A[(x -> o)] (o o -> o)", "A[(x o -> o)] (o -> o)",
            "A[(o x -> o)] (o -> o)", "A[(x (o -> o) -> o)] o", "A[((o -> o) x -> o)] o", "A[(x o o -> o)] o",
            "A[(o x o -> o)] o", "A[(o o x -> o)] o"}},
    {"a1a1", {"A[(x -> o)] A[(x -> o)] (o -> o)", "A[(x -> o)] A[(x o -> o)] o", "A[(x -> o)] A[(o x -> o)] o"}},
    {"a2", {"A[(x -> o), (x -> o)] (o -> o)", "A[(x -> o), (x o -> o)] o", "A[(x -> o), (o x -> o)] o"}},
    {"a3", {"A[(x -> o), (x -> o), (x -> o)] o"}},
    {"a1a2", {"A[(x -> o)] A[(x -> o), (x -> o)] o"}},
    {"br", {"[o, ((o -> o) -> o)]", "[o, (o o -> o)]", "[((o -> o) -> o), o]", "[(o o -> o), o]"}},
    {"a1br", {"A[(x -> o)] [o, (o -> o)]", "A[(x -> o)] [(o -> o), o]"}},
    {"br2", {"[o, [o, (o -> o)]]", "[[o, (o -> o)], o]"}},
};

struct Slot {
  int sign;
  std::string pool;
};

/// Depth-first search over fillings with dense divergence vectors. Runs of
/// slots with the same sign and pool are filled as unordered choices.
class Searcher {
 public:
  explicit Searcher(std::vector<Slot> slots) : slots_(std::move(slots)) {
    std::map<std::string, int> index;
    std::vector<std::pair<std::string, Element>> raw;
    for (const auto& [name, pool] : kPools)
      for (const auto& text : pool) {
        Element e = parse_element(text);
        Element dv = div(e);
        for (const auto& [key, entry] : dv) index.emplace(key, 0);
        auto canonical = to_string(e);
        bare_[text] = canonical[0] == '-' ? canonical.substr(1) : canonical;
        raw.emplace_back(text, std::move(dv));
      }
    int n = 0;
    for (auto& [key, i] : index) i = n++;
    dim_ = n;
    for (const auto& [text, dv] : raw) {
      std::vector<long> v(static_cast<std::size_t>(dim_), 0);
      for (const auto& [key, entry] : dv) v[static_cast<std::size_t>(index[key])] = static_cast<long>(entry.coeff);
      divs_[text] = std::move(v);
    }
  }

  int run() {
    std::vector<long> acc(static_cast<std::size_t>(dim_), 0);
    rec(0, acc, 0);
    return hits_;
  }

 private:
  void rec(std::size_t k, std::vector<long>& acc, std::size_t previous) {
    if (k == slots_.size()) {
      for (long x : acc)
        if (x) return;
      ++hits_;
      std::string line;
      for (std::size_t i = 0; i < chosen_.size(); ++i)
        line += (slots_[i].sign < 0 ? " - " : (i ? " + " : "")) + chosen_[i];
      std::cout << "  " << line << "\n";
      return;
    }
    const auto& pool = kPools.at(slots_[k].pool);
    bool tied = k > 0 && slots_[k - 1].pool == slots_[k].pool && slots_[k - 1].sign == slots_[k].sign;
    for (std::size_t i = tied ? previous + 1 : 0; i < pool.size(); ++i) {
      const auto& text = pool[i];
      const auto& bare = bare_.at(text);
      if (used_.count(bare)) continue;
      used_.insert(bare);
      chosen_.push_back(text);
      const auto& v = divs_.at(text);
      const long s = slots_[k].sign;
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += s * v[j];
      rec(k + 1, acc, i);
      for (std::size_t j = 0; j < acc.size(); ++j) acc[j] -= s * v[j];
      chosen_.pop_back();
      used_.erase(bare);
    }
  }

  std::vector<Slot> slots_;
  std::map<std::string, std::vector<long>> divs_;
  std::map<std::string, std::string> bare_;
  std::set<std::string> used_;
  std::vector<std::string> chosen_;
  int dim_ = 0;
  int hits_ = 0;
};

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::vector<Slot>>> shapes = {
      {"psi2", {{1, "tree"}, {1, "tree"}, {1, "a1"}, {-1, "a1"}, {-1, "a2"}, {-1, "a3"}, {1, "br"}}},
      {"psi3",
       {{1, "tree"}, {1, "tree"}, {1, "tree"}, {1, "a1"}, {-1, "tree"}, {-1, "a1"}, {-1, "a2"}, {-1, "a2"}, {1, "br"}}},
      {"psi4", {{1, "a1"}, {1, "a1"}, {1, "a1a1"}, {-1, "a1"}, {-1, "a1a1"}, {-1, "a1a2"}, {1, "a1br"}}},
      {"psi5",
       {{1, "tree"},
        {1, "a1"},
        {1, "a1"},
        {1, "a2"},
        {-1, "tree"},
        {-1, "a1"},
        {-1, "a1"},
        {-1, "a2"},
        {1, "br"},
        {1, "br"},
        {1, "a1br"},
        {1, "br2"}}},
  };
  for (const auto& [name, slots] : shapes) {
    std::cout << name << ":\n";
    Searcher s(slots);
    int hits = s.run();
    std::cout << "  (" << hits << " fillings)" << std::endl;
  }
}
