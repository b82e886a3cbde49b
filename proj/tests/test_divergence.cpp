#include "patree/divergence.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace patree;
using namespace patree::testing;

namespace {
Element E(const char* s) { return parse_element(s); }

// Sequences of hat trees with total order exactly n.
void chains(int n, std::vector<FreeEdgeTree>& cur, std::vector<std::vector<FreeEdgeTree>>& out) {
  if (n == 0) {
    if (!cur.empty()) out.push_back(cur);
    return;
  }
  for (int k = 1; k <= n; ++k)
    for (const auto& h : hat_trees(k)) {
      cur.push_back(h);
      chains(n - k, cur, out);
      cur.pop_back();
    }
}
}  // namespace

TEST_CASE("d inserts one free edge per vertex") {
  CHECK(d(E("o")) == E("(? -> o)"));
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n)) {
      Element dt = d(Element::tree(t));
      Rational total = 0;
      for (const auto& [k, e] : dt) {
        total += e.coeff;
        CHECK(e.term.free_edge_count() == 1);
      }
      CHECK(total == n);
    }
  CHECK(d(E("((o o -> o) -> o)")).size() == 4);
  Element da = d(E("A[(x -> o)]"));
  REQUIRE(da.size() == 1);
  CHECK(da.begin()->second.term.free_edge_count() == 1);
  CHECK_THROWS_AS(d(E("(? -> o)")), DomainError);
}

TEST_CASE("d is a derivation") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    MultiAroma a1 = random_multiaroma(rng, uniform(rng, 1, 2)), a2 = random_multiaroma(rng, uniform(rng, 1, 2));
    Element t = Element::word(random_word(rng, uniform(rng, 1, 3)));
    CHECK(d(a1 * (a2 * t)) == a2 * d(a1 * t) + a1 * d(a2 * t) - a1 * (a2 * d(t)));
  }
  CHECK(d(E("[o, (o -> o)]")) == E("[(? -> o), (o -> o)] + [o, (? o -> o)] + [o, ((? -> o) -> o)]"));
}

TEST_CASE("trace cases") {
  CHECK(tau(E("(? -> o)")) == E("A[(x -> o)]"));
  CHECK(tau(E("((? -> o) -> o)")) == E("A[(x -> o), (x -> o)]"));
  Element closed = tau(E("A[(? x -> o)] o"));
  REQUIRE(closed.size() == 1);
  CHECK_FALSE(closed.begin()->second.term.word.has_value());
  CHECK(closed == E("A[(o x -> o)]"));
  CHECK(tau(E("A[(x -> o)] (? -> o)")) == E("A[(x -> o)] A[(x -> o)]"));
  CHECK_THROWS_AS(tau(E("o")), DomainError);
}

TEST_CASE("tau_hat without deltas is the tree trace") {
  for (const char* s : {"(? -> o)", "(? o -> o)", "(o (? -> o) -> o)", "((? o -> o) -> o)"}) {
    Element e = E(s);
    CHECK(tau_hat(*e.begin()->second.term.word) == tau(e));
  }
}

TEST_CASE("divergence") {
  CHECK(div(E("o")) == E("A[(x -> o)]"));
  CHECK(div(E("(o -> o)")) == E("A[(x -> o), (x -> o)] + A[(x o -> o)]"));
  Element br = div(E("[o, (o -> o)]"));
  CHECK(br.size() == 6);
  for (const auto& [k, e] : br) CHECK(abs(e.coeff) == 1);
  CHECK(div(Element()).is_zero());
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    Element x = random_element(rng, uniform(rng, 1, 4)), y = random_element(rng, uniform(rng, 1, 4));
    CHECK(div(x + y) == div(x) + div(y));
    Element dx = div(x);
    if (!dx.is_zero()) CHECK(dx.homogeneous_order() == x.homogeneous_order());
  }
}

TEST_CASE("trace is cyclic on chain pairs up to total order 4") {
  int pairs = 0;
  for (int n = 2; n <= 4; ++n)
    for (int a = 1; a < n; ++a) {
      std::vector<FreeEdgeTree> cur;
      std::vector<std::vector<FreeEdgeTree>> us, vs;
      chains(a, cur, us);
      chains(n - a, cur, vs);
      for (const auto& u : us)
        for (const auto& v : vs) {
          auto uv = ElementaryEndo::chain(u) * ElementaryEndo::chain(v);
          auto vu = ElementaryEndo::chain(v) * ElementaryEndo::chain(u);
          CHECK(trace(uv) == trace(vu));
          ++pairs;
        }
    }
  CHECK(pairs == 36);
}

TEST_CASE("trace vanishes on pure delta words") {
  LieWord o = LieWord::leaf(Tree::leaf()), l = LieWord::leaf(parse_tree("(o -> o)"));
  CHECK(trace(ElementaryEndo::delta(o)).is_zero());
  CHECK(trace(ElementaryEndo::delta(o) * ElementaryEndo::delta(l)).is_zero());
  CHECK_FALSE(trace(ElementaryEndo::tree(FreeEdgeTree(parse_tree("(? -> o)"))) * ElementaryEndo::delta(o)).is_zero());
}
