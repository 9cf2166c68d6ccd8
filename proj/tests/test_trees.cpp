#include <functional>
#include <set>

#include "doctest.h"

#include "cinf/contraction.hpp"
#include "cinf/trees.hpp"

using namespace cinf;

namespace {

// Brute force: every preorder arity sequence over {0, 2, 3, ..., n} that forms a single tree
// with n leaves (Lukasiewicz condition).
std::set<std::vector<int>> brute_force_encodings(int n) {
  std::set<std::vector<int>> out;
  std::vector<int> seq;
  std::function<void(int, int)> rec = [&](int open, int leaves) {
    if (open == 0) {
      if (leaves == n) out.insert(seq);
      return;
    }
    if (leaves + open > n) return;
    for (int a = 0; a <= n; ++a) {
      if (a == 1) continue;
      seq.push_back(a);
      rec(open - 1 + a, leaves + (a == 0));
      seq.pop_back();
    }
  };
  rec(1, 0);
  return out;
}

}  // namespace

TEST_CASE("tree counts are little Schroeder numbers") {
  const long expected[] = {1, 1, 3, 11, 45, 197, 903};
  const auto counts = schroeder_counts(7);
  for (int n = 1; n <= 7; ++n) {
    CHECK(enumerate_trees(n).size() == static_cast<std::size_t>(expected[n - 1]));
    CHECK(counts[n] == expected[n - 1]);
  }
}

TEST_CASE("enumeration matches brute force and is sorted without duplicates") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> got;
    const auto& trees = enumerate_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      got.insert(trees[i].encoding());
      CHECK(trees[i].leaves() == n);
      if (i > 0) CHECK(trees[i - 1] < trees[i]);
    }
    CHECK(got.size() == trees.size());
    CHECK(got == brute_force_encodings(n));
  }
}

TEST_CASE("bracket syntax") {
  CHECK(enumerate_trees(2)[0].str() == "(* *)");
  const PlanarTree shape = PlanarTree::parse("(* (* * * *) *)");
  CHECK(shape.leaves() == 6);
  CHECK(shape.internal_vertices() == 2);
  CHECK_FALSE(shape.is_binary());
  CHECK(PlanarTree::parse(shape.str()) == shape);
  CHECK(tree_operation_str(shape) == "f∘m_3∘(g⊗(H∘m_4∘(g⊗g⊗g⊗g))⊗g)");
  CHECK(tree_operation_str(shape, false) == "H∘m_3∘(g⊗(H∘m_4∘(g⊗g⊗g⊗g))⊗g)");
  CHECK_THROWS(PlanarTree::parse("(*)"));
  CHECK_THROWS(PlanarTree::parse("(* *"));
  CHECK_THROWS(PlanarTree::node({PlanarTree::leaf()}));
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : enumerate_trees(n)) CHECK(PlanarTree::parse(t.str()) == t);
}

TEST_CASE("path trees") {
  CHECK(path_trees(2, 1).size() == 1);
  REQUIRE(path_trees(3, 1).size() == 1);
  CHECK(path_trees(3, 1)[0] == PlanarTree::parse("((* *) *)"));
  for (int n = 1; n <= 5; ++n)
    for (int i = 0; i <= n; ++i) {
      const auto filtered = path_trees(n + 1, i + 1);
      CHECK(filtered.size() == static_cast<std::size_t>(binomial(n, i).get_si()));
      CHECK(path_trees_from_words(n + 1, i + 1) == filtered);
    }
  CHECK_THROWS(path_trees(3, 0));
  CHECK_THROWS(path_trees(3, 4));
}

TEST_CASE("tree evaluation on the interval") {
  const SimplexContraction ctx(1);
  const Cochain t = Cochain::indicator(1, {1});
  const Cochain dt = Cochain::indicator(1, {0, 1});
  const PlanarTree node = enumerate_trees(2)[0];
  CHECK(evaluate_tree_m(ctx, node, {t, t}) == t);
  CHECK(evaluate_tree_G(ctx, node, {t, t}).is_zero());
  const Form half = Form::parse(1, "1/2 t1^2 - 1/2 t1");
  const Form g2 = evaluate_tree_G(ctx, node, {t, dt});
  CHECK((g2 == half || g2 == -half));
  // The ternary corolla contributes nothing because m_3 vanishes on forms.
  const PlanarTree corolla = PlanarTree::parse("(* * *)");
  CHECK(evaluate_tree_m(ctx, corolla, {t, dt, dt}).is_zero());
  CHECK_THROWS(evaluate_tree_m(ctx, corolla, {t, dt}));
}
