#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "dyckcells/error.hpp"
#include "dyckcells/orientations.hpp"
#include "dyckcells/tymoczko.hpp"
#include "oracles.hpp"

using namespace dyckcells;

namespace {

const HessenbergFunction h233 = HessenbergFunction::parse("233");
const HessenbergFunction h2444 = HessenbergFunction::parse("2444");

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::map<std::string, int> cell_table(const HessenbergFunction& h,
                                      const Partition& mu) {
  std::map<std::string, int> table;
  for (const Filling& f : enumerate_fillings(h, mu))
    table[f.str()] = h_inversions(f, h);
  return table;
}

}  // namespace

TEST_CASE("filling construction") {
  Filling f(P({2, 1}), {{1, 2}, {3}});
  CHECK(f.str() == "1 2/3");
  CHECK(f.reading_word() == std::vector<int>{1, 2, 3});
  CHECK(f.entry(1, 0) == 3);
  CHECK_THROWS_AS(Filling(P({2, 1}), {{1, 2, 3}}), error);
  CHECK_THROWS_AS(Filling(P({2, 1}), {{1, 2}, {2}}), error);
  CHECK_THROWS_AS(Filling(P({2, 1}), {{1, 5}, {3}}), error);
}

TEST_CASE("admissibility") {
  CHECK(admissible(Filling(P({3}), {{1, 3, 2}}), h233));
  CHECK_FALSE(admissible(Filling(P({3}), {{2, 3, 1}}), h233));  // 3 > h(1)
  CHECK(admissible(Filling(P({1, 1, 1}), {{3}, {2}, {1}}), h233));
  CHECK_FALSE(admissible(Filling(P({2}), {{1, 2}}), h233));  // weight mismatch
}

TEST_CASE("cells for the three nilpotent types of h=233") {
  auto t3 = cell_table(h233, P({3}));
  CHECK(t3 == std::map<std::string, int>{
                  {"1 2 3", 0}, {"1 3 2", 1}, {"2 1 3", 1}, {"3 2 1", 2}});

  auto t21 = cell_table(h233, P({2, 1}));
  CHECK(t21 == std::map<std::string, int>{{"1 2/3", 2},
                                          {"1 3/2", 1},
                                          {"2 1/3", 2},
                                          {"2 3/1", 0},
                                          {"3 2/1", 1}});

  auto t111 = cell_table(h233, P({1, 1, 1}));
  CHECK(t111 == std::map<std::string, int>{{"1/2/3", 3},
                                           {"1/3/2", 2},
                                           {"2/1/3", 2},
                                           {"2/3/1", 1},
                                           {"3/1/2", 1},
                                           {"3/2/1", 0}});
}

TEST_CASE("enumeration order is lexicographic in the reading word") {
  for (const Partition& mu : partitions_of(4)) {
    auto fillings = enumerate_fillings(h2444, mu);
    std::vector<std::vector<int>> words;
    for (const Filling& f : fillings) words.push_back(f.reading_word());
    CHECK(std::is_sorted(words.begin(), words.end()));
    std::set<std::vector<int>> distinct(words.begin(), words.end());
    CHECK(distinct.size() == words.size());
  }
}

TEST_CASE("h-inversion spot checks") {
  CHECK(h_inversions(Filling(P({3}), {{3, 2, 1}}), h233) == 2);
  CHECK(h_inversions(Filling(P({2, 1}), {{2, 1}, {3}}), h233) == 2);
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> idword(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) idword[static_cast<size_t>(i)] = i + 1;
    for (const auto& h : enumerate_hessenberg(n))
      CHECK(h_inversions(Filling(P({n}), {idword}), h) == 0);
  }
}

TEST_CASE("Poincare polynomials for h=233") {
  CHECK(poincare_polynomial(h233, P({3})) == Poly(std::vector<Int>{1, 2, 1}));
  CHECK(poincare_polynomial(h233, P({2, 1})) == Poly(std::vector<Int>{1, 2, 2}));
  CHECK(poincare_polynomial(h233, P({1, 1, 1})) ==
        Poly(std::vector<Int>{1, 2, 2, 1}));
  CHECK_THROWS_AS(poincare_polynomial(h233, P({2, 2})), error);
}

TEST_CASE("q=1 counts cells; single-column shapes are unconstrained") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : enumerate_hessenberg(n)) {
      for (const Partition& mu : partitions_of(n))
        CHECK(poincare_polynomial(h, mu)(Int(1)) ==
              Int(enumerate_fillings(h, mu).size()));
      std::vector<int> ones(static_cast<size_t>(n), 1);
      CHECK(Int(enumerate_fillings(h, P(ones)).size()) == factorial(n));
    }
}

TEST_CASE("product formula") {
  CHECK(poincare_product(h233) == Poly(std::vector<Int>{1, 2, 1}));
  CHECK(poincare_product(h2444) == Poly(std::vector<Int>{1, 3, 4, 3, 1}));
  CHECK(poincare_product(HessenbergFunction({1, 2, 3, 4})) == Poly(1));
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : enumerate_hessenberg(n)) {
      Poly prod = poincare_product(h);
      CHECK(prod == poincare_polynomial(h, P({n})));
      CHECK(prod.palindromic());
      CHECK(prod.degree() == static_cast<int>(to_graph(h).edges.size()));
    }
}

TEST_CASE("generation tree for h=2444") {
  GenerationTree tree = generation_tree(h2444);
  REQUIRE(tree.levels.size() == 4);
  REQUIRE(tree.levels[0].size() == 1);
  CHECK(tree.nodes[0].word == std::vector<int>{1});
  CHECK(tree.nodes[0].inversions == 0);

  auto words_of = [&](const std::vector<int>& ids) {
    std::set<std::vector<int>> words;
    for (int id : ids) words.insert(tree.nodes[static_cast<size_t>(id)].word);
    return words;
  };
  CHECK(words_of(tree.levels[1]) ==
        std::set<std::vector<int>>{{2, 1}, {1, 2}});

  // children of 21 are 321 and 213; inserting 3 before 1 is pruned
  int id21 = -1;
  for (int id : tree.levels[1])
    if (tree.nodes[static_cast<size_t>(id)].word == std::vector<int>{2, 1}) id21 = id;
  REQUIRE(id21 >= 0);
  CHECK(words_of(tree.nodes[static_cast<size_t>(id21)].children) ==
        std::set<std::vector<int>>{{3, 2, 1}, {2, 1, 3}});

  int id321 = -1;
  for (int id : tree.levels[2])
    if (tree.nodes[static_cast<size_t>(id)].word == std::vector<int>{3, 2, 1}) id321 = id;
  REQUIRE(id321 >= 0);
  CHECK(words_of(tree.nodes[static_cast<size_t>(id321)].children) ==
        std::set<std::vector<int>>{{4, 3, 2, 1}, {3, 4, 2, 1}, {3, 2, 1, 4}});
}

TEST_CASE("tree structure invariants") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : enumerate_hessenberg(n)) {
      GenerationTree tree = generation_tree(h);
      // level-constant child counts matching the connectivity formula
      for (int k = 2; k <= n; ++k) {
        int expect = 1;
        for (int i = 1; i < k; ++i)
          if (k <= h(i)) ++expect;
        for (int id : tree.levels[static_cast<size_t>(k - 2)])
          CHECK(static_cast<int>(
                    tree.nodes[static_cast<size_t>(id)].children.size()) == expect);
      }
      // children ordered right to left add 0,1,2,... inversions
      for (const auto& node : tree.nodes)
        for (size_t slot = 0; slot < node.children.size(); ++slot)
          CHECK(tree.nodes[static_cast<size_t>(node.children[slot])].inversions ==
                node.inversions + static_cast<int>(slot));
      // leaves are exactly the one-row cells with their dimensions
      std::map<std::vector<int>, int> leaves;
      for (int id : tree.levels.back())
        leaves[tree.nodes[static_cast<size_t>(id)].word] =
            tree.nodes[static_cast<size_t>(id)].inversions;
      std::map<std::vector<int>, int> cells;
      for (const Filling& f : enumerate_fillings(h, P({n})))
        cells[f.reading_word()] = h_inversions(f, h);
      CHECK(leaves == cells);
    }
}

TEST_CASE("child-count multiset equals the edge-degree multiset") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& h : enumerate_hessenberg(n)) {
      std::multiset<int> children, factors;
      for (int k = 1; k <= n; ++k) {
        int c = 1;
        for (int i = 1; i < k; ++i)
          if (k <= h(i)) ++c;
        children.insert(c);
      }
      for (int i = 1; i <= n; ++i) factors.insert(h(i) - i + 1);
      CHECK(children == factors);
    }
}

TEST_CASE("bijection with acyclic orientations") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : enumerate_hessenberg(n)) {
      Graph g = to_graph(h);
      std::map<std::vector<int>, int> from_orientations;
      for (const Orientation& o : enumerate_acyclic(g))
        from_orientations[min_linear_extension(o)] = o.desc_arcs();
      std::map<std::vector<int>, int> cells;
      for (const Filling& f : enumerate_fillings(h, P({n})))
        cells[f.reading_word()] = h_inversions(f, h);
      CHECK(from_orientations == cells);
    }
}

TEST_CASE("size guards") {
  std::vector<int> big(8, 8);
  CHECK_THROWS_AS(enumerate_fillings(HessenbergFunction(big), P({8})), error);
  CHECK_THROWS_AS(generation_tree(HessenbergFunction(big)), error);
}
