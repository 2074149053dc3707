#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dyckcells/error.hpp"
#include "dyckcells/flags.hpp"
#include "dyckcells/tymoczko.hpp"
#include "oracles.hpp"

using namespace dyckcells;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

const HessenbergFunction h233 = HessenbergFunction::parse("233");

Int p_factorial(int n, int p) { return t_factorial(n)(Int(p)); }

}  // namespace

TEST_CASE("nilpotent matrices") {
  FqMatrix zero = nilpotent_matrix(P({1, 1, 1}), 3, 2);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(zero.at(r, c) == 0);

  FqMatrix block = nilpotent_matrix(P({3}), 3, 5);
  CHECK(block.apply({1, 0, 0}) == FqVec{0, 0, 0});
  CHECK(block.apply({0, 1, 0}) == FqVec{1, 0, 0});
  CHECK(block.apply({0, 0, 1}) == FqVec{0, 1, 0});

  FqMatrix mixed = nilpotent_matrix(P({2, 1}), 3, 3);
  CHECK(mixed.apply({0, 1, 0}) == FqVec{1, 0, 0});
  CHECK(mixed.apply({1, 0, 0}) == FqVec{0, 0, 0});
  CHECK(mixed.apply({0, 0, 1}) == FqVec{0, 0, 0});

  CHECK_THROWS_AS(nilpotent_matrix(P({2, 1}), 4, 2), error);
}

TEST_CASE("flag counts are p-factorials") {
  CHECK(enumerate_flags(3, 2).size() == 21);
  CHECK(enumerate_flags(1, 7).size() == 1);
  CHECK(enumerate_flags(2, 3).size() == 4);
  for (int p : {2, 3})
    for (int n = 1; n <= 4; ++n)
      CHECK(Int(enumerate_flags(n, p).size()) == p_factorial(n, p));
}

TEST_CASE("flags are canonical and nested") {
  auto flags = enumerate_flags(3, 3);
  std::set<std::vector<std::vector<FqVec>>> distinct;
  for (const FqFlag& f : flags) {
    std::vector<std::vector<FqVec>> steps;
    for (int k = 1; k <= f.n(); ++k) steps.push_back(f.basis(k));
    CHECK(distinct.insert(steps).second);
    for (int k = 1; k <= f.n(); ++k) {
      const auto& rows = f.basis(k);
      CHECK(static_cast<int>(rows.size()) == k);
      // leading columns strictly increase and carry leading ones
      int prev = -1;
      for (const FqVec& row : rows) {
        int lead = 0;
        while (lead < 3 && row[static_cast<size_t>(lead)] == 0) ++lead;
        CHECK(lead < 3);
        CHECK(row[static_cast<size_t>(lead)] == 1);
        CHECK(lead > prev);
        prev = lead;
      }
    }
  }
}

TEST_CASE("hand counts for h=233 at p=2") {
  CHECK(count_points(h233, P({3}), 2) == 9);
  CHECK(count_points(h233, P({2, 1}), 2) == 13);
  CHECK(count_points(h233, P({1, 1, 1}), 2) == 21);
}

TEST_CASE("point counts match Poincare polynomial evaluations at n=3") {
  for (const auto& h : enumerate_hessenberg(3))
    for (const Partition& mu : partitions_of(3))
      for (int p : {2, 3, 5})
        CHECK(count_points(h, mu, p) == poincare_polynomial(h, mu)(Int(p)));
}

TEST_CASE("void conditions count every flag") {
  for (const auto& h : enumerate_hessenberg(3))
    for (int p : {2, 3})
      CHECK(count_points(h, P({1, 1, 1}), p) == p_factorial(3, p));
  std::vector<int> ones{1, 1, 1, 1};
  CHECK(count_points(HessenbergFunction({2, 3, 4, 4}), P(ones), 2) ==
        p_factorial(4, 2));
}

TEST_CASE("relaxing h never loses points") {
  auto list = enumerate_hessenberg(3);
  for (const auto& h1 : list)
    for (const auto& h2 : list) {
      bool pointwise_le = true;
      for (int i = 1; i <= 3; ++i)
        if (h1(i) > h2(i)) pointwise_le = false;
      if (!pointwise_le) continue;
      for (const Partition& mu : partitions_of(3))
        CHECK(count_points(h1, mu, 2) <= count_points(h2, mu, 2));
    }
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_flags(6, 7), error);   // 7^6 > 100000
  CHECK_THROWS_AS(enumerate_flags(3, 4), error);   // not prime
  CHECK_THROWS_AS(enumerate_flags(3, 17), error);  // prime too large
  CHECK_THROWS_AS(count_points(h233, P({2, 2}), 2), error);
}
