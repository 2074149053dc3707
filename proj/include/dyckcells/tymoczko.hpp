#pragma once

#include <string>
#include <vector>

#include "dyckcells/hessenberg.hpp"
#include "dyckcells/partition.hpp"
#include "dyckcells/poly.hpp"

namespace dyckcells {

// Bijective filling of the Ferrers diagram of mu by 1..n, French convention:
// rows_[0] is the bottom row of length mu_1, rows are left justified.
class Filling {
 public:
  Filling(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int row, int col) const {
    return rows_[static_cast<size_t>(row)][static_cast<size_t>(col)];
  }
  // bottom row first, each row left to right
  std::vector<int> reading_word() const;
  // rows bottom to top, entries space separated, rows joined by '/':
  // "1 2/3" is bottom row (1,2) with 3 on top
  std::string str() const;

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Row-adjacency rule: x immediately left of y requires x <= h(y).
bool admissible(const Filling& f, const HessenbergFunction& h);

// All admissible fillings of shape mu, |mu| = n, ordered lexicographically
// by reading word. n <= 7.
std::vector<Filling> enumerate_fillings(const HessenbergFunction& h,
                                        const Partition& mu);

// Pairs (a,b), a < b, with b strictly above a in the same column or in a
// column strictly to the left (any row), subject to b <= h(c) whenever a has
// an immediate right neighbor c. This is the cell dimension.
int h_inversions(const Filling& f, const HessenbergFunction& h);

// Sum over admissible fillings of q^{h_inversions}.
Poly poincare_polynomial(const HessenbergFunction& h, const Partition& mu);

// prod_{i=1}^n [h(i)-i+1]_t; palindromic of degree |E|.
Poly poincare_product(const HessenbergFunction& h);

// Insertion tree of admissible single-row fillings: the root is the word
// "1"; a node at level k-1 gets one child per allowed slot for k (at the
// right end, or immediately left of any i with k <= h(i)). Children are
// ordered right to left, adding 0,1,2,... inversions.
struct GenerationTree {
  struct Node {
    std::vector<int> word;
    int inversions = 0;
    int parent = -1;
    std::vector<int> children;  // node ids
  };
  std::vector<Node> nodes;               // id-indexed, root is 0
  std::vector<std::vector<int>> levels;  // levels[k-1] = ids of level k
};

GenerationTree generation_tree(const HessenbergFunction& h);

}  // namespace dyckcells
