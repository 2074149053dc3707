#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyckcells/partition.hpp"

namespace dyckcells {

// One-line notation, values 1..n.
using Permutation = std::vector<int>;

// Weakly increasing h : [n] -> [n] with h(i) >= i. Vertices, values and edge
// endpoints are 1-based everywhere in this library.
class HessenbergFunction {
 public:
  explicit HessenbergFunction(std::vector<int> values);
  // Accepts "23555" when n <= 9, or "2,3,5,5,5".
  static HessenbergFunction parse(std::string_view text);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<size_t>(i - 1)]; }
  const std::vector<int>& values() const { return values_; }
  std::string str() const;

  friend bool operator==(const HessenbergFunction&,
                         const HessenbergFunction&) = default;
  friend auto operator<=>(const HessenbergFunction& a,
                          const HessenbergFunction& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

// Simple undirected graph on 1..n, edges stored as pairs (i,j) with i<j in
// sorted order. Dyck graphs are exactly the interval-closed ones.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

  bool has_edge(int i, int j) const;
  // every (i',j') with i <= i' < j' <= j is present whenever (i,j) is
  bool interval_closed() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

// edges {i,j} for i < j <= h(i)
Graph to_graph(const HessenbergFunction& h);
// inverse of to_graph; rejects graphs that are not interval closed
HessenbergFunction from_graph(const Graph& g);
// complement of h in the n x n square: mu_k = #{i < k : {i,k} not an edge},
// the conjugate of (n-h(1), ..., n-h(n))
Partition to_partition(const HessenbergFunction& h);
// the unique (312-avoiding) permutation with Lehmer code c_i = h(i) - i
Permutation to_permutation(const HessenbergFunction& h);

// Word over {N,E} of length 2n: for i = 1..n emit one N followed by
// h(i)-h(i-1) E's, with h(0) = 0.
std::string to_dyck_word(const HessenbergFunction& h);
HessenbergFunction from_dyck_word(std::string_view word);

// All Hessenberg functions on [n] in lexicographic order of the value lists;
// there are Catalan(n) of them. Practical bound n <= 12.
std::vector<HessenbergFunction> enumerate_hessenberg(int n);

std::string permutation_str(const Permutation& w);

}  // namespace dyckcells
