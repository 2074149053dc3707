#pragma once

#include <string>
#include <vector>

#include "dyckcells/hessenberg.hpp"

namespace dyckcells {

// Orientation of a graph's edges. Bit k directs edge k of the graph's sorted
// edge list: true orients i -> j for the stored pair (i,j) with i < j (an
// ascending arc). Construction verifies acyclicity.
class Orientation {
 public:
  Orientation(Graph g, std::vector<bool> up);

  const Graph& graph() const { return graph_; }
  bool up(int edge_index) const { return up_[static_cast<size_t>(edge_index)]; }
  const std::vector<bool>& directions() const { return up_; }
  // '1' = ascending arc, edges in sorted order
  std::string bits() const;
  int asc_arcs() const;
  int desc_arcs() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  Graph graph_;
  std::vector<bool> up_;
};

// All acyclic orientations, in increasing order of the direction bit vector
// read as a binary number ('1' = ascending, most significant bit = first
// edge). |E| <= 20.
std::vector<Orientation> enumerate_acyclic(const Graph& g);

// Strict order relation of P(o): transitive closure of the arcs.
struct Poset {
  int n = 0;
  std::vector<std::vector<bool>> less;  // less[a-1][b-1]: a <_P b
  bool less_than(int a, int b) const {
    return less[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)];
  }
};

Poset poset(const Orientation& o);

// All linear extensions of P(o), lexicographically sorted. n <= 8.
std::vector<Permutation> linear_extensions(const Orientation& o);

// The lexicographically smallest linear extension: repeatedly take the
// smallest remaining minimal element.
Permutation min_linear_extension(const Orientation& o);

// Direct each edge from the endpoint appearing earlier in sigma to the later
// one; sigma is a linear extension of the result.
Orientation orientation_from_permutation(const Graph& g, const Permutation& sigma);

}  // namespace dyckcells
