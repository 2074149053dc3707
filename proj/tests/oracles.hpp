#pragma once

// Independent reference implementations used only by the tests. These must
// not share code paths with the library routines they check.

#include <functional>
#include <random>
#include <vector>

#include "dyckcells/hessenberg.hpp"
#include "dyckcells/numeric.hpp"
#include "dyckcells/partition.hpp"
#include "dyckcells/poly.hpp"
#include "dyckcells/symfunc.hpp"

namespace oracle {

using dyckcells::Composition;
using dyckcells::Graph;
using dyckcells::Int;
using dyckcells::Partition;
using dyckcells::Permutation;
using dyckcells::Poly;

// Kostka number by the horizontal-strip recursion: peel the cells holding
// the largest value (they form a horizontal strip of size mu_last).
inline Int kostka(const std::vector<int>& la, const std::vector<int>& mu) {
  if (mu.empty()) return la.empty() ? 1 : 0;
  const int strip = mu.back();
  std::vector<int> mu_rest(mu.begin(), mu.end() - 1);
  Int total = 0;
  std::vector<int> nu(la.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t row, int budget) {
    if (row == la.size()) {
      if (budget != 0) return;
      std::vector<int> trimmed(nu);
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      total += kostka(trimmed, mu_rest);
      return;
    }
    int below = row + 1 < la.size() ? la[row + 1] : 0;
    for (int v = below; v <= la[row]; ++v) {
      int removed = la[row] - v;
      if (removed > budget) continue;
      nu[row] = v;
      rec(row + 1, budget - removed);
    }
  };
  rec(0, strip);
  return total;
}

inline Int kostka(const Partition& la, const Partition& mu) {
  return kostka(la.parts(), mu.parts());
}

// Number of proper colorings c : V -> [k], by direct k^n enumeration.
inline Int proper_colorings(const Graph& g, int k) {
  Int count = 0;
  std::vector<int> c(static_cast<size_t>(g.n), 1);
  for (;;) {
    bool proper = true;
    for (auto [i, j] : g.edges)
      if (c[static_cast<size_t>(i - 1)] == c[static_cast<size_t>(j - 1)]) {
        proper = false;
        break;
      }
    if (proper) ++count;
    size_t v = 0;
    while (v < c.size()) {
      if (++c[v] <= k) break;
      c[v] = 1;
      ++v;
    }
    if (v == c.size()) break;
  }
  return count;
}

// Lehmer code: code[i] = #{j > i : w_j < w_i}.
inline std::vector<int> lehmer_code(const Permutation& w) {
  std::vector<int> code(w.size(), 0);
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[j] < w[i]) ++code[i];
  return code;
}

inline bool contains_312(const Permutation& w) {
  const size_t n = w.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k)
        if (w[j] < w[k] && w[k] < w[i]) return true;
  return false;
}

inline Poly random_poly(std::mt19937& rng, int max_degree = 3, int max_coeff = 4) {
  std::uniform_int_distribution<int> deg_dist(0, max_degree);
  std::uniform_int_distribution<int> coeff_dist(-max_coeff, max_coeff);
  std::vector<Int> coeffs(static_cast<size_t>(deg_dist(rng)) + 1);
  for (Int& c : coeffs) c = coeff_dist(rng);
  return Poly(std::move(coeffs));
}

inline dyckcells::SymF random_symf(std::mt19937& rng, int degree,
                                   dyckcells::Basis basis) {
  dyckcells::SymF f(degree, basis);
  for (const Partition& la : dyckcells::partitions_of(degree))
    if (rng() % 2 == 0) f.add_coeff(la, random_poly(rng));
  return f;
}

}  // namespace oracle
