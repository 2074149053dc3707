#pragma once

#include <functional>
#include <vector>

#include "dyckcells/hessenberg.hpp"
#include "dyckcells/numeric.hpp"
#include "dyckcells/partition.hpp"

namespace dyckcells {

// Coordinate vector over F_p, entries in [0, p).
using FqVec = std::vector<int>;

// Dense square matrix over F_p, p a prime <= 13.
class FqMatrix {
 public:
  FqMatrix(int n, int p);

  int n() const { return n_; }
  int modulus() const { return p_; }
  int at(int r, int c) const { return entries_[static_cast<size_t>(r * n_ + c)]; }
  void set(int r, int c, int v) { entries_[static_cast<size_t>(r * n_ + c)] = v; }
  FqVec apply(const FqVec& v) const;

 private:
  int n_, p_;
  std::vector<int> entries_;
};

// Block-diagonal nilpotent matrix with one Jordan block of size mu_i per
// part (superdiagonal ones inside each block). |mu| must equal n.
FqMatrix nilpotent_matrix(const Partition& mu, int n, int p);

// Complete flag V_1 c V_2 c ... c V_n of F_p^n; basis(k) is the canonical
// reduced-row-echelon basis of V_k.
class FqFlag {
 public:
  FqFlag(int p, std::vector<std::vector<FqVec>> steps)
      : p_(p), steps_(std::move(steps)) {}
  int modulus() const { return p_; }
  int n() const { return static_cast<int>(steps_.size()); }
  const std::vector<FqVec>& basis(int k) const {
    return steps_[static_cast<size_t>(k - 1)];
  }

 private:
  int p_;
  std::vector<std::vector<FqVec>> steps_;
};

// Every complete flag exactly once; count is the p-factorial [n]_p!.
// Guard: p^n <= 100000.
std::vector<FqFlag> enumerate_flags(int n, int p);
void for_each_flag(int n, int p, const std::function<void(const FqFlag&)>& visit);

// Number of flags with N_mu V_i contained in V_{h(i)} for all i; equals the
// Poincare polynomial of (h, mu) evaluated at q = p.
Int count_points(const HessenbergFunction& h, const Partition& mu, int p);

}  // namespace dyckcells
