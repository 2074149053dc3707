#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dyckcells/numeric.hpp"

namespace dyckcells {

// Dense univariate polynomial with exact integer coefficients. There is a
// single formal variable in the whole library; it prints as "t" unless asked
// otherwise. Canonical form: no trailing zero coefficient, the zero
// polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  Poly(int c) : Poly(Int(c)) {}
  Poly(Int c);
  explicit Poly(std::vector<Int> coeffs);

  static Poly monomial(int k, Int c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int k) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly&, const Poly&) = default;

  Int operator()(const Int& x) const;
  bool palindromic() const;

  std::string str(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

// [k]_t = 1 + t + ... + t^{k-1}; [0]_t = 0.
Poly t_integer(int k);
// [n]_t! = [1]_t [2]_t ... [n]_t.
Poly t_factorial(int n);

}  // namespace dyckcells
