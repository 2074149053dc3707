#include "dyckcells/poly.hpp"

#include <sstream>

#include "dyckcells/error.hpp"

namespace dyckcells {

Poly::Poly(Int c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

Poly::Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int k, Int c) {
  if (k < 0) fail(errc::out_of_range, "monomial exponent must be >= 0");
  Poly p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<size_t>(k) + 1, Int(0));
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.trim();
  return r;
}

Int Poly::operator()(const Int& x) const {
  Int r = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

bool Poly::palindromic() const {
  size_t k = coeffs_.size();
  for (size_t i = 0; i < k / 2; ++i)
    if (coeffs_[i] != coeffs_[k - 1 - i]) return false;
  return true;
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

Poly t_integer(int k) {
  if (k < 0) fail(errc::out_of_range, "t-integer of a negative number");
  return Poly(std::vector<Int>(static_cast<size_t>(k), Int(1)));
}

Poly t_factorial(int n) {
  Poly r = 1;
  for (int k = 1; k <= n; ++k) r *= t_integer(k);
  return r;
}

}  // namespace dyckcells
