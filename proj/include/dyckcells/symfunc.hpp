#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dyckcells/partition.hpp"
#include "dyckcells/poly.hpp"

namespace dyckcells {

enum class Basis { m, e, h, s };

char basis_char(Basis b);
std::optional<Basis> basis_from_char(char c);

// Homogeneous symmetric function of a fixed degree with Poly coefficients,
// expressed in one of the classical bases. Zero coefficients are never
// stored; term iteration follows the canonical partition order.
class SymF {
 public:
  SymF(int degree, Basis basis);
  static SymF term(int degree, Basis basis, const Partition& la, Poly c);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, Poly>& terms() const { return terms_; }
  Poly coeff(const Partition& la) const;
  void set_coeff(const Partition& la, Poly c);
  void add_coeff(const Partition& la, const Poly& c);
  bool is_zero() const { return terms_.empty(); }

  SymF& operator+=(const SymF& o);          // same degree and basis
  friend SymF operator+(SymF a, const SymF& b) { return a += b; }
  friend SymF operator*(const SymF& a, const Poly& c);
  friend bool operator==(const SymF&, const SymF&) = default;

  std::string str(std::string_view var = "t") const;

 private:
  int degree_;
  Basis basis_;
  std::map<Partition, Poly> terms_;
};

// Quasisymmetric function of fixed degree on the monomial basis M_alpha,
// keyed by compositions of the degree.
class QSymF {
 public:
  explicit QSymF(int degree);

  int degree() const { return degree_; }
  const std::map<Composition, Poly>& terms() const { return terms_; }
  Poly coeff(const Composition& alpha) const;
  void add_coeff(const Composition& alpha, const Poly& c);
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const QSymF&, const QSymF&) = default;

 private:
  int degree_;
  std::map<Composition, Poly> terms_;
};

// Change of basis; exact, invertible. Degrees up to 12 (transition data is
// computed per degree and cached).
SymF convert(const SymF& f, Basis target);

// omega involution: e_la <-> h_la, s_la -> s_la'.
SymF omega(const SymF& f);

// Hall scalar product, <h_la, m_nu> = delta. The default route converts the
// left argument to h and the right to m; the _schur route uses orthonormality
// of the s basis. Both are exposed so they can be checked against each other.
Poly hall_scalar(const SymF& f, const SymF& g);
Poly hall_scalar_schur(const SymF& f, const SymF& g);

// Number of semistandard tableaux of shape la and content mu.
Int kostka_number(const Partition& la, const Partition& mu);

// Modified Kostka-Foulkes polynomial: sum of q^cocharge(T) over semistandard
// tableaux of shape la and content mu.
Poly kostka_foulkes_modified(const Partition& la, const Partition& mu);

// Q~'_mu = sum_la K~_{la,mu}(q) s_la, returned in the s basis. |mu| <= 10.
SymF modified_hall_littlewood(const Partition& mu);

struct SymmetryWitness {
  Composition a, b;  // rearrangements of each other
  Poly coeff_a, coeff_b;
};

// Empty when the M-coefficients are constant on rearrangement classes.
std::optional<SymmetryWitness> asymmetry_witness(const QSymF& f);
bool is_symmetric(const QSymF& f);

// Collapse a symmetric quasisymmetric function to the m basis; throws
// not_symmetric (with the witness pair in the message) otherwise.
SymF qsym_to_sym(const QSymF& f);

// Cocharge of a word with partition content, computed by repeated extraction
// of standard subwords (rightmost 1, then rightmost 2 to its left with
// wraparound, ...). Exposed for direct testing.
int cocharge(const std::vector<int>& word);

}  // namespace dyckcells
