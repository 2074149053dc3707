#pragma once

#include <map>
#include <vector>

#include "dyckcells/hessenberg.hpp"
#include "dyckcells/symfunc.hpp"

namespace dyckcells {

// Colors c_1..c_n, positive integers.
using Coloring = std::vector<int>;

// Number of edges (i,j), i<j, with c_i < c_j. Throws improper_coloring with
// a witness edge when c is not proper for g.
int ascents(const Graph& g, const Coloring& c);

// X_G(t): sum over proper packed colorings of t^asc M_ev(c), via exhaustive
// enumeration of surjections onto [r] for r = 1..n. Accepts any simple
// graph, not only Dyck graphs. n <= 8.
QSymF chromatic_qsym(const Graph& g);

// Coefficients c_la(t) with X_G = sum c_la(t) e_la. Throws not_symmetric for
// graphs whose X_G is genuinely quasisymmetric.
std::map<Partition, Poly> e_expansion(const Graph& g);

// Sum of the e-basis coefficients, two independent routes.
Poly e_coefficient_sum(const Graph& g);
Poly e_coefficient_sum_via_hall(const Graph& g);  // <omega X_G, h_n>

}  // namespace dyckcells
