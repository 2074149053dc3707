#pragma once

#include <json.hpp>

#include "dyckcells/poly.hpp"
#include "dyckcells/symfunc.hpp"

namespace dyckcells {

// Polynomials serialize as ascending-exponent coefficient arrays; entries
// are JSON numbers when they fit in 64 bits and decimal strings otherwise.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

// {"degree":n,"basis":"e","terms":[{"partition":[2,1],"coeffs":[0,1]}]}
// with terms in the canonical partition order.
nlohmann::json to_json(const SymF& f);
SymF symf_from_json(const nlohmann::json& j);

// {"degree":n,"terms":[{"composition":[1,2],"coeffs":[...]}]}, compositions
// in lexicographic order.
nlohmann::json to_json(const QSymF& f);
QSymF qsymf_from_json(const nlohmann::json& j);

}  // namespace dyckcells
