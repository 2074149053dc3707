#include "dyckcells/json_io.hpp"

#include <string>

#include "dyckcells/error.hpp"

namespace dyckcells {

namespace {

nlohmann::json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<int64_t>(v.get_si());
  return v.get_str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  fail(errc::parse_error, "expected an integer or a decimal string");
}

}  // namespace

nlohmann::json to_json(const Poly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& c : p.coeffs()) arr.push_back(int_to_json(c));
  return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) fail(errc::parse_error, "polynomial must be an array");
  std::vector<Int> coeffs;
  for (const auto& c : j) coeffs.push_back(int_from_json(c));
  return Poly(std::move(coeffs));
}

nlohmann::json to_json(const SymF& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [la, c] : f.terms())
    terms.push_back({{"partition", la.parts()}, {"coeffs", to_json(c)}});
  return {{"degree", f.degree()},
          {"basis", std::string(1, basis_char(f.basis()))},
          {"terms", terms}};
}

SymF symf_from_json(const nlohmann::json& j) {
  std::string b = j.at("basis").get<std::string>();
  auto basis = b.size() == 1 ? basis_from_char(b[0]) : std::nullopt;
  if (!basis) fail(errc::parse_error, "unknown basis '" + b + "'");
  SymF f(j.at("degree").get<int>(), *basis);
  for (const auto& term : j.at("terms"))
    f.add_coeff(Partition(term.at("partition").get<std::vector<int>>()),
                poly_from_json(term.at("coeffs")));
  return f;
}

nlohmann::json to_json(const QSymF& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [alpha, c] : f.terms())
    terms.push_back({{"composition", alpha}, {"coeffs", to_json(c)}});
  return {{"degree", f.degree()}, {"terms", terms}};
}

QSymF qsymf_from_json(const nlohmann::json& j) {
  QSymF f(j.at("degree").get<int>());
  for (const auto& term : j.at("terms"))
    f.add_coeff(term.at("composition").get<Composition>(),
                poly_from_json(term.at("coeffs")));
  return f;
}

}  // namespace dyckcells
