#pragma once

#include <string>

#include "json.hpp"

#include "cubicrank/form.hpp"

namespace cubicrank {

// ordered_json keeps insertion order, so reports replayed with the same seed
// are byte-for-byte identical
using Json = nlohmann::ordered_json;

// malformed or out-of-contract input file (CLI exit code 2)
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json field_element_to_json(const FieldElement& x);
FieldElement field_element_from_json(const Json& j, const std::string& field);

// {"n":..,"degree":3,"field":"Q"|"Qsqrt:<d>","coeffs":[{"exp":[..],"num":..,
//  "den":..,("num2","den2")}]} with integers as decimal strings
Json form_to_json(const CubicForm& f);
CubicForm form_from_json(const Json& j);

// same envelope with "kind" and "terms" in place of "coeffs"
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

// {"nv":..,"terms":[{"exp":[..],"num":"..","den":".."}]} for rational
// multivariate polynomials (substitution determinants, SOS data)
Json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

CubicForm load_form(const std::string& path);
Decomposition load_decomposition(const std::string& path);

// field annotation of a form's coefficients: "Q" or "Qsqrt:<d>"
std::string field_name_of(const CubicForm& f);

}  // namespace cubicrank
