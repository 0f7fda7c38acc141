#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "bohr/coefficient.hpp"
#include "bohr/polynomial.hpp"

namespace bohr {

// Key order is preserved so that serialized output is canonical.
using Json = nlohmann::ordered_json;

// {"root":[k,m]} with (k,m) reduced, {"re":x,"im":y}, or {"zero":true}.
Json to_json(const Coefficient& c);
Coefficient coefficient_from_json(const Json& j);

// {"kind":"dirichlet","terms":[{"n":..,"coeff":..}, ...]} ascending in n.
Json to_json(const DirichletPolynomial& p);
// {"kind":"multi","vars":r,"terms":[{"exp":[..],"coeff":..}, ...]} in lex order.
Json to_json(const MultiPolynomial& p);

// Both throw ConfigError on schema violations (wrong kind, bad n, missing
// fields) and DimensionError on exponent vectors of the wrong length.
DirichletPolynomial dirichlet_from_json(const Json& j);
MultiPolynomial multi_from_json(const Json& j);

using AnyPolynomial = std::variant<DirichletPolynomial, MultiPolynomial>;
AnyPolynomial polynomial_from_json(const Json& j);

// Canonical text form: compact, one trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace bohr
