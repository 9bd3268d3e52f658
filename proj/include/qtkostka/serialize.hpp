#pragma once

#include <json.hpp>
#include <string>

#include "qtkostka/partition.hpp"
#include "qtkostka/qt_poly.hpp"

namespace qtk {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const QtPolynomial& p);  // [[e_q, e_t, "coeff"], ...]
Json to_json(const QtRational& r);    // {"num": [...], "den": [[a, b, mult], ...]}

Partition partition_from_json(const Json& j);
QtPolynomial polynomial_from_json(const Json& j);
QtRational rational_from_json(const Json& j);

// Human-readable forms. Terms are written highest first.
std::string to_pretty(const QtPolynomial& p);
std::string to_pretty(const QtRational& r);
std::string to_latex(const QtPolynomial& p);
std::string to_latex(const QtRational& r);
// (1 - q^a*t^b)(1 - ...), or "1" for the empty product.
std::string to_pretty(const FactorList& factors);

}  // namespace qtk
