#ifndef FRAMECERT_SERIALIZE_HPP
#define FRAMECERT_SERIALIZE_HPP

#include <json.hpp>

#include "framecert/polynomial.hpp"
#include "framecert/roots.hpp"

namespace framecert {

using Json = nlohmann::json;

/// {"variables": [names...], "terms": [[[exponents...], [re, im]], ...]}
/// with exact rational strings; terms in canonical order.
Json polynomial_to_json(const Polynomial& p);

/// Inverse of polynomial_to_json. When `expected` is given the stored
/// variable list must match it exactly.
Polynomial polynomial_from_json(const Json& j, VariableTablePtr expected = nullptr);

Json gauss_to_json(const GaussRational& z);
GaussRational gauss_from_json(const Json& j);

Json root_to_json(const ComplexRoot& r, size_t digits = 40);

}  // namespace framecert

#endif
