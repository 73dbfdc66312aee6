#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewpbw/scalar.hpp"

namespace skewpbw::detail {

/// Element of the free algebra: word (variable indices) -> coefficient.
/// Scalars written to the right of a word are moved left through sigma.
using FreeSum = std::map<std::vector<std::size_t>, Scalar>;

FreeSum parse_free(std::string_view text, const Field& field, const std::vector<std::string>& names,
                   const std::vector<AutomorphismSpec>& sigma);

/// i, z and zeta when the field has them.
std::optional<Scalar> scalar_symbol(std::string_view name, const Field& field);

/// Joins (coefficient, monomial) pairs as "2*x*y - x + 1"; an empty
/// monomial string denotes the constant term.
std::string format_terms(const std::vector<std::pair<Scalar, std::string>>& terms);

}  // namespace skewpbw::detail
