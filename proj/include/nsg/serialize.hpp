#pragma once

#include <json.hpp>

#include "nsg/core.hpp"
#include "nsg/error.hpp"
#include "nsg/modular.hpp"
#include "nsg/presentations.hpp"

namespace nsg {

using Json = nlohmann::ordered_json;

/// {min_gens, frobenius, genus, gaps}; gaps ascending.
Json to_json(const NumericalSemigroup& s);

/// Rebuilds from min_gens and checks the other fields. Throws ParseError on a
/// malformed or inconsistent object.
NumericalSemigroup semigroup_from_json(const Json& j);

Json to_json(const modular::Fraction& f);
/// [[lhs...], [rhs...]]
Json to_json(const pres::Relation& r);
/// {code, class, message, witness}
Json to_json(const Error& e);

std::string_view to_string(ErrorClass c) noexcept;

}  // namespace nsg
