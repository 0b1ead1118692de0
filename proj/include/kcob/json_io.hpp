#pragma once

#include <json.hpp>
#include <string>

#include "kcob/int_matrix.hpp"
#include "kcob/knot.hpp"

namespace kcob {

/// Integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise. Both spellings are accepted on input.
nlohmann::json integer_to_json(const Integer& v);
/// Throws std::invalid_argument naming `where` on anything else.
Integer integer_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const nlohmann::json& j, const std::string& where);

/// Knot file format:
///   { "name": string,
///     "seifert": [[int, ...], ...],
///     "decorations": [ { "band": int, "companion": knot | string, "copies": int } ],
///     "summands": int }
/// Only "seifert" is required. A string companion names a built-in knot.
DecoratedKnot knot_from_json(const nlohmann::json& j);
nlohmann::json knot_to_json(const DecoratedKnot& k);

/// "builtin:NAME" or a path to a knot file.
DecoratedKnot load_knot(const std::string& ref);

}  // namespace kcob
