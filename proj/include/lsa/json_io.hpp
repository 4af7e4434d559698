#pragma once

#include "lsa/algebra.hpp"
#include "lsa/extensions.hpp"

#include <json.hpp>
#include <string>

namespace lsa {

/// Parses JSON text; syntax errors become InputError carrying the byte offset.
nlohmann::json parse_json(const std::string& text, const std::string& source = "input");
nlohmann::json read_json_file(const std::string& path);

/// Accepts 3, "p/q", {"num": p, "den": q} or [p, q].
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& q);

/// Matrix as an array of rows; each entry a rational.
QMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);
nlohmann::json matrix_to_json(const QMatrix& m);
QVector vector_from_json(const nlohmann::json& j, std::size_t n);
nlohmann::json vector_to_json(const QVector& v);

/// Parameters are checked against their constraints (ConstraintError).
Algebra algebra_from_json(const nlohmann::json& j);
nlohmann::json algebra_to_json(const Algebra& a);

/// "g" may be omitted when require_g is false; it then defaults to zero.
ExtensionData extension_from_json(const nlohmann::json& j, bool require_g = true);
nlohmann::json extension_to_json(const ExtensionData& d);

}  // namespace lsa
