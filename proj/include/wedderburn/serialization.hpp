#pragma once

#include <string>

#include "json.hpp"
#include "wedderburn/algebra.hpp"
#include "wedderburn/decomposition.hpp"
#include "wedderburn/generators.hpp"

namespace wedderburn {

using Json = nlohmann::ordered_json;

// All readers throw InvalidInput on malformed documents. Algebra readers
// additionally run the full presentation validation.

Json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const Json& doc);

Json cayley_to_json(const CayleyTable& t);
CayleyTable cayley_from_json(const Json& doc);

/// `verification` is omitted when null.
Json report_to_json(const DecompositionReport& r, const VerificationReport* verification = nullptr);
DecompositionReport report_from_json(const Json& doc);

Json matrix_to_json(const Matrix& m);

/// Sidecar written next to a scrambled algebra: {p, dim, matrix}.
Json scramble_to_json(const Matrix& s);

/// Parses JSON text; InvalidInput on syntax errors.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::string& path, const Json& doc);
std::string dump(const Json& doc);

}  // namespace wedderburn
