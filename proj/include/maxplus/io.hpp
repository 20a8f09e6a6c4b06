#pragma once

// Text formats. Every index that appears in text is 1-based.
//
// Matrix files: one row per line, entries separated by whitespace. An entry
// is an integer, a decimal ("2.5", "-0.5"), a fraction "p/q", or "-inf"
// (alias "*") for bottom. Blank lines and text after '#' are ignored.
// LF and CRLF line endings are accepted.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "maxplus/assignment.hpp"
#include "maxplus/hilbert.hpp"
#include "maxplus/matrix.hpp"
#include "maxplus/polytrope.hpp"

namespace maxplus::io {

struct MatrixDocument {
  std::string name;
  Matrix matrix;
  std::string source;
};

/// Throws ParseError with the line and column of the offending token.
MatrixDocument parse_matrix(std::string_view text, const std::string& source = "");
/// Reads and parses a file; the name is the file stem.
MatrixDocument read_matrix_file(const std::string& path);
/// Inverse of parse_matrix.
std::string serialize_matrix(const Matrix& a);

/// Single entry token. Throws ParseError (line 1).
Scalar parse_scalar(std::string_view token);
/// Exact number without bottom. Throws ParseError.
Rational parse_rational(std::string_view token);

/// Decimal when the denominator has only factors 2 and 5 ("-1.5"),
/// otherwise "p/q".
std::string format_rational(const Rational& r);
std::string format_scalar(const Scalar& s);
std::string format_distance(const Distance& d);

/// "[0 2.5 -3]"; entries joined by single spaces.
std::string format_vector(const Vector& v);
/// Rows on separate lines, columns right-aligned.
std::string format_matrix(const Matrix& a);

/// Entries separated by commas and/or whitespace, optional brackets:
/// "0,2.5,-3", "[0 2.5 -3]". Throws ParseError.
Vector parse_vector(std::string_view text);

/// "{2,3};{4};{1}"; "{}" is the empty set. Sets are sorted and deduplicated.
CombinatorialType parse_type(std::string_view text);
std::string format_type(const CombinatorialType& t);
/// "{1,2,3}".
std::string format_index_set(const std::vector<std::size_t>& set);

/// Cycle notation. Each cycle is rotated so its largest element comes
/// second and cycles are ordered by smallest element: "(231)", "(13)(2)".
/// Elements are written without separators when n <= 9, otherwise
/// space-separated: "(1 10 2)".
std::string format_permutation(const Permutation& p);
/// Parses cycle notation of any rotation; omitted points are fixed.
Permutation parse_permutation(std::string_view text, std::size_t n);

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Matrix& a);
nlohmann::json to_json(const Distance& d);

}  // namespace maxplus::io
