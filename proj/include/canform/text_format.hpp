#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "canform/matrix.hpp"

namespace canform {

// Matrix text format:
//
//   field Q            (or: field GF <p>)
//   <rows> <cols>
//   <entries, row-major, whitespace separated; rationals as num or num/den>
//
// The field line may be omitted when the caller supplies the field. When both
// are present they must agree. A pair file is two matrices back to back.

Field parse_field_spec(const std::vector<std::string>& tokens);

/// Reads one matrix from the stream. Throws ParseError or FieldMismatch.
Matrix read_matrix(std::istream& in, const std::optional<Field>& override_field = std::nullopt);
/// Reads every matrix until end of input.
std::vector<Matrix> read_matrices(std::istream& in, const std::optional<Field>& override_field = std::nullopt);

Matrix read_matrix_file(const std::string& path, const std::optional<Field>& override_field = std::nullopt);
std::vector<Matrix> read_matrix_file_all(const std::string& path,
                                         const std::optional<Field>& override_field = std::nullopt);

std::string field_header(const Field& field);
std::string write_matrix(const Matrix& m);

} // namespace canform
