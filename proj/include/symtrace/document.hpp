// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "symtrace/matrix.hpp"

namespace symtrace {

/// Reads {"n": 3, "field": "rational", "entries": [["1","2","3"], ...]}.
/// Entries are scalar strings; plain JSON integers are accepted too, floats
/// are not. Throws Parse on malformed input and CharacteristicTooSmall when
/// a prime field has p <= n.
Matrix parse_matrix_document(std::string_view json);

/// Throws Io when the file cannot be read.
Matrix load_matrix_document(const std::filesystem::path& path);

std::string to_matrix_document(const Matrix& a);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace symtrace
