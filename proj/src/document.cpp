// SPDX-License-Identifier: Apache-2.0
#include "symtrace/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace symtrace {

using nlohmann::json;

namespace {

[[noreturn]] void bad_document(const std::string& what) {
  fail(ErrorKind::Parse, "matrix document: " + what);
}

std::string scalar_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  bad_document("entries must be strings or integers, got " + value.dump());
}

}  // namespace

Matrix parse_matrix_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad_document(e.what());
  }
  if (!doc.is_object()) bad_document("top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    bad_document("\"n\" must be a positive integer");
  }
  if (!doc.contains("field") || !doc["field"].is_string()) bad_document("\"field\" must be a string");
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    bad_document("\"entries\" must be an array of rows");
  }
  const auto n = doc["n"].get<std::size_t>();
  if (n == 0) bad_document("\"n\" must be positive");
  const auto field = Field::parse(doc["field"].get<std::string>());
  const auto& rows = doc["entries"];
  if (rows.size() != n) bad_document("expected " + std::to_string(n) + " rows");

  std::vector<std::vector<FieldElement>> grid;
  grid.reserve(n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      bad_document("every row must hold " + std::to_string(n) + " entries");
    }
    auto& out = grid.emplace_back();
    for (const auto& value : row) out.push_back(FieldElement::parse(scalar_text(value), field));
  }
  return Matrix::from_rows(grid);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorKind::Io, "cannot read " + path.string());
  return buffer.str();
}

Matrix load_matrix_document(const std::filesystem::path& path) {
  return parse_matrix_document(read_text_file(path));
}

std::string to_matrix_document(const Matrix& a) {
  const auto n = a.dimension();
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(a(i, j).to_string());
    rows.push_back(std::move(row));
  }
  json doc;
  doc["n"] = n;
  doc["field"] = a.like().field().to_string();
  doc["entries"] = std::move(rows);
  return doc.dump();
}

}  // namespace symtrace
