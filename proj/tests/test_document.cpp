#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "symtrace/document.hpp"
#include "symtrace/random.hpp"

using namespace symtrace;

namespace {

ErrorKind kind_of(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("parse the reference document") {
  const auto a = parse_matrix_document(
      R"({"n": 3, "field": "rational", "entries": [["1","2","3"],["4","5","6"],["7","8","10"]]})");
  CHECK(a == matrix_from_integers({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}, Field::rational()));
  const auto b = parse_matrix_document(R"({"n": 2, "field": "gf:7", "entries": [["13", 9], ["-1", "0"]]})");
  CHECK(b(0, 0) == FieldElement::from_integer(6, Field::prime(7)));
  CHECK(b(0, 1).as_residue() == 2);
  CHECK(b(1, 0).as_residue() == 6);
}

TEST_CASE("malformed documents") {
  for (const char* bad : {
           "not json",
           R"({"field": "rational", "entries": [["1"]]})",
           R"({"n": 2, "field": "rational", "entries": [["1","2"]]})",
           R"({"n": 2, "field": "rational", "entries": [["1","2"],["3"]]})",
           R"({"n": 1, "field": "rational", "entries": [[1.5]]})",
           R"({"n": 1, "field": "reals", "entries": [["1"]]})",
           R"({"n": 1, "field": "rational", "entries": [["1/0"]]})",
           R"({"n": 0, "field": "rational", "entries": []})",
           R"([1, 2])",
           R"({"n": 1, "field": "gf:7", "entries": [["3/4"]]})",
       }) {
    CAPTURE(bad);
    CHECK(kind_of([&] { (void)parse_matrix_document(bad); }) == ErrorKind::Parse);
  }
  CHECK(kind_of([] {
          (void)parse_matrix_document(R"({"n": 3, "field": "gf:3", "entries": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
        }) == ErrorKind::CharacteristicTooSmall);
}

TEST_CASE("round trip through a file") {
  SeededRng rng(4);
  const auto path = std::filesystem::temp_directory_path() / "symtrace_document_test.json";
  for (const auto F : {Field::rational(), Field::prime(10007)}) {
    const auto a = random_matrix(4, F, rng) * FieldElement::from_rational(mpq_class(1, 3), F);
    { std::ofstream(path) << to_matrix_document(a); }
    CHECK(load_matrix_document(path) == a);
    CHECK(parse_matrix_document(to_matrix_document(a)) == a);
  }
  std::filesystem::remove(path);
  CHECK(kind_of([&] { (void)load_matrix_document(path); }) == ErrorKind::Io);
}
