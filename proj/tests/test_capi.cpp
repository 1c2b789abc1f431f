// Exercises libsymtrace through its C header only.
#include <cstring>
#include <string>

#include "doctest.h"
#include "symtrace/symtrace.h"

namespace {

const char* kFixture =
    R"({"n": 3, "field": "rational", "entries": [["1","2","3"],["4","5","6"],["7","8","10"]]})";

struct Matrix {
  symtrace_matrix* m = nullptr;
  explicit Matrix(const char* json) { REQUIRE(symtrace_matrix_parse_json(json, &m) == SYMTRACE_OK); }
  ~Matrix() { symtrace_matrix_free(m); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  symtrace_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("sym_trace by every method") {
  Matrix a(kFixture);
  CHECK(symtrace_matrix_dimension(a.m) == 3);
  for (auto method : {SYMTRACE_METHOD_AUTO, SYMTRACE_METHOD_THEOREM, SYMTRACE_METHOD_RECURRENCE,
                      SYMTRACE_METHOD_ORACLE}) {
    char* value = nullptr;
    REQUIRE(symtrace_sym_trace(a.m, 2, method, nullptr, &value) == SYMTRACE_OK);
    CHECK(take(value) == "268");
  }
  char* json = nullptr;
  REQUIRE(symtrace_compute_json(a.m, 3, SYMTRACE_METHOD_THEOREM, "a13", &json) == SYMTRACE_OK);
  CHECK(take(json) == R"({"k":3,"sym_trace":"4477","method":"theorem","functional":"a13"})");
}

TEST_CASE("theorem sides") {
  Matrix a(kFixture);
  char *lhs = nullptr, *rhs = nullptr;
  REQUIRE(symtrace_theorem_sides(a.m, "E12", 2, &lhs, &rhs) == SYMTRACE_OK);
  CHECK(take(lhs) == "600");
  CHECK(take(rhs) == "600");
  REQUIRE(symtrace_theorem_sides(a.m, "E12", -1, &lhs, &rhs) == SYMTRACE_OK);
  CHECK(take(lhs) == "0");
  CHECK(take(rhs) == "0");
}

TEST_CASE("error codes and messages") {
  symtrace_matrix* m = nullptr;
  CHECK(symtrace_matrix_parse_json("{", &m) == SYMTRACE_ERR_PARSE);
  CHECK(m == nullptr);
  CHECK(std::string(symtrace_last_error()).rfind("ParseError", 0) == 0);
  CHECK(symtrace_matrix_load("/nonexistent/matrix.json", &m) == SYMTRACE_ERR_IO);
  CHECK(symtrace_matrix_parse_json(nullptr, &m) == SYMTRACE_ERR_INVALID_ARGUMENT);

  Matrix id(R"({"n": 3, "field": "rational", "entries": [["1","0","0"],["0","1","0"],["0","0","1"]]})");
  char* value = nullptr;
  CHECK(symtrace_sym_trace(id.m, 2, SYMTRACE_METHOD_THEOREM, nullptr, &value) ==
        SYMTRACE_ERR_FUNCTIONAL_VANISHES);
  CHECK(std::string(symtrace_status_name(SYMTRACE_ERR_FUNCTIONAL_VANISHES)) == "FunctionalVanishes");
  REQUIRE(symtrace_sym_trace(id.m, 2, SYMTRACE_METHOD_AUTO, nullptr, &value) == SYMTRACE_OK);
  CHECK(take(value) == "6");
  CHECK(std::string(symtrace_last_error()).empty());
  CHECK(symtrace_sym_trace(id.m, 2, SYMTRACE_METHOD_AUTO, "a44", &value) == SYMTRACE_ERR_UNKNOWN_LABEL);

  symtrace_matrix* r = nullptr;
  REQUIRE(symtrace_matrix_random(8, "gf:10007", 1, &r) == SYMTRACE_OK);
  CHECK(symtrace_sym_trace(r, 12, SYMTRACE_METHOD_ORACLE, nullptr, &value) ==
        SYMTRACE_ERR_ORACLE_TOO_LARGE);
  symtrace_matrix_free(r);
  CHECK(symtrace_matrix_random(4, "gf:3", 1, &r) == SYMTRACE_ERR_CHARACTERISTIC_TOO_SMALL);

  for (int s = SYMTRACE_OK; s <= SYMTRACE_ERR_INTERNAL; ++s) {
    CHECK(std::strcmp(symtrace_status_name(static_cast<symtrace_status>(s)), "Unknown") != 0);
  }
}

TEST_CASE("matrix json round trip") {
  Matrix a(kFixture);
  char* json = nullptr;
  REQUIRE(symtrace_matrix_to_json(a.m, &json) == SYMTRACE_OK);
  Matrix b(take(json).c_str());
  char* value = nullptr;
  REQUIRE(symtrace_sym_trace(b.m, 3, SYMTRACE_METHOD_RECURRENCE, nullptr, &value) == SYMTRACE_OK);
  CHECK(take(value) == "4477");
}

TEST_CASE("verify, table and bench") {
  symtrace_verify_options v;
  symtrace_verify_options_init(&v);
  v.trials = 3;
  char* report = nullptr;
  int passed = 0;
  REQUIRE(symtrace_verify(&v, &report, &passed) == SYMTRACE_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("result: PASS") != std::string::npos);

  int match = 0;
  REQUIRE(symtrace_table(3, nullptr, &report, &match) == SYMTRACE_OK);
  CHECK(match == 1);
  CHECK(take(report).find("8/8 match") != std::string::npos);
  CHECK(symtrace_table(5, nullptr, &report, &match) == SYMTRACE_ERR_INVALID_ARGUMENT);

  symtrace_bench_options b;
  symtrace_bench_options_init(&b);
  b.n = 3;
  b.kmax = 3;
  char* csv = nullptr;
  REQUIRE(symtrace_bench_csv(&b, &csv) == SYMTRACE_OK);
  const auto text = take(csv);
  CHECK(text.rfind("n,k,method,dim,wall_time_ns,field\n", 0) == 0);
  CHECK(text.find("3,3,oracle,10,") != std::string::npos);
}
