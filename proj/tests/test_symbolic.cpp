#include "doctest.h"
#include "symtrace/functional.hpp"
#include "symtrace/random.hpp"
#include "symtrace/symbolic.hpp"
#include "symtrace/symcore.hpp"

using namespace symtrace;

namespace {

MultiPoly p(const char* text, std::size_t n) { return parse_polynomial(text, n); }

// Substitute the entries of a numeric matrix for the a_ij.
std::vector<FieldElement> point(const Matrix& a) {
  return {a.entries().begin(), a.entries().end()};
}

}  // namespace

TEST_CASE("generic_matrix") {
  const auto g = generic_matrix(2);
  CHECK(render_polynomial(g(0, 0), 2) == "a11");
  CHECK(render_polynomial(g(0, 1), 2) == "a12");
  CHECK(render_polynomial(g(1, 0), 2) == "a21");
  CHECK(render_polynomial(g(1, 1), 2) == "a22");
  CHECK(trace(generic_matrix(3)) == p("a11 + a22 + a33", 3));
  CHECK(exterior_traces(generic_matrix(2))[2] == p("a11*a22 - a12*a21", 2));
}

TEST_CASE("symbolic_sigma examples") {
  auto s = symbolic_sigma(3, "a12");
  REQUIRE(s.size() == 1);
  CHECK(s[0] == p("a12*a33 - a13*a32", 3));

  s = symbolic_sigma(3, "a11-a22");
  REQUIRE(s.size() == 1);
  CHECK(s[0] == p("a11*a33 - a22*a33 - a13*a31 + a23*a32", 3));

  s = symbolic_sigma(4, "a12");
  REQUIRE(s.size() == 2);
  CHECK(s[0] == p("a12*a33 + a12*a44 - a13*a32 - a14*a42", 4));
  CHECK(s[1] == p("a12*a33*a44 - a12*a34*a43 - a32*a13*a44 + a32*a14*a43 + a42*a13*a34 - a42*a14*a33", 4));

  CHECK(symbolic_sigma(2, "a12").empty());
  CHECK_THROWS_AS((void)symbolic_sigma(3, "a33"), Error);
}

TEST_CASE("symbolic sigma_i is homogeneous of degree i") {
  for (std::size_t n : {3, 4, 5}) {
    for (const auto& f : canonical_functionals(n, Field::rational())) {
      const auto s = symbolic_sigma(n, f.label());
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (const auto& [e, c] : s[i].terms()) {
          std::size_t degree = 0;
          for (auto x : e) degree += x;
          CHECK(degree == i + 2);
        }
      }
    }
  }
}

TEST_CASE("symbolic sigmas evaluate to the numeric ones") {
  for (std::size_t n : {3, 4}) {
    for (const auto F : {Field::rational(), Field::prime(10007)}) {
      SeededRng rng(n);
      for (const auto& f : canonical_functionals(n, F)) {
        const auto s = symbolic_sigma(n, f.label());
        for (int t = 0; t < 5; ++t) {
          const auto a = random_matrix(n, F, rng);
          const auto numeric = sigma_values(a, f);
          for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i].evaluate(point(a)) == numeric(i + 2));
        }
      }
    }
  }
}

TEST_CASE("tables regenerate") {
  const auto r3 = verify_tables(3);
  CHECK(r3.rows.size() == 8);
  CHECK(r3.all_match());
  CHECK(r3.to_text().find("8/8 match") != std::string::npos);
  const auto r4 = verify_tables(4);
  CHECK(r4.rows.size() == 15);
  CHECK(r4.all_match());
  CHECK(r4.to_text().find("15/15 match") != std::string::npos);
}

TEST_CASE("fixture rows follow canonical order") {
  for (std::size_t n : {3, 4}) {
    const auto fixture = builtin_fixture(n);
    const auto fs = canonical_functionals(n, Field::rational());
    REQUIRE(fixture.rows.size() == fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) CHECK(fixture.rows[i].label == fs[i].label());
  }
}

TEST_CASE("a corrupted fixture is reported") {
  const auto report = verify_tables(parse_fixture(
      "a12 ; a12*a33 + a13*a32\n"
      "a13 ; a13*a22 - a12*a23\n",
      3));
  REQUIRE(report.rows.size() == 2);
  CHECK_FALSE(report.all_match());
  CHECK_FALSE(report.rows[0].match);
  CHECK(report.rows[1].match);
  const auto text = report.to_text();
  CHECK(text.find("MISMATCH a12") != std::string::npos);
  CHECK(text.find("-2*a13*a32") != std::string::npos);
  CHECK(text.find("1/2 match") != std::string::npos);
}

TEST_CASE("fixture parsing errors") {
  CHECK_THROWS_AS((void)parse_fixture("a12 ; a12*a33 ; a13\n", 3), Error);
  CHECK_THROWS_AS((void)parse_fixture("a12 ; a12*a33\n", 4), Error);
  CHECK_THROWS_AS((void)parse_fixture("a12 ; a12**a33\n", 3), Error);
  CHECK(parse_fixture("# only a comment\n\n", 3).rows.empty());
}
