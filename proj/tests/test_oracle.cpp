#include "doctest.h"
#include "oracles.hpp"
#include "symtrace/symcore.hpp"

using namespace symtrace;

namespace {

const Field Q = Field::rational();
FieldElement z(long long v, Field f = Q) { return from_integer(v, f); }

Matrix to_matrix(const InducedMatrix& m) {
  auto out = Matrix::zero(m.dimension(), m(0, 0));
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    for (std::size_t j = 0; j < m.dimension(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

}  // namespace

TEST_CASE("induced dimension") {
  CHECK(induced_dimension(4, 8) == 165);
  CHECK(induced_dimension(3, 6) == 28);
  CHECK(induced_dimension(4, 6) == 84);
  CHECK(induced_dimension(1, 9) == 1);
  CHECK(induced_dimension(5, 0) == 1);
  CHECK(induced_dimension(200, 200) == SIZE_MAX);
}

TEST_CASE("basis is graded-lex with x1^k first") {
  const auto m = induced_matrix(Matrix::identity(3, z(0)), 2);
  using B = std::vector<std::vector<unsigned>>;
  CHECK(m.basis == B{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  CHECK(to_matrix(m) == Matrix::identity(6, z(0)));
}

TEST_CASE("reference examples") {
  const auto b = matrix_from_integers({{1, 1}, {0, 2}}, Q);
  CHECK(sym_trace_oracle(b, 2) == z(7));
  // x^2 -> x^2, xy -> x(x+2y), y^2 -> (x+2y)^2
  CHECK(to_matrix(induced_matrix(b, 2)) == matrix_from_integers({{1, 1, 1}, {0, 2, 4}, {0, 0, 4}}, Q));
  SeededRng rng(1);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto a = random_matrix(n, Q, rng);
    CHECK(sym_trace_oracle(a, 0) == z(1));
    CHECK(sym_trace_oracle(a, 1) == trace(a));
    CHECK(to_matrix(induced_matrix(a, 1)) == a);
  }
}

TEST_CASE("Sym^k is multiplicative") {
  for (const auto F : {Q, Field::prime(10007)}) {
    SeededRng rng(2);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t k = 2; k <= 4; ++k) {
        const auto a = random_matrix(n, F, rng), b = random_matrix(n, F, rng);
        CHECK(to_matrix(induced_matrix(a * b, k)) ==
              to_matrix(induced_matrix(a, k)) * to_matrix(induced_matrix(b, k)));
      }
    }
  }
}

TEST_CASE("trace matches eigenvalue enumeration on triangular matrices") {
  SeededRng rng(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto a = oracle::random_upper_triangular(n, Q, rng);
    for (std::size_t k = 0; k <= 5; ++k) {
      CHECK(sym_trace_oracle(a, k) == oracle::complete_homogeneous(oracle::diagonal(a), k));
    }
  }
}

TEST_CASE("dimension cap") {
  const auto a = Matrix::identity(4, z(0));
  CHECK_NOTHROW((void)sym_trace_oracle(a, 8, 165));
  try {
    (void)sym_trace_oracle(a, 8, 164);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleTooLarge);
  }
}
