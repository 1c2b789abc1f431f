#include "doctest.h"
#include "oracles.hpp"
#include "symtrace/random.hpp"

using namespace symtrace;

namespace {

const Field Q = Field::rational();

Matrix fixture() { return matrix_from_integers({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}, Q); }
FieldElement z(long long v, Field f = Q) { return from_integer(v, f); }

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(Matrix(0, z(0)), Error);
  try {
    (void)Matrix::identity(7, z(0, Field::prime(7)));
    FAIL("accepted p <= n");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CharacteristicTooSmall);
  }
  CHECK_NOTHROW((void)Matrix::identity(6, z(0, Field::prime(7))));
  try {
    (void)(Matrix::identity(2, z(0)) * Matrix::identity(3, z(0)));
    FAIL("accepted mismatched product");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("mat_mul and power_sequence examples") {
  const auto a = fixture();
  const auto i3 = Matrix::identity(3, z(0));
  CHECK(i3 * a == a);
  CHECK((Matrix::zero(3, z(0)) * a).is_zero_matrix());
  const auto a2 = a * a;
  CHECK(a2(0, 0) == z(30));
  CHECK(a2(0, 1) == z(36));
  CHECK(a2(0, 2) == z(45));

  const auto p0 = power_sequence(a, 0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0] == i3);

  const auto b = matrix_from_integers({{1, 1}, {0, 2}}, Q);
  const auto pb = power_sequence(b, 3);
  CHECK(pb[3] == matrix_from_integers({{1, 7}, {0, 8}}, Q));
  for (std::size_t k = 0; k <= 3; ++k) CHECK(pb[k](0, 1) == z((1 << k) - 1));

  const auto pi = power_sequence(i3, 5);
  CHECK(pi.size() == 6);
  for (const auto& m : pi) CHECK(m == i3);
}

TEST_CASE("trace examples") {
  CHECK(trace(Matrix::identity(5, z(0))) == z(5));
  CHECK(trace(fixture()) == z(16));
  CHECK(trace(fixture() * fixture()) == z(280));
}

TEST_CASE("exterior_traces examples") {
  auto values = [](const ExteriorTraces<FieldElement>& e) {
    std::vector<FieldElement> v(e.values().begin(), e.values().end());
    return v;
  };
  CHECK(values(exterior_traces(Matrix::identity(3, z(0)))) ==
        std::vector<FieldElement>{z(1), z(3), z(3), z(1)});
  CHECK(values(exterior_traces(fixture())) == std::vector<FieldElement>{z(1), z(16), z(-12), z(-3)});
  CHECK(values(exterior_traces(matrix_from_integers({{1, 1}, {0, 2}}, Q))) ==
        std::vector<FieldElement>{z(1), z(3), z(2)});
  CHECK(determinant(fixture()) == z(-3));
}

TEST_CASE("exterior traces equal principal minor sums") {
  for (const auto F : {Q, Field::prime(10007), Field::prime(7)}) {
    SeededRng rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
      if (F.is_prime() && F.modulus() <= n) continue;
      for (int t = 0; t < 10; ++t) {
        const auto a = random_matrix(n, F, rng);
        const auto e = exterior_traces(a);
        for (std::size_t j = 0; j <= n; ++j) CHECK(e[j] == oracle::principal_minor_sum(a, j));
        CHECK(determinant(a) == oracle::leibniz(a));
      }
    }
  }
}

TEST_CASE("adjugate and inverse") {
  SeededRng rng(9);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto a = random_invertible_matrix(n, Q, rng);
      CHECK(a * inverse(a) == Matrix::identity(n, z(0)));
      const auto adj = characteristic_data(a).adjugate;
      CHECK(a * adj == Matrix::identity(n, z(0)) * determinant(a));
    }
  }
  try {
    (void)inverse(matrix_from_integers({{1, 2}, {2, 4}}, Q));
    FAIL("inverted a singular matrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
}

TEST_CASE("exterior traces are conjugation invariant") {
  SeededRng rng(13);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int t = 0; t < 10; ++t) {
      const auto a = random_matrix(n, Q, rng);
      const auto s = random_unimodular_matrix(n, Q, rng);
      const auto b = s * a * inverse(s);
      const auto ea = exterior_traces(a), eb = exterior_traces(b);
      for (std::size_t j = 0; j <= n; ++j) CHECK(ea[j] == eb[j]);
    }
  }
}

TEST_CASE("cayley_hamilton_residual") {
  CHECK(cayley_hamilton_residual(fixture(), 0).is_zero_matrix());
  CHECK(cayley_hamilton_residual(fixture(), 2).is_zero_matrix());
  CHECK(cayley_hamilton_residual(Matrix::identity(2, z(0)) * z(5), 1).is_zero_matrix());
  for (const auto F : {Q, Field::prime(10007)}) {
    SeededRng rng(17);
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto a = random_matrix(n, F, rng);
      for (std::size_t p = 0; p <= 3; ++p) CHECK(cayley_hamilton_residual(a, p).is_zero_matrix());
    }
  }
  // Negative control: perturbing e_1 breaks the identity.
  const auto a = fixture();
  auto e = exterior_traces(a);
  auto bad = Matrix::zero(3, z(0));
  const auto powers = power_sequence(a, 3);
  for (std::size_t i = 0; i <= 3; ++i) {
    auto coeff = e[i] + (i == 1 ? z(1) : z(0));
    bad += powers[3 - i] * (i % 2 ? -coeff : coeff);
  }
  CHECK_FALSE(bad.is_zero_matrix());
}
