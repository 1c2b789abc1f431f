// SPDX-License-Identifier: Apache-2.0
#include <gmpxx.h>

#include <limits>
#include <map>

#include "symtrace/symcore.hpp"

namespace symtrace {

namespace {

using Exponents = std::vector<unsigned>;

// Degree-d monomials in n variables, lexicographically descending (x1^d first).
void enumerate(std::size_t n, unsigned degree, Exponents& current, std::size_t var,
               std::vector<Exponents>& out) {
  if (var + 1 == n) {
    current[var] = degree;
    out.push_back(current);
    return;
  }
  for (unsigned e = degree + 1; e-- > 0;) {
    current[var] = e;
    enumerate(n, degree - e, current, var + 1, out);
  }
  current[var] = 0;
}

std::vector<Exponents> monomials(std::size_t n, unsigned degree) {
  std::vector<Exponents> out;
  Exponents current(n, 0);
  enumerate(n, degree, current, 0, out);
  return out;
}

}  // namespace

std::size_t induced_dimension(std::size_t n, std::size_t k) noexcept {
  if (n == 0) return k == 0 ? 1 : 0;
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n + k - 1, k);
  if (!binom.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return binom.get_ui();
}

InducedMatrix induced_matrix(const Matrix& a, std::size_t k, std::size_t cap) {
  const auto n = a.dimension();
  const auto dim = induced_dimension(n, k);
  if (dim > cap) {
    fail(ErrorKind::OracleTooLarge, "induced dimension C(" + std::to_string(n + k - 1) + "," +
                                        std::to_string(k) + ") = " + std::to_string(dim) +
                                        " exceeds cap " + std::to_string(cap));
  }
  const auto zero = zero_like(a.like());

  // images[alpha] is the image of x^alpha as a dense vector over the current
  // degree's basis. Degree d is built from degree d-1 by peeling off the last
  // variable present in alpha: x^alpha = x^(alpha - e_j) * x_j.
  std::vector<Exponents> basis = monomials(n, 0);
  std::vector<std::vector<FieldElement>> images{{one_like(a.like())}};

  for (unsigned d = 1; d <= k; ++d) {
    auto next_basis = monomials(n, d);
    std::map<Exponents, std::size_t> next_index;
    for (std::size_t b = 0; b < next_basis.size(); ++b) next_index.emplace(next_basis[b], b);
    std::map<Exponents, std::size_t> prev_index;
    for (std::size_t b = 0; b < basis.size(); ++b) prev_index.emplace(basis[b], b);

    // raise[b][i]: index of basis[b] * x_i in the next basis.
    std::vector<std::vector<std::size_t>> raise(basis.size(), std::vector<std::size_t>(n));
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto e = basis[b];
      for (std::size_t i = 0; i < n; ++i) {
        ++e[i];
        raise[b][i] = next_index.at(e);
        --e[i];
      }
    }

    std::vector<std::vector<FieldElement>> next_images;
    next_images.reserve(next_basis.size());
    for (const auto& alpha : next_basis) {
      std::size_t j = n;
      while (alpha[--j] == 0) {
      }
      auto lower = alpha;
      --lower[j];
      const auto& source = images[prev_index.at(lower)];
      std::vector<FieldElement> image(next_basis.size(), zero);
      // Multiply by x_j -> sum_i a_{ij} x_i.
      for (std::size_t b = 0; b < source.size(); ++b) {
        if (source[b].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
          if (a(i, j).is_zero()) continue;
          image[raise[b][i]] += source[b] * a(i, j);
        }
      }
      next_images.push_back(std::move(image));
    }
    basis = std::move(next_basis);
    images = std::move(next_images);
  }

  InducedMatrix out;
  const auto size = basis.size();
  out.entries.assign(size * size, zero);
  for (std::size_t col = 0; col < size; ++col) {
    for (std::size_t row = 0; row < size; ++row) out.entries[row * size + col] = images[col][row];
  }
  out.basis = std::move(basis);
  return out;
}

FieldElement sym_trace_oracle(const Matrix& a, std::size_t k, std::size_t cap) {
  const auto induced = induced_matrix(a, k, cap);
  auto sum = zero_like(a.like());
  for (std::size_t i = 0; i < induced.dimension(); ++i) sum += induced(i, i);
  return sum;
}

}  // namespace symtrace
