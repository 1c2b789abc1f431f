// SPDX-License-Identifier: Apache-2.0
#include "symtrace/symcore.hpp"

#include <gmpxx.h>

namespace symtrace {

std::string_view to_string(SymTraceMethod method) noexcept {
  switch (method) {
    case SymTraceMethod::Recurrence: return "recurrence";
    case SymTraceMethod::Theorem: return "theorem";
    case SymTraceMethod::Oracle: return "oracle";
  }
  return "unknown";
}

FieldElement SymTraceSequence::operator[](long long k) const {
  if (k < 0) return zero_like(values_.front());
  if (static_cast<std::size_t>(k) >= values_.size()) {
    fail(ErrorKind::InvalidArgument, "degree " + std::to_string(k) + " beyond computed range");
  }
  return values_[static_cast<std::size_t>(k)];
}

TraceEngine::TraceEngine(Matrix a) : TraceEngine(a, characteristic_data(a)) {}

TraceEngine::TraceEngine(Matrix a, CharacteristicData<FieldElement> data)
    : a_(std::move(a)),
      exterior_(std::move(data.exterior)),
      adjugate_(std::move(data.adjugate)) {
  powers_.push_back(Matrix::identity(a_.dimension(), a_.like()));
  sym_ = sym_trace_values(exterior_, a_.dimension());
}

const Matrix& TraceEngine::power(std::size_t m) {
  while (powers_.size() <= m) powers_.push_back(powers_.back() * a_);
  return powers_[m];
}

const Matrix& TraceEngine::inverse() {
  if (!inverse_) {
    const auto& det = exterior_.determinant();
    if (det.is_zero()) fail(ErrorKind::SingularMatrix, "matrix is singular");
    inverse_ = adjugate_ * det.inverse();
  }
  return *inverse_;
}

FieldElement TraceEngine::sym_trace(long long k) {
  if (k < 0) return zero_like(a_.like());
  const auto degree = static_cast<std::size_t>(k);
  if (degree >= sym_.size()) sym_ = sym_trace_values(exterior_, std::max(degree, 2 * sym_.size()));
  return sym_[degree];
}

SymTraceSequence TraceEngine::recurrence(std::size_t max_degree) {
  sym_trace(static_cast<long long>(max_degree));
  return SymTraceSequence(std::vector<FieldElement>(sym_.begin(), sym_.begin() + max_degree + 1),
                          SymTraceMethod::Recurrence);
}

void TraceEngine::require_dimension(const LinearFunctional& f) const {
  if (f.dimension() != a_.dimension()) {
    fail(ErrorKind::DimensionMismatch, "functional dimension " + std::to_string(f.dimension()) +
                                           " does not match matrix dimension " +
                                           std::to_string(a_.dimension()));
  }
}

FieldElement TraceEngine::functional_of_power(const LinearFunctional& f, long long m) {
  require_dimension(f);
  if (m >= 0) return f(power(static_cast<std::size_t>(m)));
  auto inv = inverse();
  Matrix p = inv;
  for (long long i = -1; i > m; --i) p = p * inv;
  return f(p);
}

SigmaVector TraceEngine::sigma(const LinearFunctional& f) {
  require_dimension(f);
  const auto n = a_.dimension();
  std::vector<FieldElement> fp;
  for (std::size_t i = 1; i < n; ++i) fp.push_back(f(power(i)));
  return SigmaVector(solve_sigmas<FieldElement>(fp, sym_));
}

std::pair<FieldElement, FieldElement> TraceEngine::theorem_sides(const LinearFunctional& f,
                                                                 long long k) {
  require_dimension(f);
  if (k <= -1 && exterior_.determinant().is_zero()) {
    fail(ErrorKind::SingularMatrix, "negative k needs an invertible matrix");
  }
  const auto lhs = functional_of_power(f, k + 1);
  const auto sigma_vec = sigma(f);
  auto rhs = zero_like(a_.like());
  for (std::size_t i = 1; i <= sigma_vec.size(); ++i) {
    const auto h = sym_trace(k - static_cast<long long>(i) + 1);
    if (h.is_zero()) continue;
    if (i % 2 == 1) {
      rhs += sigma_vec(i) * h;
    } else {
      rhs -= sigma_vec(i) * h;
    }
  }
  return {lhs, rhs};
}

SymTraceSequence TraceEngine::theorem(const LinearFunctional& f, std::size_t max_degree) {
  const auto sigma_vec = sigma(f);
  const auto& s1 = sigma_vec(1);
  if (s1.is_zero()) {
    fail(ErrorKind::FunctionalVanishes,
         "functional " + (f.label().empty() ? std::string("(unnamed)") : f.label()) +
             " vanishes on the matrix");
  }
  const auto s1_inv = s1.inverse();
  std::vector<FieldElement> h;
  h.reserve(max_degree + 1);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    auto acc = f(power(k + 1));
    for (std::size_t i = 2; i <= sigma_vec.size(); ++i) {
      if (k + 1 < i) break;
      const auto& prev = h[k + 1 - i];
      if (i % 2 == 0) {
        acc += sigma_vec(i) * prev;
      } else {
        acc -= sigma_vec(i) * prev;
      }
    }
    h.push_back(acc * s1_inv);
  }
  return SymTraceSequence(std::move(h), SymTraceMethod::Theorem);
}

SigmaVector sigma_values(const Matrix& a, const LinearFunctional& f) {
  return TraceEngine(a).sigma(f);
}

SymTraceSequence sym_traces_recurrence(const Matrix& a, std::size_t max_degree) {
  return SymTraceSequence(sym_trace_values(exterior_traces(a), max_degree),
                          SymTraceMethod::Recurrence);
}

std::pair<FieldElement, FieldElement> theorem_lhs_rhs(const Matrix& a, const LinearFunctional& f,
                                                      long long k) {
  return TraceEngine(a).theorem_sides(f, k);
}

SymTraceSequence sym_traces_theorem(const Matrix& a, const LinearFunctional& f,
                                    std::size_t max_degree) {
  return TraceEngine(a).theorem(f, max_degree);
}

FieldElement sym_trace_scalar(const FieldElement& lambda, std::size_t n, std::size_t k) {
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(), n + k - 1, k);
  return FieldElement::from_integer(binom, lambda.field()) *
         lambda.pow(static_cast<long long>(k));
}

FieldElement ktheory_residual(const Matrix& a, std::size_t p, const SymTraceSequence& sym) {
  const auto n = a.dimension();
  const auto e = exterior_traces(a);
  auto residual = zero_like(a.like());
  for (std::size_t j = 0; j <= n; ++j) {
    const auto term = sym[static_cast<long long>(n + p - j)] * e[j];
    if (j % 2 == 0) {
      residual += term;
    } else {
      residual -= term;
    }
  }
  return residual;
}

FieldElement ktheory_residual(const Matrix& a, std::size_t p) {
  return ktheory_residual(a, p, sym_traces_recurrence(a, a.dimension() + p));
}

}  // namespace symtrace
