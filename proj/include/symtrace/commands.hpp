// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symtrace/matrix.hpp"
#include "symtrace/symcore.hpp"

namespace symtrace {

// ---------------------------------------------------------------------------
// compute

enum class ComputeMethod { Auto, Theorem, Recurrence, Oracle };

/// Accepts "auto", "theorem", "recurrence", "oracle"; throws InvalidArgument.
ComputeMethod parse_compute_method(std::string_view text);

struct ComputeResult {
  std::size_t k = 0;
  std::string sym_trace;
  /// The route actually taken: theorem, recurrence, oracle, or scalar.
  std::string method;
  /// Label of the functional used by the theorem route, if any.
  std::optional<std::string> functional;

  /// {"k": ..., "sym_trace": "...", "method": "...", "functional": ... }
  std::string to_json() const;
};

/// tr(Sym^k A) by the requested route. "auto" and "theorem" without a label
/// pick the functional with auto_functional; "auto" falls back to the scalar
/// closed form on lambda I.
ComputeResult compute_sym_trace(const Matrix& a, std::size_t k, ComputeMethod method,
                                const std::optional<std::string>& functional = std::nullopt,
                                std::size_t oracle_cap = kDefaultOracleCap);

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
  std::size_t n = 3;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t kmax = 8;
  Field field = Field::rational();
  /// When set, only this matrix is checked and n, trials and field are ignored.
  std::optional<Matrix> matrix;
  /// Oracle comparisons are skipped above this induced dimension.
  std::size_t oracle_cap = 500;
};

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
};

struct VerifyReport {
  std::string header;
  std::vector<CheckTally> checks;

  bool all_passed() const noexcept;
  std::string to_text() const;
};

/// Runs every identity on the given or seeded random matrices: the shifted
/// Cayley-Hamilton residual and the trace identity for p = 0..3, the theorem on
/// every non-vanishing basis functional for k up to kmax (k = -1 on invertible
/// matrices), agreement of the theorem and recurrence sequences, and the
/// induced-matrix oracle where its dimension stays under the cap.
VerifyReport run_verify(const VerifyOptions& options);

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::size_t n = 4;
  std::size_t kmax = 8;
  std::uint64_t seed = 1;
  Field field = Field::prime(10007);
  std::size_t oracle_cap = kDefaultOracleCap;
};

struct BenchRecord {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string method;
  std::size_t induced_dimension = 0;
  std::uint64_t wall_time_ns = 0;
  std::string field;
};

/// One record per (k, method) for k = 0..kmax; oracle rows stop at the cap.
/// Throws InvalidArgument if the three routes ever disagree.
std::vector<BenchRecord> run_bench(const BenchOptions& options);

/// Header `n,k,method,dim,wall_time_ns,field`, one line per record.
std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace symtrace
