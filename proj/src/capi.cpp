// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "symtrace/commands.hpp"
#include "symtrace/document.hpp"
#include "symtrace/random.hpp"
#include "symtrace/symbolic.hpp"
#include "symtrace/symtrace.h"

struct symtrace_matrix {
  symtrace::Matrix value;
};

namespace {

using namespace symtrace;

thread_local std::string last_error;

symtrace_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return SYMTRACE_ERR_PARSE;
    case ErrorKind::InvalidArgument: return SYMTRACE_ERR_INVALID_ARGUMENT;
    case ErrorKind::UnknownLabel: return SYMTRACE_ERR_UNKNOWN_LABEL;
    case ErrorKind::MixedField: return SYMTRACE_ERR_MIXED_FIELD;
    case ErrorKind::DimensionMismatch: return SYMTRACE_ERR_DIMENSION_MISMATCH;
    case ErrorKind::DivisionByZero: return SYMTRACE_ERR_DIVISION_BY_ZERO;
    case ErrorKind::CharacteristicTooSmall: return SYMTRACE_ERR_CHARACTERISTIC_TOO_SMALL;
    case ErrorKind::FunctionalVanishes: return SYMTRACE_ERR_FUNCTIONAL_VANISHES;
    case ErrorKind::SingularMatrix: return SYMTRACE_ERR_SINGULAR_MATRIX;
    case ErrorKind::OracleTooLarge: return SYMTRACE_ERR_ORACLE_TOO_LARGE;
    case ErrorKind::OutOfValidatedRange: return SYMTRACE_ERR_OUT_OF_VALIDATED_RANGE;
    case ErrorKind::Io: return SYMTRACE_ERR_IO;
  }
  return SYMTRACE_ERR_INTERNAL;
}

// Runs body, translating exceptions into a status and last_error.
template <class F>
symtrace_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return SYMTRACE_OK;
  } catch (const Error& e) {
    last_error = std::string(to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
  } catch (...) {
    last_error = "internal error";
  }
  return SYMTRACE_ERR_INTERNAL;
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorKind::InvalidArgument, std::string(what) + " must not be NULL");
}

ComputeMethod method_of(symtrace_method m) {
  switch (m) {
    case SYMTRACE_METHOD_AUTO: return ComputeMethod::Auto;
    case SYMTRACE_METHOD_THEOREM: return ComputeMethod::Theorem;
    case SYMTRACE_METHOD_RECURRENCE: return ComputeMethod::Recurrence;
    case SYMTRACE_METHOD_ORACLE: return ComputeMethod::Oracle;
  }
  fail(ErrorKind::InvalidArgument, "unknown method");
}

std::optional<std::string> optional_label(const char* functional) {
  if (functional == nullptr) return std::nullopt;
  return std::string(functional);
}

}  // namespace

extern "C" {

const char* symtrace_version(void) { return "1.0.0"; }

const char* symtrace_status_name(symtrace_status status) {
  switch (status) {
    case SYMTRACE_OK: return "Ok";
    case SYMTRACE_ERR_PARSE: return "ParseError";
    case SYMTRACE_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SYMTRACE_ERR_UNKNOWN_LABEL: return "UnknownLabel";
    case SYMTRACE_ERR_MIXED_FIELD: return "MixedFieldError";
    case SYMTRACE_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case SYMTRACE_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
    case SYMTRACE_ERR_CHARACTERISTIC_TOO_SMALL: return "CharacteristicTooSmall";
    case SYMTRACE_ERR_FUNCTIONAL_VANISHES: return "FunctionalVanishes";
    case SYMTRACE_ERR_SINGULAR_MATRIX: return "SingularMatrix";
    case SYMTRACE_ERR_ORACLE_TOO_LARGE: return "OracleTooLarge";
    case SYMTRACE_ERR_OUT_OF_VALIDATED_RANGE: return "OutOfValidatedRange";
    case SYMTRACE_ERR_IO: return "IoError";
    case SYMTRACE_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* symtrace_last_error(void) { return last_error.c_str(); }

void symtrace_string_free(char* s) { std::free(s); }

symtrace_status symtrace_matrix_parse_json(const char* json, symtrace_matrix** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new symtrace_matrix{parse_matrix_document(json)};
  });
}

symtrace_status symtrace_matrix_load(const char* path, symtrace_matrix** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new symtrace_matrix{load_matrix_document(path)};
  });
}

symtrace_status symtrace_matrix_random(size_t n, const char* field, uint64_t seed,
                                       symtrace_matrix** out) {
  return guarded([&] {
    require(out, "out");
    SeededRng rng(seed);
    const auto f = field ? Field::parse(field) : Field::rational();
    *out = new symtrace_matrix{random_matrix(n, f, rng)};
  });
}

void symtrace_matrix_free(symtrace_matrix* m) { delete m; }

size_t symtrace_matrix_dimension(const symtrace_matrix* m) {
  return m ? m->value.dimension() : 0;
}

symtrace_status symtrace_matrix_to_json(const symtrace_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = duplicate(to_matrix_document(m->value));
  });
}

symtrace_status symtrace_sym_trace(const symtrace_matrix* m, uint32_t k, symtrace_method method,
                                   const char* functional, char** value_out) {
  return guarded([&] {
    require(m, "matrix");
    require(value_out, "value_out");
    const auto result =
        compute_sym_trace(m->value, k, method_of(method), optional_label(functional));
    *value_out = duplicate(result.sym_trace);
  });
}

symtrace_status symtrace_compute_json(const symtrace_matrix* m, uint32_t k,
                                      symtrace_method method, const char* functional,
                                      char** json_out) {
  return guarded([&] {
    require(m, "matrix");
    require(json_out, "json_out");
    const auto result =
        compute_sym_trace(m->value, k, method_of(method), optional_label(functional));
    *json_out = duplicate(result.to_json());
  });
}

symtrace_status symtrace_theorem_sides(const symtrace_matrix* m, const char* functional,
                                       int64_t k, char** lhs_out, char** rhs_out) {
  return guarded([&] {
    require(m, "matrix");
    require(functional, "functional");
    require(lhs_out, "lhs_out");
    require(rhs_out, "rhs_out");
    const auto f =
        LinearFunctional::from_label(functional, m->value.dimension(), m->value.like().field());
    const auto [lhs, rhs] = theorem_lhs_rhs(m->value, f, k);
    auto l = duplicate(lhs.to_string());
    try {
      *rhs_out = duplicate(rhs.to_string());
    } catch (...) {
      std::free(l);
      throw;
    }
    *lhs_out = l;
  });
}

void symtrace_verify_options_init(symtrace_verify_options* options) {
  if (options == nullptr) return;
  const VerifyOptions defaults;
  options->n = defaults.n;
  options->trials = defaults.trials;
  options->seed = defaults.seed;
  options->kmax = defaults.kmax;
  options->field = nullptr;
  options->matrix = nullptr;
  options->oracle_cap = defaults.oracle_cap;
}

symtrace_status symtrace_verify(const symtrace_verify_options* options, char** report_out,
                                int* passed) {
  return guarded([&] {
    require(options, "options");
    require(report_out, "report_out");
    VerifyOptions opts;
    opts.n = options->n;
    opts.trials = options->trials;
    opts.seed = options->seed;
    opts.kmax = options->kmax;
    opts.field = options->field ? Field::parse(options->field) : Field::rational();
    if (options->matrix) opts.matrix = options->matrix->value;
    opts.oracle_cap = options->oracle_cap;
    const auto report = run_verify(opts);
    *report_out = duplicate(report.to_text());
    if (passed) *passed = report.all_passed() ? 1 : 0;
  });
}

symtrace_status symtrace_table(unsigned n, const char* fixture_path, char** report_out,
                               int* all_match) {
  return guarded([&] {
    require(report_out, "report_out");
    if (n != 3 && n != 4) fail(ErrorKind::InvalidArgument, "tables exist for n = 3 and n = 4");
    const auto fixture = fixture_path ? parse_fixture(read_text_file(fixture_path), n)
                                      : builtin_fixture(n);
    const auto report = verify_tables(fixture);
    *report_out = duplicate(report.to_text());
    if (all_match) *all_match = report.all_match() ? 1 : 0;
  });
}

void symtrace_bench_options_init(symtrace_bench_options* options) {
  if (options == nullptr) return;
  const BenchOptions defaults;
  options->n = defaults.n;
  options->kmax = defaults.kmax;
  options->seed = defaults.seed;
  options->field = nullptr;
  options->oracle_cap = defaults.oracle_cap;
}

symtrace_status symtrace_bench_csv(const symtrace_bench_options* options, char** csv_out) {
  return guarded([&] {
    require(options, "options");
    require(csv_out, "csv_out");
    BenchOptions opts;
    opts.n = options->n;
    opts.kmax = options->kmax;
    opts.seed = options->seed;
    if (options->field) opts.field = Field::parse(options->field);
    opts.oracle_cap = options->oracle_cap;
    *csv_out = duplicate(to_csv(run_bench(opts)));
  });
}

}  // extern "C"
