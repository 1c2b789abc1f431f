// SPDX-License-Identifier: Apache-2.0
#include "symtrace/commands.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"
#include "symtrace/random.hpp"

namespace symtrace {

ComputeMethod parse_compute_method(std::string_view text) {
  if (text == "auto") return ComputeMethod::Auto;
  if (text == "theorem") return ComputeMethod::Theorem;
  if (text == "recurrence") return ComputeMethod::Recurrence;
  if (text == "oracle") return ComputeMethod::Oracle;
  fail(ErrorKind::InvalidArgument, "unknown method \"" + std::string(text) + "\"");
}

std::string ComputeResult::to_json() const {
  nlohmann::ordered_json doc;
  doc["k"] = k;
  doc["sym_trace"] = sym_trace;
  doc["method"] = method;
  doc["functional"] = functional ? nlohmann::ordered_json(*functional) : nullptr;
  return doc.dump();
}

ComputeResult compute_sym_trace(const Matrix& a, std::size_t k, ComputeMethod method,
                                const std::optional<std::string>& functional,
                                std::size_t oracle_cap) {
  ComputeResult result;
  result.k = k;
  switch (method) {
    case ComputeMethod::Recurrence:
      result.method = "recurrence";
      result.sym_trace = sym_traces_recurrence(a, k)[static_cast<long long>(k)].to_string();
      return result;
    case ComputeMethod::Oracle:
      result.method = "oracle";
      result.sym_trace = sym_trace_oracle(a, k, oracle_cap).to_string();
      return result;
    case ComputeMethod::Theorem:
    case ComputeMethod::Auto:
      break;
  }

  std::optional<LinearFunctional> f;
  if (functional) {
    f = LinearFunctional::from_label(*functional, a.dimension(), a.like().field());
  } else {
    auto choice = auto_functional(a);
    if (auto* scalar = std::get_if<ScalarMatrixCase>(&choice)) {
      if (method == ComputeMethod::Theorem) {
        fail(ErrorKind::FunctionalVanishes,
             "every identity-vanishing functional is zero on a scalar matrix");
      }
      result.method = "scalar";
      result.sym_trace = sym_trace_scalar(scalar->lambda, a.dimension(), k).to_string();
      return result;
    }
    f = std::get<LinearFunctional>(std::move(choice));
  }
  result.method = "theorem";
  result.functional = f->label();
  result.sym_trace = sym_traces_theorem(a, *f, k)[static_cast<long long>(k)].to_string();
  return result;
}

// ---------------------------------------------------------------------------

bool VerifyReport::all_passed() const noexcept {
  for (const auto& c : checks) {
    if (c.passed != c.total) return false;
  }
  return true;
}

std::string VerifyReport::to_text() const {
  std::ostringstream out;
  out << header << "\n";
  for (const auto& c : checks) {
    out << c.name << std::string(c.name.size() < 24 ? 24 - c.name.size() : 1, ' ') << c.passed
        << "/" << c.total << (c.passed == c.total ? " pass" : " FAIL") << "\n";
  }
  out << "result: " << (all_passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

namespace {

void tally(CheckTally& c, bool ok) {
  ++c.total;
  if (ok) ++c.passed;
}

void verify_one(const Matrix& a, const VerifyOptions& options, std::vector<CheckTally>& checks) {
  auto& ch = checks[0];
  auto& kt = checks[1];
  auto& theorem = checks[2];
  auto& agreement = checks[3];
  auto& oracle = checks[4];
  auto& scalar = checks[5];

  const auto n = a.dimension();
  TraceEngine engine(a);
  const auto recurrence = engine.recurrence(std::max(options.kmax, n + 3));
  const bool invertible = !engine.exterior().determinant().is_zero();

  for (std::size_t p = 0; p <= 3; ++p) {
    tally(ch, cayley_hamilton_residual(a, p).is_zero_matrix());
    tally(kt, ktheory_residual(a, p, recurrence).is_zero());
  }

  if (n >= 2) {
    for (const auto& f : canonical_functionals(n, a.like().field())) {
      if (f(a).is_zero()) continue;
      const long long kmin = invertible ? -1 : 0;
      for (long long k = kmin; k <= static_cast<long long>(options.kmax); ++k) {
        const auto [lhs, rhs] = engine.theorem_sides(f, k);
        tally(theorem, lhs == rhs);
      }
      const auto seq = engine.theorem(f, std::max(options.kmax, n + 3));
      bool same = true;
      for (std::size_t k = 0; k <= options.kmax; ++k) {
        same = same && seq[static_cast<long long>(k)] == recurrence[static_cast<long long>(k)];
      }
      tally(agreement, same);
      for (std::size_t p = 0; p <= 3; ++p) tally(kt, ktheory_residual(a, p, seq).is_zero());
    }
  }

  for (std::size_t k = 0; k <= options.kmax; ++k) {
    if (induced_dimension(n, k) > options.oracle_cap) break;
    tally(oracle, sym_trace_oracle(a, k, options.oracle_cap) ==
                      recurrence[static_cast<long long>(k)]);
  }

  if (std::holds_alternative<ScalarMatrixCase>(auto_functional(a))) {
    for (std::size_t k = 0; k <= options.kmax; ++k) {
      tally(scalar, sym_trace_scalar(a(0, 0), n, k) == recurrence[static_cast<long long>(k)]);
    }
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  for (const char* name : {"cayley_hamilton", "ktheory_trace", "theorem_identity",
                           "theorem_vs_recurrence", "oracle_vs_recurrence", "scalar_fallback"}) {
    report.checks.push_back({name, 0, 0});
  }
  std::ostringstream header;
  if (options.matrix) {
    header << "verify: matrix n=" << options.matrix->dimension()
           << " field=" << options.matrix->like().field().to_string() << " kmax=" << options.kmax;
    verify_one(*options.matrix, options, report.checks);
  } else {
    header << "verify: n=" << options.n << " field=" << options.field.to_string()
           << " trials=" << options.trials << " seed=" << options.seed
           << " kmax=" << options.kmax;
    SeededRng rng(options.seed);
    for (std::size_t t = 0; t < options.trials; ++t) {
      verify_one(random_matrix(options.n, options.field, rng), options, report.checks);
    }
  }
  report.header = header.str();
  return report;
}

// ---------------------------------------------------------------------------

namespace {

template <class F>
std::uint64_t time_ns(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto stop = std::chrono::steady_clock::now();
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  return ns > 0 ? static_cast<std::uint64_t>(ns) : 1;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  SeededRng rng(options.seed);
  const auto a = random_matrix(options.n, options.field, rng);
  const auto choice = auto_functional(a);
  const auto* f = std::get_if<LinearFunctional>(&choice);
  const auto field = options.field.to_string();

  std::vector<BenchRecord> records;
  for (std::size_t k = 0; k <= options.kmax; ++k) {
    const auto dim = induced_dimension(options.n, k);
    const auto kk = static_cast<long long>(k);
    FieldElement by_recurrence;
    records.push_back({options.n, k, "recurrence", dim,
                       time_ns([&] { by_recurrence = sym_traces_recurrence(a, k)[kk]; }), field});
    if (f != nullptr) {
      FieldElement by_theorem;
      records.push_back({options.n, k, "theorem", dim,
                         time_ns([&] { by_theorem = sym_traces_theorem(a, *f, k)[kk]; }), field});
      if (by_theorem != by_recurrence) {
        fail(ErrorKind::InvalidArgument, "theorem and recurrence disagree at k = " +
                                             std::to_string(k));
      }
    }
    if (dim <= options.oracle_cap) {
      FieldElement by_oracle;
      records.push_back({options.n, k, "oracle", dim,
                         time_ns([&] { by_oracle = sym_trace_oracle(a, k, options.oracle_cap); }),
                         field});
      if (by_oracle != by_recurrence) {
        fail(ErrorKind::InvalidArgument, "oracle and recurrence disagree at k = " +
                                             std::to_string(k));
      }
    }
  }
  return records;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "n,k,method,dim,wall_time_ns,field\n";
  for (const auto& r : records) {
    out << r.n << "," << r.k << "," << r.method << "," << r.induced_dimension << ","
        << r.wall_time_ns << "," << r.field << "\n";
  }
  return out.str();
}

}  // namespace symtrace
