// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Talks to the library only through symtrace.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "symtrace/symtrace.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kMath = 3, kIo = 4 };

int exit_code(symtrace_status status) {
  switch (status) {
    case SYMTRACE_OK: return kOk;
    case SYMTRACE_ERR_PARSE:
    case SYMTRACE_ERR_INVALID_ARGUMENT:
    case SYMTRACE_ERR_UNKNOWN_LABEL: return kParse;
    case SYMTRACE_ERR_IO: return kIo;
    case SYMTRACE_ERR_INTERNAL: return kVerifyFailed;
    default: return kMath;
  }
}

int report(symtrace_status status) {
  std::cerr << "symtrace: " << symtrace_last_error() << "\n";
  return exit_code(status);
}

struct StringDeleter {
  void operator()(char* s) const { symtrace_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct MatrixDeleter {
  void operator()(symtrace_matrix* m) const { symtrace_matrix_free(m); }
};
using OwnedMatrix = std::unique_ptr<symtrace_matrix, MatrixDeleter>;

symtrace_method method_from(const std::string& name) {
  if (name == "theorem") return SYMTRACE_METHOD_THEOREM;
  if (name == "recurrence") return SYMTRACE_METHOD_RECURRENCE;
  if (name == "oracle") return SYMTRACE_METHOD_ORACLE;
  return SYMTRACE_METHOD_AUTO;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact traces of symmetric powers of matrices"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(symtrace_version()));

  std::string matrix_file;
  unsigned k = 0;
  std::string method = "auto";
  std::optional<std::string> functional;
  auto* compute = app.add_subcommand("compute", "tr(Sym^k A) for a matrix file, as JSON");
  compute->add_option("matrix_file", matrix_file, "JSON matrix document")->required();
  compute->add_option("--k", k, "symmetric power degree")->required();
  compute->add_option("--method", method, "route")
      ->check(CLI::IsMember({"auto", "theorem", "recurrence", "oracle"}));
  compute->add_option("--functional", functional, "functional label, e.g. a12, E12, a11-a22");

  std::optional<std::string> verify_file;
  symtrace_verify_options vopts;
  symtrace_verify_options_init(&vopts);
  std::string verify_field = "rational";
  auto* verify = app.add_subcommand("verify", "check every identity on given or random matrices");
  verify->add_option("matrix_file", verify_file, "JSON matrix document");
  verify->add_option("--n", vopts.n, "dimension of random matrices")->capture_default_str();
  verify->add_option("--trials", vopts.trials, "number of random matrices")->capture_default_str();
  verify->add_option("--seed", vopts.seed, "random seed")->capture_default_str();
  verify->add_option("--kmax", vopts.kmax, "largest degree checked")->capture_default_str();
  verify->add_option("--field", verify_field, "rational or gf:<p>")->capture_default_str();
  verify->add_option("--oracle-cap", vopts.oracle_cap, "largest induced dimension for the oracle")
      ->capture_default_str();

  unsigned table_n = 3;
  std::optional<std::string> fixture;
  auto* table = app.add_subcommand("table", "regenerate the sigma tables and compare");
  table->add_option("--n", table_n, "3 or 4")->check(CLI::IsMember({3, 4}))->capture_default_str();
  table->add_option("--fixture", fixture, "compare against this fixture file instead");

  symtrace_bench_options bopts;
  symtrace_bench_options_init(&bopts);
  std::string bench_field = "gf:10007";
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "time recurrence, theorem and oracle routes");
  bench->add_option("--n", bopts.n, "matrix dimension")->capture_default_str();
  bench->add_option("--kmax", bopts.kmax, "largest degree")->capture_default_str();
  bench->add_option("--seed", bopts.seed, "random seed")->capture_default_str();
  bench->add_option("--field", bench_field, "rational or gf:<p>")->capture_default_str();
  bench->add_option("--oracle-cap", bopts.oracle_cap, "largest induced dimension for the oracle")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  if (*compute) {
    symtrace_matrix* raw = nullptr;
    if (auto s = symtrace_matrix_load(matrix_file.c_str(), &raw); s != SYMTRACE_OK) return report(s);
    OwnedMatrix a(raw);
    char* json = nullptr;
    auto s = symtrace_compute_json(a.get(), k, method_from(method),
                                   functional ? functional->c_str() : nullptr, &json);
    if (s != SYMTRACE_OK) return report(s);
    OwnedString owned(json);
    std::cout << json << "\n";
    return kOk;
  }

  if (*verify) {
    OwnedMatrix a;
    if (verify_file) {
      symtrace_matrix* raw = nullptr;
      if (auto s = symtrace_matrix_load(verify_file->c_str(), &raw); s != SYMTRACE_OK) {
        return report(s);
      }
      a.reset(raw);
      vopts.matrix = a.get();
    }
    vopts.field = verify_field.c_str();
    char* text = nullptr;
    int passed = 0;
    if (auto s = symtrace_verify(&vopts, &text, &passed); s != SYMTRACE_OK) return report(s);
    OwnedString owned(text);
    std::cout << text;
    return passed ? kOk : kVerifyFailed;
  }

  if (*table) {
    char* text = nullptr;
    int match = 0;
    auto s = symtrace_table(table_n, fixture ? fixture->c_str() : nullptr, &text, &match);
    if (s != SYMTRACE_OK) return report(s);
    OwnedString owned(text);
    std::cout << text;
    return match ? kOk : kVerifyFailed;
  }

  if (*bench) {
    bopts.field = bench_field.c_str();
    char* csv = nullptr;
    if (auto s = symtrace_bench_csv(&bopts, &csv); s != SYMTRACE_OK) return report(s);
    OwnedString owned(csv);
    std::ofstream out(bench_out, std::ios::binary);
    out << csv;
    out.close();
    if (!out) {
      std::cerr << "symtrace: IoError: cannot write " << bench_out << "\n";
      return kIo;
    }
    return kOk;
  }
  return kParse;
}
