// SPDX-License-Identifier: Apache-2.0
#include "symtrace/symbolic.hpp"

#include <cctype>
#include <sstream>

#include "symtrace/symcore.hpp"

namespace symtrace {

PolyMatrix generic_matrix(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "matrix dimension must be positive");
  const auto vars = n * n;
  PolyMatrix g(n, MultiPoly(vars));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      g(i - 1, j - 1) = MultiPoly::variable(vars, entry_variable(n, i, j));
    }
  }
  return g;
}

namespace {

std::string variable_name(std::size_t n, std::size_t index) {
  const auto i = index / n + 1, j = index % n + 1;
  if (n <= 9) return "a" + std::to_string(i) + std::to_string(j);
  return "a[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  MultiPoly parse() {
    MultiPoly sum(n_ * n_);
    skip_space();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_space();
    }
    while (true) {
      auto term = parse_term();
      if (negative) {
        sum -= term;
      } else {
        sum += term;
      }
      skip_space();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') error("expected + or -");
      negative = op == '-';
      skip_space();
    }
    return sum;
  }

 private:
  MultiPoly parse_term() {
    auto term = MultiPoly::constant(n_ * n_, 1);
    while (true) {
      skip_space();
      term *= parse_factor();
      skip_space();
      if (peek() != '*') return term;
      get();
    }
  }

  MultiPoly parse_factor() {
    if (peek() == 'a') {
      get();
      std::size_t i = 0, j = 0;
      if (peek() == '[') {
        get();
        i = parse_unsigned();
        expect(',');
        j = parse_unsigned();
        expect(']');
      } else {
        i = digit();
        j = digit();
      }
      if (i < 1 || j < 1 || i > n_ || j > n_) error("indeterminate index out of range");
      auto v = MultiPoly::variable(n_ * n_, entry_variable(n_, i, j));
      if (peek() == '^') {
        get();
        const auto power = parse_unsigned();
        auto result = MultiPoly::constant(n_ * n_, 1);
        for (std::size_t k = 0; k < power; ++k) result *= v;
        return result;
      }
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(parse_digits(), 10);
      mpz_class den(1);
      if (peek() == '/') {
        get();
        den = mpz_class(parse_digits(), 10);
        if (den == 0) error("zero denominator");
      }
      mpq_class c(num, den);
      c.canonicalize();
      return MultiPoly::constant(n_ * n_, c);
    }
    error("expected a coefficient or an indeterminate aIJ");
  }

  std::string parse_digits() {
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
    if (digits.empty()) error("expected digits");
    return digits;
  }

  std::size_t parse_unsigned() {
    const auto digits = parse_digits();
    if (digits.size() > 6) error("number too large");
    return static_cast<std::size_t>(std::stoul(digits));
  }

  std::size_t digit() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected an index digit");
    return static_cast<std::size_t>(get() - '0');
  }

  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    get();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::Parse, "polynomial \"" + std::string(text_) + "\" at offset " +
                               std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

MultiPoly apply_functional(const LinearFunctional& f, const PolyMatrix& m) {
  MultiPoly sum = zero_like(m.like());
  const auto n = m.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& c = f.coefficients()(i, j);
      if (!c.is_zero()) sum += m(i, j) * c.as_rational();
    }
  }
  return sum;
}

}  // namespace

std::string render_polynomial(const MultiPoly& p, std::size_t n) {
  if (p.variable_count() != n * n) {
    fail(ErrorKind::DimensionMismatch, "polynomial is not over the a_ij of an n = " +
                                           std::to_string(n) + " matrix");
  }
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpq_class magnitude = abs(c);
    std::vector<std::string> factors;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      auto name = variable_name(n, v);
      if (e[v] > 1) name += "^" + std::to_string(e[v]);
      factors.push_back(std::move(name));
    }
    if (magnitude != 1 || factors.empty()) factors.insert(factors.begin(), magnitude.get_str());
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (f > 0) out += "*";
      out += factors[f];
    }
  }
  return out;
}

MultiPoly parse_polynomial(std::string_view text, std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "matrix dimension must be positive");
  if (trim(text).empty()) fail(ErrorKind::Parse, "empty polynomial");
  return PolyParser(text, n).parse();
}

std::vector<MultiPoly> symbolic_sigma(std::size_t n, std::string_view label) {
  const auto f = LinearFunctional::from_label(label, n, Field::rational());
  const auto g = generic_matrix(n);
  const auto powers = power_sequence(g, n - 1);
  const auto e = exterior_traces(g);
  const auto h = sym_trace_values(e, n >= 2 ? n - 2 : 0);

  std::vector<MultiPoly> fp;
  for (std::size_t i = 1; i < n; ++i) fp.push_back(apply_functional(f, powers[i]));
  auto sigma = solve_sigmas<MultiPoly>(fp, h);
  if (!sigma.empty()) sigma.erase(sigma.begin());
  return sigma;
}

TableFixture parse_fixture(std::string_view text, std::size_t n) {
  if (n != 3 && n != 4) fail(ErrorKind::InvalidArgument, "fixtures exist for n = 3 and n = 4");
  TableFixture fixture{n, {}};
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto raw = text.substr(start, end == std::string_view::npos ? end : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, ';');
    const std::size_t expected = n == 3 ? 2 : 3;
    if (fields.size() != expected) {
      fail(ErrorKind::Parse, "fixture line " + std::to_string(line_no) + ": expected " +
                                 std::to_string(expected) + " ';'-separated fields");
    }
    FixtureRow row{std::string(fields[0]), parse_polynomial(fields[1], n), std::nullopt};
    if (n == 4) row.sigma3 = parse_polynomial(fields[2], n);
    fixture.rows.push_back(std::move(row));
  }
  return fixture;
}

TableFixture builtin_fixture(std::size_t n) { return parse_fixture(builtin_fixture_text(n), n); }

std::size_t TableReport::matched() const noexcept {
  std::size_t count = 0;
  for (const auto& r : rows) count += r.match ? 1 : 0;
  return count;
}

std::string TableReport::to_text() const {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << (r.match ? "match    " : "MISMATCH ") << r.label;
    if (!r.match) {
      for (std::size_t i = 0; i < r.differences.size(); ++i) {
        if (r.differences[i] != "0") {
          out << "  [sigma" << i + 2 << " computed - expected = " << r.differences[i] << "]";
        }
      }
    }
    out << "\n";
  }
  out << matched() << "/" << rows.size() << " match\n";
  return out.str();
}

TableReport verify_tables(const TableFixture& fixture) {
  TableReport report{fixture.n, {}};
  for (const auto& row : fixture.rows) {
    TableRowResult result{row.label, true, {}};
    const auto computed = symbolic_sigma(fixture.n, row.label);
    std::vector<const MultiPoly*> expected{&row.sigma2};
    if (row.sigma3) expected.push_back(&*row.sigma3);
    if (computed.size() != expected.size()) {
      fail(ErrorKind::InvalidArgument, "fixture row " + row.label + " has the wrong column count");
    }
    for (std::size_t i = 0; i < computed.size(); ++i) {
      const auto diff = computed[i] - *expected[i];
      result.differences.push_back(render_polynomial(diff, fixture.n));
      if (!diff.is_zero()) result.match = false;
    }
    report.rows.push_back(std::move(result));
  }
  return report;
}

TableReport verify_tables(std::size_t n) { return verify_tables(builtin_fixture(n)); }

}  // namespace symtrace
