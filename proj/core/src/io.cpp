#include "ffsync/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ffsync/error.hpp"

namespace ffsync {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line) + ": invalid " + what + " '" + std::string(tok) + "'",
                line);
  }
  return v;
}

// Parses one record starting at lines[pos]; advances pos past it.
Matrix parse_record(const std::vector<Line>& lines, std::size_t& pos) {
  const Line& head = lines[pos++];
  const auto h = tokens(head.text);
  if (h.size() != 3) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(head.number) + ": header must be 'p ROWS COLS'",
                head.number);
  }
  const auto p = parse_uint(h[0], head.number, "modulus");
  const auto rows = parse_uint(h[1], head.number, "row count");
  const auto cols = parse_uint(h[2], head.number, "column count");
  if (!is_prime(p) || p >= (1ULL << 31)) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(head.number) + ": modulus " + std::to_string(p) +
                    " is not prime",
                head.number);
  }
  if (rows == 0 || cols == 0) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(head.number) + ": dimensions must be positive",
                head.number);
  }
  const Field f(static_cast<std::uint32_t>(p));

  std::vector<Residue> entries;
  for (std::uint64_t r = 0; r < rows; ++r) {
    if (pos >= lines.size() || is_blank(lines[pos].text)) {
      const auto at = pos < lines.size() ? lines[pos].number : head.number + r + 1;
      throw Error(Errc::ParseError,
                  "line " + std::to_string(at) + ": expected " + std::to_string(rows) + " rows",
                  at);
    }
    const Line& ln = lines[pos++];
    const auto t = tokens(ln.text);
    if (t.size() != cols) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(ln.number) + ": expected " + std::to_string(cols) +
                      " entries, got " + std::to_string(t.size()),
                  ln.number);
    }
    for (auto tok : t) {
      const auto v = parse_uint(tok, ln.number, "entry");
      if (v >= p) {
        throw Error(Errc::ParseError,
                    "line " + std::to_string(ln.number) + ": entry " + std::to_string(v) +
                        " out of range [0, " + std::to_string(p) + ")",
                    ln.number);
      }
      entries.push_back(static_cast<Residue>(v));
    }
  }
  return Matrix(f, rows, cols, std::move(entries));
}

}  // namespace

std::vector<Matrix> parse_matrix_records(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<Matrix> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < lines.size() && is_blank(lines[pos].text)) ++pos;
    if (pos >= lines.size()) break;
    out.push_back(parse_record(lines, pos));
    if (pos < lines.size() && !is_blank(lines[pos].text)) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(lines[pos].number) + ": unexpected extra row",
                  lines[pos].number);
    }
  }
  return out;
}

Matrix parse_matrix(std::string_view text) {
  auto recs = parse_matrix_records(text);
  if (recs.size() != 1) {
    throw Error(Errc::ParseError, "expected exactly one matrix, found " + std::to_string(recs.size()),
                1);
  }
  return std::move(recs.front());
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string(), 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << m.field().modulus() << ' ' << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os.str();
}

std::string format_matrix_records(std::span<const Matrix> mats) {
  std::string out;
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (k) out += '\n';
    out += format_matrix(mats[k]);
  }
  return out;
}

Vector parse_vector(std::string_view text, const Field& f) {
  Vector v;
  std::string norm(text);
  for (auto& c : norm)
    if (c == ',') c = ' ';
  for (auto tok : tokens(norm)) {
    std::int64_t x = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::ParseError, "invalid vector entry '" + std::string(tok) + "'", 1);
    }
    v.push_back(f.reduce(x));
  }
  return v;
}

namespace {

std::string join(std::span<const Residue> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string inline_matrix(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ';';
    s += join(m.row(i));
  }
  return s;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_report(const AdmissibilityReport& rep) {
  std::ostringstream os;
  os << "row_stochastic=" << flag(rep.row_stochastic) << '\n'
     << "charpoly_ok=" << flag(rep.charpoly_ok) << '\n'
     << "nilpotent=" << flag(rep.nilpotent) << '\n'
     << "char_poly=" << join(rep.char_poly.coeffs) << '\n'
     << "left_eigvec=" << (rep.left_eigvec ? join(*rep.left_eigvec) : "absent") << '\n'
     << "p_dot_one=" << rep.p_dot_one << '\n'
     << "laplacian=" << inline_matrix(rep.laplacian) << '\n'
     << "admissible=" << flag(rep.admissible) << '\n';
  if (rep.warning) os << "warning=" << *rep.warning << '\n';
  return os.str();
}

std::string format_rational(const BigRational& r, bool approx) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (approx) {
    // 12 significant decimals from exact integer division.
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    const BigInt scaled = (num < 0 ? -num : num) * BigInt(1'000'000'000'000LL) / den;
    std::string digits = scaled.str();
    if (digits.size() <= 12) digits.insert(0, 13 - digits.size(), '0');
    digits.insert(digits.size() - 12, ".");
    return (num < 0 ? "-" : "") + digits;
  }
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_cardinalities(const CardinalityReport& rep, bool approx) {
  std::ostringstream os;
  os << "N=" << rep.n << '\n'
     << "p=" << rep.p << '\n'
     << "m_all=" << rep.m_all << '\n'
     << "gl=" << rep.gl << '\n'
     << "m_rs=" << rep.m_rs << '\n'
     << "g_rs=" << rep.g_rs << '\n'
     << "u_rs=" << rep.u_rs << '\n'
     << "perms=" << rep.perms << '\n'
     << "delta=" << format_rational(rep.delta) << '\n';
  if (approx) os << "delta_approx=" << format_rational(rep.delta, true) << '\n';
  return os.str();
}

std::string format_verdict(const StabilizabilityVerdict& v) {
  std::ostringstream os;
  os << "controllable_dim=" << v.controllable_dim << '\n'
     << "stabilizable=" << flag(v.stabilizable) << '\n'
     << "reason=" << v.reason << '\n';
  return os.str();
}

void write_trace_csv(std::ostream& os, const SimulationTrace& trace) {
  os << "k,agent,dim,value\n";
  for (std::size_t k = 0; k < trace.steps(); ++k) {
    for (std::size_t i = 0; i < trace.agents; ++i) {
      const auto x = trace.state(k, i);
      for (std::size_t d = 0; d < x.size(); ++d) os << k << ',' << i << ',' << d << ',' << x[d] << '\n';
    }
  }
  for (std::size_t k = 0; k < trace.alpha.size(); ++k)
    for (std::size_t d = 0; d < trace.alpha[k].size(); ++d)
      os << k << ",alpha," << d << ',' << trace.alpha[k][d] << '\n';
}

namespace {

std::string formula_value(const CardinalityReport& r, std::string_view name, bool approx) {
  if (name == "m_all") return r.m_all.str();
  if (name == "gl") return r.gl.str();
  if (name == "m_rs") return r.m_rs.str();
  if (name == "g_rs") return r.g_rs.str();
  if (name == "u_rs") return r.u_rs.str();
  if (name == "perms") return r.perms.str();
  if (name == "delta") return format_rational(r.delta, approx);
  throw Error(Errc::InvalidArgument, "unknown formula '" + std::string(name) + "'");
}

}  // namespace

std::string format_sweep(std::size_t nmin, std::size_t nmax, std::uint32_t pmin, std::uint32_t pmax,
                         std::optional<std::string_view> formula, bool approx) {
  if (nmin < 1 || nmin > nmax || pmin > pmax) {
    throw Error(Errc::InvalidArgument, "empty or invalid sweep range");
  }
  if (formula) (void)formula_value(cardinalities(1, Field(2)), *formula, false);

  std::ostringstream os;
  os << (formula ? "N,p,value\n" : "formula,N,p,value\n");
  std::vector<std::string_view> names;
  if (formula) {
    names.push_back(*formula);
  } else {
    names.assign(std::begin(kSweepFormulas), std::end(kSweepFormulas));
  }
  for (auto name : names) {
    for (std::size_t n = nmin; n <= nmax; ++n) {
      for (std::uint32_t p = pmin; p <= pmax; ++p) {
        if (!is_prime(p)) continue;
        const auto rep = cardinalities(n, Field(p));
        if (!formula) os << name << ',';
        os << n << ',' << p << ',' << formula_value(rep, name, approx) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace ffsync
