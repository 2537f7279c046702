#include "butson/textio.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <vector>

#include "butson/errors.hpp"

namespace butson {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

std::int64_t parse_integer(const std::string& token) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(token.c_str(), &end, 10);
  if (token.empty() || *end != '\0' || errno == ERANGE) throw ParseError("invalid integer '" + token + "'");
  return v;
}

double parse_real(const std::string& token) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) throw ParseError("invalid number '" + token + "'");
  return v;
}

std::complex<double> parse_complex(const std::string& token) {
  const auto comma = token.find(',');
  if (comma == std::string::npos) throw ParseError("complex entry '" + token + "' must be re,im");
  return {parse_real(token.substr(0, comma)), parse_real(token.substr(comma + 1))};
}

int parse_dimension(const std::string& token, const char* what) {
  const auto v = parse_integer(token);
  if (v < 1 || v > 4096) throw ParseError(std::string(what) + " out of range: " + token);
  return static_cast<int>(v);
}

}  // namespace

ParsedMatrix parse_matrix(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    auto tokens = split(line);
    if (tokens.empty() || tokens.front().starts_with('#')) continue;
    lines.push_back(std::move(tokens));
  }
  if (lines.empty()) throw ParseError("empty matrix input");

  const auto& header = lines.front();
  int n = 0;
  int q = 0;
  bool complex_grid = false;
  if (header[0] == "BH" && header.size() == 3) {
    q = parse_dimension(header[1], "root order");
    n = parse_dimension(header[2], "dimension");
  } else if (header[0] == "C" && header.size() == 2) {
    complex_grid = true;
    n = parse_dimension(header[1], "dimension");
  } else {
    throw ParseError("header must be 'BH <q> <n>' or 'C <n>'");
  }
  if (static_cast<int>(lines.size()) != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(lines[static_cast<std::size_t>(i)].size()) != n) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(lines[static_cast<std::size_t>(i)].size()) +
                       " entries, expected " + std::to_string(n));
    }
  }

  if (complex_grid) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = parse_complex(lines[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)]);
    return m;
  }
  Grid grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (const auto& token : lines[static_cast<std::size_t>(i + 1)]) grid[static_cast<std::size_t>(i)].push_back(parse_integer(token));
  return ButsonMatrix::from_exponents(q, grid);
}

ParsedMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

std::string format_matrix(const ButsonMatrix& b) {
  std::ostringstream out;
  out << "BH " << b.order() << ' ' << b.size() << '\n';
  for (int i = 0; i < b.size(); ++i) {
    for (int j = 0; j < b.size(); ++j) out << (j ? " " : "") << b(i, j);
    out << '\n';
  }
  return out.str();
}

std::string format_matrix(const ComplexMatrix& m) {
  std::ostringstream out;
  out << "C " << m.size() << '\n';
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      out << (j ? " " : "") << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
    }
    out << '\n';
  }
  return out.str();
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

double round_to_15_digits(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

}  // namespace butson
