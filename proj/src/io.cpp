#include "gl3/io.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "gl3/arith.hpp"
#include "gl3/errors.hpp"

namespace gl3::io {

namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

template <class T>
T parse_number(const std::string& field, std::size_t line, const char* name) {
  T value{};
  const char* first = field.data();
  const char* last = first + field.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError(line, std::string("bad ") + name + " value '" + field + "'");
  }
  return value;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open input file '" + path + "'");
  return in;
}

// Reads the header, then calls row(fields, line) for each non-blank row.
template <class F>
void read_csv(std::istream& in, const std::string& header, std::size_t columns, F&& row) {
  std::string line;
  std::size_t lineno = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    if (!seen_header) {
      std::string h;
      for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) h.push_back(c);
      }
      if (h != header) throw ParseError(lineno, "expected header '" + header + "'");
      seen_header = true;
      continue;
    }
    auto fields = split_row(line);
    if (fields.size() != columns) {
      throw ParseError(lineno, "expected " + std::to_string(columns) + " fields, found " + std::to_string(fields.size()));
    }
    row(fields, lineno);
  }
  if (!seen_header) throw ParseError(lineno + 1, "missing header '" + header + "'");
}

}  // namespace

Gl2Ingest read_gl2csv(std::istream& in) {
  std::vector<std::pair<std::int64_t, double>> pairs;
  std::set<std::int64_t> seen;
  Gl2Ingest out;
  read_csv(in, "p,lambda", 2, [&](const std::vector<std::string>& f, std::size_t line) {
    const auto p = parse_number<std::int64_t>(f[0], line, "p");
    const auto lambda = parse_number<double>(f[1], line, "lambda");
    if (!is_prime(p)) throw ParseError(line, "p = " + f[0] + " is not prime");
    if (!std::isfinite(lambda)) throw ParseError(line, "lambda is not finite");
    if (!seen.insert(p).second) throw ParseError(line, "duplicate prime " + f[0]);
    if (std::abs(lambda) > 2.0) {
      out.warnings.push_back("line " + std::to_string(line) + ": |lambda(" + f[0] + ")| = " + f[1] +
                             " exceeds 2 (not Ramanujan)");
    }
    pairs.emplace_back(p, lambda);
  });
  out.data = GL2FormData::from_pairs(std::move(pairs));
  return out;
}

Gl2Ingest read_gl2csv(const std::string& path) {
  auto in = open_input(path);
  return read_gl2csv(in);
}

RealSequence read_seqcsv(std::istream& in) {
  RealSequence seq;
  read_csv(in, "m,value", 2, [&](const std::vector<std::string>& f, std::size_t line) {
    const auto m = parse_number<std::int64_t>(f[0], line, "m");
    const auto v = parse_number<double>(f[1], line, "value");
    if (m != static_cast<std::int64_t>(seq.values.size()) + 1) {
      throw ParseError(line, "expected m = " + std::to_string(seq.values.size() + 1) + ", found " + f[0]);
    }
    if (!std::isfinite(v)) throw ParseError(line, "value is not finite");
    seq.values.push_back(v);
  });
  return seq;
}

RealSequence read_seqcsv(const std::string& path) {
  auto in = open_input(path);
  auto seq = read_seqcsv(in);
  seq.label = path;
  return seq;
}

DirichletPolynomial read_polynomial_csv(std::istream& in) {
  DirichletPolynomial poly;
  read_csv(in, "n,re,im", 3, [&](const std::vector<std::string>& f, std::size_t line) {
    const auto n = parse_number<std::uint64_t>(f[0], line, "n");
    if (n == 0) throw ParseError(line, "n must be positive");
    poly.add_term(n, cplx(parse_number<double>(f[1], line, "re"), parse_number<double>(f[2], line, "im")));
  });
  return poly;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_table_csv(std::ostream& out, const CoefficientTable& table) {
  out << "m,n,re,im\n";
  for (std::int64_t m = 1; m <= table.bound_m(); ++m) {
    for (std::int64_t n = 1; n <= table.bound_n(); ++n) {
      const cplx a = table.at(m, n);
      out << m << ',' << n << ',' << format_double(a.real()) << ',' << format_double(a.imag()) << '\n';
    }
  }
}

void write_samples_csv(std::ostream& out, const std::vector<TorusPoint>& samples) {
  out << "theta1,theta2\n";
  for (const auto& s : samples) out << format_double(s.theta1()) << ',' << format_double(s.theta2()) << '\n';
}

void write_density_csv(std::ostream& out, const MeasureSpec& spec, int grid) {
  const QuadratureGrid g(grid);
  const DensityEvaluator rho(spec);
  out << "theta1,theta2,density\n";
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      out << format_double(g.node(i)) << ',' << format_double(g.node(j)) << ','
          << format_double(rho(g.node(i), g.node(j))) << '\n';
    }
  }
}

void write_polynomial_csv(std::ostream& out, const DirichletPolynomial& poly) {
  out << "n,re,im\n";
  for (const auto& [n, a] : poly.terms()) {
    out << uint128_to_string(n) << ',' << format_double(a.real()) << ',' << format_double(a.imag()) << '\n';
  }
}

}  // namespace gl3::io
