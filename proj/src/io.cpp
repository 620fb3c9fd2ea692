#include "chaincover/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chaincover {
namespace {

// q is a prime power by construction; recover (p, e) from it.
std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint32_t q) {
  if (q < 2) throw std::invalid_argument("matrix header: q must be >= 2");
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  std::uint32_t e = 0;
  std::uint32_t v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1)
    throw std::invalid_argument("matrix header: q = " + std::to_string(q) +
                                " is not a prime power");
  return {p, e};
}

long parse_header_field(std::istringstream& in, const std::string& key) {
  std::string tok;
  if (!(in >> tok) || tok.rfind(key + "=", 0) != 0)
    throw std::invalid_argument("matrix header: expected " + key + "=<int>");
  try {
    return std::stol(tok.substr(key.size() + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("matrix header: bad integer for " + key);
  }
}

std::vector<long> parse_labeled_ints(const std::string& line,
                                     const std::string& label) {
  std::istringstream in(line);
  std::string tok;
  if (!(in >> tok) || tok != label + "=")
    throw std::invalid_argument("expected trailer line '" + label + "= ...'");
  std::vector<long> vals;
  long v;
  while (in >> v) vals.push_back(v);
  return vals;
}

}  // namespace

std::string matrix_to_text(const CodeMatrix& m) {
  const Field& f = *m.field();
  const std::uint32_t t = m.level() == Level::Base ? 1 : f.ext_degree();
  std::ostringstream out;
  out << "q=" << f.base_order() << " t=" << t << " n=" << m.cols()
      << " k=" << m.rows() << "\n";
  for (int i = 1; i <= m.rows(); ++i) {
    auto row = m.row_span(i);
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << row[j];
    }
    out << "\n";
  }
  return out.str();
}

CodeMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header))
    throw std::invalid_argument("matrix text: missing header line");
  std::istringstream hin(header);
  const long q = parse_header_field(hin, "q");
  const long t = parse_header_field(hin, "t");
  const long n = parse_header_field(hin, "n");
  const long k = parse_header_field(hin, "k");
  if (q < 2 || t < 1 || n < 0 || k < 0)
    throw std::invalid_argument("matrix header: values out of range");
  auto [p, e] = factor_prime_power(static_cast<std::uint32_t>(q));
  FieldHandle field =
      make_field(p, e, static_cast<std::uint32_t>(t));

  std::vector<std::uint32_t> data;
  data.reserve(static_cast<std::size_t>(k) * n);
  for (long i = 0; i < k; ++i) {
    std::string line;
    if (!std::getline(in, line))
      throw std::invalid_argument("matrix text: expected " +
                                  std::to_string(k) + " rows");
    std::istringstream lin(line);
    long v;
    long count = 0;
    while (lin >> v) {
      if (v < 0)
        throw std::invalid_argument("matrix text: negative element code");
      data.push_back(static_cast<std::uint32_t>(v));
      ++count;
    }
    if (count != n)
      throw std::invalid_argument("matrix text: row " + std::to_string(i + 1) +
                                  " has " + std::to_string(count) +
                                  " entries, expected " + std::to_string(n));
  }
  return CodeMatrix(field, Level::Ext, static_cast<int>(k),
                    static_cast<int>(n), std::move(data));
}

std::string vectors_to_text(std::span<const FVector> vs) {
  std::ostringstream out;
  for (const auto& v : vs) {
    auto codes = v.codes();
    for (int j = 0; j < v.length(); ++j) {
      if (j) out << ' ';
      out << codes[j];
    }
    out << "\n";
  }
  return out.str();
}

std::vector<FVector> vectors_from_text(const std::string& text,
                                       FieldHandle field, Level level) {
  std::istringstream in(text);
  std::vector<FVector> vs;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream lin(line);
    std::vector<std::uint32_t> codes;
    long v;
    while (lin >> v) {
      if (v < 0)
        throw std::invalid_argument("vector text: negative element code");
      codes.push_back(static_cast<std::uint32_t>(v));
    }
    if (!lin.eof())
      throw std::invalid_argument("vector text: malformed element code");
    if (codes.empty()) continue;  // ignore blank lines
    if (!vs.empty() && static_cast<int>(codes.size()) != vs.front().length())
      throw std::invalid_argument("vector text: ragged vector lengths");
    vs.emplace_back(field, level, std::move(codes));
  }
  return vs;
}

std::string chained_to_text(const ChainedMatrix& ch) {
  std::ostringstream out;
  out << matrix_to_text(ch.gamma);
  out << "d=";
  for (int v : ch.d) out << ' ' << v;
  out << "\nperm=";
  for (int v : ch.perm) out << ' ' << v;
  out << "\n";
  return out.str();
}

ChainedMatrix chained_from_text(const std::string& text) {
  // Split off the two trailer lines, parse the rest as a plain matrix.
  std::istringstream in(text);
  std::string line, matrix_part, d_line, perm_line;
  while (std::getline(in, line)) {
    if (line.rfind("d=", 0) == 0)
      d_line = line;
    else if (line.rfind("perm=", 0) == 0)
      perm_line = line;
    else {
      matrix_part += line;
      matrix_part += '\n';
    }
  }
  if (d_line.empty() || perm_line.empty())
    throw std::invalid_argument(
        "chained matrix text: missing d= or perm= trailer");
  CodeMatrix gamma = matrix_from_text(matrix_part);
  if (gamma.level() != Level::Base)
    throw std::invalid_argument(
        "chained matrix text: header must have t=1 (base field entries)");
  std::vector<int> d, perm;
  for (long v : parse_labeled_ints(d_line, "d")) d.push_back(static_cast<int>(v));
  for (long v : parse_labeled_ints(perm_line, "perm"))
    perm.push_back(static_cast<int>(v));
  ChainedMatrix ch{std::move(gamma), std::move(d), std::move(perm)};
  require_chained(ch);
  return ch;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace chaincover
