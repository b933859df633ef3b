#include "dcx/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

constexpr std::size_t kMaxDim = 10000;  // desk-scale guard against bad headers

struct Token {
  std::string text;
  std::size_t column;  // 1-based start position in the line
};

std::vector<Token> split_line(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool blank(const std::string& line) {
  for (char ch : line) {
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

double parse_real_token(const std::string& text, std::size_t line,
                        std::size_t column) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("invalid real value '" + text + "'", line, column);
  }
  if (!std::isfinite(v)) {
    throw ParseError("non-finite value '" + text + "'", line, column);
  }
  return v;
}

// a+bi / a-bi with no spaces; the split sign is the last +/- that is not an
// exponent sign and not the leading sign of the real part.
cplx parse_complex_token(const std::string& text, std::size_t line,
                         std::size_t column) {
  if (text.size() < 2 || text.back() != 'i') {
    throw ParseError("invalid complex value '" + text + "' (expected a+bi)",
                     line, column);
  }
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    throw ParseError("invalid complex value '" + text + "' (expected a+bi)",
                     line, column);
  }
  const double re = parse_real_token(body.substr(0, split), line, column);
  const double mag =
      parse_real_token(body.substr(split + 1), line, column + split + 1);
  return {re, body[split] == '-' ? -mag : mag};
}

std::string next_data_line(std::istream& in, std::size_t& line_cursor,
                           std::size_t expected_row, std::size_t total_rows) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("unexpected end of input: expected row " +
                         std::to_string(expected_row + 1) + " of " +
                         std::to_string(total_rows),
                     line_cursor + 1, 1);
  }
  ++line_cursor;
  return line;
}

}  // namespace

AnyMatrix parse_matrix(std::istream& in, std::size_t& line_cursor) {
  std::string line;
  // Header is the next non-blank line.
  for (;;) {
    if (!std::getline(in, line)) {
      throw ParseError("unexpected end of input: expected header line",
                       line_cursor + 1, 1);
    }
    ++line_cursor;
    if (!blank(line)) break;
  }
  const std::size_t header_line = line_cursor;
  const std::vector<Token> head = split_line(line);
  if (head.size() != 3) {
    throw ParseError("header must be 'rows cols kind', got " +
                         std::to_string(head.size()) + " fields",
                     header_line, 1);
  }
  auto parse_dim = [&](const Token& t) -> std::size_t {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(),
                                     t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v < 1 ||
        v > kMaxDim) {
      throw ParseError("invalid dimension '" + t.text + "' (need 1.." +
                           std::to_string(kMaxDim) + ")",
                       header_line, t.column);
    }
    return v;
  };
  const std::size_t rows = parse_dim(head[0]);
  const std::size_t cols = parse_dim(head[1]);
  const std::string& kind = head[2].text;
  if (kind != "real" && kind != "complex" && kind != "sign") {
    throw ParseError("unknown matrix kind '" + kind + "'", header_line,
                     head[2].column);
  }

  std::vector<double> reals;
  std::vector<cplx> complexes;
  std::vector<std::int8_t> signs;

  for (std::size_t r = 0; r < rows; ++r) {
    const std::string data = next_data_line(in, line_cursor, r, rows);
    const std::vector<Token> toks = split_line(data);
    if (toks.size() != cols) {
      throw ParseError("row " + std::to_string(r + 1) + " has " +
                           std::to_string(toks.size()) + " values, expected " +
                           std::to_string(cols),
                       line_cursor,
                       toks.size() > cols ? toks[cols].column : 1);
    }
    for (const Token& t : toks) {
      if (kind == "real") {
        reals.push_back(parse_real_token(t.text, line_cursor, t.column));
      } else if (kind == "complex") {
        complexes.push_back(parse_complex_token(t.text, line_cursor, t.column));
      } else {
        if (t.text == "1") {
          signs.push_back(1);
        } else if (t.text == "-1") {
          signs.push_back(-1);
        } else {
          throw ParseError("invalid sign value '" + t.text +
                               "' (expected 1 or -1)",
                           line_cursor, t.column);
        }
      }
    }
  }

  if (kind == "real") return RealMatrix(rows, cols, std::move(reals));
  if (kind == "complex") return ComplexMatrix(rows, cols, std::move(complexes));
  return SignMatrix(rows, cols, std::move(signs));
}

AnyMatrix parse_matrix(std::istream& in) {
  std::size_t cursor = 0;
  return parse_matrix(in, cursor);
}

AnyMatrix parse_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "' for reading");
  std::size_t cursor = 0;
  AnyMatrix m = parse_matrix(in, cursor);
  std::string rest;
  while (std::getline(in, rest)) {
    ++cursor;
    if (!blank(rest)) {
      throw ParseError("trailing content after matrix block", cursor, 1);
    }
  }
  return m;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_complex(cplx v) {
  const double im = v.imag();
  return format_double(v.real()) + (std::signbit(im) ? "-" : "+") +
         format_double(std::abs(im)) + "i";
}

void serialize_matrix(std::ostream& out, const RealMatrix& m) {
  out << m.rows() << ' ' << m.cols() << " real\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << format_double(m(i, j));
    }
    out << '\n';
  }
}

void serialize_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.rows() << ' ' << m.cols() << " complex\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << format_complex(m(i, j));
    }
    out << '\n';
  }
}

void serialize_matrix(std::ostream& out, const SignMatrix& m) {
  out << m.rows() << ' ' << m.cols() << " sign\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j ? " " : "") << m(i, j);
    }
    out << '\n';
  }
}

void serialize_matrix(std::ostream& out, const AnyMatrix& m) {
  std::visit([&](const auto& v) { serialize_matrix(out, v); }, m);
}

void write_matrix_file(const std::string& path, const AnyMatrix& m) {
  std::ostringstream buf;
  serialize_matrix(buf, m);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot open '" + path + "' for writing");
  out << buf.str();
  if (!out) throw ArgumentError("failed writing '" + path + "'");
}

}  // namespace dcx
