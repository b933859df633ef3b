#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "dcx/matrix.hpp"
#include "dcx/signrank.hpp"

namespace dcx {

using AnyMatrix = std::variant<RealMatrix, ComplexMatrix, SignMatrix>;

// Text block format: header "rows cols kind" with kind in
// {real, complex, sign}, then `rows` lines of `cols` whitespace-separated
// entries. Reals print as %.17g so parse(serialize(M)) round-trips
// bit-exactly; complex entries are re+imi / re-imi with no spaces; sign
// entries are exactly 1 or -1. Files require rows, cols >= 1.

// Parses one block starting at the next non-blank line. line_cursor counts
// physical lines already consumed from the stream (0 for a fresh file) and
// is advanced past the block, which lets callers read multi-block files and
// still get 1-based line numbers in ParseError.
AnyMatrix parse_matrix(std::istream& in, std::size_t& line_cursor);
AnyMatrix parse_matrix(std::istream& in);

// Reads exactly one block and requires nothing but blank lines after it.
AnyMatrix parse_matrix_file(const std::string& path);

void serialize_matrix(std::ostream& out, const RealMatrix& m);
void serialize_matrix(std::ostream& out, const ComplexMatrix& m);
void serialize_matrix(std::ostream& out, const SignMatrix& m);
void serialize_matrix(std::ostream& out, const AnyMatrix& m);

void write_matrix_file(const std::string& path, const AnyMatrix& m);

// %.17g, the shortest fixed precision that round-trips every double.
std::string format_double(double v);
// re+imi / re-imi with both parts always present.
std::string format_complex(cplx v);

}  // namespace dcx
