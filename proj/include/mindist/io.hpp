#pragma once

#include <iosfwd>
#include <string>

#include "mindist/code.hpp"

namespace mindist {

// alist v1 text format.
//   line 1: "n r"
//   line 2: "max_col_degree max_row_degree"
//   line 3: n column degrees            line 4: r row degrees
//   then one line per column with 1-based row indices, zero-padded to the
//   max column degree, then one line per row with 1-based column indices
//   zero-padded likewise. For q > 2 every index is followed by its nonzero
//   coefficient ("idx coeff" pairs, zero-padded with "0 0").
ParityCheckMatrix read_alist(std::istream& in, int q, const std::string& path = "<alist>");
ParityCheckMatrix read_alist_file(const std::string& path, int q);
void write_alist(std::ostream& out, const ParityCheckMatrix& h);
void write_alist_file(const std::string& path, const ParityCheckMatrix& h);

// Pauli text format: one generator per line over {I,X,Y,Z}, mapped to GF(4)
// as X -> w, Z -> 1, Y -> w̄ (e = u + wv). '#' starts a comment.
StabilizerCode read_pauli(std::istream& in, const std::string& path = "<pauli>");
StabilizerCode read_pauli_file(const std::string& path);
void write_pauli(std::ostream& out, const StabilizerCode& s);
void write_pauli_file(const std::string& path, const StabilizerCode& s);

std::string pauli_string(const QuatVector& v);
QuatVector parse_pauli_line(const std::string& line);  // throws ParseError on bad chars

// Whitespace-separated syndrome vector (element indices), length checked by
// the caller.
std::vector<uint8_t> read_syndrome_file(const std::string& path, int q);

}  // namespace mindist
