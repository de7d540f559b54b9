#ifndef LCOAL_TEXT_FORMAT_HPP
#define LCOAL_TEXT_FORMAT_HPP

// Shared text conventions for the library's file formats:
//
//   formal sums     2*a + c - 1/2*h_a       coefficient 1 omitted, "-" folds the sign
//   tensor terms    a (x) b                  "(x)" separates tensor legs
//   matrices        basis: a b h_a h_b
//                   col a = a + c + h_a      one line per basis element, zero column "0"
//
// '#' starts a comment in every format. Emitted text parses back to an identical value,
// and formatting that value again reproduces the text byte for byte.

#include <string>
#include <string_view>
#include <vector>

#include "lcoal/linear_endo.hpp"
#include "lcoal/tensor.hpp"

namespace lcoal
{

// Identifier rule shared by vertex names: [A-Za-z_][A-Za-z0-9_]*
bool is_identifier(std::string_view text);

// A parsed formal sum before label resolution: each term is a coefficient and its tensor
// legs (one leg for vectors, two for coproduct terms, n for braid states).
struct RawTerm
{
  Scalar coefficient;
  std::vector<std::string> legs;
};

// Parses "0" or a signed sum of terms "[coef*]leg (x) leg ...". Leg tokens may be any
// run of non-space characters other than "(x)", "+", "-". Throws SyntaxError.
std::vector<RawTerm> parse_formal_sum(std::string_view text);

// Resolve raw terms against a basis. Throws UnknownLabel or ArityMismatch.
FreeVector resolve_vector(const std::vector<RawTerm> &terms, const Basis &basis);
Tensor2 resolve_tensor2(const std::vector<RawTerm> &terms, const Basis &basis);
TensorN resolve_tensorn(const std::vector<RawTerm> &terms, const Basis &basis);

std::string format_vector(const FreeVector &v, const Basis &basis);
std::string format_tensor2(const Tensor2 &t, const Basis &basis);
std::string format_tensor3(const Tensor3 &t, const Basis &basis);
std::string format_tensorn(const TensorN &t, const Basis &basis);

std::string format_matrix(const LinearEndo &f);
// Throws SyntaxError, DuplicateLabel, UnknownLabel. Columns not listed are zero.
LinearEndo parse_matrix(std::string_view text);

// Splits into lines with comments and surrounding whitespace removed; empty lines are
// kept as empty strings so callers can report 1-based line numbers.
std::vector<std::string> clean_lines(std::string_view text);

std::vector<std::string> split_whitespace(std::string_view text);

}  // namespace lcoal

#endif  // LCOAL_TEXT_FORMAT_HPP
