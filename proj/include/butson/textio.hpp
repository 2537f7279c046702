#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "butson/matrices.hpp"

namespace butson {

/// Either an exponent grid ("BH q n") or a complex grid ("C n").
using ParsedMatrix = std::variant<ButsonMatrix, ComplexMatrix>;

/// Reads the text matrix format:
///
///   BH <q> <n>            C <n>
///   e e e ...             re,im re,im ...
///
/// followed by exactly n rows of n tokens. Blank lines and lines starting
/// with '#' are ignored. Throws ParseError on anything else.
ParsedMatrix parse_matrix(std::istream& in);
ParsedMatrix parse_matrix(std::string_view text);

std::string format_matrix(const ButsonMatrix& b);
std::string format_matrix(const ComplexMatrix& m);

/// 15 significant digits, lowercase exponent, no negative zero.
std::string format_double(double v);
/// v rounded to 15 significant digits (and -0 mapped to 0).
double round_to_15_digits(double v);

}  // namespace butson
