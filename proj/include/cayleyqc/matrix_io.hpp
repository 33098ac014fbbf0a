#pragma once

#include <string>
#include <string_view>

#include "cayleyqc/bit_matrix.hpp"

namespace cayleyqc {

/// Parses the plain-text matrix format:
///
///     # comment
///     r n
///     1 0 1 ...   (r rows of n entries, each 0 or 1)
///
/// Blank lines and lines whose first non-space character is '#' are ignored.
/// Errors are reported as ParseError with 1-based line and column.
BitMatrix parse_matrix(std::string_view text);
BitMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const BitMatrix& m);

}  // namespace cayleyqc
