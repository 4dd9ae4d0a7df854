#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical::cli {

// Whitespace-separated rows; `-inf` (any case) or `*` is -inf; lines whose
// first non-blank character is `#` are comments. Throws kParseError on
// ragged rows, bad tokens or an empty document.
TropMatrix parse_matrix(std::string_view text);
TropMatrix read_matrix_file(const std::string& path);

// Inverse of parse_matrix; integral values print without a fraction.
std::string format_matrix(const TropMatrix& m);

// "2,4,1" -> {2, 4, 1}, still 1-based. Throws kParseError on malformed lists
// or index 0.
std::vector<std::size_t> parse_index_list(std::string_view text);

}  // namespace tropical::cli
