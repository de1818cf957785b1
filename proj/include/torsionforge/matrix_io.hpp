// Matrix text format:
//
//   rows cols
//   a11 a12 ...
//   ...
//
// Whitespace between entries is free-form; only the header must sit on the
// first non-empty line. A JSON object {"rows": [[...], ...]} is accepted as
// well. Entries are decimal integers of any size.
#ifndef TORSIONFORGE_MATRIX_IO_HPP
#define TORSIONFORGE_MATRIX_IO_HPP

#include "torsionforge/bigint.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace torsionforge {

IntMatrix parse_matrix(std::string_view text);
IntMatrix read_matrix(const std::filesystem::path& path);

std::string format_matrix(const IntMatrix& m);
std::string format_matrix_json(const IntMatrix& m);

/// Whole contents of a file, or of stdin when path is "-".
std::string read_text(const std::filesystem::path& path);

}  // namespace torsionforge

#endif  // TORSIONFORGE_MATRIX_IO_HPP
