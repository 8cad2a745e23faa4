#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "axbsolve/matrix.hpp"

namespace axb {

/// Raised on malformed matrix text. The message carries source name and
/// 1-based line number, e.g. "A.mat:3: row has 4 entries, expected 2".
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses one rational token: an optionally signed integer or "p/q".
Rat parse_rat(const std::string& token);

std::string format_rat(const Rat& x);

/// Matrix text format: one row per line, entries whitespace-separated,
/// each entry an optionally signed integer or p/q rational. Blank lines
/// and lines starting with '#' are ignored. At least one row with at
/// least one entry is required, and all rows must have equal length.
Mat parse_matrix(std::istream& in, const std::string& source_name = "<input>");

Mat parse_matrix_string(const std::string& text, const std::string& source_name = "<string>");

Mat read_matrix_file(const std::string& path);

/// One row per line, entries separated by single spaces. Parses back to
/// an identical matrix.
std::string format_matrix(const Mat& m);

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace axb
