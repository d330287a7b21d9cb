#pragma once

// Plain-text matrix files:
//
//   # comment lines start with '#'
//   rows cols
//   a11 a12 ... a1n
//   ...
//
// Entries are integers, decimals, or p/q rationals. Values are always read
// exactly; rational entries round-trip bit for bit.

#include "dispkit/matrix.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dispkit {

class MatrixParseError : public std::runtime_error {
public:
    MatrixParseError(const std::string& source, std::size_t line, std::size_t column,
                     const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

RationalMatrix read_matrix(std::istream& in, const std::string& source = "<input>");
RationalMatrix read_matrix_file(const std::filesystem::path& path);
RationalMatrix parse_matrix(std::string_view text);

std::string format_matrix(const RationalMatrix& a, std::string_view comment = {});
std::string format_matrix(const RealMatrix& a, std::string_view comment = {});

template <typename T>
void write_matrix_file(const std::filesystem::path& path, const Matrix<T>& a,
                       std::string_view comment = {});

} // namespace dispkit
