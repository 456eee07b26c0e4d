#pragma once

#include "leontief/model.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace leontief {

/// Grammar error located at a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Reads the `leontief-lp v1` text format:
///
///     leontief-lp v1
///     m <int> n <int>
///     b <m rationals>
///     c <n rationals>
///     A <nnz>
///     <i> <j> <rational>     (nnz lines, 1-based, no duplicates)
///     end
///
/// Lines whose first non-blank character is `#` are comments; blank lines
/// are ignored. Only the grammar is checked here, not the Leontief property.
Instance parse_instance(std::string_view text);
Instance read_instance(const std::filesystem::path& path);

/// Canonical text form, entries in column-major order.
std::string emit_instance(const Instance& inst);

}  // namespace leontief
