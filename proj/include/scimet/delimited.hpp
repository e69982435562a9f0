#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scimet {

// Comma-separated text with a mandatory header row. Blank lines and lines
// starting with '#' are skipped; fields may be double-quoted.
struct DelimitedTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_lines;  // 1-based source line of each row

    std::optional<std::size_t> find_column(std::string_view name) const;
    std::size_t column(std::string_view name) const;  // throws DataError when absent
};

DelimitedTable read_delimited(std::string_view text);

std::string quote_field(std::string_view field);
std::string write_delimited(const std::vector<std::string> &header,
                            const std::vector<std::vector<std::string>> &rows);

// Strict conversions; surrounding spaces are tolerated, anything else throws DataError.
std::int64_t parse_integer(std::string_view field, std::string_view what);
double parse_real(std::string_view field, std::string_view what);

std::string_view trim(std::string_view s);

}  // namespace scimet
