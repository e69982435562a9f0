#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scimet/series.hpp"

namespace scimet {

inline constexpr int kMinYear = 1800;
inline constexpr int kMaxYear = 2100;

struct BibRecord {
    std::string id;
    std::string pub_type = "J";
    std::string title;
    int year = 0;
    std::string doc_type;
    std::string language;
    std::vector<std::string> authors;
    std::set<std::string> countries;
    std::string journal;
    std::optional<std::int64_t> page_count;
    std::int64_t citation_count = 0;
    std::vector<std::string> keywords;       // DE
    std::vector<std::string> keywords_plus;  // ID

    bool operator==(const BibRecord &) const = default;
};

struct Diagnostic {
    std::size_t line = 0;
    std::string message;
    bool operator==(const Diagnostic &) const = default;
};

struct ParseReport {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
    std::vector<Diagnostic> diagnostics;
};

struct ParseResult {
    std::vector<BibRecord> records;
    ParseReport report;
};

// Field-tagged export: two-character tag at column 0, one space, value.
// Continuation lines start with three spaces. PT opens a record, ER closes
// it, EF closes the file.
ParseResult parse_export(std::string_view text);

// Inverse of parse_export. Throws DataError for values the format cannot
// carry (embedded newlines, "; " inside list items).
std::string serialize_export(const std::vector<BibRecord> &records);

bool is_valid_utf8(std::string_view s);

YearSeries parse_year_table(std::string_view text);
ProductivityDistribution parse_distribution(std::string_view text);
RankedList parse_ranked_table(std::string_view text, std::string_view label_column,
                              std::string_view value_column);
inline RankedList parse_journal_table(std::string_view text) {
    return parse_ranked_table(text, "journal", "articles");
}
inline RankedList parse_word_table(std::string_view text) {
    return parse_ranked_table(text, "word", "frequency");
}

std::string write_year_table(const YearSeries &series);
std::string write_distribution(const ProductivityDistribution &dist);
std::string write_ranked_table(const RankedList &list, std::string_view label_column,
                               std::string_view value_column);

}  // namespace scimet
