#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scimet/records.hpp"
#include "scimet/series.hpp"

namespace scimet {

// Immutable record collection. Copies share the underlying records.
class Corpus {
public:
    Corpus();
    explicit Corpus(std::vector<BibRecord> records);

    const std::vector<BibRecord> &records() const { return *records_; }
    std::size_t total() const { return records_->size(); }
    bool empty() const { return records_->empty(); }
    std::optional<std::pair<int, int>> year_range() const { return year_range_; }

private:
    std::shared_ptr<const std::vector<BibRecord>> records_;
    std::optional<std::pair<int, int>> year_range_;
};

Corpus build_corpus(std::vector<BibRecord> records);

struct RecordFilter {
    std::optional<std::string> country;
    std::optional<std::string> doc_type;
    std::optional<std::string> language;

    bool matches(const BibRecord &r) const;
};

// Each clause is "field=value" with field one of country, doc_type, language.
RecordFilter parse_filter(const std::vector<std::string> &clauses);

// Zero-filled over the corpus year range.
YearSeries yearly_counts(const Corpus &corpus, const RecordFilter &filter = {});
YearSeries yearly_citations(const Corpus &corpus, const RecordFilter &filter = {});

enum class Field { doc_type, language, journal, keyword, keyword_plus, country };
Field parse_field(std::string_view name);
std::string_view field_name(Field f);

inline constexpr std::string_view kUnspecifiedLabel = "(unspecified)";

RankedList field_distribution(const Corpus &corpus, Field field);

// Papers per author count. Exact counts are kept; buckets() folds everything
// at or above overflow_at into the last bucket.
class AuthorshipDistribution {
public:
    static constexpr std::int64_t kDefaultOverflow = 10;

    explicit AuthorshipDistribution(std::int64_t overflow_at = kDefaultOverflow);
    static AuthorshipDistribution from_counts(const std::map<std::int64_t, std::int64_t> &papers_by_authors,
                                              std::int64_t overflow_at = kDefaultOverflow);
    // buckets[j-1] papers with j authors; the last entry holds papers with
    // buckets.size() or more authors. Exact counts above the threshold are lost.
    static AuthorshipDistribution from_buckets(const std::vector<std::int64_t> &buckets,
                                               std::optional<std::int64_t> total_authors = std::nullopt);

    void add_paper(std::int64_t authors);

    std::int64_t overflow_at() const { return overflow_at_; }
    bool exact() const { return exact_; }
    const std::map<std::int64_t, std::int64_t> &counts() const { return counts_; }
    std::int64_t bucket(std::int64_t j) const;
    std::vector<std::int64_t> buckets() const;  // index 0 .. overflow_at
    std::int64_t total_papers() const { return total_papers_; }
    std::int64_t single_authored() const;
    std::int64_t multi_authored() const;
    std::optional<std::int64_t> total_authors() const;

private:
    std::int64_t overflow_at_;
    bool exact_ = true;
    std::map<std::int64_t, std::int64_t> counts_;
    std::int64_t total_papers_ = 0;
    std::int64_t total_authors_ = 0;
    bool authors_known_ = true;
};

AuthorshipDistribution authorship_distribution(const Corpus &corpus,
                                               std::int64_t overflow_at = AuthorshipDistribution::kDefaultOverflow);
std::map<int, AuthorshipDistribution> authorship_by_year(
    const Corpus &corpus, std::int64_t overflow_at = AuthorshipDistribution::kDefaultOverflow);
std::map<std::string, AuthorshipDistribution> authorship_by_country(
    const Corpus &corpus, std::int64_t overflow_at = AuthorshipDistribution::kDefaultOverflow);

ProductivityDistribution author_productivity(const Corpus &corpus);

RankedList journal_rank(const Corpus &corpus, const std::optional<std::string> &doc_type = std::nullopt);

struct PageStatRow {
    int year = 0;
    std::int64_t articles = 0;
    std::int64_t pages = 0;
    double average = 0.0;
};

struct PageStats {
    std::vector<PageStatRow> by_year;
    PageStatRow overall;
};

// strict=true counts only records that carry a page count.
PageStats page_stats(const Corpus &corpus, bool strict = false);

}  // namespace scimet
