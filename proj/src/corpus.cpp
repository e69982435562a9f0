#include "scimet/corpus.hpp"

#include <algorithm>
#include <unordered_map>

#include <fmt/format.h>

#include "scimet/error.hpp"
#include "scimet/wordstats.hpp"

namespace scimet {

Corpus::Corpus() : records_(std::make_shared<const std::vector<BibRecord>>()) {}

Corpus::Corpus(std::vector<BibRecord> records)
    : records_(std::make_shared<const std::vector<BibRecord>>(std::move(records))) {
    for (const auto &r : *records_) {
        if (!year_range_)
            year_range_ = std::pair{r.year, r.year};
        year_range_->first = std::min(year_range_->first, r.year);
        year_range_->second = std::max(year_range_->second, r.year);
    }
}

Corpus build_corpus(std::vector<BibRecord> records) {
    return Corpus(std::move(records));
}

bool RecordFilter::matches(const BibRecord &r) const {
    if (country && !r.countries.contains(*country))
        return false;
    if (doc_type && r.doc_type != *doc_type)
        return false;
    if (language && r.language != *language)
        return false;
    return true;
}

RecordFilter parse_filter(const std::vector<std::string> &clauses) {
    RecordFilter f;
    for (const auto &clause : clauses) {
        const auto eq = clause.find('=');
        if (eq == std::string::npos)
            throw DataError(fmt::format("filter '{}' is not of the form field=value", clause));
        const std::string key = clause.substr(0, eq);
        std::string value = clause.substr(eq + 1);
        if (key == "country")
            f.country = std::move(value);
        else if (key == "doc_type")
            f.doc_type = std::move(value);
        else if (key == "language")
            f.language = std::move(value);
        else
            throw DataError(fmt::format("unknown filter field '{}'", key));
    }
    return f;
}

namespace {

template <typename Value>
YearSeries per_year(const Corpus &corpus, const RecordFilter &filter, Value value) {
    const auto range = corpus.year_range();
    if (!range)
        return {};
    std::vector<YearCount> points;
    for (int y = range->first; y <= range->second; ++y)
        points.push_back({y, 0});
    for (const auto &r : corpus.records())
        if (filter.matches(r))
            points[static_cast<std::size_t>(r.year - range->first)].count += value(r);
    return YearSeries(std::move(points));
}

std::string label_or_unspecified(const std::string &s) {
    return s.empty() ? std::string(kUnspecifiedLabel) : s;
}

RankedList tally(const std::unordered_map<std::string, std::int64_t> &counts) {
    std::vector<RankedEntry> entries;
    entries.reserve(counts.size());
    for (const auto &[label, n] : counts)
        entries.push_back({label, n});
    return RankedList(std::move(entries));
}

}  // namespace

YearSeries yearly_counts(const Corpus &corpus, const RecordFilter &filter) {
    return per_year(corpus, filter, [](const BibRecord &) { return std::int64_t{1}; });
}

YearSeries yearly_citations(const Corpus &corpus, const RecordFilter &filter) {
    return per_year(corpus, filter, [](const BibRecord &r) { return r.citation_count; });
}

Field parse_field(std::string_view name) {
    if (name == "doc_type")
        return Field::doc_type;
    if (name == "language")
        return Field::language;
    if (name == "journal")
        return Field::journal;
    if (name == "keyword")
        return Field::keyword;
    if (name == "keyword_plus")
        return Field::keyword_plus;
    if (name == "country")
        return Field::country;
    throw DataError(fmt::format("unknown field '{}'", name));
}

std::string_view field_name(Field f) {
    switch (f) {
    case Field::doc_type: return "doc_type";
    case Field::language: return "language";
    case Field::journal: return "journal";
    case Field::keyword: return "keyword";
    case Field::keyword_plus: return "keyword_plus";
    case Field::country: return "country";
    }
    return "";
}

RankedList field_distribution(const Corpus &corpus, Field field) {
    if (field == Field::keyword || field == Field::keyword_plus) {
        TermOptions opts;
        opts.sources = {field == Field::keyword ? KeywordSource::author_keywords : KeywordSource::keywords_plus};
        return term_frequencies(corpus, opts);
    }
    std::unordered_map<std::string, std::int64_t> counts;
    for (const auto &r : corpus.records()) {
        switch (field) {
        case Field::doc_type: ++counts[label_or_unspecified(r.doc_type)]; break;
        case Field::language: ++counts[label_or_unspecified(r.language)]; break;
        case Field::journal: ++counts[label_or_unspecified(r.journal)]; break;
        case Field::country:
            for (const auto &c : r.countries)
                ++counts[c];
            break;
        default: break;
        }
    }
    return tally(counts);
}

AuthorshipDistribution::AuthorshipDistribution(std::int64_t overflow_at) : overflow_at_(overflow_at) {
    if (overflow_at < 2)
        throw DataError(fmt::format("overflow bucket must start at 2 or more authors, got {}", overflow_at));
}

AuthorshipDistribution AuthorshipDistribution::from_counts(const std::map<std::int64_t, std::int64_t> &papers_by_authors,
                                                           std::int64_t overflow_at) {
    AuthorshipDistribution d(overflow_at);
    for (const auto &[j, n] : papers_by_authors) {
        if (j < 0 || n < 0)
            throw DataError(fmt::format("invalid authorship bucket {} -> {}", j, n));
        if (n == 0)
            continue;
        d.counts_[j] += n;
        d.total_papers_ += n;
        d.total_authors_ += j * n;
    }
    return d;
}

AuthorshipDistribution AuthorshipDistribution::from_buckets(const std::vector<std::int64_t> &buckets,
                                                            std::optional<std::int64_t> total_authors) {
    if (buckets.size() < 2)
        throw DataError("bucketed authorship needs at least two buckets");
    AuthorshipDistribution d(static_cast<std::int64_t>(buckets.size()));
    d.exact_ = false;
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        if (buckets[i] < 0)
            throw DataError("negative authorship bucket");
        if (buckets[i] == 0)
            continue;
        d.counts_[static_cast<std::int64_t>(i + 1)] = buckets[i];
        d.total_papers_ += buckets[i];
    }
    d.authors_known_ = total_authors.has_value();
    d.total_authors_ = total_authors.value_or(0);
    return d;
}

void AuthorshipDistribution::add_paper(std::int64_t authors) {
    if (!exact_)
        throw DataError("cannot add exact papers to a bucketed distribution");
    if (authors < 0)
        throw DataError("negative author count");
    ++counts_[authors];
    ++total_papers_;
    total_authors_ += authors;
}

std::int64_t AuthorshipDistribution::bucket(std::int64_t j) const {
    if (j < overflow_at_) {
        auto it = counts_.find(j);
        return it == counts_.end() ? 0 : it->second;
    }
    if (j > overflow_at_)
        return 0;
    std::int64_t sum = 0;
    for (auto it = counts_.lower_bound(overflow_at_); it != counts_.end(); ++it)
        sum += it->second;
    return sum;
}

std::vector<std::int64_t> AuthorshipDistribution::buckets() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(overflow_at_ + 1), 0);
    for (std::int64_t j = 0; j <= overflow_at_; ++j)
        out[static_cast<std::size_t>(j)] = bucket(j);
    return out;
}

std::int64_t AuthorshipDistribution::single_authored() const {
    return bucket(1);
}

std::int64_t AuthorshipDistribution::multi_authored() const {
    std::int64_t sum = 0;
    for (auto it = counts_.lower_bound(2); it != counts_.end(); ++it)
        sum += it->second;
    return sum;
}

std::optional<std::int64_t> AuthorshipDistribution::total_authors() const {
    if (!authors_known_)
        return std::nullopt;
    return total_authors_;
}

AuthorshipDistribution authorship_distribution(const Corpus &corpus, std::int64_t overflow_at) {
    AuthorshipDistribution d(overflow_at);
    for (const auto &r : corpus.records())
        d.add_paper(static_cast<std::int64_t>(r.authors.size()));
    return d;
}

std::map<int, AuthorshipDistribution> authorship_by_year(const Corpus &corpus, std::int64_t overflow_at) {
    std::map<int, AuthorshipDistribution> out;
    if (const auto range = corpus.year_range())
        for (int y = range->first; y <= range->second; ++y)
            out.emplace(y, AuthorshipDistribution(overflow_at));
    for (const auto &r : corpus.records())
        out.at(r.year).add_paper(static_cast<std::int64_t>(r.authors.size()));
    return out;
}

std::map<std::string, AuthorshipDistribution> authorship_by_country(const Corpus &corpus, std::int64_t overflow_at) {
    std::map<std::string, AuthorshipDistribution> out;
    for (const auto &r : corpus.records())
        for (const auto &c : r.countries)
            out.try_emplace(c, overflow_at).first->second.add_paper(static_cast<std::int64_t>(r.authors.size()));
    return out;
}

ProductivityDistribution author_productivity(const Corpus &corpus) {
    std::unordered_map<std::string, std::int64_t> papers;
    for (const auto &r : corpus.records())
        for (const auto &a : r.authors)
            ++papers[a];
    std::map<std::int64_t, std::int64_t> authors_by_papers;
    for (const auto &[name, x] : papers)
        ++authors_by_papers[x];
    std::vector<ProductivityPair> pairs;
    pairs.reserve(authors_by_papers.size());
    for (const auto &[x, y] : authors_by_papers)
        pairs.push_back({x, y});
    return ProductivityDistribution(std::move(pairs));
}

RankedList journal_rank(const Corpus &corpus, const std::optional<std::string> &doc_type) {
    std::unordered_map<std::string, std::int64_t> counts;
    for (const auto &r : corpus.records())
        if (!doc_type || r.doc_type == *doc_type)
            ++counts[label_or_unspecified(r.journal)];
    return tally(counts);
}

PageStats page_stats(const Corpus &corpus, bool strict) {
    PageStats stats;
    const auto range = corpus.year_range();
    if (!range)
        return stats;
    for (int y = range->first; y <= range->second; ++y)
        stats.by_year.push_back({y, 0, 0, 0.0});
    for (const auto &r : corpus.records()) {
        if (strict && !r.page_count)
            continue;
        auto &row = stats.by_year[static_cast<std::size_t>(r.year - range->first)];
        ++row.articles;
        row.pages += r.page_count.value_or(0);
    }
    for (auto &row : stats.by_year) {
        row.average = row.articles ? static_cast<double>(row.pages) / static_cast<double>(row.articles) : 0.0;
        stats.overall.articles += row.articles;
        stats.overall.pages += row.pages;
    }
    if (stats.overall.articles)
        stats.overall.average =
            static_cast<double>(stats.overall.pages) / static_cast<double>(stats.overall.articles);
    return stats;
}

}  // namespace scimet
