#include "scimet/fixtures.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include <fmt/format.h>

#include "scimet/error.hpp"
#include "scimet/laws.hpp"
#include "scimet/records.hpp"
#include "scimet/wordstats.hpp"

namespace scimet::fixtures {

std::string FixtureFile::description() const {
    if (text.size() < 2 || text[0] != '#')
        return {};
    auto end = text.find('\n');
    return std::string(trim(text.substr(1, end == std::string_view::npos ? end : end - 1)));
}

std::string_view text(std::string_view name) {
    for (const auto &f : all())
        if (f.name == name)
            return f.text;
    throw DataError(fmt::format("no embedded fixture named '{}'", name));
}

DelimitedTable table(std::string_view name) {
    return read_delimited(text(name));
}

const std::vector<std::string> &member_countries() {
    static const std::vector<std::string> members{"Brazil", "Russia", "India", "China", "South Africa"};
    return members;
}

namespace {

YearSeries column_series(std::string_view fixture, std::string_view column) {
    const auto t = table(fixture);
    const auto yc = t.column("year");
    const auto vc = t.column(column);
    std::vector<YearCount> pts;
    for (const auto &row : t.rows)
        pts.push_back({static_cast<int>(parse_integer(row[yc], "year")), parse_integer(row[vc], column)});
    return YearSeries(std::move(pts));
}

RankedList label_counts(std::string_view fixture, std::string_view label, std::string_view value) {
    return parse_ranked_table(text(fixture), label, value);
}

std::vector<std::int64_t> int_column(const DelimitedTable &t, std::string_view column) {
    const auto c = t.column(column);
    std::vector<std::int64_t> out;
    for (const auto &row : t.rows)
        out.push_back(parse_integer(row[c], column));
    return out;
}

}  // namespace

YearSeries year_counts() {
    return parse_year_table(text("year_counts"));
}

YearSeries country_series(std::string_view column) {
    return column_series("country_year_counts", column);
}

YearSeries global_series() {
    return column_series("activity_index", "global");
}

YearSeries citation_series() {
    return column_series("citations_by_year", "citations");
}

ProductivityDistribution lotka_productivity() {
    return parse_distribution(text("lotka_productivity"));
}

AuthorshipDistribution authorship_pattern() {
    return AuthorshipDistribution::from_buckets(int_column(table("authorship_pattern"), "papers"));
}

RankedList bradford_journals() {
    const auto groups_table = table("bradford_groups");
    const auto journals = int_column(groups_table, "journals");
    const auto articles = int_column(groups_table, "articles");
    std::vector<std::pair<std::int64_t, std::int64_t>> groups;
    for (std::size_t i = 0; i < journals.size(); ++i)
        groups.emplace_back(journals[i], articles[i]);
    const auto core = table("core_journals");
    std::vector<std::string> names;
    for (const auto &row : core.rows)
        names.push_back(row[core.column("journal")]);
    return expand_journal_groups(groups, names);
}

RankedList zipf_words() {
    return parse_word_table(text("zipf_words"));
}

RankedList document_types() {
    return label_counts("document_types", "doc_type", "records");
}

RankedList languages() {
    return label_counts("languages", "language", "records");
}

namespace {

// mt19937_64 output is fixed by the standard; the helpers below avoid the
// implementation-defined distributions so the corpus is identical everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::size_t below(std::size_t n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do
            x = engine_();
        while (x >= limit);
        return static_cast<std::size_t>(x % bound);
    }

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T> &v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

std::vector<std::string> expand_labels(const RankedList &list) {
    std::vector<std::string> out;
    for (const auto &e : list.entries())
        out.insert(out.end(), static_cast<std::size_t>(e.frequency), e.label);
    return out;
}

// Splits total into n non-negative parts proportional to weights, summing exactly.
std::vector<std::int64_t> apportion(std::int64_t total, const std::vector<double> &weights) {
    std::vector<std::int64_t> out(weights.size(), 0);
    double wsum = 0.0;
    for (double w : weights)
        wsum += w;
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        out[i] = static_cast<std::int64_t>(static_cast<double>(total) * weights[i] / wsum);
        assigned += out[i];
    }
    for (std::size_t i = 0; assigned < total; i = (i + 1) % out.size(), ++assigned)
        ++out[i];
    return out;
}

}  // namespace

std::vector<BibRecord> reconstruct_records() {
    Rng rng(0x5c1e47e7ULL);
    const auto years = country_series("total");
    const auto singles = column_series("degree_of_collaboration", "single");
    const auto authors = column_series("collaborative_indices", "authors");
    const auto pages = column_series("pages_by_year", "pages");
    const auto citations = citation_series();
    std::vector<YearSeries> per_country;
    for (const auto &c : member_countries())
        per_country.push_back(country_series(c));

    constexpr std::size_t kAuthorPool = 150000;
    std::vector<BibRecord> records;
    records.reserve(static_cast<std::size_t>(years.total()));
    std::vector<std::size_t> chosen;
    for (std::size_t yi = 0; yi < years.size(); ++yi) {
        const int year = years[yi].year;
        const auto n = static_cast<std::size_t>(years[yi].count);
        std::vector<std::string> countries;
        for (std::size_t c = 0; c < per_country.size(); ++c)
            countries.insert(countries.end(), static_cast<std::size_t>(*per_country[c].at(year)),
                             member_countries()[c]);
        if (countries.size() != n)
            throw DataError(fmt::format("country counts for {} do not sum to the year total", year));
        rng.shuffle(countries);

        const auto single = static_cast<std::size_t>(*singles.at(year));
        const std::size_t multi = n - single;
        const std::int64_t extra = *authors.at(year) - static_cast<std::int64_t>(single) -
                                   2 * static_cast<std::int64_t>(multi);
        if (extra < 0 || (multi == 0 && extra > 0))
            throw DataError(fmt::format("author total for {} is inconsistent with its paper counts", year));
        std::vector<std::int64_t> team(n, 1);
        if (multi > 0) {
            std::vector<double> weights(multi);
            for (auto &w : weights)
                w = 0.25 + rng.unit();
            const auto extras = apportion(extra, weights);
            for (std::size_t k = 0; k < multi; ++k)
                team[single + k] = 2 + extras[k];
        }
        rng.shuffle(team);

        std::vector<double> cite_weights(n);
        for (auto &w : cite_weights) {
            const double u = rng.unit();
            w = u * u * u * u;
        }
        const auto cites = apportion(*citations.at(year), cite_weights);
        const auto page_parts = apportion(*pages.at(year), std::vector<double>(n, 1.0));

        for (std::size_t i = 0; i < n; ++i) {
            BibRecord r;
            r.id = fmt::format("SYN:{:06}", records.size() + 1);
            r.title = fmt::format("Reconstructed record {} ({}, {})", records.size() + 1, countries[i], year);
            r.year = year;
            r.countries.insert(countries[i]);
            r.citation_count = cites[i];
            r.page_count = page_parts[i];
            chosen.clear();
            while (chosen.size() < static_cast<std::size_t>(team[i])) {
                const double u = rng.unit();
                const auto idx = static_cast<std::size_t>(static_cast<double>(kAuthorPool) * u * u * u);
                if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end())
                    chosen.push_back(idx);
            }
            for (auto idx : chosen)
                r.authors.push_back(fmt::format("Author {:06}", idx + 1));
            records.push_back(std::move(r));
        }
    }

    const std::size_t total = records.size();
    auto doc_types = expand_labels(document_types());
    auto langs = expand_labels(languages());
    if (doc_types.size() != total || langs.size() != total)
        throw DataError("document type or language totals differ from the record count");
    rng.shuffle(doc_types);
    rng.shuffle(langs);
    for (std::size_t i = 0; i < total; ++i) {
        records[i].doc_type = std::move(doc_types[i]);
        records[i].language = std::move(langs[i]);
    }

    auto journals = expand_labels(bradford_journals());
    rng.shuffle(journals);
    const std::size_t journal_count = bradford_journals().size();
    std::size_t next_article = 0;
    std::size_t other = 0;
    for (auto &r : records) {
        if (r.doc_type == "Article") {
            if (next_article >= journals.size())
                throw DataError("more articles than journal slots");
            r.journal = journals[next_article++];
        } else {
            r.journal = fmt::format("Journal {:04}", journal_count + 1 + other % 300);
            ++other;
        }
    }
    if (next_article != journals.size())
        throw DataError("article count differs from the journal table total");

    std::vector<std::size_t> index(total);
    for (std::size_t i = 0; i < total; ++i)
        index[i] = i;
    const auto words = zipf_words();
    for (const auto &word : words.entries()) {
        const auto f = static_cast<std::size_t>(word.frequency);
        for (std::size_t k = 0; k < f; ++k) {
            std::swap(index[k], index[k + rng.below(total - k)]);
            const std::string spelling = k % 7 == 3 ? fold_case(word.label) : word.label;
            records[index[k]].keywords.push_back(spelling);
        }
    }
    return records;
}

const Corpus &reconstructed_corpus() {
    static const Corpus corpus(reconstruct_records());
    return corpus;
}

}  // namespace scimet::fixtures
