#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "scimet/corpus.hpp"
#include "scimet/delimited.hpp"
#include "scimet/series.hpp"

namespace scimet::fixtures {

struct FixtureFile {
    std::string_view name;
    std::string_view text;
    std::string description() const;  // the leading comment line
};

// Transcribed reference tables compiled into the library.
const std::vector<FixtureFile> &all();
std::string_view text(std::string_view name);
DelimitedTable table(std::string_view name);

const std::vector<std::string> &member_countries();

YearSeries year_counts();
YearSeries country_series(std::string_view column);  // a member country or "total"
YearSeries global_series();
YearSeries citation_series();
ProductivityDistribution lotka_productivity();
AuthorshipDistribution authorship_pattern();
RankedList bradford_journals();
RankedList zipf_words();
RankedList document_types();
RankedList languages();

// Deterministic synthetic corpus whose marginals match the fixtures: year by
// country, single-authored papers and author totals per year, pages and
// citations per year, document types, languages, article journals and the
// ranked keywords. Every record has exactly one country.
std::vector<BibRecord> reconstruct_records();
const Corpus &reconstructed_corpus();

}  // namespace scimet::fixtures
