#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scimet/corpus.hpp"

namespace scimet {

inline constexpr int kDefaultCareerYears = 30;

// Per-paper citation counts sorted descending. When ages are given they are
// permuted with their papers; equal counts are ordered by ascending age.
class CitationProfile {
public:
    CitationProfile() = default;
    explicit CitationProfile(std::vector<std::int64_t> cites, std::optional<std::vector<int>> ages = std::nullopt,
                             int career_years = kDefaultCareerYears);

    const std::vector<std::int64_t> &cites() const { return cites_; }
    const std::optional<std::vector<int>> &ages() const { return ages_; }
    int career_years() const { return career_years_; }
    std::int64_t papers() const { return static_cast<std::int64_t>(cites_.size()); }
    std::int64_t citations() const { return citations_; }

private:
    std::vector<std::int64_t> cites_;
    std::optional<std::vector<int>> ages_;
    int career_years_ = kDefaultCareerYears;
    std::int64_t citations_ = 0;
};

std::int64_t h_index(const CitationProfile &profile);
// zero_pad lets g exceed the paper count as if padded with uncited papers.
std::int64_t g_index(const CitationProfile &profile, bool zero_pad = false);

struct CoreIndices {
    std::int64_t h = 0;
    std::int64_t core_sum = 0;  // S(h)
    double e = 0.0;
    double r = 0.0;
    std::optional<double> a_core;   // S(h) / h
    std::optional<double> a_paper;  // C / h
};

CoreIndices core_indices(const CitationProfile &profile);

// sqrt of the h-core citation sum with each paper divided by its age.
double ar_index(const CitationProfile &profile);

struct DerivedIndices {
    double m = 0.0;
    double h_nom = 0.0;
    double hg = 0.0;
    double p = 0.0;
    double q2 = 0.0;
};

DerivedIndices derived_indices(const CitationProfile &profile);

struct IndexBundle {
    std::int64_t papers = 0;
    std::int64_t citations = 0;
    std::int64_t h = 0;
    std::int64_t g = 0;
    std::int64_t core_sum = 0;
    double e = 0.0;
    double r = 0.0;
    std::optional<double> a_paper;
    std::optional<double> a_core;
    std::optional<double> ar;
    double m = 0.0;
    double h_nom = 0.0;
    double hg = 0.0;
    double p = 0.0;
    double q2 = 0.0;
    double cpp = 0.0;
};

IndexBundle index_bundle(const CitationProfile &profile);

double cpp(std::int64_t citations, std::int64_t papers);

inline constexpr std::int64_t kOpenBin = std::numeric_limits<std::int64_t>::max();

struct CitationBin {
    std::int64_t low = 0;
    std::int64_t high = 0;  // inclusive; kOpenBin for no upper limit
    std::string label() const;
    bool operator==(const CitationBin &) const = default;
};

// {0}, [1,100], [101,200] ... [901,1000], [1001, open).
std::vector<CitationBin> default_citation_bins();

struct HistogramRow {
    CitationBin bin;
    std::int64_t count = 0;
    double share = 0.0;  // percent
};

std::vector<HistogramRow> citation_histogram(const std::vector<std::int64_t> &cites,
                                             std::vector<CitationBin> bins = default_citation_bins());

enum class GroupBy { author, country };
GroupBy parse_group_by(std::string_view name);

struct EntityIndices {
    std::string entity;
    int first_year = 0;
    CitationProfile profile;
    IndexBundle bundle;
};

// Ages are max(1, reference_year - publication year); the reference year
// defaults to the last corpus year. Career length runs from the entity's first
// paper to the reference year. Sorted by h, then citations, descending.
std::vector<EntityIndices> entity_profiles(const Corpus &corpus, GroupBy group_by,
                                           std::optional<int> reference_year = std::nullopt);

}  // namespace scimet
