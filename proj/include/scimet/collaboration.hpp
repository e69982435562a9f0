#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scimet/corpus.hpp"
#include "scimet/series.hpp"

namespace scimet {

// Papers without authors are ignored by DC and CC.
double degree_of_collaboration(const AuthorshipDistribution &dist);
double collaborative_index(std::int64_t papers, std::int64_t authors);

// exact uses true author counts; bucket_as_j treats every paper in the
// overflow bucket as having exactly overflow_at authors.
enum class OverflowPolicy { exact, bucket_as_j };
OverflowPolicy parse_overflow_policy(std::string_view name);

double collaborative_coefficient(const AuthorshipDistribution &dist,
                                 OverflowPolicy policy = OverflowPolicy::bucket_as_j);
double modified_cc(double cc, std::int64_t papers);

struct CollabRow {
    std::string label;
    std::int64_t papers = 0;
    std::int64_t authors = 0;
    double ci = 0.0;
    double dc = 0.0;
    double cc = 0.0;
    std::optional<double> mcc;  // needs two or more papers
};

CollabRow collaboration_row(std::string label, const AuthorshipDistribution &dist, OverflowPolicy policy);
// One row per year of the corpus range, using exact author counts. Years
// without papers are skipped.
std::vector<CollabRow> collaboration_by_year(const Corpus &corpus);

// standard: (N_ij/N_io) / (N_oj/N_oo) * 100.
// paper_complement: ((N_io-N_ij)/N_io) / ((N_oo-N_oj)/N_oo) * 100.
enum class CaiVariant { standard, paper_complement };
CaiVariant parse_cai_variant(std::string_view name);
std::string_view cai_variant_name(CaiVariant v);

// block_counts[j] and totals[j] are papers in author class j; the row and
// grand totals are the sums over classes.
std::vector<double> co_authorship_index(const std::vector<std::int64_t> &block_counts,
                                        const std::vector<std::int64_t> &totals, CaiVariant variant);

// Papers per author class; class k spans [lower_bounds[k], lower_bounds[k+1]) and the last is open.
std::vector<std::int64_t> class_counts(const AuthorshipDistribution &dist, const std::vector<std::int64_t> &lower_bounds);
std::vector<std::string> class_labels(const std::vector<std::int64_t> &lower_bounds);
inline const std::vector<std::int64_t> kDefaultAuthorClasses{1, 2, 3, 4, 5};

struct ActivityIndexTable {
    std::vector<int> years;
    std::vector<double> values;
};

ActivityIndexTable activity_index(const YearSeries &country, const YearSeries &reference);

struct PartnerShare {
    std::string partner;
    std::int64_t papers = 0;
    double share = 0.0;  // percent of the home total
    std::int64_t cumulative = 0;
    double cumulative_share = 0.0;
    double average_per_year = 0.0;
};

struct CollaborationShares {
    std::string home;
    std::int64_t home_total = 0;
    std::int64_t solo = 0;
    std::vector<PartnerShare> partners;  // top partners, then one "Other Countries" row
};

inline constexpr int kStudySpanYears = 30;
inline constexpr std::string_view kOtherPartnersLabel = "Other Countries";

CollaborationShares collaboration_shares(const Corpus &corpus, const std::string &home, std::size_t top_k = 10,
                                         int year_span = kStudySpanYears);

struct CountMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<std::int64_t>> cells;  // diagonal holds solo output
};

CountMatrix inter_collaboration_matrix(const Corpus &corpus, const std::vector<std::string> &members);

}  // namespace scimet
