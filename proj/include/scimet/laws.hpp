#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scimet/series.hpp"

namespace scimet {

inline constexpr int kLotkaTruncation = 20;

struct LotkaFit {
    double n = 0.0;  // magnitude of the log-log slope
    double c = 0.0;
    double intercept = 0.0;
    double sum_x = 0.0;
    double sum_y = 0.0;
    double sum_xy = 0.0;
    double sum_x2 = 0.0;
    std::size_t pairs = 0;
    double log_base = 10.0;
};

// Unweighted least squares of log y on log x over every pair.
LotkaFit lotka_fit(const ProductivityDistribution &dist, double log_base = 10.0, int truncation = kLotkaTruncation);
// Same fit on real-valued (x, y) points, both positive.
LotkaFit lotka_fit_points(const std::vector<std::pair<double, double>> &points, double log_base = 10.0,
                          int truncation = kLotkaTruncation);
double lotka_exponent(std::size_t pairs, double sum_x, double sum_y, double sum_xy, double sum_x2);

// 1 / [sum_{x<p} x^-n + 1/((n-1) p^(n-1)) + 1/(2 p^n) + n/(24 (p-1)^(n+1))]
double lotka_constant(double n, int p = kLotkaTruncation);

enum class KsMode { standard, paper };
KsMode parse_ks_mode(std::string_view name);

struct KsOptions {
    KsMode mode = KsMode::standard;
    double coefficient = 1.63;
    double paper_coefficient = 1.79;
};

struct KsRow {
    std::int64_t x = 0;
    std::int64_t y = 0;
    double observed = 0.0;
    double observed_cumulative = 0.0;
    double expected = 0.0;
    double expected_cumulative = 0.0;
    double difference = 0.0;             // observed - expected
    double cumulative_difference = 0.0;  // observed_cumulative - expected_cumulative
};

// Standard mode uses the fitted n and c and the cumulative statistic.
// Paper mode rounds n to 2 decimals and c to 4, compares per-x shares and
// uses paper_coefficient; paper_verdict records the inverted decision rule
// (fit declared when d_max exceeds the critical value).
struct KsResult {
    KsMode mode = KsMode::standard;
    std::vector<KsRow> rows;
    double n_used = 0.0;
    double c_used = 0.0;
    double d_max = 0.0;
    std::int64_t d_max_x = 0;
    double d_max_share = 0.0;
    double d_max_cumulative = 0.0;
    double coefficient = 0.0;
    double critical_value = 0.0;
    bool fits = false;
    std::optional<bool> paper_verdict;
};

KsResult ks_test(const ProductivityDistribution &dist, const LotkaFit &fit, const KsOptions &options = {});

// Journals are grouped into tie groups of equal article counts. Each cut
// falls on a tie-group boundary chosen against the k*total/zones target;
// when no boundary keeps every zone nonempty the cut may split a group.
enum class BoundaryPolicy { tie_group_floor, tie_group_nearest, tie_group_ceiling };
BoundaryPolicy parse_boundary_policy(std::string_view name);
std::string_view boundary_policy_name(BoundaryPolicy p);

struct BradfordZone {
    std::int64_t journals = 0;
    std::int64_t articles = 0;
    std::size_t first_rank = 0;  // 1-based, inclusive
    std::size_t last_rank = 0;
};

struct BradfordZones {
    std::vector<BradfordZone> zones;
    std::vector<double> multipliers;  // journals[k+1] / journals[k]
    double mean_multiplier = 0.0;
    std::int64_t total_journals = 0;
    std::int64_t total_articles = 0;
    // Journal counts 1 : n : n^2 ... predicted from the first zone and the mean multiplier.
    std::vector<double> predicted_journals() const;
    std::string ratio_string() const;
};

BradfordZones bradford_zones(const RankedList &journals, int zone_count = 3,
                             BoundaryPolicy policy = BoundaryPolicy::tie_group_floor);

// Journal list with synthetic labels from (journal count, articles each) groups.
RankedList expand_journal_groups(const std::vector<std::pair<std::int64_t, std::int64_t>> &groups,
                                 const std::vector<std::string> &known_labels = {});

struct ZipfRow {
    std::size_t rank = 0;
    std::string word;
    std::int64_t frequency = 0;
    double log_f = 0.0;
    double log_r = 0.0;
    double c = 0.0;
};

std::vector<ZipfRow> zipf_constants(const RankedList &words);

// by_productivity takes authors in descending x, splitting the boundary tie row.
// by_contributor_rows accumulates whole distribution rows ordered by y then x,
// ascending, until the quota is reached.
enum class PriceOrdering { by_productivity, by_contributor_rows };
PriceOrdering parse_price_ordering(std::string_view name);
std::string_view price_ordering_name(PriceOrdering o);

struct PriceResult {
    std::int64_t total_authors = 0;
    std::int64_t total_credits = 0;
    double sqrt_authors = 0.0;
    std::int64_t quota = 0;
    std::int64_t selected_authors = 0;
    std::int64_t top_credits = 0;
    double share = 0.0;
    bool satisfied = false;
};

PriceResult price_sqrt_check(const ProductivityDistribution &dist,
                             PriceOrdering ordering = PriceOrdering::by_productivity);

struct ParetoResult {
    double author_fraction = 0.2;
    std::int64_t top_author_count = 0;
    std::int64_t top_credits = 0;
    std::int64_t total_credits = 0;
    double credit_share = 0.0;
    double gap_to_target = 0.0;  // 0.8 - credit_share
};

ParetoResult pareto_check(const ProductivityDistribution &dist, double author_fraction = 0.2);

}  // namespace scimet
