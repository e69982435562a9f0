#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scimet/series.hpp"

namespace scimet {

// paper: W1 = ln(annual count), W2 = ln(cumulative count).
// standard: W1 = ln(previous cumulative), W2 = ln(cumulative).
enum class Convention { paper, standard };
Convention parse_convention(std::string_view name);
std::string_view convention_name(Convention c);

inline constexpr double kDoublingConstant = 0.693;

struct ExponentialRates {
    std::vector<std::optional<double>> rates;  // ln(N_t / N_{t-1}); none for the first year
    double fitted_rate = 0.0;                  // least-squares slope of ln N_t on t
    double fitted_intercept = 0.0;
};

ExponentialRates exponential_rates(const YearSeries &series);

struct GrowthRow {
    int year = 0;
    std::int64_t count = 0;
    std::int64_t cumulative = 0;
    double w1 = 0.0;
    double w2 = 0.0;
    double rgr = 0.0;
    std::optional<double> dt;
};

// The first row has rgr 0 under both conventions.
std::vector<GrowthRow> rgr_table(const YearSeries &series, Convention convention = Convention::paper,
                                 double doubling_constant = kDoublingConstant);

struct YearBlock {
    int first_year = 0;
    int last_year = 0;
    std::int64_t count = 0;
    double share = 0.0;  // percent of the series total
    std::string label() const;
};

struct BlockSeries {
    std::vector<YearBlock> blocks;
    YearSeries series() const;  // keyed by each block's first year
};

// Blocks tile [min year, max year] from the first year; the last block may be short.
BlockSeries block_aggregate(const YearSeries &series, int width);

struct ProjectionResult {
    double a = 0.0;
    double b = 0.0;
    int origin_year = 0;
    double sum_y = 0.0;
    double sum_xy = 0.0;
    double sum_x2 = 0.0;
    std::vector<std::pair<int, double>> projected;

    double at(int year) const { return a + b * static_cast<double>(year - origin_year); }
};

// Straight line Yc = a + bX with X = year - origin, origin the year at index ceil(N/2) - 1.
ProjectionResult linear_projection(const YearSeries &series, const std::vector<int> &targets);

struct RatioMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> cells;  // cells[i][j] = total_i / total_j
};

RatioMatrix growth_ratio_matrix(const std::vector<std::pair<std::string, std::int64_t>> &totals);

// N_{t+1} / N_t; the last year has none.
std::vector<std::optional<double>> annual_growth_ratio(const YearSeries &series);

}  // namespace scimet
