#include "scimet/growth.hpp"

#include <cmath>

#include <fmt/format.h>

#include "scimet/error.hpp"

namespace scimet {

Convention parse_convention(std::string_view name) {
    if (name == "paper")
        return Convention::paper;
    if (name == "standard")
        return Convention::standard;
    throw DataError(fmt::format("unknown convention '{}' (expected paper or standard)", name));
}

std::string_view convention_name(Convention c) {
    return c == Convention::paper ? "paper" : "standard";
}

namespace {

void require_positive(const YearSeries &series, std::string_view what) {
    for (const auto &p : series.points())
        if (p.count <= 0)
            throw DataError(fmt::format("{} needs positive counts; year {} has {}", what, p.year, p.count));
}

}  // namespace

ExponentialRates exponential_rates(const YearSeries &series) {
    require_positive(series, "exponential growth");
    ExponentialRates out;
    const auto &pts = series.points();
    double st = 0, sl = 0, stt = 0, stl = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double l = std::log(static_cast<double>(pts[i].count));
        if (i == 0)
            out.rates.push_back(std::nullopt);
        else
            out.rates.push_back(l - std::log(static_cast<double>(pts[i - 1].count)));
        const double t = static_cast<double>(pts[i].year - pts.front().year);
        st += t;
        sl += l;
        stt += t * t;
        stl += t * l;
    }
    const double n = static_cast<double>(pts.size());
    const double denom = n * stt - st * st;
    if (pts.size() >= 2 && denom != 0.0) {
        out.fitted_rate = (n * stl - st * sl) / denom;
        out.fitted_intercept = (sl - out.fitted_rate * st) / n;
    } else if (!pts.empty()) {
        out.fitted_intercept = sl / n;
    }
    return out;
}

std::vector<GrowthRow> rgr_table(const YearSeries &series, Convention convention, double doubling_constant) {
    if (convention == Convention::paper)
        require_positive(series, "relative growth rate");
    else if (!series.empty() && series[0].count <= 0)
        throw DataError(fmt::format("relative growth rate needs a positive first count; year {} has {}",
                                    series[0].year, series[0].count));
    std::vector<GrowthRow> rows;
    rows.reserve(series.size());
    std::int64_t cumulative = 0;
    for (const auto &p : series.points()) {
        GrowthRow row;
        row.year = p.year;
        row.count = p.count;
        const std::int64_t previous = cumulative;
        cumulative += p.count;
        row.cumulative = cumulative;
        row.w2 = std::log(static_cast<double>(cumulative));
        if (convention == Convention::paper)
            row.w1 = std::log(static_cast<double>(p.count));
        else
            row.w1 = previous > 0 ? std::log(static_cast<double>(previous)) : row.w2;
        row.rgr = row.w2 - row.w1;
        if (row.rgr != 0.0)
            row.dt = doubling_constant / row.rgr;
        rows.push_back(row);
    }
    return rows;
}

std::string YearBlock::label() const {
    return first_year == last_year ? std::to_string(first_year) : fmt::format("{}-{}", first_year, last_year);
}

YearSeries BlockSeries::series() const {
    std::vector<YearCount> pts;
    pts.reserve(blocks.size());
    for (const auto &b : blocks)
        pts.push_back({b.first_year, b.count});
    return YearSeries(std::move(pts));
}

BlockSeries block_aggregate(const YearSeries &series, int width) {
    if (width < 1)
        throw DataError(fmt::format("block width must be at least 1, got {}", width));
    BlockSeries out;
    if (series.empty())
        return out;
    const int first = series.points().front().year;
    const int last = series.points().back().year;
    for (int start = first; start <= last; start += width)
        out.blocks.push_back({start, std::min(start + width - 1, last), 0, 0.0});
    for (const auto &p : series.points())
        out.blocks[static_cast<std::size_t>((p.year - first) / width)].count += p.count;
    const double total = static_cast<double>(series.total());
    for (auto &b : out.blocks)
        b.share = total > 0 ? 100.0 * static_cast<double>(b.count) / total : 0.0;
    return out;
}

ProjectionResult linear_projection(const YearSeries &series, const std::vector<int> &targets) {
    if (series.size() < 2)
        throw DataError("linear projection needs at least two years");
    ProjectionResult r;
    const std::size_t n = series.size();
    r.origin_year = series[(n + 1) / 2 - 1].year;
    for (const auto &p : series.points()) {
        const double x = static_cast<double>(p.year - r.origin_year);
        const double y = static_cast<double>(p.count);
        r.sum_y += y;
        r.sum_xy += x * y;
        r.sum_x2 += x * x;
    }
    if (r.sum_x2 == 0.0)
        throw DataError("linear projection is degenerate (sum of X^2 is zero)");
    r.a = r.sum_y / static_cast<double>(n);
    r.b = r.sum_xy / r.sum_x2;
    for (int t : targets)
        r.projected.emplace_back(t, r.at(t));
    return r;
}

RatioMatrix growth_ratio_matrix(const std::vector<std::pair<std::string, std::int64_t>> &totals) {
    RatioMatrix m;
    for (const auto &[label, n] : totals) {
        if (n <= 0)
            throw DataError(fmt::format("growth ratio needs positive totals; '{}' has {}", label, n));
        m.labels.push_back(label);
    }
    for (const auto &[li, ni] : totals) {
        std::vector<double> row;
        for (const auto &[lj, nj] : totals)
            row.push_back(static_cast<double>(ni) / static_cast<double>(nj));
        m.cells.push_back(std::move(row));
    }
    return m;
}

std::vector<std::optional<double>> annual_growth_ratio(const YearSeries &series) {
    std::vector<std::optional<double>> out;
    const auto &pts = series.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i + 1 == pts.size()) {
            out.push_back(std::nullopt);
            break;
        }
        if (pts[i].count <= 0)
            throw DataError(fmt::format("growth ratio undefined after year {} with count {}", pts[i].year,
                                        pts[i].count));
        out.push_back(static_cast<double>(pts[i + 1].count) / static_cast<double>(pts[i].count));
    }
    return out;
}

}  // namespace scimet
