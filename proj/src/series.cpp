#include "scimet/series.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

#include "scimet/error.hpp"

namespace scimet {

YearSeries::YearSeries(std::vector<YearCount> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end(),
              [](const YearCount &a, const YearCount &b) { return a.year < b.year; });
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].count < 0)
            throw DataError(fmt::format("negative count {} for year {}", points_[i].count, points_[i].year));
        if (i > 0 && points_[i].year == points_[i - 1].year)
            throw DataError(fmt::format("duplicate year {}", points_[i].year));
    }
}

std::int64_t YearSeries::total() const {
    std::int64_t sum = 0;
    for (const auto &p : points_)
        sum += p.count;
    return sum;
}

std::optional<std::int64_t> YearSeries::at(int year) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), year,
                               [](const YearCount &p, int y) { return p.year < y; });
    if (it == points_.end() || it->year != year)
        return std::nullopt;
    return it->count;
}

std::vector<int> YearSeries::years() const {
    std::vector<int> out;
    out.reserve(points_.size());
    for (const auto &p : points_)
        out.push_back(p.year);
    return out;
}

std::vector<std::int64_t> YearSeries::counts() const {
    std::vector<std::int64_t> out;
    out.reserve(points_.size());
    for (const auto &p : points_)
        out.push_back(p.count);
    return out;
}

ProductivityDistribution::ProductivityDistribution(std::vector<ProductivityPair> pairs)
    : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end(),
              [](const ProductivityPair &a, const ProductivityPair &b) { return a.papers < b.papers; });
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].papers < 1)
            throw DataError(fmt::format("paper count must be positive, got {}", pairs_[i].papers));
        if (pairs_[i].authors < 1)
            throw DataError(fmt::format("author count must be positive, got {} at x={}", pairs_[i].authors,
                                        pairs_[i].papers));
        if (i > 0 && pairs_[i].papers == pairs_[i - 1].papers)
            throw DataError(fmt::format("repeated paper count x={}", pairs_[i].papers));
    }
}

std::int64_t ProductivityDistribution::total_authors() const {
    std::int64_t sum = 0;
    for (const auto &p : pairs_)
        sum += p.authors;
    return sum;
}

std::int64_t ProductivityDistribution::total_credits() const {
    std::int64_t sum = 0;
    for (const auto &p : pairs_)
        sum += p.papers * p.authors;
    return sum;
}

RankedList::RankedList(std::vector<RankedEntry> entries) : entries_(std::move(entries)) {
    std::unordered_set<std::string> seen;
    for (const auto &e : entries_) {
        if (e.frequency < 0)
            throw DataError(fmt::format("negative frequency for '{}'", e.label));
        if (!seen.insert(e.label).second)
            throw DataError(fmt::format("duplicate label '{}'", e.label));
    }
    std::sort(entries_.begin(), entries_.end(), [](const RankedEntry &a, const RankedEntry &b) {
        if (a.frequency != b.frequency)
            return a.frequency > b.frequency;
        return a.label < b.label;
    });
}

std::int64_t RankedList::total() const {
    std::int64_t sum = 0;
    for (const auto &e : entries_)
        sum += e.frequency;
    return sum;
}

std::optional<std::int64_t> RankedList::frequency_of(const std::string &label) const {
    for (const auto &e : entries_)
        if (e.label == label)
            return e.frequency;
    return std::nullopt;
}

}  // namespace scimet
