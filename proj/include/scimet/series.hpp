#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace scimet {

struct YearCount {
    int year = 0;
    std::int64_t count = 0;
    bool operator==(const YearCount &) const = default;
};

// Ordered (year, count) sequence. Years strictly increase, counts are >= 0.
class YearSeries {
public:
    YearSeries() = default;
    // Accepts points in any order; duplicate years or negative counts throw DataError.
    explicit YearSeries(std::vector<YearCount> points);

    const std::vector<YearCount> &points() const { return points_; }
    bool empty() const { return points_.empty(); }
    std::size_t size() const { return points_.size(); }
    const YearCount &operator[](std::size_t i) const { return points_[i]; }
    std::int64_t total() const;
    std::optional<std::int64_t> at(int year) const;
    std::vector<int> years() const;
    std::vector<std::int64_t> counts() const;

    bool operator==(const YearSeries &) const = default;

private:
    std::vector<YearCount> points_;
};

// y authors wrote exactly x papers each.
struct ProductivityPair {
    std::int64_t papers = 0;
    std::int64_t authors = 0;
    bool operator==(const ProductivityPair &) const = default;
};

class ProductivityDistribution {
public:
    ProductivityDistribution() = default;
    // Sorts ascending by papers; papers must be distinct and >= 1, authors >= 1.
    explicit ProductivityDistribution(std::vector<ProductivityPair> pairs);

    const std::vector<ProductivityPair> &pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }
    std::int64_t total_authors() const;
    std::int64_t total_credits() const;

    bool operator==(const ProductivityDistribution &) const = default;

private:
    std::vector<ProductivityPair> pairs_;
};

struct RankedEntry {
    std::string label;
    std::int64_t frequency = 0;
    bool operator==(const RankedEntry &) const = default;
};

// Entries ordered by frequency descending, then label ascending. Labels are unique.
class RankedList {
public:
    RankedList() = default;
    explicit RankedList(std::vector<RankedEntry> entries);

    const std::vector<RankedEntry> &entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const RankedEntry &operator[](std::size_t i) const { return entries_[i]; }
    std::int64_t total() const;
    std::optional<std::int64_t> frequency_of(const std::string &label) const;

    bool operator==(const RankedList &) const = default;

private:
    std::vector<RankedEntry> entries_;
};

}  // namespace scimet
