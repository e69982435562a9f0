#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "scimet/corpus.hpp"
#include "scimet/records.hpp"

namespace testing {

scimet::BibRecord record(int year, std::vector<std::string> authors = {"Doe, J"},
                         std::vector<std::string> countries = {}, std::int64_t cites = 0);

// Small integer draws that do not depend on the standard library's distributions.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}
    std::int64_t below(std::int64_t n) { return static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(n)); }
    std::int64_t between(std::int64_t lo, std::int64_t hi) { return lo + below(hi - lo + 1); }
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing
