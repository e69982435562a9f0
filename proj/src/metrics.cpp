#include "scimet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

#include "scimet/error.hpp"

namespace scimet {

CitationProfile::CitationProfile(std::vector<std::int64_t> cites, std::optional<std::vector<int>> ages,
                                 int career_years)
    : career_years_(career_years) {
    if (career_years < 1)
        throw DataError("career length must be at least one year");
    for (auto c : cites)
        if (c < 0)
            throw DataError("citation counts must be non-negative");
    if (ages) {
        if (ages->size() != cites.size())
            throw DataError("ages and citations differ in length");
        for (int a : *ages)
            if (a < 1)
                throw DataError("paper ages must be at least 1");
        std::vector<std::size_t> order(cites.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (cites[a] != cites[b])
                return cites[a] > cites[b];
            return (*ages)[a] < (*ages)[b];
        });
        std::vector<int> sorted_ages;
        sorted_ages.reserve(order.size());
        for (auto i : order) {
            cites_.push_back(cites[i]);
            sorted_ages.push_back((*ages)[i]);
        }
        ages_ = std::move(sorted_ages);
    } else {
        cites_ = std::move(cites);
        std::sort(cites_.begin(), cites_.end(), std::greater<>());
    }
    citations_ = std::accumulate(cites_.begin(), cites_.end(), std::int64_t{0});
}

std::int64_t h_index(const CitationProfile &profile) {
    const auto &c = profile.cites();
    std::int64_t h = 0;
    while (h < static_cast<std::int64_t>(c.size()) && c[static_cast<std::size_t>(h)] >= h + 1)
        ++h;
    return h;
}

std::int64_t g_index(const CitationProfile &profile, bool zero_pad) {
    const auto &c = profile.cites();
    std::int64_t g = 0;
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        prefix += c[i];
        const auto k = static_cast<std::int64_t>(i + 1);
        if (prefix >= k * k)
            g = k;
    }
    if (zero_pad) {
        // Past the last paper the prefix sum stays at C, so g extends to floor(sqrt(C)).
        auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(prefix)));
        while ((k + 1) * (k + 1) <= prefix)
            ++k;
        while (k * k > prefix)
            --k;
        g = std::max(g, k);
    }
    return g;
}

CoreIndices core_indices(const CitationProfile &profile) {
    CoreIndices out;
    out.h = h_index(profile);
    for (std::int64_t i = 0; i < out.h; ++i)
        out.core_sum += profile.cites()[static_cast<std::size_t>(i)];
    const double s = static_cast<double>(out.core_sum);
    out.r = std::sqrt(s);
    out.e = std::sqrt(std::max(0.0, s - static_cast<double>(out.h * out.h)));
    if (out.h > 0) {
        out.a_core = s / static_cast<double>(out.h);
        out.a_paper = static_cast<double>(profile.citations()) / static_cast<double>(out.h);
    }
    return out;
}

double ar_index(const CitationProfile &profile) {
    if (!profile.ages())
        throw DataError("AR-index needs paper ages");
    const auto h = h_index(profile);
    double sum = 0.0;
    for (std::int64_t i = 0; i < h; ++i) {
        const auto k = static_cast<std::size_t>(i);
        sum += static_cast<double>(profile.cites()[k]) / static_cast<double>((*profile.ages())[k]);
    }
    return std::sqrt(sum);
}

DerivedIndices derived_indices(const CitationProfile &profile) {
    DerivedIndices d;
    const auto h = h_index(profile);
    const auto p = profile.papers();
    if (h == 0 || p == 0)
        return d;
    const double hd = static_cast<double>(h);
    const double c = static_cast<double>(profile.citations());
    d.m = hd / profile.career_years();
    d.h_nom = hd / static_cast<double>(p);
    d.hg = std::sqrt(hd * static_cast<double>(g_index(profile)));
    d.p = std::cbrt(c * c / static_cast<double>(p));
    d.q2 = std::sqrt(hd * d.m);
    return d;
}

IndexBundle index_bundle(const CitationProfile &profile) {
    IndexBundle b;
    const auto core = core_indices(profile);
    const auto derived = derived_indices(profile);
    b.papers = profile.papers();
    b.citations = profile.citations();
    b.h = core.h;
    b.g = g_index(profile);
    b.core_sum = core.core_sum;
    b.e = core.e;
    b.r = core.r;
    b.a_paper = core.a_paper;
    b.a_core = core.a_core;
    if (profile.ages())
        b.ar = ar_index(profile);
    b.m = derived.m;
    b.h_nom = derived.h_nom;
    b.hg = derived.hg;
    b.p = derived.p;
    b.q2 = derived.q2;
    b.cpp = b.papers > 0 ? cpp(b.citations, b.papers) : 0.0;
    return b;
}

double cpp(std::int64_t citations, std::int64_t papers) {
    if (papers <= 0)
        throw DataError("citations per paper needs at least one paper");
    return static_cast<double>(citations) / static_cast<double>(papers);
}

std::string CitationBin::label() const {
    if (high == kOpenBin)
        return fmt::format("{}+", low);
    if (low == high)
        return std::to_string(low);
    return fmt::format("{}-{}", low, high);
}

std::vector<CitationBin> default_citation_bins() {
    std::vector<CitationBin> bins{{0, 0}};
    for (std::int64_t lo = 1; lo < 1000; lo += 100)
        bins.push_back({lo, lo + 99});
    bins.push_back({1001, kOpenBin});
    return bins;
}

std::vector<HistogramRow> citation_histogram(const std::vector<std::int64_t> &cites, std::vector<CitationBin> bins) {
    std::sort(bins.begin(), bins.end(), [](const CitationBin &a, const CitationBin &b) { return a.low < b.low; });
    for (std::size_t i = 0; i < bins.size(); ++i) {
        if (bins[i].high < bins[i].low)
            throw DataError(fmt::format("citation bin {} is empty", bins[i].label()));
        if (i > 0 && bins[i].low <= bins[i - 1].high)
            throw DataError(fmt::format("citation bins {} and {} overlap", bins[i - 1].label(), bins[i].label()));
    }
    std::vector<HistogramRow> rows;
    for (const auto &b : bins)
        rows.push_back({b, 0, 0.0});
    for (auto c : cites) {
        auto it = std::upper_bound(bins.begin(), bins.end(), c,
                                   [](std::int64_t v, const CitationBin &b) { return v < b.low; });
        if (it == bins.begin() || c > std::prev(it)->high)
            throw DataError(fmt::format("citation count {} falls outside every bin", c));
        ++rows[static_cast<std::size_t>(std::prev(it) - bins.begin())].count;
    }
    if (!cites.empty())
        for (auto &r : rows)
            r.share = 100.0 * static_cast<double>(r.count) / static_cast<double>(cites.size());
    return rows;
}

GroupBy parse_group_by(std::string_view name) {
    if (name == "author")
        return GroupBy::author;
    if (name == "country")
        return GroupBy::country;
    throw DataError(fmt::format("unknown grouping '{}' (expected author or country)", name));
}

std::vector<EntityIndices> entity_profiles(const Corpus &corpus, GroupBy group_by, std::optional<int> reference_year) {
    std::vector<EntityIndices> out;
    const auto range = corpus.year_range();
    if (!range)
        return out;
    const int ref = reference_year.value_or(range->second);
    struct Acc {
        std::vector<std::int64_t> cites;
        std::vector<int> ages;
        int first_year = kMaxYear;
    };
    std::unordered_map<std::string_view, Acc> acc;
    auto add = [&](std::string_view key, const BibRecord &r) {
        auto &a = acc[key];
        a.cites.push_back(r.citation_count);
        a.ages.push_back(std::max(1, ref - r.year));
        a.first_year = std::min(a.first_year, r.year);
    };
    for (const auto &r : corpus.records()) {
        if (group_by == GroupBy::author) {
            for (const auto &name : r.authors)
                add(name, r);
        } else {
            for (const auto &c : r.countries)
                add(c, r);
        }
    }
    std::vector<std::string_view> names;
    names.reserve(acc.size());
    for (const auto &entry : acc)
        names.push_back(entry.first);
    std::sort(names.begin(), names.end());
    out.reserve(names.size());
    for (auto name : names) {
        auto &a = acc[name];
        const int career = std::max(1, ref - a.first_year + 1);
        CitationProfile profile(std::move(a.cites), std::move(a.ages), career);
        auto bundle = index_bundle(profile);
        out.push_back({std::string(name), a.first_year, std::move(profile), bundle});
    }
    std::stable_sort(out.begin(), out.end(), [](const EntityIndices &x, const EntityIndices &y) {
        if (x.bundle.h != y.bundle.h)
            return x.bundle.h > y.bundle.h;
        return x.bundle.citations > y.bundle.citations;
    });
    return out;
}

}  // namespace scimet
