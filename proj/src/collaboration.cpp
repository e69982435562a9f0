#include "scimet/collaboration.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "scimet/error.hpp"

namespace scimet {

double degree_of_collaboration(const AuthorshipDistribution &dist) {
    const auto single = dist.single_authored();
    const auto multi = dist.multi_authored();
    if (single + multi == 0)
        throw DataError("degree of collaboration needs at least one authored paper");
    return static_cast<double>(multi) / static_cast<double>(single + multi);
}

double collaborative_index(std::int64_t papers, std::int64_t authors) {
    if (papers <= 0)
        throw DataError("collaborative index needs at least one paper");
    return static_cast<double>(authors) / static_cast<double>(papers);
}

OverflowPolicy parse_overflow_policy(std::string_view name) {
    if (name == "exact")
        return OverflowPolicy::exact;
    if (name == "bucket_as_j")
        return OverflowPolicy::bucket_as_j;
    throw DataError(fmt::format("unknown overflow policy '{}'", name));
}

double collaborative_coefficient(const AuthorshipDistribution &dist, OverflowPolicy policy) {
    if (policy == OverflowPolicy::exact && !dist.exact())
        throw DataError("exact collaborative coefficient needs per-paper author counts");
    double reciprocal = 0.0;
    std::int64_t papers = 0;
    for (const auto &[j, f] : dist.counts()) {
        if (j == 0)
            continue;
        const auto effective = policy == OverflowPolicy::bucket_as_j ? std::min(j, dist.overflow_at()) : j;
        reciprocal += static_cast<double>(f) / static_cast<double>(effective);
        papers += f;
    }
    if (papers == 0)
        throw DataError("collaborative coefficient needs at least one authored paper");
    return 1.0 - reciprocal / static_cast<double>(papers);
}

double modified_cc(double cc, std::int64_t papers) {
    if (papers < 2)
        throw DataError("modified collaborative coefficient needs at least two papers");
    const double a = static_cast<double>(papers);
    return cc * a / (a - 1.0);
}

CollabRow collaboration_row(std::string label, const AuthorshipDistribution &dist, OverflowPolicy policy) {
    CollabRow row;
    row.label = std::move(label);
    row.papers = dist.total_papers();
    const auto authors = dist.total_authors();
    if (!authors)
        throw DataError(fmt::format("{}: author total unknown for bucketed distribution", row.label));
    row.authors = *authors;
    row.ci = collaborative_index(row.papers, row.authors);
    row.dc = degree_of_collaboration(dist);
    row.cc = collaborative_coefficient(dist, policy);
    if (row.papers >= 2)
        row.mcc = modified_cc(row.cc, row.papers);
    return row;
}

std::vector<CollabRow> collaboration_by_year(const Corpus &corpus) {
    std::vector<CollabRow> rows;
    for (const auto &[year, dist] : authorship_by_year(corpus)) {
        if (dist.single_authored() + dist.multi_authored() == 0)
            continue;
        rows.push_back(collaboration_row(std::to_string(year), dist, OverflowPolicy::exact));
    }
    return rows;
}

CaiVariant parse_cai_variant(std::string_view name) {
    if (name == "standard")
        return CaiVariant::standard;
    if (name == "paper_complement" || name == "paper")
        return CaiVariant::paper_complement;
    throw DataError(fmt::format("unknown CAI variant '{}'", name));
}

std::string_view cai_variant_name(CaiVariant v) {
    return v == CaiVariant::standard ? "standard" : "paper_complement";
}

std::vector<double> co_authorship_index(const std::vector<std::int64_t> &block_counts,
                                        const std::vector<std::int64_t> &totals, CaiVariant variant) {
    if (block_counts.size() != totals.size())
        throw DataError("block and total author classes differ in length");
    std::int64_t n_io = 0, n_oo = 0;
    for (std::size_t j = 0; j < totals.size(); ++j) {
        n_io += block_counts[j];
        n_oo += totals[j];
    }
    if (n_io <= 0 || n_oo <= 0)
        throw DataError("co-authorship index needs positive block and overall totals");
    std::vector<double> out;
    out.reserve(totals.size());
    for (std::size_t j = 0; j < totals.size(); ++j) {
        const double nij = static_cast<double>(block_counts[j]);
        const double noj = static_cast<double>(totals[j]);
        if (variant == CaiVariant::standard) {
            if (totals[j] == 0)
                throw DataError(fmt::format("author class {} is empty over all blocks", j));
            out.push_back((nij / n_io) / (noj / n_oo) * 100.0);
        } else {
            if (totals[j] == n_oo)
                throw DataError(fmt::format("author class {} holds every paper; complement share is zero", j));
            out.push_back(((n_io - nij) / n_io) / ((n_oo - noj) / n_oo) * 100.0);
        }
    }
    return out;
}

std::vector<std::int64_t> class_counts(const AuthorshipDistribution &dist, const std::vector<std::int64_t> &lower_bounds) {
    if (lower_bounds.empty())
        throw DataError("author classes must be nonempty");
    for (std::size_t k = 1; k < lower_bounds.size(); ++k)
        if (lower_bounds[k] <= lower_bounds[k - 1])
            throw DataError("author class bounds must increase");
    if (!dist.exact() && lower_bounds.back() > dist.overflow_at())
        throw DataError("author classes split the overflow bucket");
    std::vector<std::int64_t> out(lower_bounds.size(), 0);
    for (const auto &[j, f] : dist.counts()) {
        if (j < lower_bounds.front())
            continue;
        auto it = std::upper_bound(lower_bounds.begin(), lower_bounds.end(), j);
        out[static_cast<std::size_t>(it - lower_bounds.begin() - 1)] += f;
    }
    return out;
}

std::vector<std::string> class_labels(const std::vector<std::int64_t> &lower_bounds) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < lower_bounds.size(); ++k) {
        if (k + 1 == lower_bounds.size())
            out.push_back(fmt::format("{}+", lower_bounds[k]));
        else if (lower_bounds[k + 1] == lower_bounds[k] + 1)
            out.push_back(std::to_string(lower_bounds[k]));
        else
            out.push_back(fmt::format("{}-{}", lower_bounds[k], lower_bounds[k + 1] - 1));
    }
    return out;
}

ActivityIndexTable activity_index(const YearSeries &country, const YearSeries &reference) {
    if (country.years() != reference.years())
        throw DataError("activity index needs the country and reference series to cover the same years");
    const double c_total = static_cast<double>(country.total());
    const double w_total = static_cast<double>(reference.total());
    if (c_total <= 0)
        throw DataError("activity index needs a country with at least one paper");
    ActivityIndexTable t;
    for (std::size_t i = 0; i < country.size(); ++i) {
        if (reference[i].count <= 0)
            throw DataError(fmt::format("reference count for {} must be positive", reference[i].year));
        t.years.push_back(country[i].year);
        t.values.push_back((static_cast<double>(country[i].count) / c_total) /
                           (static_cast<double>(reference[i].count) / w_total) * 100.0);
    }
    return t;
}

CollaborationShares collaboration_shares(const Corpus &corpus, const std::string &home, std::size_t top_k,
                                         int year_span) {
    if (year_span < 1)
        throw DataError("year span must be positive");
    CollaborationShares out;
    out.home = home;
    std::map<std::string, std::int64_t> partners;
    for (const auto &r : corpus.records()) {
        if (!r.countries.contains(home))
            continue;
        ++out.home_total;
        if (r.countries.size() == 1)
            ++out.solo;
        for (const auto &c : r.countries)
            if (c != home)
                ++partners[c];
    }
    if (out.home_total == 0)
        throw DataError(fmt::format("country '{}' does not appear in the corpus", home));
    std::vector<RankedEntry> entries;
    for (const auto &[c, n] : partners)
        entries.push_back({c, n});
    const RankedList ranked(std::move(entries));

    const double total = static_cast<double>(out.home_total);
    std::int64_t cumulative = 0;
    auto push = [&](std::string label, std::int64_t papers) {
        cumulative += papers;
        out.partners.push_back({std::move(label), papers, 100.0 * static_cast<double>(papers) / total, cumulative,
                                100.0 * static_cast<double>(cumulative) / total,
                                static_cast<double>(papers) / year_span});
    };
    for (std::size_t i = 0; i < ranked.size() && i < top_k; ++i)
        push(ranked[i].label, ranked[i].frequency);
    if (!out.partners.empty())
        push(std::string(kOtherPartnersLabel), std::max<std::int64_t>(0, out.home_total - cumulative));
    return out;
}

CountMatrix inter_collaboration_matrix(const Corpus &corpus, const std::vector<std::string> &members) {
    if (members.empty())
        throw DataError("collaboration matrix needs at least one member");
    CountMatrix m;
    m.labels = members;
    m.cells.assign(members.size(), std::vector<std::int64_t>(members.size(), 0));
    std::vector<std::size_t> present;
    for (const auto &r : corpus.records()) {
        present.clear();
        for (std::size_t i = 0; i < members.size(); ++i)
            if (r.countries.contains(members[i]))
                present.push_back(i);
        if (present.size() == 1) {
            ++m.cells[present[0]][present[0]];
            continue;
        }
        for (std::size_t a = 0; a < present.size(); ++a)
            for (std::size_t b = 0; b < present.size(); ++b)
                if (a != b)
                    ++m.cells[present[a]][present[b]];
    }
    return m;
}

}  // namespace scimet
