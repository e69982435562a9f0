#include "scimet/laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "scimet/error.hpp"

namespace scimet {

namespace {

double round_to(double v, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(v * scale) / scale;
}

std::int64_t ceil_sqrt(std::int64_t v) {
    auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (k * k > v)
        --k;
    while (k * k < v)
        ++k;
    return k;
}

}  // namespace

double lotka_exponent(std::size_t pairs, double sum_x, double sum_y, double sum_xy, double sum_x2) {
    const double n = static_cast<double>(pairs);
    const double denom = n * sum_x2 - sum_x * sum_x;
    if (pairs < 2 || std::abs(denom) < 1e-12 * std::max(1.0, n * sum_x2))
        throw DataError("Lotka regression is degenerate: log x has no variance");
    return std::abs((n * sum_xy - sum_x * sum_y) / denom);
}

LotkaFit lotka_fit_points(const std::vector<std::pair<double, double>> &points, double log_base, int truncation) {
    if (points.size() < 2)
        throw DataError("Lotka fit needs at least two (x, y) pairs");
    if (!(log_base > 1.0))
        throw DataError("logarithm base must exceed 1");
    LotkaFit fit;
    fit.log_base = log_base;
    fit.pairs = points.size();
    const double lb = std::log(log_base);
    for (const auto &[px, py] : points) {
        if (!(px > 0.0) || !(py > 0.0))
            throw DataError("Lotka fit needs positive x and y");
        const double x = std::log(px) / lb;
        const double y = std::log(py) / lb;
        fit.sum_x += x;
        fit.sum_y += y;
        fit.sum_xy += x * y;
        fit.sum_x2 += x * x;
    }
    fit.n = lotka_exponent(fit.pairs, fit.sum_x, fit.sum_y, fit.sum_xy, fit.sum_x2);
    const double np = static_cast<double>(fit.pairs);
    const double slope = (np * fit.sum_xy - fit.sum_x * fit.sum_y) / (np * fit.sum_x2 - fit.sum_x * fit.sum_x);
    fit.intercept = (fit.sum_y - slope * fit.sum_x) / np;
    // The constant only exists for a convergent series.
    fit.c = fit.n > 1.0 ? lotka_constant(fit.n, truncation) : std::numeric_limits<double>::quiet_NaN();
    return fit;
}

LotkaFit lotka_fit(const ProductivityDistribution &dist, double log_base, int truncation) {
    std::vector<std::pair<double, double>> points;
    points.reserve(dist.size());
    for (const auto &p : dist.pairs())
        points.emplace_back(static_cast<double>(p.papers), static_cast<double>(p.authors));
    return lotka_fit_points(points, log_base, truncation);
}

double lotka_constant(double n, int p) {
    if (!(n > 1.0))
        throw DataError(fmt::format("Lotka constant diverges for n = {}", n));
    if (p < 2)
        throw DataError("truncation point must be at least 2");
    double sum = 0.0;
    for (int x = 1; x < p; ++x)
        sum += std::pow(static_cast<double>(x), -n);
    const double pd = static_cast<double>(p);
    sum += 1.0 / ((n - 1.0) * std::pow(pd, n - 1.0));
    sum += 1.0 / (2.0 * std::pow(pd, n));
    sum += n / (24.0 * std::pow(pd - 1.0, n + 1.0));
    return 1.0 / sum;
}

KsMode parse_ks_mode(std::string_view name) {
    if (name == "standard")
        return KsMode::standard;
    if (name == "paper")
        return KsMode::paper;
    throw DataError(fmt::format("unknown K-S mode '{}'", name));
}

KsResult ks_test(const ProductivityDistribution &dist, const LotkaFit &fit, const KsOptions &options) {
    const auto total = dist.total_authors();
    if (total <= 0)
        throw DataError("K-S test needs a nonempty distribution");
    KsResult r;
    r.mode = options.mode;
    if (options.mode == KsMode::paper) {
        r.n_used = round_to(fit.n, 2);
        r.c_used = round_to(lotka_constant(r.n_used), 4);
        r.coefficient = options.paper_coefficient;
    } else {
        r.n_used = fit.n;
        r.c_used = fit.c;
        r.coefficient = options.coefficient;
    }
    if (!std::isfinite(r.c_used))
        throw DataError("K-S test needs a finite Lotka constant (n > 1)");
    double obs_cum = 0.0, exp_cum = 0.0;
    for (const auto &p : dist.pairs()) {
        KsRow row;
        row.x = p.papers;
        row.y = p.authors;
        row.observed = static_cast<double>(p.authors) / static_cast<double>(total);
        row.expected = r.c_used * std::pow(static_cast<double>(p.papers), -r.n_used);
        obs_cum += row.observed;
        exp_cum += row.expected;
        row.observed_cumulative = obs_cum;
        row.expected_cumulative = exp_cum;
        row.difference = row.observed - row.expected;
        row.cumulative_difference = obs_cum - exp_cum;
        if (std::abs(row.difference) > r.d_max_share)
            r.d_max_share = std::abs(row.difference);
        r.d_max_cumulative = std::max(r.d_max_cumulative, std::abs(row.cumulative_difference));
        r.rows.push_back(row);
    }
    const bool per_x = options.mode == KsMode::paper;
    for (const auto &row : r.rows) {
        const double d = std::abs(per_x ? row.difference : row.cumulative_difference);
        if (d > r.d_max) {
            r.d_max = d;
            r.d_max_x = row.x;
        }
    }
    r.critical_value = r.coefficient / std::sqrt(static_cast<double>(total));
    r.fits = r.d_max <= r.critical_value;
    if (per_x)
        r.paper_verdict = r.d_max > r.critical_value;
    return r;
}

BoundaryPolicy parse_boundary_policy(std::string_view name) {
    if (name == "floor" || name == "tie_group_floor")
        return BoundaryPolicy::tie_group_floor;
    if (name == "nearest" || name == "tie_group_nearest")
        return BoundaryPolicy::tie_group_nearest;
    if (name == "ceiling" || name == "tie_group_ceiling")
        return BoundaryPolicy::tie_group_ceiling;
    throw DataError(fmt::format("unknown boundary policy '{}'", name));
}

std::string_view boundary_policy_name(BoundaryPolicy p) {
    switch (p) {
    case BoundaryPolicy::tie_group_floor: return "tie_group_floor";
    case BoundaryPolicy::tie_group_nearest: return "tie_group_nearest";
    case BoundaryPolicy::tie_group_ceiling: return "tie_group_ceiling";
    }
    return "";
}

std::vector<double> BradfordZones::predicted_journals() const {
    std::vector<double> out;
    if (zones.empty())
        return out;
    double v = static_cast<double>(zones.front().journals);
    for (std::size_t k = 0; k < zones.size(); ++k) {
        out.push_back(v);
        v *= mean_multiplier;
    }
    return out;
}

std::string BradfordZones::ratio_string() const {
    std::string out = "1";
    double v = 1.0;
    for (std::size_t k = 1; k < zones.size(); ++k) {
        v *= mean_multiplier;
        out += fmt::format(" : {:.2f}", v);
    }
    return out;
}

BradfordZones bradford_zones(const RankedList &journals, int zone_count, BoundaryPolicy policy) {
    if (journals.empty())
        throw DataError("Bradford zoning needs at least one journal");
    if (zone_count < 1)
        throw DataError("zone count must be positive");
    const std::size_t n = journals.size();
    if (static_cast<std::size_t>(zone_count) > n)
        throw DataError(fmt::format("{} zones requested for {} journals", zone_count, n));

    std::vector<std::int64_t> cum(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        cum[i + 1] = cum[i] + journals[i].frequency;
    std::vector<bool> boundary(n + 1, false);
    for (std::size_t i = 1; i <= n; ++i)
        boundary[i] = i == n || journals[i - 1].frequency != journals[i].frequency;

    const double total = static_cast<double>(cum[n]);
    std::vector<std::size_t> cuts{0};
    for (int k = 1; k < zone_count; ++k) {
        const double target = total * k / zone_count;
        const std::size_t lo = cuts.back() + 1;
        const std::size_t hi = n - static_cast<std::size_t>(zone_count - k);
        std::vector<std::size_t> cand;
        for (std::size_t i = lo; i <= hi; ++i)
            if (boundary[i])
                cand.push_back(i);
        if (cand.empty())
            for (std::size_t i = lo; i <= hi; ++i)
                cand.push_back(i);
        auto value = [&](std::size_t i) { return static_cast<double>(cum[i]); };
        std::size_t choice = cand.front();
        switch (policy) {
        case BoundaryPolicy::tie_group_floor:
            for (auto i : cand)
                if (value(i) <= target)
                    choice = i;
            break;
        case BoundaryPolicy::tie_group_ceiling:
            choice = cand.back();
            for (auto it = cand.rbegin(); it != cand.rend(); ++it)
                if (value(*it) >= target)
                    choice = *it;
            break;
        case BoundaryPolicy::tie_group_nearest:
            for (auto i : cand)
                if (std::abs(value(i) - target) < std::abs(value(choice) - target))
                    choice = i;
            break;
        }
        cuts.push_back(choice);
    }
    cuts.push_back(n);

    BradfordZones z;
    z.total_journals = static_cast<std::int64_t>(n);
    z.total_articles = cum[n];
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
        z.zones.push_back({static_cast<std::int64_t>(cuts[k + 1] - cuts[k]), cum[cuts[k + 1]] - cum[cuts[k]],
                           cuts[k] + 1, cuts[k + 1]});
    for (std::size_t k = 0; k + 1 < z.zones.size(); ++k)
        z.multipliers.push_back(static_cast<double>(z.zones[k + 1].journals) /
                                static_cast<double>(z.zones[k].journals));
    if (!z.multipliers.empty()) {
        double s = 0.0;
        for (double m : z.multipliers)
            s += m;
        z.mean_multiplier = s / static_cast<double>(z.multipliers.size());
    }
    return z;
}

RankedList expand_journal_groups(const std::vector<std::pair<std::int64_t, std::int64_t>> &groups,
                                 const std::vector<std::string> &known_labels) {
    std::int64_t total = 0;
    for (const auto &[count, articles] : groups) {
        if (count < 1 || articles < 0)
            throw DataError("journal groups need a positive journal count and non-negative articles");
        total += count;
    }
    const auto width = std::to_string(total).size();
    std::vector<RankedEntry> entries;
    entries.reserve(static_cast<std::size_t>(total));
    std::size_t index = 0;
    for (const auto &[count, articles] : groups)
        for (std::int64_t k = 0; k < count; ++k, ++index) {
            std::string label = index < known_labels.size() ? known_labels[index]
                                                            : fmt::format("Journal {:0{}}", index + 1, width);
            entries.push_back({std::move(label), articles});
        }
    return RankedList(std::move(entries));
}

std::vector<ZipfRow> zipf_constants(const RankedList &words) {
    if (words.empty())
        throw DataError("Zipf analysis needs at least one word");
    std::vector<ZipfRow> rows;
    rows.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].frequency <= 0)
            throw DataError(fmt::format("word '{}' has zero frequency", words[i].label));
        ZipfRow row;
        row.rank = i + 1;
        row.word = words[i].label;
        row.frequency = words[i].frequency;
        row.log_f = std::log10(static_cast<double>(row.frequency));
        row.log_r = std::log10(static_cast<double>(row.rank));
        row.c = row.log_f + row.log_r;
        rows.push_back(std::move(row));
    }
    return rows;
}

PriceOrdering parse_price_ordering(std::string_view name) {
    if (name == "by_productivity")
        return PriceOrdering::by_productivity;
    if (name == "by_contributor_rows")
        return PriceOrdering::by_contributor_rows;
    throw DataError(fmt::format("unknown Price ordering '{}'", name));
}

std::string_view price_ordering_name(PriceOrdering o) {
    return o == PriceOrdering::by_productivity ? "by_productivity" : "by_contributor_rows";
}

PriceResult price_sqrt_check(const ProductivityDistribution &dist, PriceOrdering ordering) {
    PriceResult r;
    r.total_authors = dist.total_authors();
    r.total_credits = dist.total_credits();
    if (r.total_authors <= 0)
        throw DataError("Price's law needs a nonempty distribution");
    r.sqrt_authors = std::sqrt(static_cast<double>(r.total_authors));
    r.quota = ceil_sqrt(r.total_authors);

    auto pairs = dist.pairs();
    if (ordering == PriceOrdering::by_productivity) {
        std::sort(pairs.begin(), pairs.end(),
                  [](const ProductivityPair &a, const ProductivityPair &b) { return a.papers > b.papers; });
        for (const auto &p : pairs) {
            if (r.selected_authors >= r.quota)
                break;
            const auto take = std::min(p.authors, r.quota - r.selected_authors);
            r.selected_authors += take;
            r.top_credits += take * p.papers;
        }
    } else {
        std::sort(pairs.begin(), pairs.end(), [](const ProductivityPair &a, const ProductivityPair &b) {
            if (a.authors != b.authors)
                return a.authors < b.authors;
            return a.papers < b.papers;
        });
        for (const auto &p : pairs) {
            if (r.selected_authors >= r.quota)
                break;
            r.selected_authors += p.authors;
            r.top_credits += p.authors * p.papers;
        }
    }
    r.share = static_cast<double>(r.top_credits) / static_cast<double>(r.total_credits);
    r.satisfied = r.share >= 0.5;
    return r;
}

ParetoResult pareto_check(const ProductivityDistribution &dist, double author_fraction) {
    if (!(author_fraction > 0.0 && author_fraction <= 1.0))
        throw DataError("author fraction must lie in (0, 1]");
    ParetoResult r;
    r.author_fraction = author_fraction;
    const auto total = dist.total_authors();
    if (total <= 0)
        throw DataError("Pareto check needs a nonempty distribution");
    r.total_credits = dist.total_credits();
    // Guard against 0.2 * 104160 landing a hair above an integer.
    r.top_author_count =
        static_cast<std::int64_t>(std::ceil(author_fraction * static_cast<double>(total) - 1e-9));
    auto pairs = dist.pairs();
    std::sort(pairs.begin(), pairs.end(),
              [](const ProductivityPair &a, const ProductivityPair &b) { return a.papers > b.papers; });
    std::int64_t taken = 0;
    for (const auto &p : pairs) {
        if (taken >= r.top_author_count)
            break;
        const auto take = std::min(p.authors, r.top_author_count - taken);
        taken += take;
        r.top_credits += take * p.papers;
    }
    r.credit_share = static_cast<double>(r.top_credits) / static_cast<double>(r.total_credits);
    r.gap_to_target = 0.8 - r.credit_share;
    return r;
}

}  // namespace scimet
