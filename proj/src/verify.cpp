#include "scimet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>

#include <fmt/format.h>

#include "scimet/collaboration.hpp"
#include "scimet/corpus.hpp"
#include "scimet/delimited.hpp"
#include "scimet/error.hpp"
#include "scimet/fixtures.hpp"
#include "scimet/growth.hpp"
#include "scimet/laws.hpp"
#include "scimet/metrics.hpp"
#include "scimet/pipeline.hpp"
#include "scimet/records.hpp"
#include "scimet/report.hpp"
#include "scimet/tables.hpp"
#include "scimet/wordstats.hpp"

namespace scimet::verify {

namespace {

class Checker {
public:
    explicit Checker(CriterionResult &r) : r_(r) {}

    void check(bool ok, const std::string &what) {
        ++r_.checks;
        if (!ok) {
            r_.passed = false;
            if (r_.failures.size() < 20)
                r_.failures.push_back(what);
        }
    }
    void near(double actual, double expected, double tol, const std::string &what) {
        check(std::abs(actual - expected) <= tol + 1e-12,
              fmt::format("{}: got {:.6f}, expected {:.6f} within {}", what, actual, expected, tol));
    }
    void equal(std::int64_t actual, std::int64_t expected, const std::string &what) {
        check(actual == expected, fmt::format("{}: got {}, expected {}", what, actual, expected));
    }
    void text(const std::string &actual, const std::string &expected, const std::string &what) {
        check(actual == expected, fmt::format("{}: got '{}', expected '{}'", what, actual, expected));
    }

private:
    CriterionResult &r_;
};

double cell_real(const DelimitedTable &t, std::size_t row, std::string_view col) {
    return parse_real(t.rows[row][t.column(col)], col);
}

std::int64_t cell_int(const DelimitedTable &t, std::size_t row, std::string_view col) {
    return parse_integer(t.rows[row][t.column(col)], col);
}

void compare_growth(Checker &c, const std::vector<GrowthRow> &rows, const DelimitedTable &expected,
                    std::string_view key) {
    c.equal(static_cast<std::int64_t>(rows.size()), static_cast<std::int64_t>(expected.rows.size()), "row count");
    for (std::size_t i = 0; i < std::min(rows.size(), expected.rows.size()); ++i) {
        const std::string label = expected.rows[i][expected.column(key)];
        c.equal(rows[i].cumulative, cell_int(expected, i, "cumulative"), label + " cumulative");
        c.near(rows[i].w1, cell_real(expected, i, "w1"), 1e-4, label + " W1");
        c.near(rows[i].w2, cell_real(expected, i, "w2"), 1e-4, label + " W2");
        c.near(rows[i].rgr, cell_real(expected, i, "rgr"), 1e-4, label + " RGR");
        const std::string dt = expected.rows[i][expected.column("dt")];
        if (dt.empty())
            c.check(!rows[i].dt.has_value(), label + " doubling time should be absent");
        else
            c.near(rows[i].dt.value_or(-1.0), parse_real(dt, "dt"), 1e-4, label + " Dt");
    }
}

void criterion_growth(Checker &c) {
    const auto series = fixtures::year_counts();
    compare_growth(c, rgr_table(series, Convention::paper), fixtures::table("rgr_expected"), "year");
    const auto rows = rgr_table(series, Convention::paper);
    c.near(rows[1].w1, 5.5835, 1e-4, "1991 W1");
    c.near(rows[1].w2, 6.0497, 1e-4, "1991 W2");
    c.near(rows[1].rgr, 0.4662, 1e-4, "1991 RGR");
    c.near(rows[1].dt.value_or(0), 1.4864, 1e-4, "1991 Dt");

    const auto blocks = block_aggregate(series, 5);
    const auto block_rows = rgr_table(blocks.series(), Convention::paper);
    compare_growth(c, block_rows, fixtures::table("block_rgr_expected"), "block");
    c.near(block_rows.at(1).rgr, 0.5423, 1e-4, "1995-1999 RGR");
    c.near(block_rows.at(1).dt.value_or(0), 1.2779, 1e-4, "1995-1999 Dt");
}

void criterion_projection(Checker &c) {
    const auto p = linear_projection(fixtures::year_counts(), {2022, 2037});
    c.equal(p.origin_year, 2004, "origin year");
    c.near(p.sum_xy, 434604, 1e-6, "sum XY");
    c.near(p.sum_x2, 2255, 1e-6, "sum X^2");
    c.near(p.a, 1667.86667, 0.01, "a");
    c.near(p.b, 192.729047, 0.01, "b");
    c.near(p.projected.at(0).second, 5136.99, 0.01, "Yc(2022)");
    c.near(p.projected.at(1).second, 8027.93, 0.01, "Yc(2037)");
}

double zeta_oracle(double n, std::int64_t terms) {
    // Plain partial sum, summed smallest-first, plus the integral of the tail.
    double sum = 0.0;
    for (std::int64_t x = terms; x >= 1; --x)
        sum += std::pow(static_cast<double>(x), -n);
    sum += std::pow(static_cast<double>(terms) + 0.5, 1.0 - n) / (n - 1.0);
    return sum;
}

void criterion_lotka(Checker &c) {
    const auto dist = fixtures::lotka_productivity();
    c.equal(static_cast<std::int64_t>(dist.size()), 244, "pair count");
    c.equal(dist.total_authors(), 104160, "sum y");
    c.equal(dist.total_credits(), 384778, "sum xy credits");
    const auto fit = lotka_fit(dist);
    c.near(fit.sum_x, 492.5385, 0.001, "sum X");
    c.near(fit.sum_y, 180.7916, 0.001, "sum Y");
    c.near(fit.sum_xy, 263.6368, 0.001, "sum XY");
    c.near(fit.sum_x2, 1050.6941, 0.001, "sum X^2");
    c.near(fit.n, 1.79, 0.005, "n");
    const double c179 = lotka_constant(1.79);
    c.check(c179 >= 0.525 && c179 <= 0.529, fmt::format("c(1.79) = {:.6f} outside [0.525, 0.529]", c179));
    const double oracle = 1.0 / zeta_oracle(1.79, 10'000'000);
    c.near(c179, oracle, 0.002, "c(1.79) against brute-force zeta sum");
    c.near(lotka_constant(2.0), 6.0 / (M_PI * M_PI), 0.002, "c(2) against 1/zeta(2)");
    c.near(lotka_constant(3.0), 1.0 / zeta_oracle(3.0, 1'000'000), 0.002, "c(3) against brute-force zeta sum");
}

void criterion_ks(Checker &c) {
    const auto dist = fixtures::lotka_productivity();
    const auto fit = lotka_fit(dist);
    KsOptions opts;
    opts.mode = KsMode::paper;
    const auto ks = ks_test(dist, fit, opts);
    c.near(ks.n_used, 1.79, 1e-12, "rounded n");
    c.near(ks.c_used, 0.5270, 1e-12, "rounded c");
    c.near(ks.rows.at(0).observed, 0.57815, 1e-4, "x=1 observed");
    c.near(ks.rows.at(0).expected, 0.52700, 1e-4, "x=1 expected");
    c.near(ks.rows.at(0).difference, 0.05115, 1e-4, "x=1 difference");
    c.near(ks.d_max, 0.05115, 1e-4, "d_max");
    c.equal(ks.d_max_x, 1, "d_max location");
    c.near(ks.critical_value, 0.0055, 1e-4, "critical value");
    c.check(!ks.fits, "standard decision rule should reject the fit");
    c.check(ks.paper_verdict.value_or(false), "inverted rule should declare a fit");
    c.near(ks.rows.back().observed_cumulative, 1.0, 1e-9, "observed cumulative ends at 1");
}

void criterion_bradford(Checker &c) {
    const auto journals = fixtures::bradford_journals();
    c.equal(static_cast<std::int64_t>(journals.size()), 2762, "journal count");
    c.equal(journals.total(), 39873, "article count");
    c.text(journals[0].label, "Kardiologiya", "top journal");
    c.equal(journals[0].frequency, 1247, "top journal articles");
    const auto z = bradford_zones(journals, 3);
    const std::int64_t jz[] = {41, 202, 2519};
    const std::int64_t az[] = {13259, 13125, 13489};
    c.equal(static_cast<std::int64_t>(z.zones.size()), 3, "zone count");
    for (std::size_t k = 0; k < 3 && k < z.zones.size(); ++k) {
        c.equal(z.zones[k].journals, jz[k], fmt::format("zone {} journals", k + 1));
        c.equal(z.zones[k].articles, az[k], fmt::format("zone {} articles", k + 1));
    }
    if (z.multipliers.size() == 2) {
        c.near(z.multipliers[0], 4.93, 0.01, "multiplier 1-2");
        c.near(z.multipliers[1], 12.47, 0.01, "multiplier 2-3");
    }
    c.near(z.mean_multiplier, 8.7, 0.05, "mean multiplier");
}

void criterion_collaboration(Checker &c) {
    const auto dc_t = fixtures::table("degree_of_collaboration");
    const auto row_1990 = AuthorshipDistribution::from_buckets(
        {cell_int(dc_t, 0, "single"), cell_int(dc_t, 0, "multi")});
    c.text(report::fixed(degree_of_collaboration(row_1990), 2), "0.97", "DC 1990 from the yearly table");
    std::int64_t singles = 0, multis = 0;
    for (std::size_t i = 0; i < dc_t.rows.size(); ++i) {
        singles += cell_int(dc_t, i, "single");
        multis += cell_int(dc_t, i, "multi");
    }
    c.text(report::fixed(degree_of_collaboration(AuthorshipDistribution::from_buckets({singles, multis})), 2), "0.98",
           "overall DC from the yearly table");

    const auto &corpus = fixtures::reconstructed_corpus();
    const auto by_year = authorship_by_year(corpus);
    c.text(report::fixed(degree_of_collaboration(by_year.at(1990)), 2), "0.97", "DC 1990 from the corpus");
    c.text(report::fixed(degree_of_collaboration(authorship_distribution(corpus)), 2), "0.98",
           "overall DC from the corpus");

    const auto ci_t = fixtures::table("collaborative_indices");
    const auto last = ci_t.rows.size() - 1;
    c.text(report::fixed(collaborative_index(cell_int(ci_t, 0, "papers"), cell_int(ci_t, 0, "authors")), 2), "3.80",
           "CI 1990");
    c.text(report::fixed(collaborative_index(cell_int(ci_t, last, "papers"), cell_int(ci_t, last, "authors")), 2),
           "10.99", "CI 2019");
    const auto &d1990 = by_year.at(1990);
    c.text(report::fixed(collaborative_index(d1990.total_papers(), d1990.total_authors().value_or(0)), 2), "3.80",
           "CI 1990 from the corpus");
    c.near(modified_cc(0.62786, 158), 0.63186, 1e-5, "MCC(0.62786, 158)");

    const auto blocks = fixtures::table("block_authorship");
    std::vector<std::int64_t> buckets;
    for (std::size_t i = 0; i < blocks.rows.size(); ++i)
        buckets.push_back(cell_int(blocks, i, "1990-1994"));
    const auto block = AuthorshipDistribution::from_buckets(buckets);
    c.equal(block.total_papers(), 1036, "1990-1994 papers");
    const double cc = collaborative_coefficient(block, OverflowPolicy::bucket_as_j);
    c.text(report::fixed(cc, 2), "0.68", "CC 1990-1994");
}

void criterion_cai(Checker &c) {
    const auto t = fixtures::table("coauthorship_index");
    const std::vector<std::string> classes{"single", "two", "three", "four", "five_plus"};
    std::vector<std::int64_t> totals(classes.size(), 0);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j)
            totals[j] += cell_int(t, i, classes[j]);
    std::vector<std::int64_t> row;
    for (const auto &k : classes)
        row.push_back(cell_int(t, 0, k));
    const auto cai = co_authorship_index(row, totals, CaiVariant::paper_complement);
    const double expected[] = {98.90, 89.36, 81.61, 84.40, 254.19};
    for (std::size_t j = 0; j < classes.size(); ++j)
        c.near(cai[j], expected[j], 0.01, "1990 " + classes[j]);
}

void criterion_activity(Checker &c) {
    const auto global = fixtures::global_series();
    const auto brics = activity_index(fixtures::country_series("total"), global);
    const auto brazil = activity_index(fixtures::country_series("Brazil"), global);
    c.near(brics.values.at(0), 71.41, 0.01, "BRICS 1990");
    c.near(brazil.values.at(0), 112.75, 0.01, "Brazil 1990");
    const auto self = activity_index(global, global);
    for (std::size_t i = 0; i < self.values.size(); ++i)
        c.near(self.values[i], 100.0, 1e-9, fmt::format("self index {}", self.years[i]));
    std::vector<YearCount> scaled;
    for (const auto &p : global.points())
        scaled.push_back({p.year, p.count * 3});
    const auto proportional = activity_index(YearSeries(scaled), global);
    for (std::size_t i = 0; i < proportional.values.size(); ++i)
        c.near(proportional.values[i], 100.0, 1e-9, fmt::format("proportional index {}", proportional.years[i]));
}

// A citation vector with the given h, h-core sum S, total C and paper count P.
std::optional<CitationProfile> profile_from_aggregates(std::int64_t h, std::int64_t s, std::int64_t total,
                                                       std::int64_t papers, int years) {
    const std::int64_t rest = total - s;
    if (h < 1 || s < h * h || rest < 0 || papers < h || rest > (papers - h) * h)
        return std::nullopt;
    std::vector<std::int64_t> cites(static_cast<std::size_t>(h), h);
    cites[0] += s - h * h;
    const auto tail = papers - h;
    for (std::int64_t i = 0; i < tail; ++i)
        cites.push_back(rest / tail + (i < rest % tail ? 1 : 0));
    return CitationProfile(std::move(cites), std::nullopt, years);
}

void criterion_author_indices(Checker &c) {
    const auto t = fixtures::table("author_indices_brazil");
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const std::string who = t.rows[i][t.column("author")];
        const auto profile = profile_from_aggregates(cell_int(t, i, "h"), cell_int(t, i, "core_citations"),
                                                     cell_int(t, i, "citations"), cell_int(t, i, "papers"), 30);
        c.check(profile.has_value(), who + ": aggregates admit no citation vector");
        if (!profile)
            continue;
        const auto b = index_bundle(*profile);
        c.equal(b.h, cell_int(t, i, "h"), who + " h");
        c.equal(b.core_sum, cell_int(t, i, "core_citations"), who + " S(h)");
        c.near(b.r, cell_real(t, i, "r"), 0.001, who + " r");
        c.near(b.e, cell_real(t, i, "e"), 0.001, who + " e");
        c.near(b.a_paper.value_or(0), cell_real(t, i, "a"), 0.001, who + " a");
        c.near(b.p, cell_real(t, i, "p"), 0.001, who + " p");
        c.near(b.h_nom, cell_real(t, i, "h_nom"), 0.001, who + " h_nom");
        c.near(b.m, cell_real(t, i, "m"), 0.001, who + " m");
        c.near(b.q2, cell_real(t, i, "q2"), 0.001, who + " q2");
    }
}

void criterion_cpp_pages(Checker &c) {
    const auto t = fixtures::table("citations_by_year");
    c.text(report::fixed(cpp(cell_int(t, 0, "citations"), cell_int(t, 0, "publications")), 2), "5.48", "CPP 1990");
    std::int64_t cites = 0, pubs = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        cites += cell_int(t, i, "citations");
        pubs += cell_int(t, i, "publications");
    }
    c.equal(cites, 758573, "citation total");
    c.text(report::fixed(cpp(cites, pubs), 2), "15.16", "overall CPP");

    const auto &corpus = fixtures::reconstructed_corpus();
    const auto corpus_cites = yearly_citations(corpus);
    const auto corpus_pubs = yearly_counts(corpus);
    c.text(report::fixed(cpp(*corpus_cites.at(1990), *corpus_pubs.at(1990)), 2), "5.48", "CPP 1990 from the corpus");
    c.text(report::fixed(cpp(corpus_cites.total(), corpus_pubs.total()), 2), "15.16", "overall CPP from the corpus");

    const auto pages = page_stats(corpus);
    c.equal(pages.by_year.at(0).pages, 689, "1990 pages");
    c.text(report::fixed(pages.by_year.at(0).average, 2), "4.36", "average pages 1990");
    c.equal(pages.overall.pages, 391716, "page total");
    c.text(report::fixed(pages.overall.average, 2), "7.83", "overall average pages");
}

void criterion_zipf(Checker &c) {
    const auto t = fixtures::table("zipf_words");
    const auto rows = zipf_constants(fixtures::zipf_words());
    c.equal(static_cast<std::int64_t>(rows.size()), 50, "word count");
    for (std::size_t i = 0; i < rows.size() && i < t.rows.size(); ++i) {
        c.equal(static_cast<std::int64_t>(rows[i].rank), cell_int(t, i, "rank"), fmt::format("rank of row {}", i + 1));
        c.near(rows[i].c, cell_real(t, i, "c"), 1e-4, fmt::format("c at rank {}", i + 1));
    }
    c.near(rows.front().c, 3.6026, 1e-4, "rank 1 c");
    c.near(rows.back().c, 4.6469, 1e-4, "rank 50 c");

    TermOptions opts;
    opts.top_k = 50;
    const auto terms = term_frequencies(fixtures::reconstructed_corpus(), opts);
    c.check(terms == fixtures::zipf_words(), "corpus keyword counts reproduce the ranked word list");
}

void criterion_price(Checker &c) {
    const auto dist = fixtures::lotka_productivity();
    const auto r = price_sqrt_check(dist, PriceOrdering::by_contributor_rows);
    c.near(r.sqrt_authors, 322.74, 0.005, "sqrt of authors");
    c.equal(r.quota, 323, "author quota");
    c.equal(r.top_credits, 56795, "credits of the top authors");
    c.near(100.0 * r.share, 14.76, 0.01, "share percent");
    c.check(!r.satisfied, "law should not be satisfied");
    const auto standard = price_sqrt_check(dist, PriceOrdering::by_productivity);
    c.equal(standard.selected_authors, 323, "per-author selection size");
    c.check(!standard.satisfied, "per-author selection should not satisfy the law either");
}

std::int64_t h_oracle(const std::vector<std::int64_t> &cites) {
    std::int64_t best = 0;
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(cites.size()); ++k) {
        std::int64_t at_least = 0;
        for (auto v : cites)
            if (v >= k)
                ++at_least;
        if (at_least >= k)
            best = k;
    }
    return best;
}

std::int64_t g_oracle(std::vector<std::int64_t> cites) {
    std::sort(cites.begin(), cites.end(), std::greater<>());
    std::int64_t best = 0;
    for (std::size_t k = 1; k <= cites.size(); ++k) {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < k; ++i)
            sum += cites[i];
        if (sum >= static_cast<std::int64_t>(k * k))
            best = static_cast<std::int64_t>(k);
    }
    return best;
}

void criterion_properties(Checker &c) {
    std::mt19937_64 rng(20240613);
    auto below = [&rng](std::uint64_t n) { return static_cast<std::int64_t>(rng() % n); };

    bool hg_ok = true, core_ok = true;
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::int64_t> cites(static_cast<std::size_t>(below(80)));
        for (auto &v : cites)
            v = below(4) == 0 ? below(400) : below(25);
        const CitationProfile p(cites);
        if (h_index(p) != h_oracle(cites) || g_index(p) != g_oracle(cites))
            hg_ok = false;
        const auto core = core_indices(p);
        const double s = static_cast<double>(core.core_sum);
        if (std::abs(core.e * core.e + static_cast<double>(core.h * core.h) - s) > 1e-9 * std::max(1.0, s) ||
            std::abs(core.r * core.r - s) > 1e-9 * std::max(1.0, s) || g_index(p) < h_index(p))
            core_ok = false;
    }
    c.check(hg_ok, "h and g match the exhaustive scans on 1,000 random profiles");
    c.check(core_ok, "e^2 + h^2 = S(h) and r^2 = S(h) on 1,000 random profiles");

    bool lotka_ok = true;
    for (double n = 1.2; n <= 3.0 + 1e-9; n += 0.15)
        for (double k : {10.0, 1234.5, 1e5}) {
            std::vector<std::pair<double, double>> pts;
            for (int x = 1; x <= 50; ++x)
                pts.emplace_back(x, k * std::pow(x, -n));
            if (std::abs(lotka_fit_points(pts).n - n) > 1e-6)
                lotka_ok = false;
        }
    c.check(lotka_ok, "Lotka fit recovers n to 1e-6 on exact power laws");

    bool mass_ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<YearCount> pts;
        const int start = 1950 + static_cast<int>(below(40));
        const int len = 1 + static_cast<int>(below(40));
        for (int i = 0; i < len; ++i)
            pts.push_back({start + i, below(5000)});
        const YearSeries s(pts);
        for (int w = 1; w <= len + 2; ++w) {
            std::int64_t sum = 0;
            for (const auto &b : block_aggregate(s, w).blocks)
                sum += b.count;
            if (sum != s.total())
                mass_ok = false;
        }
    }
    c.check(mass_ok, "block aggregation conserves the total for every width");

    const auto &records = fixtures::reconstructed_corpus().records();
    const auto text = serialize_export(records);
    const auto parsed = parse_export(text);
    c.check(parsed.report.accepted == records.size() && parsed.report.rejected == 0, "reconstructed corpus parses cleanly");
    c.check(parsed.records == records, "export serialization round-trips the reconstructed corpus");

    BibRecord odd;
    odd.id = "X:1";
    odd.year = 1800;
    odd.authors = {"Müller, K", "O'Brien, S-J"};
    odd.countries = {"Peoples R China", "U Arab Emirates"};
    odd.keywords = {"Coronary-Artery-Disease", "risk"};
    odd.keywords_plus = {"Heart Failure"};
    odd.title = "Ångström-scale 'quoted' title, with commas";
    BibRecord anonymous;
    anonymous.year = 2100;
    anonymous.pub_type = "";
    anonymous.citation_count = 7;
    const std::vector<BibRecord> edge{odd, anonymous};
    c.check(parse_export(serialize_export(edge)).records == edge, "edge-case records round-trip");

    const auto years = fixtures::year_counts();
    c.check(parse_year_table(tables::year_series("t", years).to_csv()) == years, "year table round-trips");
    const auto dist = fixtures::lotka_productivity();
    c.check(parse_distribution(tables::distribution("t", dist).to_csv()) == dist, "distribution table round-trips");
    const auto words = fixtures::zipf_words();
    c.check(parse_word_table(tables::ranked("t", words, "word", "frequency").to_csv()) == words,
            "ranked table round-trips");

    ReportOptions opts;
    opts.deterministic = true;
    opts.projection_targets = {2022};
    const auto slice =
        build_corpus(std::vector<BibRecord>(records.begin(), records.begin() + std::min<long>(12000, records.size())));
    const auto first = build_report(slice, opts).document.to_json();
    const auto second = build_report(slice, opts).document.to_json();
    c.check(first == second, "deterministic reports are byte-identical");
    c.check(first.find("generated_at") == std::string::npos, "deterministic report carries no timestamp");
}

struct Criterion {
    const char *title;
    void (*run)(Checker &);
};

const Criterion kCriteria[kCriterionCount] = {
    {"relative growth rate and doubling time, annual and 5-year blocks", criterion_growth},
    {"straight-line projection of annual output", criterion_projection},
    {"Lotka regression sums, exponent and constant", criterion_lotka},
    {"Kolmogorov-Smirnov statistic and critical value", criterion_ks},
    {"Bradford zones and multipliers", criterion_bradford},
    {"degree of collaboration, CI, CC and MCC", criterion_collaboration},
    {"co-authorship index, complement variant", criterion_cai},
    {"activity index", criterion_activity},
    {"author index consistency", criterion_author_indices},
    {"citations per paper and average pages", criterion_cpp_pages},
    {"Zipf constants", criterion_zipf},
    {"Price square-root law", criterion_price},
    {"property suites", criterion_properties},
};

}  // namespace

CriterionResult run_criterion(int id) {
    if (id < 1 || id > kCriterionCount)
        throw DataError(fmt::format("no acceptance criterion {}", id));
    CriterionResult r;
    r.id = id;
    r.title = kCriteria[id - 1].title;
    Checker c(r);
    const auto start = std::chrono::steady_clock::now();
    try {
        kCriteria[id - 1].run(c);
    } catch (const std::exception &e) {
        c.check(false, fmt::format("exception: {}", e.what()));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id)
        out.push_back(run_criterion(id));
    return out;
}

std::string format_line(const CriterionResult &r) {
    std::string line = fmt::format("{} AC{:02} {} ({} checks, {:.3f} s)", r.passed ? "PASS" : "FAIL", r.id, r.title,
                                   r.checks, r.seconds);
    for (const auto &f : r.failures)
        line += "\n    " + f;
    return line;
}

}  // namespace scimet::verify
