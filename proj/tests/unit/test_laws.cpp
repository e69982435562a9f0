#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "helpers.hpp"
#include "scimet/error.hpp"
#include "scimet/fixtures.hpp"
#include "scimet/laws.hpp"
#include "scimet/report.hpp"

using namespace scimet;

namespace {

double zeta(double n, std::int64_t terms) {
    double s = 0.0;
    for (std::int64_t x = terms; x >= 1; --x)
        s += std::pow(static_cast<double>(x), -n);
    return s + std::pow(static_cast<double>(terms) + 0.5, 1.0 - n) / (n - 1.0);
}

// Normal-equation slope of log10 y on log10 x.
double ols_slope(const std::vector<std::pair<double, double>> &pts) {
    double sx = 0, sy = 0, sxy = 0, sxx = 0;
    for (const auto &[x, y] : pts) {
        const double lx = std::log10(x), ly = std::log10(y);
        sx += lx;
        sy += ly;
        sxy += lx * ly;
        sxx += lx * lx;
    }
    const double n = static_cast<double>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

RankedList journals(const std::vector<std::int64_t> &counts) {
    std::vector<RankedEntry> e;
    for (std::size_t i = 0; i < counts.size(); ++i)
        e.push_back({"J" + std::to_string(1000 + i), counts[i]});
    return RankedList(e);
}

}  // namespace

TEST_SUITE("laws") {
    TEST_CASE("Lotka regression on the productivity fixture") {
        const auto fit = lotka_fit(fixtures::lotka_productivity());
        CHECK(fit.pairs == 244);
        CHECK(fit.sum_x == doctest::Approx(492.5385).epsilon(1e-6));
        CHECK(fit.sum_y == doctest::Approx(180.7916).epsilon(1e-6));
        CHECK(fit.sum_xy == doctest::Approx(263.6368).epsilon(1e-6));
        CHECK(fit.sum_x2 == doctest::Approx(1050.6941).epsilon(1e-6));
        CHECK(report::fixed(fit.n, 2) == "1.79");
        CHECK(fit.n == doctest::Approx(lotka_exponent(244, fit.sum_x, fit.sum_y, fit.sum_xy, fit.sum_x2)));
        const auto printed = fixtures::table("lotka_sums_printed");
        CHECK(report::fixed(fit.sum_x, 4) == printed.rows[0][printed.column("sum_x")]);
    }

    TEST_CASE("Lotka exponent recovery") {
        std::vector<std::pair<double, double>> pts;
        for (int x = 1; x <= 30; ++x)
            pts.emplace_back(x, 5000.0 / (x * x));
        CHECK(std::abs(lotka_fit_points(pts).n - 2.0) < 1e-6);

        testing::Draw draw(53);
        for (auto &[x, y] : pts)
            y *= 1.0 + 0.2 * (draw.unit() - 0.5);
        CHECK(std::abs(lotka_fit_points(pts).n + ols_slope(pts)) < 1e-9);

        for (double n = 1.2; n <= 3.0; n += 0.2) {
            std::vector<std::pair<double, double>> exact;
            for (int x = 1; x <= 50; ++x)
                exact.emplace_back(x, 777.0 * std::pow(x, -n));
            CHECK(std::abs(lotka_fit_points(exact).n - n) < 1e-6);
        }
        CHECK_THROWS_AS(lotka_fit(ProductivityDistribution({{1, 10}})), DataError);
        CHECK_THROWS_AS(lotka_fit(ProductivityDistribution{}), DataError);
    }

    TEST_CASE("Lotka constant") {
        CHECK(lotka_constant(2.0, 1000) == doctest::Approx(0.6079).epsilon(1e-4));
        CHECK(std::abs(lotka_constant(1.79) - 0.5270) < 0.002);
        CHECK(std::abs(lotka_constant(1.79) - 1.0 / zeta(1.79, 10'000'000)) < 0.002);
        CHECK(std::abs(lotka_constant(3.0) - 1.0 / zeta(3.0, 1'000'000)) < 0.002);
        CHECK(std::abs(lotka_constant(3.0) - 0.8319) < 0.001);
        CHECK(std::isnan(lotka_fit_points({{1, 10}, {2, 20}}).c));
    }

    TEST_CASE("K-S in paper mode reproduces the printed rows") {
        const auto dist = fixtures::lotka_productivity();
        KsOptions o;
        o.mode = KsMode::paper;
        const auto ks = ks_test(dist, lotka_fit(dist), o);
        const auto printed = fixtures::table("ks_printed");
        for (std::size_t i = 0; i < printed.rows.size(); ++i) {
            const auto x = parse_integer(printed.rows[i][0], "x");
            const auto it = std::find_if(ks.rows.begin(), ks.rows.end(), [x](const KsRow &r) { return r.x == x; });
            REQUIRE(it != ks.rows.end());
            INFO("x = " << x);
            CHECK(report::fixed(it->observed, 5) == printed.rows[i][printed.column("observed")]);
            if (x == 1)
                CHECK(report::fixed(it->expected, 5) == printed.rows[i][printed.column("expected")]);
        }
        CHECK(report::fixed(ks.d_max, 5) == "0.05115");
        CHECK(ks.d_max_x == 1);
        CHECK(report::fixed(ks.critical_value, 4) == "0.0055");
        CHECK(ks.critical_value == doctest::Approx(1.79 / std::sqrt(104160.0)));
        CHECK_FALSE(ks.fits);
        CHECK(ks.paper_verdict == true);
    }

    TEST_CASE("K-S in standard mode") {
        const ProductivityDistribution one({{1, 500}});
        LotkaFit fit;
        fit.n = 2.0;
        fit.c = lotka_constant(2.0);
        const auto ks = ks_test(one, fit);
        CHECK(ks.rows[0].observed_cumulative == 1.0);
        CHECK(ks.rows[0].expected_cumulative == doctest::Approx(fit.c));
        CHECK(ks.d_max == doctest::Approx(1.0 - fit.c));
        CHECK(ks.critical_value == doctest::Approx(1.63 / std::sqrt(500.0)));
        CHECK_FALSE(ks.paper_verdict.has_value());

        std::vector<ProductivityPair> pairs;
        for (int x = 1; x <= 10; ++x)
            pairs.push_back({x, std::llround(300.0 * fit.c / (x * x))});
        const auto good = ks_test(ProductivityDistribution(pairs), fit);
        CHECK(good.d_max < good.critical_value);
        CHECK(good.fits);
        const auto bad = ks_test(ProductivityDistribution({{1, 50}, {2, 200}}), fit);
        CHECK_FALSE(bad.fits);
    }

    TEST_CASE("Bradford fixture zones") {
        const auto z = bradford_zones(fixtures::bradford_journals(), 3);
        CHECK(z.zones[0].journals == 41);
        CHECK(z.zones[1].journals == 202);
        CHECK(z.zones[2].journals == 2519);
        CHECK(z.zones[0].articles == 13259);
        CHECK(z.zones[0].articles + z.zones[1].articles + z.zones[2].articles == 39873);
        CHECK(report::fixed(z.multipliers[0], 2) == "4.93");
        CHECK(report::fixed(z.multipliers[1], 2) == "12.47");
        CHECK(report::fixed(z.mean_multiplier, 1) == "8.7");
        CHECK(z.zones[1].first_rank == 42);
        CHECK(z.zones[2].last_rank == 2762);
    }

    TEST_CASE("Bradford symmetry and partition") {
        const auto equal = bradford_zones(journals({5, 5, 5}), 3);
        for (const auto &zone : equal.zones)
            CHECK(zone.journals == 1);
        for (double m : equal.multipliers)
            CHECK(m == 1.0);

        testing::Draw draw(59);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::int64_t> counts(static_cast<std::size_t>(draw.between(3, 120)));
            for (auto &c : counts)
                c = 1 + draw.below(draw.below(4) == 0 ? 200 : 10);
            const auto list = journals(counts);
            for (auto policy : {BoundaryPolicy::tie_group_floor, BoundaryPolicy::tie_group_nearest,
                                BoundaryPolicy::tie_group_ceiling}) {
                const auto z = bradford_zones(list, 3, policy);
                std::int64_t j = 0, a = 0;
                for (const auto &zone : z.zones) {
                    CHECK(zone.journals >= 1);
                    j += zone.journals;
                    a += zone.articles;
                }
                CHECK(j == static_cast<std::int64_t>(list.size()));
                CHECK(a == list.total());
            }
        }
    }

    TEST_CASE("nearest policy matches an exhaustive boundary search") {
        testing::Draw draw(61);
        int compared = 0;
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<std::int64_t> counts(static_cast<std::size_t>(draw.between(10, 150)));
            for (auto &c : counts)
                c = 1 + draw.below(draw.below(5) == 0 ? 300 : 12);
            const auto list = journals(counts);
            const auto n = list.size();
            std::vector<std::int64_t> cum(n + 1, 0);
            for (std::size_t i = 0; i < n; ++i)
                cum[i + 1] = cum[i] + list[i].frequency;
            std::vector<std::size_t> boundaries;
            for (std::size_t i = 1; i < n; ++i)
                if (list[i].frequency != list[i - 1].frequency)
                    boundaries.push_back(i);
            std::vector<std::size_t> cuts;
            for (int k = 1; k <= 2; ++k) {
                const double target = static_cast<double>(k) * static_cast<double>(cum[n]) / 3.0;
                std::size_t best = 0;
                double best_diff = 1e300;
                for (auto b : boundaries) {
                    const double d = std::abs(static_cast<double>(cum[b]) - target);
                    if (d < best_diff) {
                        best_diff = d;
                        best = b;
                    }
                }
                cuts.push_back(best);
            }
            if (cuts[0] == 0 || cuts[1] <= cuts[0])
                continue;
            ++compared;
            const auto z = bradford_zones(list, 3, BoundaryPolicy::tie_group_nearest);
            CHECK(z.zones[0].journals == static_cast<std::int64_t>(cuts[0]));
            CHECK(z.zones[1].journals == static_cast<std::int64_t>(cuts[1] - cuts[0]));
            const double third = static_cast<double>(cum[n]) / 3.0;
            std::int64_t largest_group = 0;
            for (const auto &e : list.entries())
                largest_group = std::max(largest_group, e.frequency * static_cast<std::int64_t>(std::count_if(
                    list.entries().begin(), list.entries().end(),
                    [&e](const RankedEntry &o) { return o.frequency == e.frequency; })));
            CHECK(std::abs(static_cast<double>(z.zones[0].articles) - third) <= static_cast<double>(largest_group));
        }
        CHECK(compared > 100);
    }

    TEST_CASE("Bradford errors and helpers") {
        CHECK_THROWS_AS(bradford_zones(journals({5, 4}), 3), DataError);
        CHECK_THROWS_AS(bradford_zones(journals({5, 4, 3}), 0), DataError);
        const auto expanded = expand_journal_groups({{1, 9}, {2, 4}}, {"Top"});
        CHECK(expanded.size() == 3);
        CHECK(expanded[0].label == "Top");
        CHECK(expanded.total() == 17);
        CHECK(parse_boundary_policy("nearest") == BoundaryPolicy::tie_group_nearest);
        CHECK(parse_boundary_policy("tie_group_floor") == BoundaryPolicy::tie_group_floor);
        CHECK_THROWS_AS(parse_boundary_policy("middle"), DataError);
    }

    TEST_CASE("Zipf constants") {
        const auto rows = zipf_constants(fixtures::zipf_words());
        CHECK(rows[0].word == "Risk");
        CHECK(report::fixed(rows[0].c, 4) == "3.6026");
        CHECK(rows[1].word == "Expression");
        CHECK(rows[1].c == doctest::Approx(std::log10(3877.0) + std::log10(2.0)));
        CHECK(report::fixed(rows[1].c, 4) == "3.8895");
        const auto single = zipf_constants(RankedList({{"only", 250}}));
        CHECK(single[0].c == doctest::Approx(std::log10(250.0)));
    }

    TEST_CASE("Price square-root law") {
        const auto dist = fixtures::lotka_productivity();
        const auto rows = price_sqrt_check(dist, PriceOrdering::by_contributor_rows);
        CHECK(rows.quota == 323);
        CHECK(rows.top_credits == 56795);
        CHECK(report::fixed(100.0 * rows.share, 2) == "14.76");
        CHECK_FALSE(rows.satisfied);

        const auto solo = price_sqrt_check(ProductivityDistribution({{40, 1}}));
        CHECK(solo.share == 1.0);
        CHECK(solo.satisfied);

        testing::Draw draw(67);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<std::int64_t> authors(10);
            std::map<std::int64_t, std::int64_t> tally;
            for (auto &a : authors) {
                a = draw.between(1, 30);
                ++tally[a];
            }
            std::vector<ProductivityPair> pairs;
            for (const auto &[x, y] : tally)
                pairs.push_back({x, y});
            std::sort(authors.rbegin(), authors.rend());
            const auto quota = static_cast<std::size_t>(std::ceil(std::sqrt(10.0)));
            std::int64_t top = 0, total = 0;
            for (std::size_t i = 0; i < authors.size(); ++i) {
                total += authors[i];
                if (i < quota)
                    top += authors[i];
            }
            const auto r = price_sqrt_check(ProductivityDistribution(pairs));
            CHECK(r.top_credits == top);
            CHECK(r.total_credits == total);
            CHECK(r.satisfied == (2 * top >= total));
        }
    }

    TEST_CASE("Pareto check") {
        const auto uniform = pareto_check(ProductivityDistribution({{3, 10}}));
        CHECK(uniform.credit_share == doctest::Approx(0.2));
        const auto skewed = pareto_check(ProductivityDistribution({{1, 80}, {100, 20}}));
        CHECK(skewed.top_author_count == 20);
        CHECK(skewed.credit_share == doctest::Approx(2000.0 / 2080.0));
        const auto fixture = pareto_check(fixtures::lotka_productivity());
        CHECK(fixture.top_author_count == 20832);
        CHECK(fixture.credit_share == doctest::Approx(0.707655).epsilon(1e-5));
    }
}
