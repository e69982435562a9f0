#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "scimet/error.hpp"
#include "scimet/fixtures.hpp"
#include "scimet/growth.hpp"
#include "scimet/report.hpp"

using namespace scimet;

namespace {

YearSeries series(int first, std::vector<std::int64_t> counts) {
    std::vector<YearCount> pts;
    for (std::size_t i = 0; i < counts.size(); ++i)
        pts.push_back({first + static_cast<int>(i), counts[i]});
    return YearSeries(pts);
}

}  // namespace

TEST_SUITE("growth") {
    TEST_CASE("exponential rates") {
        const auto r = exponential_rates(series(2000, {100, 272}));
        CHECK_FALSE(r.rates[0].has_value());
        CHECK(*r.rates[1] == doctest::Approx(std::log(2.72)).epsilon(1e-12));
        for (const auto &v : exponential_rates(series(2000, {5, 5, 5})).rates)
            if (v)
                CHECK(*v == 0.0);
        const auto table1 = exponential_rates(fixtures::year_counts());
        CHECK(*table1.rates[1] == doctest::Approx(std::log(266.0 / 158.0)));
        CHECK(report::fixed(*table1.rates[1], 4) == "0.5209");
        CHECK_THROWS_AS(exponential_rates(series(2000, {3, 0})), DataError);

        std::vector<std::int64_t> geometric;
        for (int i = 0; i < 12; ++i)
            geometric.push_back(static_cast<std::int64_t>(std::llround(100.0 * std::pow(1.5, i))));
        CHECK(exponential_rates(series(1990, geometric)).fitted_rate == doctest::Approx(std::log(1.5)).epsilon(1e-3));
    }

    TEST_CASE("relative growth under the paper convention") {
        const auto rows = rgr_table(fixtures::year_counts(), Convention::paper);
        REQUIRE(rows.size() == 30);
        CHECK(rows[0].rgr == 0.0);
        CHECK_FALSE(rows[0].dt.has_value());
        CHECK(rows[1].w1 == doctest::Approx(std::log(266.0)));
        CHECK(rows[1].w2 == doctest::Approx(std::log(424.0)));
        CHECK(report::fixed(rows[1].rgr, 4) == "0.4662");
        CHECK(report::fixed(*rows[1].dt, 4) == "1.4864");
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].cumulative == rows[i - 1].cumulative + rows[i].count);
            CHECK(rows[i].rgr == doctest::Approx(rows[i].w2 - rows[i].w1));
        }
    }

    TEST_CASE("relative growth under the standard convention") {
        const auto rows = rgr_table(series(2000, {10, 10, 20}), Convention::standard);
        CHECK(rows[0].rgr == 0.0);
        CHECK(rows[1].rgr == doctest::Approx(std::log(20.0 / 10.0)));
        CHECK(rows[2].rgr == doctest::Approx(std::log(40.0 / 20.0)));
        CHECK(*rows[2].dt == doctest::Approx(0.693 / std::log(2.0)));
    }

    TEST_CASE("zero rate has no doubling time") {
        const auto rows = rgr_table(series(2000, {5, 0, 5}), Convention::standard);
        CHECK(rows[1].rgr == 0.0);
        CHECK_FALSE(rows[1].dt.has_value());
        CHECK_THROWS_AS(rgr_table(series(2000, {5, 0, 5}), Convention::paper), DataError);
        CHECK_THROWS_AS(rgr_table(series(2000, {0, 5}), Convention::standard), DataError);
    }

    TEST_CASE("block aggregation") {
        const auto b = block_aggregate(fixtures::year_counts(), 5);
        std::vector<std::int64_t> counts;
        for (const auto &x : b.blocks)
            counts.push_back(x.count);
        CHECK(counts == std::vector<std::int64_t>{1036, 1439, 2545, 6297, 14297, 24422});
        CHECK(b.blocks[1].label() == "1995-1999");

        const auto rows = rgr_table(b.series(), Convention::paper);
        CHECK(rows[1].w1 == doctest::Approx(std::log(1439.0)));
        CHECK(report::fixed(rows[1].w2, 4) == "7.8140");
        CHECK(report::fixed(rows[1].rgr, 4) == "0.5423");
        CHECK(report::fixed(*rows[1].dt, 4) == "1.2779");

        const auto whole = block_aggregate(fixtures::year_counts(), 30);
        REQUIRE(whole.blocks.size() == 1);
        CHECK(whole.blocks[0].count == 50036);

        const auto tens = block_aggregate(fixtures::year_counts(), 10);
        CHECK(tens.blocks.size() == 3);
        std::int64_t total = 0;
        double share = 0.0;
        for (const auto &x : tens.blocks) {
            total += x.count;
            share += x.share;
        }
        CHECK(total == 50036);
        CHECK(share == doctest::Approx(100.0));

        const auto ragged = block_aggregate(series(2000, {1, 2, 3, 4, 5, 6, 7}), 3);
        REQUIRE(ragged.blocks.size() == 3);
        CHECK(ragged.blocks[2].label() == "2006");
        CHECK(ragged.blocks[2].count == 7);
        CHECK_THROWS_AS(block_aggregate(series(2000, {1}), 0), DataError);
    }

    TEST_CASE("block mass is conserved") {
        testing::Draw draw(17);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(draw.between(1, 50)));
            for (auto &v : c)
                v = draw.below(1000);
            const auto s = series(1900, c);
            const int w = static_cast<int>(draw.between(1, 60));
            std::int64_t total = 0;
            for (const auto &b : block_aggregate(s, w).blocks)
                total += b.count;
            CHECK(total == s.total());
        }
    }

    TEST_CASE("linear projection") {
        const auto p = linear_projection(fixtures::year_counts(), {2022, 2037});
        CHECK(p.sum_xy == doctest::Approx(434604));
        CHECK(p.sum_x2 == doctest::Approx(2255));
        CHECK(p.a == doctest::Approx(1667.86667).epsilon(1e-8));
        CHECK(p.b == doctest::Approx(192.729047).epsilon(1e-8));
        CHECK(report::fixed(p.projected[0].second, 2) == "5136.99");
        CHECK(report::fixed(p.projected[1].second, 2) == "8027.93");

        const auto flat = linear_projection(series(2000, {7, 7, 7}), {2010});
        CHECK(flat.origin_year == 2001);
        CHECK(flat.b == 0.0);
        CHECK(flat.at(1950) == doctest::Approx(flat.a));
        CHECK(flat.projected[0].second == doctest::Approx(7.0));
        CHECK_THROWS_AS(linear_projection(YearSeries{}, {}), DataError);
    }

    TEST_CASE("projection residuals are orthogonal for odd lengths") {
        testing::Draw draw(23);
        for (int trial = 0; trial < 50; ++trial) {
            const auto n = 2 * draw.between(1, 20) + 1;
            std::vector<std::int64_t> c(static_cast<std::size_t>(n));
            for (auto &v : c)
                v = draw.below(5000);
            const auto s = series(1980, c);
            const auto p = linear_projection(s, {});
            double r_sum = 0.0, rx_sum = 0.0;
            for (const auto &pt : s.points()) {
                const double r = static_cast<double>(pt.count) - p.at(pt.year);
                r_sum += r;
                rx_sum += r * (pt.year - p.origin_year);
            }
            CHECK(std::abs(r_sum) < 1e-6);
            CHECK(std::abs(rx_sum) < 1e-5);
        }
    }

    TEST_CASE("growth ratio matrix") {
        const auto m = growth_ratio_matrix({{"China", 32770}, {"Brazil", 6218}});
        CHECK(report::fixed(m.cells[0][1], 2) == "5.27");
        CHECK(m.cells[1][1] == 1.0);
        const auto same = growth_ratio_matrix({{"A", 9}, {"B", 9}, {"C", 9}});
        for (const auto &row : same.cells)
            for (double v : row)
                CHECK(v == 1.0);
        const auto three = growth_ratio_matrix({{"A", 3}, {"B", 7}, {"C", 11}});
        const double totals[] = {3, 7, 11};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(three.cells[i][j] == doctest::Approx(totals[i] / totals[j]));

        const auto printed = fixtures::table("growth_ratio_printed");
        CHECK(printed.rows[0][printed.column("Brazil")] == report::fixed(m.cells[1][0], 2));
        CHECK_THROWS_AS(growth_ratio_matrix({{"A", 0}}), DataError);
    }

    TEST_CASE("annual growth ratio") {
        const auto cites = fixtures::citation_series();
        const auto g = annual_growth_ratio(cites);
        CHECK(report::fixed(*g[0], 2) == "3.02");
        CHECK_FALSE(g.back().has_value());
        for (const auto &v : annual_growth_ratio(series(2000, {4, 4, 4})))
            if (v)
                CHECK(*v == 1.0);
        testing::Draw draw(29);
        std::vector<std::int64_t> c(20);
        for (auto &v : c)
            v = draw.between(1, 100);
        const auto r = annual_growth_ratio(series(2000, c));
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            CHECK(*r[i] == doctest::Approx(static_cast<double>(c[i + 1]) / static_cast<double>(c[i])));
    }

    TEST_CASE("convention names") {
        CHECK(parse_convention("paper") == Convention::paper);
        CHECK(parse_convention("standard") == Convention::standard);
        CHECK_THROWS_AS(parse_convention("other"), DataError);
    }
}
