#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "scimet/collaboration.hpp"
#include "scimet/error.hpp"
#include "scimet/fixtures.hpp"
#include "scimet/report.hpp"

using namespace scimet;
using testing::record;

namespace {

AuthorshipDistribution papers_with(std::initializer_list<std::int64_t> authors) {
    AuthorshipDistribution d;
    for (auto a : authors)
        d.add_paper(a);
    return d;
}

}  // namespace

TEST_SUITE("collaboration") {
    TEST_CASE("degree of collaboration") {
        CHECK(report::fixed(degree_of_collaboration(AuthorshipDistribution::from_buckets({5, 153})), 2) == "0.97");
        CHECK(degree_of_collaboration(papers_with({1, 1, 1})) == 0.0);
        CHECK(report::fixed(degree_of_collaboration(AuthorshipDistribution::from_buckets({1044, 48992})), 2) ==
              "0.98");
        CHECK(degree_of_collaboration(papers_with({0, 1, 2})) == doctest::Approx(0.5));
    }

    TEST_CASE("collaborative index") {
        CHECK(report::fixed(collaborative_index(158, 600), 2) == "3.80");
        CHECK(report::fixed(collaborative_index(1, 1), 2) == "1.00");
        CHECK(report::fixed(collaborative_index(5701, 62630), 2) == "10.99");
        CHECK_THROWS_AS(collaborative_index(0, 0), DataError);
    }

    TEST_CASE("collaborative coefficient") {
        const auto blocks = fixtures::table("block_authorship");
        std::vector<std::int64_t> b;
        for (const auto &row : blocks.rows)
            b.push_back(parse_integer(row[blocks.column("1990-1994")], "papers"));
        const auto dist = AuthorshipDistribution::from_buckets(b);
        CHECK(dist.total_papers() == 1036);
        const double cc = collaborative_coefficient(dist, OverflowPolicy::bucket_as_j);
        CHECK(report::fixed(cc, 2) == "0.68");
        CHECK(cc == doctest::Approx(0.6836).epsilon(1e-4));
        CHECK_THROWS_AS(collaborative_coefficient(dist, OverflowPolicy::exact), DataError);

        CHECK(collaborative_coefficient(papers_with({1, 1})) == 0.0);
        CHECK(collaborative_coefficient(papers_with({2, 2, 2})) == doctest::Approx(0.5));

        const auto big = papers_with({1, 12, 20});
        CHECK(collaborative_coefficient(big, OverflowPolicy::exact) ==
              doctest::Approx(1.0 - (1.0 + 1.0 / 12 + 1.0 / 20) / 3));
        CHECK(collaborative_coefficient(big, OverflowPolicy::bucket_as_j) ==
              doctest::Approx(1.0 - (1.0 + 0.1 + 0.1) / 3));
    }

    TEST_CASE("modified collaborative coefficient") {
        CHECK(modified_cc(0.62786, 158) == doctest::Approx(0.63186).epsilon(1e-5));
        CHECK(modified_cc(0.0, 10) == 0.0);
        CHECK(report::fixed(modified_cc(0.81674, 4822), 5) == "0.81691");
        CHECK_THROWS_AS(modified_cc(0.5, 1), DataError);
    }

    TEST_CASE("co-authorship index") {
        const auto t = fixtures::table("coauthorship_index");
        const std::vector<std::string> classes{"single", "two", "three", "four", "five_plus"};
        std::vector<std::int64_t> totals(5, 0), row;
        for (const auto &r : t.rows)
            for (std::size_t j = 0; j < 5; ++j)
                totals[j] += parse_integer(r[t.column(classes[j])], "n");
        for (const auto &k : classes)
            row.push_back(parse_integer(t.rows[0][t.column(k)], "n"));
        CHECK(totals[0] == 1044);
        CHECK(50036 - totals[4] == 13580);
        const auto comp = co_authorship_index(row, totals, CaiVariant::paper_complement);
        CHECK(comp[0] == doctest::Approx(98.90).epsilon(1e-4));
        CHECK(comp[4] == doctest::Approx(254.19).epsilon(1e-4));
        CHECK(comp[0] == doctest::Approx(((158.0 - 5) / 158) / ((50036.0 - 1044) / 50036) * 100));
        const auto standard = co_authorship_index(row, totals, CaiVariant::standard);
        CHECK(report::fixed(standard[0], 2) == "151.67");
        CHECK(standard[0] == doctest::Approx((5.0 / 158) / (1044.0 / 50036) * 100));
        CHECK_THROWS_AS(co_authorship_index({1, 2}, {1, 2, 3}, CaiVariant::standard), DataError);
    }

    TEST_CASE("author classes") {
        const auto d = papers_with({1, 2, 2, 3, 4, 5, 9, 14});
        CHECK(class_counts(d, kDefaultAuthorClasses) == std::vector<std::int64_t>{1, 2, 1, 1, 3});
        CHECK(class_labels(kDefaultAuthorClasses) == std::vector<std::string>{"1", "2", "3", "4", "5+"});
        CHECK(class_counts(d, {1, 3}) == std::vector<std::int64_t>{3, 5});
    }

    TEST_CASE("activity index") {
        const auto global = fixtures::global_series();
        const auto brics = activity_index(fixtures::country_series("total"), global);
        CHECK(report::fixed(brics.values[0], 2) == "71.41");
        const auto brazil = activity_index(fixtures::country_series("Brazil"), global);
        CHECK(report::fixed(brazil.values[0], 2) == "112.75");
        for (double v : activity_index(global, global).values)
            CHECK(v == doctest::Approx(100.0));
        const auto printed = fixtures::table("activity_index");
        for (std::size_t i = 0; i < printed.rows.size(); ++i)
            CHECK(report::fixed(brics.values[i], 2) == printed.rows[i][printed.column("BRICS_ai")]);
        CHECK_THROWS_AS(activity_index(YearSeries({{1990, 1}}), YearSeries({{1991, 1}})), DataError);
    }

    TEST_CASE("partner shares on the printed fixture") {
        const auto t = fixtures::table("brazil_partners");
        CHECK(t.rows[0][0] == "USA");
        CHECK(parse_integer(t.rows[0][t.column("papers")], "n") == 2837);
        CHECK(report::fixed(100.0 * 2837 / 6218, 2) == "45.63");
        CHECK(report::fixed(2837 / 30.0, 2) == "94.57");
    }

    TEST_CASE("partner shares against a pairwise scan") {
        const auto corpus = build_corpus({record(2000, {"A"}, {"Brazil", "USA"}), record(2001, {"A"}, {"Brazil"}),
                                          record(2002, {"A"}, {"Brazil", "USA", "China"}),
                                          record(2003, {"A"}, {"China", "USA"})});
        const auto s = collaboration_shares(corpus, "Brazil", 10, 4);
        CHECK(s.home_total == 3);
        CHECK(s.solo == 1);
        REQUIRE(s.partners.size() == 3);
        CHECK(s.partners[0].partner == "USA");
        CHECK(s.partners[0].papers == 2);
        CHECK(s.partners[0].share == doctest::Approx(200.0 / 3));
        CHECK(s.partners[0].average_per_year == doctest::Approx(0.5));
        CHECK(s.partners[1].partner == "China");
        CHECK(s.partners[1].papers == 1);
        CHECK(s.partners[2].partner == kOtherPartnersLabel);

        const auto solo = collaboration_shares(build_corpus({record(2000, {"A"}, {"India"})}), "India");
        CHECK(solo.partners.empty());
        CHECK(solo.solo == solo.home_total);
        CHECK_THROWS_AS(collaboration_shares(corpus, "Peru"), DataError);
    }

    TEST_CASE("inter-collaboration matrix") {
        testing::Draw draw(31);
        const std::vector<std::string> members{"Brazil", "Russia", "India", "China"};
        std::vector<BibRecord> recs;
        for (int i = 0; i < 400; ++i) {
            std::vector<std::string> cs;
            for (const auto &m : members)
                if (draw.below(3) == 0)
                    cs.push_back(m);
            if (draw.below(4) == 0)
                cs.push_back("USA");
            recs.push_back(record(2000, {"A"}, cs));
        }
        const auto m = inter_collaboration_matrix(build_corpus(recs), members);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j) {
                std::int64_t expected = 0;
                for (const auto &r : recs) {
                    const bool has_i = r.countries.count(members[i]) > 0;
                    if (i == j) {
                        std::size_t present = 0;
                        for (const auto &x : members)
                            present += r.countries.count(x);
                        expected += has_i && present == 1 ? 1 : 0;
                    } else {
                        expected += has_i && r.countries.count(members[j]) ? 1 : 0;
                    }
                }
                CHECK(m.cells[i][j] == expected);
                CHECK(m.cells[i][j] == m.cells[j][i]);
            }
        const auto single = inter_collaboration_matrix(build_corpus({record(2000, {"A"}, {"India"})}), {"India"});
        CHECK(single.cells == std::vector<std::vector<std::int64_t>>{{1}});
    }

    TEST_CASE("collaboration by year and CAI benchmark on the reconstructed corpus") {
        const auto &corpus = fixtures::reconstructed_corpus();
        const auto rows = collaboration_by_year(corpus);
        REQUIRE(rows.size() == 30);
        CHECK(rows[0].label == "1990");
        CHECK(rows[0].papers == 158);
        CHECK(rows[0].authors == 600);
        CHECK(report::fixed(rows[0].ci, 2) == "3.80");
        CHECK(report::fixed(rows[0].dc, 2) == "0.97");
        REQUIRE(rows[0].mcc.has_value());
        CHECK(*rows[0].mcc == doctest::Approx(rows[0].cc * 158 / 157));
    }
}
