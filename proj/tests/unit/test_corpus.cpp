#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "scimet/corpus.hpp"
#include "scimet/error.hpp"
#include "scimet/fixtures.hpp"
#include "scimet/report.hpp"

using namespace scimet;
using testing::record;

TEST_SUITE("corpus") {
    TEST_CASE("construction") {
        const auto empty = build_corpus({});
        CHECK(empty.total() == 0);
        CHECK_FALSE(empty.year_range().has_value());
        CHECK(yearly_counts(empty).empty());

        const auto c = build_corpus({record(1995), record(1990), record(1993)});
        CHECK(c.total() == 3);
        CHECK(c.year_range() == std::pair{1990, 1995});
        const auto copy = c;
        CHECK(&copy.records() == &c.records());
    }

    TEST_CASE("yearly counts rebuild a constructed series") {
        const auto target = fixtures::year_counts();
        std::vector<BibRecord> recs;
        for (const auto &p : target.points())
            for (std::int64_t i = 0; i < p.count; ++i)
                recs.push_back(record(p.year));
        CHECK(yearly_counts(build_corpus(std::move(recs))) == target);
    }

    TEST_CASE("zero-filled gaps") {
        const auto s = yearly_counts(build_corpus({record(2000), record(2003)}));
        CHECK(s.points() == std::vector<YearCount>{{2000, 1}, {2001, 0}, {2002, 0}, {2003, 1}});
    }

    TEST_CASE("country filter matches a linear scan") {
        testing::Draw draw(11);
        const std::vector<std::string> pool{"China", "Brazil", "India"};
        std::vector<BibRecord> recs;
        for (int i = 0; i < 500; ++i) {
            std::vector<std::string> cs;
            for (const auto &p : pool)
                if (draw.below(3) == 0)
                    cs.push_back(p);
            recs.push_back(record(static_cast<int>(draw.between(1990, 1999)), {"A"}, cs, draw.below(10)));
        }
        const auto corpus = build_corpus(recs);
        RecordFilter f;
        f.country = "China";
        std::map<int, std::int64_t> scan, cites;
        for (const auto &r : recs)
            if (r.countries.count("China")) {
                ++scan[r.year];
                cites[r.year] += r.citation_count;
            }
        const auto china = yearly_counts(corpus, f);
        const auto china_cites = yearly_citations(corpus, f);
        for (const auto &p : china.points()) {
            CHECK(p.count == scan[p.year]);
            CHECK(*china_cites.at(p.year) == cites[p.year]);
        }
    }

    TEST_CASE("filter clauses") {
        const auto f = parse_filter({"country=Brazil", "doc_type=Article"});
        CHECK(f.country == "Brazil");
        CHECK(f.doc_type == "Article");
        CHECK_THROWS_AS(parse_filter({"colour=red"}), DataError);
        CHECK_THROWS_AS(parse_filter({"country"}), DataError);
    }

    TEST_CASE("member country fixture") {
        const auto y = 1990;
        CHECK(*fixtures::country_series("total").at(y) == 158);
        CHECK(*fixtures::country_series("China").at(y) == 75);
        CHECK(*fixtures::country_series("Brazil").at(y) == 31);
        CHECK(*fixtures::country_series("Russia").at(y) == 14);
        CHECK(*fixtures::country_series("India").at(y) == 27);
        CHECK(*fixtures::country_series("South Africa").at(y) == 11);
    }

    TEST_CASE("field distributions") {
        const auto types = fixtures::document_types();
        CHECK(types[0].label == "Article");
        CHECK(types[0].frequency == 39873);
        CHECK(report::fixed(100.0 * 39873 / static_cast<double>(types.total()), 3) == "79.689");
        const auto langs = fixtures::languages();
        CHECK(langs[0].label == "English");
        CHECK(report::fixed(100.0 * langs[0].frequency / static_cast<double>(langs.total()), 3) == "93.253");

        const auto &corpus = fixtures::reconstructed_corpus();
        CHECK(field_distribution(corpus, Field::doc_type) == types);
        CHECK(field_distribution(corpus, Field::language) == langs);

        const auto one = field_distribution(build_corpus({record(2000)}), Field::journal);
        CHECK(one.entries() == std::vector<RankedEntry>{{"X", 1}});
        auto blank = record(2000);
        blank.language.clear();
        const auto unspecified = field_distribution(build_corpus({blank}), Field::language);
        CHECK(unspecified[0].label == kUnspecifiedLabel);
        CHECK(parse_field("keyword") == Field::keyword);
        CHECK_THROWS_AS(parse_field("colour"), DataError);
    }

    TEST_CASE("authorship distribution") {
        const auto pattern = fixtures::authorship_pattern();
        CHECK(pattern.total_papers() == 50036);
        CHECK(pattern.bucket(1) == 1044);
        CHECK(pattern.bucket(6) == 6642);
        CHECK(report::fixed(100.0 * 1044 / 50036.0, 2) == "2.09");
        CHECK(report::fixed(100.0 * 6642 / 50036.0, 2) == "13.27");

        const auto single = authorship_distribution(build_corpus({record(2000)}));
        CHECK(single.counts() == std::map<std::int64_t, std::int64_t>{{1, 1}});

        const auto &corpus = fixtures::reconstructed_corpus();
        CHECK(authorship_distribution(corpus).single_authored() == pattern.bucket(1));
        CHECK(authorship_distribution(corpus).total_papers() == pattern.total_papers());
        const auto by_year = authorship_by_year(corpus);
        const auto counts = yearly_counts(corpus);
        for (const auto &p : counts.points())
            CHECK(by_year.at(p.year).total_papers() == p.count);
    }

    TEST_CASE("overflow bucket") {
        AuthorshipDistribution d(4);
        for (int a : {1, 2, 4, 5, 9})
            d.add_paper(a);
        CHECK(d.bucket(4) == 3);
        CHECK(d.buckets() == std::vector<std::int64_t>{0, 1, 1, 0, 3});
        CHECK(d.total_authors() == 21);
        CHECK(d.multi_authored() == 4);
        const auto b = AuthorshipDistribution::from_buckets({5, 153});
        CHECK_FALSE(b.exact());
        CHECK_FALSE(b.total_authors().has_value());
        CHECK(b.single_authored() == 5);
        CHECK(b.multi_authored() == 153);
    }

    TEST_CASE("author productivity") {
        const auto d = author_productivity(build_corpus({record(2000, {"A"}), record(2001, {"A"}), record(2002, {"A"})}));
        CHECK(d.pairs() == std::vector<ProductivityPair>{{3, 1}});

        testing::Draw draw(5);
        const std::vector<std::string> names{"A", "B", "C", "D", "E"};
        std::vector<BibRecord> recs;
        std::map<std::string, std::int64_t> tally;
        for (int i = 0; i < 200; ++i) {
            std::vector<std::string> au;
            for (const auto &n : names)
                if (draw.below(3) == 0) {
                    au.push_back(n);
                    ++tally[n];
                }
            recs.push_back(record(2000, au));
        }
        std::map<std::int64_t, std::int64_t> expected;
        for (const auto &[n, k] : tally)
            ++expected[k];
        std::vector<ProductivityPair> pairs;
        for (const auto &[x, y] : expected)
            pairs.push_back({x, y});
        CHECK(author_productivity(build_corpus(recs)) == ProductivityDistribution(pairs));

        const auto lotka = fixtures::lotka_productivity();
        CHECK(lotka.total_authors() == 104160);
        CHECK(lotka.total_credits() == 384778);
    }

    TEST_CASE("journal rank") {
        CHECK(journal_rank(build_corpus({})).empty());
        const auto top = fixtures::bradford_journals();
        CHECK(top[0].label == "Kardiologiya");
        CHECK(top[0].frequency == 1247);
        CHECK(journal_rank(fixtures::reconstructed_corpus(), std::string("Article")) == top);

        testing::Draw draw(3);
        std::vector<BibRecord> recs;
        std::map<std::string, std::int64_t> tally;
        for (int i = 0; i < 300; ++i) {
            auto r = record(2000);
            r.journal = "J" + std::to_string(draw.below(12));
            ++tally[r.journal];
            recs.push_back(r);
        }
        const auto ranked = journal_rank(build_corpus(recs));
        CHECK(ranked.size() == tally.size());
        for (const auto &[j, k] : tally)
            CHECK(ranked.frequency_of(j) == k);
    }

    TEST_CASE("page statistics") {
        auto r = record(2000);
        r.page_count = 10;
        const auto one = page_stats(build_corpus({r}));
        CHECK(report::fixed(one.overall.average, 2) == "10.00");

        const auto stats = page_stats(fixtures::reconstructed_corpus());
        CHECK(stats.by_year.front().pages == 689);
        CHECK(stats.by_year.front().articles == 158);
        CHECK(report::fixed(stats.by_year.front().average, 2) == "4.36");
        CHECK(report::fixed(stats.overall.average, 2) == "7.83");

        auto missing = record(2000);
        const auto lenient = page_stats(build_corpus({r, missing}));
        const auto strict = page_stats(build_corpus({r, missing}), true);
        CHECK(lenient.overall.average == doctest::Approx(5.0));
        CHECK(strict.overall.average == doctest::Approx(10.0));
    }

    TEST_CASE("reconstructed corpus marginals") {
        const auto &corpus = fixtures::reconstructed_corpus();
        CHECK(corpus.total() == 50036);
        CHECK(yearly_counts(corpus) == fixtures::year_counts());
        CHECK(yearly_citations(corpus) == fixtures::citation_series());
        for (const auto &c : fixtures::member_countries()) {
            RecordFilter f;
            f.country = c;
            CHECK(yearly_counts(corpus, f) == fixtures::country_series(c));
        }
    }
}
