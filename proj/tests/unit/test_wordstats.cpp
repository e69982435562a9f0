#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "scimet/error.hpp"
#include "scimet/fixtures.hpp"
#include "scimet/wordstats.hpp"

using namespace scimet;

namespace {

BibRecord with_keywords(std::vector<std::string> de, std::vector<std::string> id = {}) {
    auto r = testing::record(2000);
    r.keywords = std::move(de);
    r.keywords_plus = std::move(id);
    return r;
}

}  // namespace

TEST_SUITE("wordstats") {
    TEST_CASE("plain counts") {
        const auto c = build_corpus({with_keywords({"Risk"}), with_keywords({"Risk"}), with_keywords({"Risk"})});
        CHECK(term_frequencies(c).entries() == std::vector<RankedEntry>{{"Risk", 3}});
        CHECK(term_frequencies(build_corpus({})).empty());
    }

    TEST_CASE("case folding merges spellings") {
        const auto c = build_corpus({with_keywords({"risk"}), with_keywords({"Risk"}), with_keywords({"Risk", "RISK"}),
                                     with_keywords({"Stent"})});
        const auto t = term_frequencies(c);
        REQUIRE(t.size() == 2);
        CHECK(t[0].label == "Risk");
        CHECK(t[0].frequency == 4);

        testing::Draw draw(71);
        const std::vector<std::string> spellings{"Heart", "heart", "HEART", "Valve", "valve", "Stent"};
        std::vector<std::string> occ;
        std::map<std::string, std::int64_t> oracle;
        for (int i = 0; i < 500; ++i) {
            occ.push_back(spellings[static_cast<std::size_t>(draw.below(6))]);
            ++oracle[fold_case(occ.back())];
        }
        const auto counted = count_terms(occ);
        CHECK(counted.size() == oracle.size());
        for (const auto &e : counted.entries())
            CHECK(oracle[fold_case(e.label)] == e.frequency);
    }

    TEST_CASE("ties in spelling go to the smallest form") {
        const auto t = count_terms({"beta", "Beta"});
        CHECK(t[0].label == "Beta");
    }

    TEST_CASE("sources, thresholds and truncation") {
        const auto c = build_corpus({with_keywords({"A", "B"}, {"C"}), with_keywords({"A"}, {"C", "D"})});
        TermOptions both;
        both.sources = {KeywordSource::author_keywords, KeywordSource::keywords_plus};
        CHECK(term_frequencies(c, both).size() == 4);
        TermOptions plus;
        plus.sources = {KeywordSource::keywords_plus};
        CHECK(term_frequencies(c, plus)[0].label == "C");
        TermOptions frequent;
        frequent.min_frequency = 2;
        CHECK(term_frequencies(c, frequent).entries() == std::vector<RankedEntry>{{"A", 2}});
        TermOptions top;
        top.sources = both.sources;
        top.top_k = 2;
        CHECK(term_frequencies(c, top).size() == 2);
        CHECK(parse_keyword_source("DE") == KeywordSource::author_keywords);
        CHECK(parse_keyword_source("ID") == KeywordSource::keywords_plus);
        CHECK_THROWS_AS(parse_keyword_source("TI"), DataError);
    }

    TEST_CASE("reconstructed corpus reproduces the ranked word list") {
        TermOptions o;
        o.top_k = 50;
        const auto t = term_frequencies(fixtures::reconstructed_corpus(), o);
        CHECK(t[0].label == "Risk");
        CHECK(t[0].frequency == 4005);
        CHECK(t == fixtures::zipf_words());
    }

    TEST_CASE("folding is ASCII only") {
        CHECK(fold_case("\xC3\x85X Risk") == "\xC3\x85x risk");
        CHECK(fold_case("ABC def") == "abc def");
    }
}
