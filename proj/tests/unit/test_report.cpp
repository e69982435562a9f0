#include <doctest.h>

#include <nlohmann/json.hpp>

#include "scimet/error.hpp"
#include "scimet/fixtures.hpp"
#include "scimet/pipeline.hpp"
#include "scimet/records.hpp"
#include "scimet/report.hpp"
#include "scimet/tables.hpp"

using namespace scimet;

TEST_SUITE("report") {
    TEST_CASE("fixed-point formatting") {
        CHECK(report::fixed(2.675, 2) == "2.68");
        CHECK(report::fixed(-2.675, 2) == "-2.68");
        CHECK(report::fixed(0.0, 3) == "0.000");
        CHECK(report::fixed(5136.985, 2) == "5136.99");
        CHECK(report::fixed(1.0 / 3.0, 4) == "0.3333");
        CHECK(report::fixed(12.0, 0) == "12");
        CHECK(report::rounded(0.12345, 4) == doctest::Approx(0.1235));
    }

    TEST_CASE("tables render to CSV and JSON") {
        report::Table t("demo", {report::text_col("label"), report::int_col("n"), report::real_col("share", 2)});
        t.add_row({std::string("a, b"), std::int64_t{3}, 12.345});
        t.add_row({std::string("c"), std::int64_t{4}, std::monostate{}});
        CHECK(t.to_csv() == "label,n,share\n\"a, b\",3,12.35\nc,4,\n");
        const auto j = t.to_json();
        CHECK(j["name"] == "demo");
        CHECK(j["rows"][0][2] == 12.35);
        CHECK(j["rows"][1][2].is_null());
        CHECK_THROWS_AS(t.add_row({std::string("short")}), DataError);
        CHECK(report::parse_output_format("json") == report::OutputFormat::json);
        CHECK_THROWS_AS(report::parse_output_format("xml"), DataError);
    }

    TEST_CASE("emitted tables re-parse") {
        const auto years = fixtures::year_counts();
        CHECK(parse_year_table(tables::year_series("years", years).to_csv()) == years);
        const auto dist = fixtures::lotka_productivity();
        CHECK(parse_distribution(tables::distribution("dist", dist).to_csv()) == dist);
        const auto words = fixtures::zipf_words();
        CHECK(parse_word_table(tables::ranked("w", words, "word", "frequency").to_csv()) == words);
        const auto journals = fixtures::bradford_journals();
        CHECK(parse_journal_table(tables::ranked("j", journals, "journal", "articles").to_csv()) == journals);
    }

    TEST_CASE("digests") {
        CHECK(report::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
        CHECK(report::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
        const auto ts = report::utc_timestamp();
        CHECK(ts.size() == 20);
        CHECK(ts.back() == 'Z');
    }

    TEST_CASE("report documents") {
        const auto &all = fixtures::reconstructed_corpus().records();
        const auto corpus = build_corpus(std::vector<BibRecord>(all.begin(), all.begin() + 3000));
        ReportOptions o;
        o.deterministic = true;
        o.projection_targets = {2022};
        const auto a = build_report(corpus, o, {{"in.txt", report::sha256_hex("x"), 1}});
        const auto b = build_report(corpus, o, {{"in.txt", report::sha256_hex("x"), 1}});
        CHECK(a.document.to_json() == b.document.to_json());
        const auto j = nlohmann::json::parse(a.document.to_json());
        CHECK_FALSE(j.contains("generated_at"));
        CHECK(j["inputs"][0]["name"] == "in.txt");
        CHECK(j["configuration"]["convention"] == "paper");
        bool has_projection = false;
        for (const auto &s : j["sections"])
            has_projection |= s["name"] == "projection";
        CHECK(has_projection);

        o.deterministic = false;
        const auto stamped = nlohmann::json::parse(build_report(corpus, o).document.to_json());
        CHECK(stamped.contains("generated_at"));
    }

    TEST_CASE("analyses that cannot run are recorded") {
        BibRecord r;
        r.year = 2000;
        r.authors = {"A"};
        ReportOptions o;
        o.deterministic = true;
        const auto out = build_report(build_corpus({r}), o);
        CHECK_FALSE(out.failures.empty());
        CHECK(nlohmann::json::parse(out.document.to_json())["configuration"].contains("skipped"));
    }

    TEST_CASE("plots") {
        const auto &all = fixtures::reconstructed_corpus().records();
        const auto corpus = build_corpus(std::vector<BibRecord>(all.begin(), all.begin() + 500));
        const auto plots = report_plots(corpus);
        REQUIRE(plots.size() == 3);
        for (const auto &p : plots) {
            CHECK(p.svg.rfind("<svg", 0) == 0);
            CHECK(p.svg.find("</svg>") != std::string::npos);
        }
    }
}
