#include "scimet/pipeline.hpp"

#include <functional>

#include <fmt/format.h>

#include "scimet/error.hpp"
#include "scimet/metrics.hpp"
#include "scimet/tables.hpp"

namespace scimet {

namespace {

std::vector<std::string> top_countries(const Corpus &corpus, std::size_t k) {
    std::vector<std::string> out;
    const auto dist = field_distribution(corpus, Field::country);
    for (std::size_t i = 0; i < dist.size() && i < k; ++i)
        out.push_back(dist[i].label);
    return out;
}

RankedList head(const RankedList &list, std::size_t k) {
    if (list.size() <= k)
        return list;
    return RankedList(std::vector<RankedEntry>(list.entries().begin(), list.entries().begin() + static_cast<long>(k)));
}

}  // namespace

ReportOutput build_report(const Corpus &corpus, const ReportOptions &options,
                          std::vector<report::InputDigest> inputs) {
    ReportOutput out;
    auto &doc = out.document;
    doc.tool_version = SCIMET_VERSION;
    doc.inputs = std::move(inputs);
    if (!options.deterministic)
        doc.timestamp = report::utc_timestamp();
    const CaiVariant cai_variant =
        options.convention == Convention::paper ? CaiVariant::paper_complement : CaiVariant::standard;
    auto &cfg = doc.configuration;
    cfg["records"] = corpus.total();
    cfg["convention"] = std::string(convention_name(options.convention));
    cfg["block_width"] = options.block_width;
    cfg["zones"] = options.zones;
    cfg["bradford_policy"] = std::string(boundary_policy_name(options.bradford_policy));
    cfg["cai_variant"] = std::string(cai_variant_name(cai_variant));
    cfg["projection_targets"] = options.projection_targets;
    cfg["top"] = options.top;
    cfg["min_term_frequency"] = options.terms.min_frequency;

    auto attempt = [&](const std::string &what, const std::function<void()> &fn) {
        try {
            fn();
        } catch (const DataError &e) {
            out.failures.push_back(fmt::format("{}: {}", what, e.what()));
        }
    };
    auto add = [&](report::Table t) { doc.sections.push_back(std::move(t)); };

    const auto counts = yearly_counts(corpus);
    add(tables::year_series("year_counts", counts));
    add(tables::ranked("document_types", field_distribution(corpus, Field::doc_type), "doc_type", "records"));
    add(tables::ranked("languages", field_distribution(corpus, Field::language), "language", "records"));
    add(tables::ranked("countries", field_distribution(corpus, Field::country), "country", "records"));
    add(tables::page_stats("page_stats", page_stats(corpus)));

    attempt("growth", [&] {
        add(tables::growth("relative_growth", rgr_table(counts, options.convention)));
        const auto blocks = block_aggregate(counts, options.block_width);
        add(tables::blocks("blocks", blocks));
        add(tables::block_growth("block_relative_growth", rgr_table(blocks.series(), options.convention), blocks));
        add(tables::exponential("exponential_growth", counts, exponential_rates(counts)));
    });
    attempt("projection", [&] {
        const auto p = linear_projection(counts, options.projection_targets);
        add(tables::projection_coding("projection_coding", counts, p));
        add(tables::projection("projection", p));
    });
    const auto countries = top_countries(corpus, options.top);
    attempt("growth_ratio", [&] {
        const auto dist = field_distribution(corpus, Field::country);
        std::vector<std::pair<std::string, std::int64_t>> totals;
        for (const auto &c : countries)
            totals.emplace_back(c, *dist.frequency_of(c));
        if (!totals.empty())
            add(tables::ratio_matrix("growth_ratio", growth_ratio_matrix(totals)));
    });
    attempt("citations", [&] {
        add(tables::citations_by_year("citations_by_year", counts, yearly_citations(corpus)));
        std::vector<std::int64_t> cites;
        for (const auto &r : corpus.records())
            cites.push_back(r.citation_count);
        add(tables::histogram("citation_ranges", citation_histogram(cites)));
    });

    const auto by_year = authorship_by_year(corpus);
    add(tables::authorship("authorship_pattern", authorship_distribution(corpus)));
    add(tables::authorship_by_year("degree_of_collaboration", by_year));
    attempt("collaboration", [&] { add(tables::collaboration("collaborative_indices", collaboration_by_year(corpus))); });
    attempt("co_authorship_index", [&] {
        std::vector<std::string> labels;
        std::vector<std::vector<std::int64_t>> rows;
        for (const auto &[year, dist] : by_year) {
            labels.push_back(std::to_string(year));
            rows.push_back(class_counts(dist, kDefaultAuthorClasses));
        }
        add(tables::cai("co_authorship_index", labels, rows, kDefaultAuthorClasses, cai_variant));
        add(tables::cai("co_authorship_benchmark", labels, rows, kDefaultAuthorClasses, cai_variant, true));
    });
    if (!countries.empty()) {
        const std::string home = options.home_country.value_or(countries.front());
        attempt("partners", [&] { add(tables::partners("partners_" + home, collaboration_shares(corpus, home, options.top))); });
        attempt("inter_collaboration",
                [&] { add(tables::count_matrix("inter_collaboration", inter_collaboration_matrix(corpus, countries))); });
        attempt("activity_index", [&] {
            std::vector<std::pair<std::string, ActivityIndexTable>> cols;
            for (const auto &c : countries) {
                RecordFilter f;
                f.country = c;
                cols.emplace_back(c, activity_index(yearly_counts(corpus, f), counts));
            }
            add(tables::activity("activity_index", cols, counts));
        });
    }
    attempt("country_indices", [&] {
        add(tables::entity_indices("country_indices", "country", entity_profiles(corpus, GroupBy::country)));
    });
    attempt("author_indices", [&] {
        add(tables::entity_indices("author_indices", "author", entity_profiles(corpus, GroupBy::author), options.top));
    });

    const auto productivity = author_productivity(corpus);
    add(tables::distribution("author_productivity", productivity));
    attempt("lotka", [&] {
        const auto fit = lotka_fit(productivity);
        add(tables::lotka_regression("lotka_regression", productivity, fit));
        add(tables::lotka_summary("lotka_summary", fit));
        KsOptions ks_opts;
        ks_opts.mode = options.convention == Convention::paper ? KsMode::paper : KsMode::standard;
        const auto ks = ks_test(productivity, fit, ks_opts);
        add(tables::ks("kolmogorov_smirnov", ks));
        add(tables::ks_summary("kolmogorov_smirnov_summary", ks));
    });
    attempt("price", [&] {
        add(tables::price("price_law", price_sqrt_check(productivity), PriceOrdering::by_productivity));
        add(tables::pareto("pareto", pareto_check(productivity)));
    });
    attempt("bradford", [&] {
        const auto journals = journal_rank(corpus, std::string("Article"));
        add(tables::ranked("core_journals", head(journals, options.top), "journal", "articles", false));
        add(tables::bradford("bradford_zones", bradford_zones(journals, options.zones, options.bradford_policy)));
    });
    attempt("zipf", [&] {
        const auto terms = term_frequencies(corpus, options.terms);
        add(tables::ranked("terms", terms, "word", "frequency", false));
        if (!terms.empty())
            add(tables::zipf("zipf", zipf_constants(terms)));
    });
    if (!out.failures.empty())
        cfg["skipped"] = out.failures;
    return out;
}

std::vector<PlotFile> report_plots(const Corpus &corpus) {
    std::vector<PlotFile> plots;
    const auto counts = yearly_counts(corpus);
    std::vector<report::ChartPoint> pubs, cites;
    for (const auto &p : counts.points())
        pubs.push_back({std::to_string(p.year), static_cast<double>(p.count)});
    const auto citations = yearly_citations(corpus);
    for (const auto &p : citations.points())
        cites.push_back({std::to_string(p.year), static_cast<double>(p.count)});
    plots.push_back({"publications_per_year.svg", report::svg_bar_chart("Publications per year", pubs)});
    plots.push_back({"citations_per_year.svg", report::svg_bar_chart("Citations per year", cites)});
    try {
        std::vector<report::ChartPoint> rgr;
        for (const auto &r : rgr_table(counts))
            rgr.push_back({std::to_string(r.year), r.rgr});
        plots.push_back({"relative_growth.svg", report::svg_line_chart("Relative growth rate", rgr)});
    } catch (const DataError &) {
    }
    return plots;
}

}  // namespace scimet
