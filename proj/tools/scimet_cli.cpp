#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "scimet/collaboration.hpp"
#include "scimet/corpus.hpp"
#include "scimet/delimited.hpp"
#include "scimet/error.hpp"
#include "scimet/growth.hpp"
#include "scimet/laws.hpp"
#include "scimet/metrics.hpp"
#include "scimet/pipeline.hpp"
#include "scimet/records.hpp"
#include "scimet/report.hpp"
#include "scimet/tables.hpp"
#include "scimet/verify.hpp"
#include "scimet/wordstats.hpp"

namespace fs = std::filesystem;
using namespace scimet;

namespace {

struct Options {
    std::string input;
    std::string format = "csv";
    std::string out;
    bool deterministic = false;
    std::string convention = "paper";
    int blocks = 5;
    int zones = 3;
    std::vector<int> projection;
    std::size_t top = 10;
    std::vector<std::string> filters;
    std::string home;
    std::vector<std::string> members;
    std::string policy = "floor";
    std::string ordering = "by_productivity";
    std::string overflow = "bucket_as_j";
    std::string group_by = "author";
    std::vector<std::string> sources{"DE"};
    std::int64_t min_frequency = 1;
    std::string law = "lotka";
    bool plots = false;
    std::vector<int> criteria;
};

struct Input {
    std::string name;
    std::string text;
};

Input read_input(const std::string &path) {
    if (path.empty())
        throw DataError("no --input given");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError(fmt::format("cannot read {}", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw DataError(fmt::format("error while reading {}", path));
    return {path, buf.str()};
}

// Field-tagged exports open with FN, VR or PT; anything else is a delimited table.
bool looks_like_export(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, 3) == "\xEF\xBB\xBF")
        pos = 3;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        auto line = trim(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
        if (!line.empty()) {
            const auto tag = line.substr(0, 2);
            return (tag == "FN" || tag == "VR" || tag == "PT") && (line.size() == 2 || line[2] == ' ');
        }
        if (end == std::string_view::npos)
            break;
        pos = end + 1;
    }
    return false;
}

Corpus load_corpus(const Input &in, const std::vector<std::string> &filters) {
    auto parsed = parse_export(in.text);
    for (const auto &d : parsed.report.diagnostics)
        std::cerr << fmt::format("{}:{}: {}\n", in.name, d.line, d.message);
    if (parsed.records.empty())
        throw DataError(fmt::format("{}: no records accepted", in.name));
    if (filters.empty())
        return build_corpus(std::move(parsed.records));
    const auto filter = parse_filter(filters);
    std::vector<BibRecord> kept;
    for (auto &r : parsed.records)
        if (filter.matches(r))
            kept.push_back(std::move(r));
    if (kept.empty())
        throw DataError("no records match the filter");
    return build_corpus(std::move(kept));
}

class Sink {
public:
    Sink(const Options &o) : format_(report::parse_output_format(o.format)) {
        if (!o.out.empty()) {
            dir_ = fs::path(o.out);
            fs::create_directories(*dir_);
        }
    }

    void emit(const report::Table &t) {
        const auto body = report::render(t, format_);
        if (dir_) {
            write_file(*dir_ / (t.name() + (format_ == report::OutputFormat::csv ? ".csv" : ".json")), body);
        } else {
            if (format_ == report::OutputFormat::csv) {
                if (emitted_ > 0)
                    std::cout << '\n';
                std::cout << "# " << t.name() << '\n';
            }
            std::cout << body;
            if (!body.empty() && body.back() != '\n')
                std::cout << '\n';
        }
        ++emitted_;
    }

    void file(const std::string &name, const std::string &body) {
        if (dir_)
            write_file(*dir_ / name, body);
        else
            std::cout << body;
    }

    bool to_directory() const { return dir_.has_value(); }

private:
    static void write_file(const fs::path &path, const std::string &body) {
        std::ofstream out(path, std::ios::binary);
        out << body;
        if (!out)
            throw DataError(fmt::format("cannot write {}", path.string()));
    }

    report::OutputFormat format_;
    std::optional<fs::path> dir_;
    int emitted_ = 0;
};

std::vector<std::string> top_countries(const Corpus &corpus, std::size_t k) {
    std::vector<std::string> out;
    const auto dist = field_distribution(corpus, Field::country);
    for (std::size_t i = 0; i < dist.size() && i < k; ++i)
        out.push_back(dist[i].label);
    return out;
}

int run_ingest(const Options &o) {
    const auto in = read_input(o.input);
    const auto parsed = parse_export(in.text);
    Sink sink(o);
    report::Table summary("ingest_summary", {report::text_col("quantity"), report::int_col("value")});
    summary.add_row({std::string("accepted"), static_cast<std::int64_t>(parsed.report.accepted)});
    summary.add_row({std::string("rejected"), static_cast<std::int64_t>(parsed.report.rejected)});
    summary.add_row({std::string("bytes"), static_cast<std::int64_t>(in.text.size())});
    sink.emit(summary);
    report::Table diags("diagnostics", {report::int_col("line"), report::text_col("message")});
    for (const auto &d : parsed.report.diagnostics)
        diags.add_row({static_cast<std::int64_t>(d.line), d.message});
    sink.emit(diags);
    if (parsed.records.empty())
        throw DataError(fmt::format("{}: no records accepted", in.name));
    const auto corpus = load_corpus(in, o.filters);
    sink.emit(tables::year_series("year_counts", yearly_counts(corpus)));
    sink.emit(tables::ranked("document_types", field_distribution(corpus, Field::doc_type), "doc_type", "records"));
    sink.emit(tables::ranked("languages", field_distribution(corpus, Field::language), "language", "records"));
    sink.emit(tables::ranked("countries", field_distribution(corpus, Field::country), "country", "records"));
    sink.emit(tables::page_stats("page_stats", page_stats(corpus)));
    if (sink.to_directory())
        sink.file("records.txt", serialize_export(corpus.records()));
    return 0;
}

int run_growth(const Options &o) {
    const auto in = read_input(o.input);
    std::optional<Corpus> corpus;
    YearSeries counts;
    if (looks_like_export(in.text)) {
        corpus = load_corpus(in, o.filters);
        counts = yearly_counts(*corpus);
    } else {
        counts = parse_year_table(in.text);
    }
    if (counts.empty())
        throw DataError(fmt::format("{}: no yearly counts", in.name));
    const auto convention = parse_convention(o.convention);
    Sink sink(o);
    sink.emit(tables::year_series("year_counts", counts));
    sink.emit(tables::growth("relative_growth", rgr_table(counts, convention)));
    const auto blocks = block_aggregate(counts, o.blocks);
    sink.emit(tables::blocks("blocks", blocks));
    sink.emit(tables::block_growth("block_relative_growth", rgr_table(blocks.series(), convention), blocks));
    sink.emit(tables::exponential("exponential_growth", counts, exponential_rates(counts)));
    const auto p = linear_projection(counts, o.projection);
    sink.emit(tables::projection_coding("projection_coding", counts, p));
    if (!o.projection.empty())
        sink.emit(tables::projection("projection", p));
    if (corpus) {
        const auto dist = field_distribution(*corpus, Field::country);
        const auto members = o.members.empty() ? top_countries(*corpus, o.top) : o.members;
        std::vector<std::pair<std::string, std::int64_t>> totals;
        for (const auto &m : members)
            totals.emplace_back(m, dist.frequency_of(m).value_or(0));
        if (!totals.empty())
            sink.emit(tables::ratio_matrix("growth_ratio", growth_ratio_matrix(totals)));
    }
    return 0;
}

int run_collab(const Options &o) {
    const auto corpus = load_corpus(read_input(o.input), o.filters);
    const auto convention = parse_convention(o.convention);
    const auto variant = convention == Convention::paper ? CaiVariant::paper_complement : CaiVariant::standard;
    const auto policy = parse_overflow_policy(o.overflow);
    Sink sink(o);
    const auto overall = authorship_distribution(corpus);
    sink.emit(tables::authorship("authorship_pattern", overall));
    const auto by_year = authorship_by_year(corpus);
    sink.emit(tables::authorship_by_year("degree_of_collaboration", by_year));
    auto rows = collaboration_by_year(corpus);
    rows.push_back(collaboration_row("total", overall, policy));
    sink.emit(tables::collaboration("collaborative_indices", rows));

    const auto counts = yearly_counts(corpus);
    const auto blocks = block_aggregate(counts, o.blocks);
    std::vector<std::string> labels;
    std::vector<std::vector<std::int64_t>> class_rows;
    for (const auto &b : blocks.blocks) {
        AuthorshipDistribution merged;
        for (const auto &r : corpus.records())
            if (r.year >= b.first_year && r.year <= b.last_year)
                merged.add_paper(static_cast<std::int64_t>(r.authors.size()));
        labels.push_back(b.label());
        class_rows.push_back(class_counts(merged, kDefaultAuthorClasses));
    }
    sink.emit(tables::cai("co_authorship_index", labels, class_rows, kDefaultAuthorClasses, variant));
    sink.emit(tables::cai("co_authorship_benchmark", labels, class_rows, kDefaultAuthorClasses, variant, true));

    const auto members = o.members.empty() ? top_countries(corpus, 5) : o.members;
    if (!members.empty()) {
        const std::string home = o.home.empty() ? members.front() : o.home;
        sink.emit(tables::partners("partners_" + home, collaboration_shares(corpus, home, o.top)));
        sink.emit(tables::count_matrix("inter_collaboration", inter_collaboration_matrix(corpus, members)));
        std::vector<std::pair<std::string, ActivityIndexTable>> cols;
        for (const auto &c : members) {
            RecordFilter f;
            f.country = c;
            cols.emplace_back(c, activity_index(yearly_counts(corpus, f), counts));
        }
        sink.emit(tables::activity("activity_index", cols, counts));
    }
    return 0;
}

int run_metrics(const Options &o) {
    const auto corpus = load_corpus(read_input(o.input), o.filters);
    const auto group = parse_group_by(o.group_by);
    Sink sink(o);
    const auto counts = yearly_counts(corpus);
    sink.emit(tables::citations_by_year("citations_by_year", counts, yearly_citations(corpus)));
    std::vector<std::int64_t> cites;
    for (const auto &r : corpus.records())
        cites.push_back(r.citation_count);
    sink.emit(tables::histogram("citation_ranges", citation_histogram(cites)));
    sink.emit(tables::page_stats("page_stats", page_stats(corpus)));
    const std::string entity = group == GroupBy::author ? "author" : "country";
    sink.emit(tables::entity_indices(entity + "_indices", entity, entity_profiles(corpus, group), o.top));
    return 0;
}

ProductivityDistribution productivity_input(const Options &o) {
    const auto in = read_input(o.input);
    if (looks_like_export(in.text))
        return author_productivity(load_corpus(in, o.filters));
    return parse_distribution(in.text);
}

int run_laws(const Options &o) {
    const auto convention = parse_convention(o.convention);
    Sink sink(o);
    if (o.law == "lotka" || o.law == "ks") {
        const auto dist = productivity_input(o);
        const auto fit = lotka_fit(dist);
        if (o.law == "lotka") {
            sink.emit(tables::lotka_regression("lotka_regression", dist, fit));
            sink.emit(tables::lotka_summary("lotka_summary", fit));
        } else {
            KsOptions ks_opts;
            ks_opts.mode = convention == Convention::paper ? KsMode::paper : KsMode::standard;
            const auto ks = ks_test(dist, fit, ks_opts);
            sink.emit(tables::ks("kolmogorov_smirnov", ks));
            sink.emit(tables::ks_summary("kolmogorov_smirnov_summary", ks));
        }
    } else if (o.law == "price") {
        const auto ordering = parse_price_ordering(o.ordering);
        sink.emit(tables::price("price_law", price_sqrt_check(productivity_input(o), ordering), ordering));
    } else if (o.law == "pareto") {
        sink.emit(tables::pareto("pareto", pareto_check(productivity_input(o))));
    } else if (o.law == "bradford") {
        const auto in = read_input(o.input);
        const auto journals = looks_like_export(in.text)
                                  ? journal_rank(load_corpus(in, o.filters), std::string("Article"))
                                  : parse_journal_table(in.text);
        sink.emit(tables::bradford("bradford_zones",
                                   bradford_zones(journals, o.zones, parse_boundary_policy(o.policy))));
    } else if (o.law == "zipf") {
        const auto in = read_input(o.input);
        RankedList words;
        if (looks_like_export(in.text)) {
            TermOptions opts;
            opts.sources.clear();
            for (const auto &s : o.sources)
                opts.sources.push_back(parse_keyword_source(s));
            opts.min_frequency = o.min_frequency;
            opts.top_k = o.top;
            words = term_frequencies(load_corpus(in, o.filters), opts);
        } else {
            words = parse_word_table(in.text);
        }
        sink.emit(tables::zipf("zipf", zipf_constants(words)));
    } else {
        throw DataError(fmt::format("unknown law '{}'", o.law));
    }
    return 0;
}

int run_words(const Options &o) {
    const auto corpus = load_corpus(read_input(o.input), o.filters);
    TermOptions opts;
    opts.sources.clear();
    for (const auto &s : o.sources)
        opts.sources.push_back(parse_keyword_source(s));
    opts.min_frequency = o.min_frequency;
    opts.top_k = o.top;
    const auto terms = term_frequencies(corpus, opts);
    Sink sink(o);
    sink.emit(tables::ranked("terms", terms, "word", "frequency", false));
    if (!terms.empty())
        sink.emit(tables::zipf("zipf", zipf_constants(terms)));
    return 0;
}

int run_report(const Options &o) {
    const auto in = read_input(o.input);
    const auto corpus = load_corpus(in, o.filters);
    ReportOptions ro;
    ro.convention = parse_convention(o.convention);
    ro.block_width = o.blocks;
    ro.zones = o.zones;
    ro.bradford_policy = parse_boundary_policy(o.policy);
    ro.projection_targets = o.projection;
    ro.top = o.top;
    ro.deterministic = o.deterministic;
    ro.terms.sources.clear();
    for (const auto &s : o.sources)
        ro.terms.sources.push_back(parse_keyword_source(s));
    ro.terms.min_frequency = o.min_frequency;
    ro.terms.top_k = o.top;
    if (!o.home.empty())
        ro.home_country = o.home;
    const report::InputDigest digest{fs::path(in.name).filename().string(), report::sha256_hex(in.text),
                                     in.text.size()};
    const auto result = build_report(corpus, ro, {digest});
    Sink sink(o);
    if (sink.to_directory()) {
        sink.file("report.json", result.document.to_json());
        for (const auto &t : result.document.sections)
            sink.emit(t);
        if (o.plots)
            for (const auto &p : report_plots(corpus))
                sink.file(p.name, p.svg);
    } else if (o.format == "json") {
        std::cout << result.document.to_json();
    } else {
        for (const auto &t : result.document.sections)
            sink.emit(t);
    }
    for (const auto &f : result.failures)
        std::cerr << "skipped " << f << '\n';
    return 0;
}

int run_verify(const Options &o) {
    std::vector<verify::CriterionResult> results;
    if (o.criteria.empty())
        results = verify::run_all();
    else
        for (int id : o.criteria)
            results.push_back(verify::run_criterion(id));
    int failed = 0;
    for (const auto &r : results) {
        std::cout << verify::format_line(r) << '\n';
        if (!r.passed)
            ++failed;
    }
    std::cout << fmt::format("{} of {} criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}

void add_common(CLI::App *cmd, Options &o, bool needs_input = true) {
    auto *input = cmd->add_option("--input,-i", o.input, "input file: field-tagged export or delimited table");
    if (needs_input)
        input->required();
    cmd->add_option("--format", o.format, "table format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out,-o", o.out, "write tables into this directory instead of stdout");
    cmd->add_flag("--deterministic", o.deterministic, "omit the timestamp from report metadata");
    cmd->add_option("--convention", o.convention, "growth, CAI and K-S convention")
        ->check(CLI::IsMember({"paper", "standard"}));
    cmd->add_option("--blocks", o.blocks, "block width in years")->check(CLI::PositiveNumber);
    cmd->add_option("--zones", o.zones, "number of Bradford zones")->check(CLI::PositiveNumber);
    cmd->add_option("--projection", o.projection, "years to project the linear trend to");
    cmd->add_option("--top", o.top, "rows kept in ranked tables")->check(CLI::PositiveNumber);
    cmd->add_option("--filter", o.filters, "record filter such as country=Brazil, doc_type=Article");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Bibliometric analyses over field-tagged exports and delimited tables"};
    app.set_version_flag("--version", SCIMET_VERSION);
    app.require_subcommand(1);
    Options o;

    auto *ingest = app.add_subcommand("ingest", "parse an export and summarise what was accepted");
    add_common(ingest, o);
    auto *growth = app.add_subcommand("growth", "relative growth, doubling time, blocks and projection");
    add_common(growth, o);
    growth->add_option("--members", o.members, "countries for the growth ratio matrix");
    auto *collab = app.add_subcommand("collab", "authorship pattern and collaboration indices");
    add_common(collab, o);
    collab->add_option("--home", o.home, "country whose partners are listed");
    collab->add_option("--members", o.members, "countries for the collaboration matrix and activity index");
    collab->add_option("--overflow", o.overflow, "CC treatment of the overflow bucket")
        ->check(CLI::IsMember({"exact", "bucket_as_j"}));
    auto *metrics = app.add_subcommand("metrics", "citation indicators per author or country");
    add_common(metrics, o);
    metrics->add_option("--group-by", o.group_by, "entity to rank")->check(CLI::IsMember({"author", "country"}));
    auto *laws = app.add_subcommand("laws", "Lotka, K-S, Bradford, Zipf, Price and Pareto");
    add_common(laws, o);
    laws->add_option("law", o.law, "which law")
        ->required()
        ->check(CLI::IsMember({"lotka", "ks", "bradford", "zipf", "price", "pareto"}));
    laws->add_option("--policy", o.policy, "Bradford zone boundary policy")
        ->check(CLI::IsMember({"floor", "nearest", "ceiling", "tie_group_floor", "tie_group_nearest",
                               "tie_group_ceiling"}));
    laws->add_option("--ordering", o.ordering, "Price law selection order")
        ->check(CLI::IsMember({"by_productivity", "by_contributor_rows"}));
    laws->add_option("--source", o.sources, "keyword fields for Zipf on an export (DE, ID)");
    laws->add_option("--min-frequency", o.min_frequency, "drop rarer terms")->check(CLI::PositiveNumber);
    auto *words = app.add_subcommand("words", "keyword frequencies and Zipf constants");
    add_common(words, o);
    words->add_option("--source", o.sources, "keyword fields (DE, ID)");
    words->add_option("--min-frequency", o.min_frequency, "drop rarer terms")->check(CLI::PositiveNumber);
    auto *rep = app.add_subcommand("report", "every analysis as one structured document");
    add_common(rep, o);
    rep->add_option("--home", o.home, "country whose partners are listed");
    rep->add_option("--policy", o.policy, "Bradford zone boundary policy")
        ->check(CLI::IsMember({"floor", "nearest", "ceiling", "tie_group_floor", "tie_group_nearest",
                               "tie_group_ceiling"}));
    rep->add_option("--source", o.sources, "keyword fields (DE, ID)");
    rep->add_option("--min-frequency", o.min_frequency, "drop rarer terms")->check(CLI::PositiveNumber);
    rep->add_flag("--plots", o.plots, "also write SVG charts (needs --out)");
    auto *verify_cmd = app.add_subcommand("verify-fixtures", "run the embedded table reproduction suite");
    verify_cmd->add_option("--criterion", o.criteria, "run only these criteria")->check(CLI::Range(1, 13));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*ingest)
            return run_ingest(o);
        if (*growth)
            return run_growth(o);
        if (*collab)
            return run_collab(o);
        if (*metrics)
            return run_metrics(o);
        if (*laws)
            return run_laws(o);
        if (*words)
            return run_words(o);
        if (*rep)
            return run_report(o);
        return run_verify(o);
    } catch (const DataError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const fs::filesystem_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
