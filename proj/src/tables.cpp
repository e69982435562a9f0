#include "scimet/tables.hpp"

#include <cmath>

#include <fmt/format.h>

#include "scimet/error.hpp"

namespace scimet::tables {

using report::Cell;
using report::int_col;
using report::opt;
using report::real_col;
using report::text_col;

namespace {

Cell i64(std::int64_t v) { return Cell(v); }
Cell dbl(double v) { return Cell(v); }
Cell str(std::string v) { return Cell(std::move(v)); }

double percent(std::int64_t part, std::int64_t whole) {
    return whole ? 100.0 * static_cast<double>(part) / static_cast<double>(whole) : 0.0;
}

Table key_values(std::string name, const std::vector<std::pair<std::string, std::string>> &items) {
    Table t(std::move(name), {text_col("quantity"), text_col("value")});
    for (const auto &[k, v] : items)
        t.add_row({str(k), str(v)});
    return t;
}

}  // namespace

Table year_series(std::string name, const YearSeries &series, std::string value_column) {
    Table t(std::move(name), {int_col("year"), int_col(std::move(value_column))});
    for (const auto &p : series.points())
        t.add_row({i64(p.year), i64(p.count)});
    return t;
}

Table ranked(std::string name, const RankedList &list, std::string label_column, std::string value_column,
             bool with_share) {
    std::vector<report::Column> cols{text_col(std::move(label_column)), int_col(std::move(value_column))};
    if (with_share)
        cols.push_back(real_col("share", 3));
    Table t(std::move(name), std::move(cols));
    const auto total = list.total();
    for (const auto &e : list.entries()) {
        std::vector<Cell> row{str(e.label), i64(e.frequency)};
        if (with_share)
            row.push_back(dbl(percent(e.frequency, total)));
        t.add_row(std::move(row));
    }
    return t;
}

Table distribution(std::string name, const ProductivityDistribution &dist) {
    Table t(std::move(name), {int_col("x"), int_col("y")});
    for (const auto &p : dist.pairs())
        t.add_row({i64(p.papers), i64(p.authors)});
    return t;
}

namespace {

void add_growth_rows(Table &t, const std::vector<GrowthRow> &rows, const BlockSeries *blocks) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        Cell label = blocks ? str(blocks->blocks.at(i).label()) : i64(r.year);
        t.add_row({label, i64(r.count), i64(r.cumulative), dbl(r.w1), dbl(r.w2), dbl(r.rgr), opt(r.dt)});
    }
}

std::vector<report::Column> growth_columns(report::Column first) {
    return {std::move(first), int_col("count"), int_col("cumulative"), real_col("w1", 4),
            real_col("w2", 4),  real_col("rgr", 4), real_col("dt", 4)};
}

}  // namespace

Table growth(std::string name, const std::vector<GrowthRow> &rows) {
    Table t(std::move(name), growth_columns(int_col("year")));
    add_growth_rows(t, rows, nullptr);
    return t;
}

Table block_growth(std::string name, const std::vector<GrowthRow> &rows, const BlockSeries &blocks) {
    if (rows.size() != blocks.blocks.size())
        throw DataError("block growth rows do not match the blocks");
    Table t(std::move(name), growth_columns(text_col("block")));
    add_growth_rows(t, rows, &blocks);
    return t;
}

Table blocks(std::string name, const BlockSeries &blocks) {
    Table t(std::move(name), {text_col("block"), int_col("count"), int_col("cumulative"), real_col("share", 2),
                              real_col("cumulative_share", 2)});
    std::int64_t cum = 0;
    double cum_share = 0.0;
    for (const auto &b : blocks.blocks) {
        cum += b.count;
        cum_share += b.share;
        t.add_row({str(b.label()), i64(b.count), i64(cum), dbl(b.share), dbl(cum_share)});
    }
    return t;
}

Table exponential(std::string name, const YearSeries &series, const ExponentialRates &rates) {
    Table t(std::move(name), {int_col("year"), int_col("count"), real_col("rate", 6)});
    for (std::size_t i = 0; i < series.size(); ++i)
        t.add_row({i64(series[i].year), i64(series[i].count), opt(rates.rates[i])});
    return t;
}

Table projection_coding(std::string name, const YearSeries &series, const ProjectionResult &p) {
    Table t(std::move(name), {int_col("year"), int_col("count"), int_col("x"), int_col("x2"), int_col("xy")});
    for (const auto &pt : series.points()) {
        const std::int64_t x = pt.year - p.origin_year;
        t.add_row({i64(pt.year), i64(pt.count), i64(x), i64(x * x), i64(x * pt.count)});
    }
    return t;
}

Table projection(std::string name, const ProjectionResult &p) {
    Table t(std::move(name), {int_col("year"), int_col("x"), real_col("a", 5), real_col("b", 6),
                              real_col("yc", 2)});
    for (const auto &[year, yc] : p.projected)
        t.add_row({i64(year), i64(year - p.origin_year), dbl(p.a), dbl(p.b), dbl(yc)});
    return t;
}

Table ratio_matrix(std::string name, const RatioMatrix &m) {
    std::vector<report::Column> cols{text_col("country")};
    for (const auto &l : m.labels)
        cols.push_back(real_col(l, 2));
    Table t(std::move(name), std::move(cols));
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        std::vector<Cell> row{str(m.labels[i])};
        for (double v : m.cells[i])
            row.push_back(dbl(v));
        t.add_row(std::move(row));
    }
    return t;
}

Table citations_by_year(std::string name, const YearSeries &papers, const YearSeries &citations) {
    if (papers.years() != citations.years())
        throw DataError("paper and citation series cover different years");
    Table t(std::move(name), {int_col("year"), int_col("publications"), int_col("citations"), real_col("share", 2),
                              real_col("rg", 2), real_col("cpp", 2)});
    const auto ratios = annual_growth_ratio(citations);
    const auto total = citations.total();
    for (std::size_t i = 0; i < papers.size(); ++i) {
        const auto n = papers[i].count;
        const auto c = citations[i].count;
        t.add_row({i64(papers[i].year), i64(n), i64(c), dbl(percent(c, total)), opt(ratios[i]),
                   n ? dbl(cpp(c, n)) : Cell{}});
    }
    return t;
}

Table page_stats(std::string name, const PageStats &stats) {
    Table t(std::move(name), {text_col("year"), int_col("articles"), int_col("pages"), real_col("average", 2)});
    for (const auto &r : stats.by_year)
        t.add_row({str(std::to_string(r.year)), i64(r.articles), i64(r.pages), dbl(r.average)});
    t.add_row({str("Total"), i64(stats.overall.articles), i64(stats.overall.pages), dbl(stats.overall.average)});
    return t;
}

Table authorship(std::string name, const AuthorshipDistribution &dist) {
    Table t(std::move(name), {text_col("authors"), int_col("papers"), real_col("share", 2)});
    const auto buckets = dist.buckets();
    for (std::size_t j = 0; j < buckets.size(); ++j) {
        if (j == 0 && buckets[0] == 0)
            continue;
        const auto label = static_cast<std::int64_t>(j) == dist.overflow_at() ? fmt::format("{}+", j)
                                                                              : std::to_string(j);
        t.add_row({str(label), i64(buckets[j]), dbl(percent(buckets[j], dist.total_papers()))});
    }
    return t;
}

Table authorship_by_year(std::string name, const std::map<int, AuthorshipDistribution> &by_year) {
    Table t(std::move(name), {int_col("year"), int_col("single"), int_col("multi"), int_col("total"),
                              real_col("dc", 2)});
    for (const auto &[year, d] : by_year) {
        const auto s = d.single_authored();
        const auto m = d.multi_authored();
        t.add_row({i64(year), i64(s), i64(m), i64(d.total_papers()),
                   s + m ? dbl(degree_of_collaboration(d)) : Cell{}});
    }
    return t;
}

Table collaboration(std::string name, const std::vector<CollabRow> &rows) {
    Table t(std::move(name), {text_col("year"), int_col("papers"), int_col("authors"), real_col("ci", 2),
                              real_col("dc", 2), real_col("cc", 5), real_col("mcc", 5)});
    for (const auto &r : rows)
        t.add_row({str(r.label), i64(r.papers), i64(r.authors), dbl(r.ci), dbl(r.dc), dbl(r.cc), opt(r.mcc)});
    return t;
}

Table cai(std::string name, const std::vector<std::string> &block_labels,
          const std::vector<std::vector<std::int64_t>> &block_counts, const std::vector<std::int64_t> &lower_bounds,
          CaiVariant variant, bool benchmark) {
    if (block_labels.size() != block_counts.size())
        throw DataError("CAI labels and blocks differ in length");
    std::vector<std::int64_t> totals(lower_bounds.size(), 0);
    for (const auto &row : block_counts) {
        if (row.size() != lower_bounds.size())
            throw DataError("CAI block has the wrong number of author classes");
        for (std::size_t j = 0; j < row.size(); ++j)
            totals[j] += row[j];
    }
    std::vector<report::Column> cols{text_col("block")};
    for (const auto &l : class_labels(lower_bounds)) {
        cols.push_back(int_col(l));
        cols.push_back(benchmark ? text_col(l + "_cai") : real_col(l + "_cai", 2));
    }
    cols.push_back(int_col("total"));
    Table t(std::move(name), std::move(cols));
    for (std::size_t b = 0; b < block_counts.size(); ++b) {
        std::vector<Cell> row{str(block_labels[b])};
        std::int64_t block_total = 0;
        for (auto v : block_counts[b])
            block_total += v;
        std::vector<double> values;
        if (block_total > 0)
            values = co_authorship_index(block_counts[b], totals, variant);
        for (std::size_t j = 0; j < lower_bounds.size(); ++j) {
            row.push_back(i64(block_counts[b][j]));
            if (values.empty())
                row.push_back(Cell{});
            else if (benchmark)
                row.push_back(str(values[j] >= 100.0 ? "++" : "--"));
            else
                row.push_back(dbl(values[j]));
        }
        row.push_back(i64(block_total));
        t.add_row(std::move(row));
    }
    return t;
}

Table activity(std::string name, const std::vector<std::pair<std::string, ActivityIndexTable>> &columns,
               const YearSeries &reference) {
    std::vector<report::Column> cols{int_col("year"), int_col("reference")};
    for (const auto &[label, ai] : columns)
        cols.push_back(real_col(label, 2));
    Table t(std::move(name), std::move(cols));
    for (std::size_t i = 0; i < reference.size(); ++i) {
        std::vector<Cell> row{i64(reference[i].year), i64(reference[i].count)};
        for (const auto &[label, ai] : columns)
            row.push_back(dbl(ai.values.at(i)));
        t.add_row(std::move(row));
    }
    return t;
}

Table partners(std::string name, const CollaborationShares &shares) {
    Table t(std::move(name), {text_col("partner"), int_col("papers"), real_col("share", 2), int_col("cumulative"),
                              real_col("cumulative_share", 2), real_col("average_per_year", 2)});
    for (const auto &p : shares.partners)
        t.add_row({str(p.partner), i64(p.papers), dbl(p.share), i64(p.cumulative), dbl(p.cumulative_share),
                   dbl(p.average_per_year)});
    return t;
}

Table count_matrix(std::string name, const CountMatrix &m) {
    std::vector<report::Column> cols{text_col("country")};
    for (const auto &l : m.labels)
        cols.push_back(int_col(l));
    Table t(std::move(name), std::move(cols));
    for (std::size_t i = 0; i < m.labels.size(); ++i) {
        std::vector<Cell> row{str(m.labels[i])};
        for (auto v : m.cells[i])
            row.push_back(i64(v));
        t.add_row(std::move(row));
    }
    return t;
}

Table entity_indices(std::string name, std::string entity_column, const std::vector<EntityIndices> &entities,
                     std::optional<std::size_t> top) {
    Table t(std::move(name),
            {text_col(std::move(entity_column)), int_col("core_citations"), int_col("citations"), int_col("papers"),
             int_col("h"), int_col("g"), real_col("r", 3), real_col("ar", 3), real_col("h_nom", 3),
             real_col("a", 3), real_col("a_core", 3), real_col("m", 3), real_col("q2", 3), real_col("e", 3),
             real_col("p", 3), real_col("hg", 3), real_col("cpp", 2)});
    const std::size_t n = top ? std::min(*top, entities.size()) : entities.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto &b = entities[i].bundle;
        t.add_row({str(entities[i].entity), i64(b.core_sum), i64(b.citations), i64(b.papers), i64(b.h), i64(b.g),
                   dbl(b.r), opt(b.ar), dbl(b.h_nom), opt(b.a_paper), opt(b.a_core), dbl(b.m), dbl(b.q2), dbl(b.e),
                   dbl(b.p), dbl(b.hg), dbl(b.cpp)});
    }
    return t;
}

Table histogram(std::string name, const std::vector<HistogramRow> &rows) {
    Table t(std::move(name), {int_col("low"), int_col("high"), int_col("records"), real_col("share", 2)});
    for (const auto &r : rows)
        t.add_row({i64(r.bin.low), r.bin.high == kOpenBin ? Cell{} : i64(r.bin.high), i64(r.count), dbl(r.share)});
    return t;
}

Table lotka_regression(std::string name, const ProductivityDistribution &dist, const LotkaFit &fit) {
    Table t(std::move(name), {int_col("x"), int_col("y"), real_col("log_x", 4), real_col("log_y", 4),
                              real_col("xy", 4), real_col("x2", 4)});
    const double lb = std::log(fit.log_base);
    for (const auto &p : dist.pairs()) {
        const double x = std::log(static_cast<double>(p.papers)) / lb;
        const double y = std::log(static_cast<double>(p.authors)) / lb;
        t.add_row({i64(p.papers), i64(p.authors), dbl(x), dbl(y), dbl(x * y), dbl(x * x)});
    }
    return t;
}

Table lotka_summary(std::string name, const LotkaFit &fit) {
    return key_values(std::move(name), {{"pairs", std::to_string(fit.pairs)},
                                        {"sum_x", report::fixed(fit.sum_x, 4)},
                                        {"sum_y", report::fixed(fit.sum_y, 4)},
                                        {"sum_xy", report::fixed(fit.sum_xy, 4)},
                                        {"sum_x2", report::fixed(fit.sum_x2, 4)},
                                        {"n", report::fixed(fit.n, 4)},
                                        {"c", report::fixed(fit.c, 4)}});
}

Table ks(std::string name, const KsResult &result) {
    Table t(std::move(name), {int_col("x"), int_col("y"), real_col("observed", 5), real_col("observed_cumulative", 5),
                              real_col("expected", 5), real_col("expected_cumulative", 5),
                              real_col("difference", 5), real_col("cumulative_difference", 5)});
    for (const auto &r : result.rows)
        t.add_row({i64(r.x), i64(r.y), dbl(r.observed), dbl(r.observed_cumulative), dbl(r.expected),
                   dbl(r.expected_cumulative), dbl(r.difference), dbl(r.cumulative_difference)});
    return t;
}

Table ks_summary(std::string name, const KsResult &result) {
    std::vector<std::pair<std::string, std::string>> items{
        {"mode", result.mode == KsMode::paper ? "paper" : "standard"},
        {"n", report::fixed(result.n_used, 4)},
        {"c", report::fixed(result.c_used, 4)},
        {"d_max", report::fixed(result.d_max, 5)},
        {"d_max_x", std::to_string(result.d_max_x)},
        {"d_max_share", report::fixed(result.d_max_share, 5)},
        {"d_max_cumulative", report::fixed(result.d_max_cumulative, 5)},
        {"coefficient", report::fixed(result.coefficient, 2)},
        {"critical_value", report::fixed(result.critical_value, 4)},
        {"verdict", result.fits ? "fits" : "rejects"}};
    if (result.paper_verdict)
        items.emplace_back("inverted_rule_verdict", *result.paper_verdict ? "fits" : "rejects");
    return key_values(std::move(name), items);
}

Table bradford(std::string name, const BradfordZones &zones) {
    Table t(std::move(name), {int_col("zone"), int_col("journals"), int_col("articles"), int_col("first_rank"),
                              int_col("last_rank"), real_col("multiplier", 2), real_col("predicted_journals", 2)});
    const auto predicted = zones.predicted_journals();
    for (std::size_t k = 0; k < zones.zones.size(); ++k) {
        const auto &z = zones.zones[k];
        t.add_row({i64(static_cast<std::int64_t>(k + 1)), i64(z.journals), i64(z.articles),
                   i64(static_cast<std::int64_t>(z.first_rank)), i64(static_cast<std::int64_t>(z.last_rank)),
                   k == 0 ? Cell{} : dbl(zones.multipliers[k - 1]), dbl(predicted[k])});
    }
    return t;
}

Table zipf(std::string name, const std::vector<ZipfRow> &rows) {
    Table t(std::move(name), {text_col("word"), int_col("frequency"), int_col("rank"), real_col("log_f", 4),
                              real_col("log_r", 4), real_col("c", 4)});
    for (const auto &r : rows)
        t.add_row({str(r.word), i64(r.frequency), i64(static_cast<std::int64_t>(r.rank)), dbl(r.log_f),
                   dbl(r.log_r), dbl(r.c)});
    return t;
}

Table price(std::string name, const PriceResult &r, PriceOrdering ordering) {
    return key_values(std::move(name), {{"ordering", std::string(price_ordering_name(ordering))},
                                        {"total_authors", std::to_string(r.total_authors)},
                                        {"total_credits", std::to_string(r.total_credits)},
                                        {"sqrt_authors", report::fixed(r.sqrt_authors, 2)},
                                        {"quota", std::to_string(r.quota)},
                                        {"selected_authors", std::to_string(r.selected_authors)},
                                        {"top_credits", std::to_string(r.top_credits)},
                                        {"share_percent", report::fixed(100.0 * r.share, 2)},
                                        {"satisfied", r.satisfied ? "yes" : "no"}});
}

Table pareto(std::string name, const ParetoResult &r) {
    return key_values(std::move(name), {{"author_fraction", report::fixed(r.author_fraction, 2)},
                                        {"top_authors", std::to_string(r.top_author_count)},
                                        {"top_credits", std::to_string(r.top_credits)},
                                        {"total_credits", std::to_string(r.total_credits)},
                                        {"credit_share", report::fixed(r.credit_share, 5)},
                                        {"gap_to_0.8", report::fixed(r.gap_to_target, 5)}});
}

}  // namespace scimet::tables
