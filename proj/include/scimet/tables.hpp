#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scimet/collaboration.hpp"
#include "scimet/corpus.hpp"
#include "scimet/growth.hpp"
#include "scimet/laws.hpp"
#include "scimet/metrics.hpp"
#include "scimet/report.hpp"

namespace scimet::tables {

using report::Table;

Table year_series(std::string name, const YearSeries &series, std::string value_column = "count");
Table ranked(std::string name, const RankedList &list, std::string label_column, std::string value_column,
             bool with_share = true);
Table distribution(std::string name, const ProductivityDistribution &dist);

Table growth(std::string name, const std::vector<GrowthRow> &rows);
Table block_growth(std::string name, const std::vector<GrowthRow> &rows, const BlockSeries &blocks);
Table blocks(std::string name, const BlockSeries &blocks);
Table exponential(std::string name, const YearSeries &series, const ExponentialRates &rates);
Table projection_coding(std::string name, const YearSeries &series, const ProjectionResult &p);
Table projection(std::string name, const ProjectionResult &p);
Table ratio_matrix(std::string name, const RatioMatrix &m);
Table citations_by_year(std::string name, const YearSeries &papers, const YearSeries &citations);
Table page_stats(std::string name, const PageStats &stats);

Table authorship(std::string name, const AuthorshipDistribution &dist);
Table authorship_by_year(std::string name, const std::map<int, AuthorshipDistribution> &by_year);
Table collaboration(std::string name, const std::vector<CollabRow> &rows);
// Per-block class counts and CAI. benchmark replaces each index with "++" (>= 100) or "--".
Table cai(std::string name, const std::vector<std::string> &block_labels,
          const std::vector<std::vector<std::int64_t>> &block_counts, const std::vector<std::int64_t> &lower_bounds,
          CaiVariant variant, bool benchmark = false);
Table activity(std::string name, const std::vector<std::pair<std::string, ActivityIndexTable>> &columns,
               const YearSeries &reference);
Table partners(std::string name, const CollaborationShares &shares);
Table count_matrix(std::string name, const CountMatrix &m);

Table entity_indices(std::string name, std::string entity_column, const std::vector<EntityIndices> &entities,
                     std::optional<std::size_t> top = std::nullopt);
Table histogram(std::string name, const std::vector<HistogramRow> &rows);

Table lotka_regression(std::string name, const ProductivityDistribution &dist, const LotkaFit &fit);
Table lotka_summary(std::string name, const LotkaFit &fit);
Table ks(std::string name, const KsResult &result);
Table ks_summary(std::string name, const KsResult &result);
Table bradford(std::string name, const BradfordZones &zones);
Table zipf(std::string name, const std::vector<ZipfRow> &rows);
Table price(std::string name, const PriceResult &result, PriceOrdering ordering);
Table pareto(std::string name, const ParetoResult &result);

}  // namespace scimet::tables
