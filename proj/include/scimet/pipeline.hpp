#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scimet/collaboration.hpp"
#include "scimet/corpus.hpp"
#include "scimet/growth.hpp"
#include "scimet/laws.hpp"
#include "scimet/report.hpp"
#include "scimet/wordstats.hpp"

namespace scimet {

struct ReportOptions {
    Convention convention = Convention::paper;
    int block_width = 5;
    int zones = 3;
    BoundaryPolicy bradford_policy = BoundaryPolicy::tie_group_floor;
    std::vector<int> projection_targets;
    std::size_t top = 10;
    bool deterministic = false;
    TermOptions terms;
    std::optional<std::string> home_country;  // defaults to the most frequent country
};

struct ReportOutput {
    report::ReportDocument document;
    std::vector<std::string> failures;  // analyses skipped because the corpus could not support them
};

// Runs every corpus analysis and collects the tables. CAI uses the complement
// variant under the paper convention and the standard one otherwise.
ReportOutput build_report(const Corpus &corpus, const ReportOptions &options,
                          std::vector<report::InputDigest> inputs = {});

struct PlotFile {
    std::string name;
    std::string svg;
};

std::vector<PlotFile> report_plots(const Corpus &corpus);

}  // namespace scimet
