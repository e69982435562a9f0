#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scimet/collaboration.hpp"
#include "scimet/corpus.hpp"
#include "scimet/error.hpp"
#include "scimet/fixtures.hpp"
#include "scimet/growth.hpp"
#include "scimet/laws.hpp"
#include "scimet/metrics.hpp"
#include "scimet/pipeline.hpp"
#include "scimet/records.hpp"
#include "scimet/verify.hpp"
#include "scimet/wordstats.hpp"

namespace py = pybind11;
using namespace scimet;

namespace {

using Points = std::vector<std::pair<int, std::int64_t>>;
using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
using Ranked = std::vector<std::pair<std::string, std::int64_t>>;

YearSeries to_series(const Points &points) {
    std::vector<YearCount> pts;
    pts.reserve(points.size());
    for (const auto &[y, c] : points)
        pts.push_back({y, c});
    return YearSeries(std::move(pts));
}

ProductivityDistribution to_distribution(const Pairs &pairs) {
    std::vector<ProductivityPair> out;
    out.reserve(pairs.size());
    for (const auto &[x, y] : pairs)
        out.push_back({x, y});
    return ProductivityDistribution(std::move(out));
}

RankedList to_ranked(const Ranked &entries) {
    std::vector<RankedEntry> out;
    out.reserve(entries.size());
    for (const auto &[label, f] : entries)
        out.push_back({label, f});
    return RankedList(std::move(out));
}

Points from_series(const YearSeries &s) {
    Points out;
    for (const auto &p : s.points())
        out.emplace_back(p.year, p.count);
    return out;
}

Ranked from_ranked(const RankedList &list) {
    Ranked out;
    for (const auto &e : list.entries())
        out.emplace_back(e.label, e.frequency);
    return out;
}

py::object opt(const std::optional<double> &v) {
    return v ? py::object(py::float_(*v)) : py::object(py::none());
}

py::dict fit_dict(const LotkaFit &f) {
    py::dict d;
    d["n"] = f.n;
    d["c"] = f.c;
    d["intercept"] = f.intercept;
    d["sum_x"] = f.sum_x;
    d["sum_y"] = f.sum_y;
    d["sum_xy"] = f.sum_xy;
    d["sum_x2"] = f.sum_x2;
    d["pairs"] = f.pairs;
    return d;
}

LotkaFit fit_of(const ProductivityDistribution &dist, const std::optional<py::dict> &given) {
    LotkaFit f = lotka_fit(dist);
    if (given) {
        f.n = (*given)["n"].cast<double>();
        f.c = (*given)["c"].cast<double>();
    }
    return f;
}

py::dict bundle_dict(const IndexBundle &b) {
    py::dict d;
    d["papers"] = b.papers;
    d["citations"] = b.citations;
    d["h"] = b.h;
    d["g"] = b.g;
    d["core_sum"] = b.core_sum;
    d["e"] = b.e;
    d["r"] = b.r;
    d["a_paper"] = opt(b.a_paper);
    d["a_core"] = opt(b.a_core);
    d["ar"] = opt(b.ar);
    d["m"] = b.m;
    d["h_nom"] = b.h_nom;
    d["hg"] = b.hg;
    d["p"] = b.p;
    d["q2"] = b.q2;
    d["cpp"] = b.cpp;
    return d;
}

py::dict criterion_dict(const verify::CriterionResult &r) {
    py::dict d;
    d["id"] = r.id;
    d["title"] = r.title;
    d["passed"] = r.passed;
    d["checks"] = r.checks;
    d["failures"] = r.failures;
    d["seconds"] = r.seconds;
    d["line"] = verify::format_line(r);
    return d;
}

AuthorshipDistribution to_authorship(const std::vector<std::int64_t> &buckets) {
    return AuthorshipDistribution::from_buckets(buckets);
}

}  // namespace

PYBIND11_MODULE(_scimet, m) {
    m.attr("__version__") = SCIMET_VERSION;
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

    py::class_<BibRecord>(m, "BibRecord")
        .def(py::init<>())
        .def_readwrite("id", &BibRecord::id)
        .def_readwrite("pub_type", &BibRecord::pub_type)
        .def_readwrite("title", &BibRecord::title)
        .def_readwrite("year", &BibRecord::year)
        .def_readwrite("doc_type", &BibRecord::doc_type)
        .def_readwrite("language", &BibRecord::language)
        .def_readwrite("authors", &BibRecord::authors)
        .def_readwrite("countries", &BibRecord::countries)
        .def_readwrite("journal", &BibRecord::journal)
        .def_readwrite("page_count", &BibRecord::page_count)
        .def_readwrite("citation_count", &BibRecord::citation_count)
        .def_readwrite("keywords", &BibRecord::keywords)
        .def_readwrite("keywords_plus", &BibRecord::keywords_plus)
        .def(py::self == py::self)
        .def("__repr__", [](const BibRecord &r) {
            return "<BibRecord " + r.id + " " + std::to_string(r.year) + ">";
        });

    m.def(
        "parse_export",
        [](std::string_view text) {
            auto result = parse_export(text);
            py::list diagnostics;
            for (const auto &d : result.report.diagnostics)
                diagnostics.append(py::make_tuple(d.line, d.message));
            py::dict report;
            report["accepted"] = result.report.accepted;
            report["rejected"] = result.report.rejected;
            report["diagnostics"] = diagnostics;
            return py::make_tuple(result.records, report);
        },
        py::arg("text"));
    m.def("serialize_export", &serialize_export, py::arg("records"));

    py::class_<Corpus>(m, "Corpus")
        .def(py::init([](std::vector<BibRecord> records) { return build_corpus(std::move(records)); }),
             py::arg("records"))
        .def_static("from_export", [](std::string_view text) { return build_corpus(parse_export(text).records); })
        .def_static("reconstructed", [] { return fixtures::reconstructed_corpus(); })
        .def("__len__", &Corpus::total)
        .def_property_readonly("records", &Corpus::records)
        .def_property_readonly("year_range", &Corpus::year_range)
        .def(
            "yearly_counts",
            [](const Corpus &c, const std::vector<std::string> &filter) {
                return from_series(yearly_counts(c, parse_filter(filter)));
            },
            py::arg("filter") = std::vector<std::string>{})
        .def(
            "field_distribution",
            [](const Corpus &c, std::string_view field) { return from_ranked(field_distribution(c, parse_field(field))); },
            py::arg("field"))
        .def("authorship_buckets",
             [](const Corpus &c, std::int64_t overflow) { return authorship_distribution(c, overflow).buckets(); },
             py::arg("overflow_at") = AuthorshipDistribution::kDefaultOverflow)
        .def("author_productivity",
             [](const Corpus &c) {
                 Pairs out;
                 for (const auto &p : author_productivity(c).pairs())
                     out.emplace_back(p.papers, p.authors);
                 return out;
             })
        .def("journal_rank", [](const Corpus &c) { return from_ranked(journal_rank(c)); })
        .def(
            "term_frequencies",
            [](const Corpus &c, const std::vector<std::string> &sources, std::int64_t min_frequency) {
                TermOptions opts;
                opts.sources.clear();
                for (const auto &s : sources)
                    opts.sources.push_back(parse_keyword_source(s));
                opts.min_frequency = min_frequency;
                return from_ranked(term_frequencies(c, opts));
            },
            py::arg("sources") = std::vector<std::string>{"DE"}, py::arg("min_frequency") = 1)
        .def(
            "entity_indices",
            [](const Corpus &c, std::string_view group_by) {
                py::list out;
                for (const auto &e : entity_profiles(c, parse_group_by(group_by))) {
                    auto d = bundle_dict(e.bundle);
                    d["entity"] = e.entity;
                    d["first_year"] = e.first_year;
                    out.append(d);
                }
                return out;
            },
            py::arg("group_by") = "author")
        .def(
            "report_json",
            [](const Corpus &c, std::string_view convention, std::vector<int> targets,
               std::optional<std::string> home) {
                ReportOptions opts;
                opts.convention = parse_convention(convention);
                opts.projection_targets = std::move(targets);
                opts.home_country = std::move(home);
                opts.deterministic = true;
                return build_report(c, opts).document.to_json();
            },
            py::arg("convention") = "paper", py::arg("projection_targets") = std::vector<int>{},
            py::arg("home") = std::nullopt);

    m.def(
        "rgr_table",
        [](const Points &points, std::string_view convention) {
            py::list out;
            for (const auto &r : rgr_table(to_series(points), parse_convention(convention))) {
                py::dict d;
                d["year"] = r.year;
                d["count"] = r.count;
                d["cumulative"] = r.cumulative;
                d["w1"] = r.w1;
                d["w2"] = r.w2;
                d["rgr"] = r.rgr;
                d["dt"] = opt(r.dt);
                out.append(d);
            }
            return out;
        },
        py::arg("points"), py::arg("convention") = "paper");
    m.def(
        "block_aggregate",
        [](const Points &points, int width) {
            py::list out;
            for (const auto &b : block_aggregate(to_series(points), width).blocks)
                out.append(py::make_tuple(b.label(), b.count, b.share));
            return out;
        },
        py::arg("points"), py::arg("width"));
    m.def(
        "linear_projection",
        [](const Points &points, const std::vector<int> &targets) {
            const auto r = linear_projection(to_series(points), targets);
            py::dict d;
            d["origin_year"] = r.origin_year;
            d["a"] = r.a;
            d["b"] = r.b;
            d["sum_y"] = r.sum_y;
            d["sum_xy"] = r.sum_xy;
            d["sum_x2"] = r.sum_x2;
            d["projected"] = r.projected;
            return d;
        },
        py::arg("points"), py::arg("targets") = std::vector<int>{});

    m.def("degree_of_collaboration",
          [](const std::vector<std::int64_t> &buckets) { return degree_of_collaboration(to_authorship(buckets)); },
          py::arg("buckets"));
    m.def(
        "collaborative_coefficient",
        [](const std::vector<std::int64_t> &buckets) { return collaborative_coefficient(to_authorship(buckets)); },
        py::arg("buckets"));
    m.def("collaborative_index", &collaborative_index, py::arg("papers"), py::arg("authors"));
    m.def("modified_cc", &modified_cc, py::arg("cc"), py::arg("papers"));
    m.def(
        "co_authorship_index",
        [](const std::vector<std::int64_t> &block, const std::vector<std::int64_t> &totals,
           std::string_view variant) { return co_authorship_index(block, totals, parse_cai_variant(variant)); },
        py::arg("block_counts"), py::arg("totals"), py::arg("variant") = "standard");
    m.def(
        "activity_index",
        [](const Points &country, const Points &reference) {
            const auto t = activity_index(to_series(country), to_series(reference));
            std::vector<std::pair<int, double>> out;
            for (std::size_t i = 0; i < t.years.size(); ++i)
                out.emplace_back(t.years[i], t.values[i]);
            return out;
        },
        py::arg("country"), py::arg("reference"));

    m.def("h_index", [](std::vector<std::int64_t> cites) { return h_index(CitationProfile(std::move(cites))); },
          py::arg("cites"));
    m.def(
        "g_index",
        [](std::vector<std::int64_t> cites, bool zero_pad) {
            return g_index(CitationProfile(std::move(cites)), zero_pad);
        },
        py::arg("cites"), py::arg("zero_pad") = false);
    m.def(
        "index_bundle",
        [](std::vector<std::int64_t> cites, std::optional<std::vector<int>> ages, int career_years) {
            return bundle_dict(index_bundle(CitationProfile(std::move(cites), std::move(ages), career_years)));
        },
        py::arg("cites"), py::arg("ages") = std::nullopt, py::arg("career_years") = kDefaultCareerYears);

    m.def("lotka_constant", &lotka_constant, py::arg("n"), py::arg("p") = kLotkaTruncation);
    m.def(
        "lotka_fit", [](const Pairs &pairs) { return fit_dict(lotka_fit(to_distribution(pairs))); },
        py::arg("pairs"));
    m.def(
        "ks_test",
        [](const Pairs &pairs, std::string_view mode, std::optional<py::dict> fit) {
            const auto dist = to_distribution(pairs);
            KsOptions opts;
            opts.mode = parse_ks_mode(mode);
            const auto r = ks_test(dist, fit_of(dist, fit), opts);
            py::dict d;
            d["n_used"] = r.n_used;
            d["c_used"] = r.c_used;
            d["d_max"] = r.d_max;
            d["d_max_x"] = r.d_max_x;
            d["d_max_cumulative"] = r.d_max_cumulative;
            d["critical_value"] = r.critical_value;
            d["fits"] = r.fits;
            d["paper_verdict"] = r.paper_verdict ? py::object(py::bool_(*r.paper_verdict)) : py::object(py::none());
            py::list rows;
            for (const auto &row : r.rows)
                rows.append(py::make_tuple(row.x, row.y, row.observed, row.expected, row.difference));
            d["rows"] = rows;
            return d;
        },
        py::arg("pairs"), py::arg("mode") = "standard", py::arg("fit") = std::nullopt);
    m.def(
        "bradford_zones",
        [](const Ranked &journals, int zones, std::string_view policy) {
            const auto z = bradford_zones(to_ranked(journals), zones, parse_boundary_policy(policy));
            py::dict d;
            py::list rows;
            for (const auto &zone : z.zones)
                rows.append(py::make_tuple(zone.journals, zone.articles, zone.first_rank, zone.last_rank));
            d["zones"] = rows;
            d["multipliers"] = z.multipliers;
            d["mean_multiplier"] = z.mean_multiplier;
            d["ratio"] = z.ratio_string();
            return d;
        },
        py::arg("journals"), py::arg("zones") = 3, py::arg("policy") = "floor");
    m.def(
        "zipf_constants",
        [](const Ranked &words) {
            py::list out;
            for (const auto &r : zipf_constants(to_ranked(words)))
                out.append(py::make_tuple(r.rank, r.word, r.frequency, r.c));
            return out;
        },
        py::arg("words"));
    m.def(
        "price_sqrt_check",
        [](const Pairs &pairs, std::string_view ordering) {
            const auto r = price_sqrt_check(to_distribution(pairs), parse_price_ordering(ordering));
            py::dict d;
            d["total_authors"] = r.total_authors;
            d["total_credits"] = r.total_credits;
            d["quota"] = r.quota;
            d["selected_authors"] = r.selected_authors;
            d["top_credits"] = r.top_credits;
            d["share"] = r.share;
            d["satisfied"] = r.satisfied;
            return d;
        },
        py::arg("pairs"), py::arg("ordering") = "by_productivity");
    m.def(
        "pareto_check",
        [](const Pairs &pairs, double fraction) {
            const auto r = pareto_check(to_distribution(pairs), fraction);
            py::dict d;
            d["top_author_count"] = r.top_author_count;
            d["top_credits"] = r.top_credits;
            d["total_credits"] = r.total_credits;
            d["credit_share"] = r.credit_share;
            return d;
        },
        py::arg("pairs"), py::arg("author_fraction") = 0.2);

    m.def("fixture_names", [] {
        std::vector<std::string> out;
        for (const auto &f : fixtures::all())
            out.emplace_back(f.name);
        return out;
    });
    m.def("fixture_text", [](std::string_view name) { return std::string(fixtures::text(name)); }, py::arg("name"));

    m.def("run_criterion", [](int id) { return criterion_dict(verify::run_criterion(id)); }, py::arg("id"));
    m.def("run_all_criteria", [] {
        py::list out;
        for (const auto &r : verify::run_all())
            out.append(criterion_dict(r));
        return out;
    });
}
