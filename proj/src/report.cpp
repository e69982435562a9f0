#include "scimet/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ctime>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "scimet/delimited.hpp"
#include "scimet/error.hpp"

namespace scimet::report {

std::string fixed(double value, int decimals) {
    if (std::isnan(value))
        return "";
    if (std::isinf(value))
        throw DataError("cannot format an infinite value");
    if (decimals < 0)
        decimals = 0;
    char buf[512];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed);
    if (ec != std::errc())
        throw DataError("number too large to format");
    std::string_view repr(buf, static_cast<std::size_t>(end - buf));
    const bool negative = !repr.empty() && repr.front() == '-';
    if (negative)
        repr.remove_prefix(1);
    const auto dot = repr.find('.');
    std::string digits(repr.substr(0, dot));
    std::string frac(dot == std::string_view::npos ? std::string_view() : repr.substr(dot + 1));
    const auto d = static_cast<std::size_t>(decimals);
    bool round_up = false;
    if (frac.size() > d) {
        round_up = frac[d] >= '5';
        frac.resize(d);
    } else {
        frac.append(d - frac.size(), '0');
    }
    std::string all = digits + frac;
    if (round_up) {
        std::size_t i = all.size();
        while (i > 0) {
            --i;
            if (all[i] == '9') {
                all[i] = '0';
            } else {
                ++all[i];
                break;
            }
            if (i == 0) {
                all.insert(all.begin(), '1');
                break;
            }
        }
    }
    std::string out = all.substr(0, all.size() - d);
    if (d > 0)
        out += '.' + all.substr(all.size() - d);
    const bool zero = std::all_of(all.begin(), all.end(), [](char c) { return c == '0'; });
    if (negative && !zero)
        out.insert(out.begin(), '-');
    return out;
}

double rounded(double value, int decimals) {
    if (std::isnan(value))
        return value;
    return parse_real(fixed(value, decimals), "rounded value");
}

Table::Table(std::string name, std::vector<Column> columns) : name_(std::move(name)), columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw DataError(fmt::format("table {}: row has {} cells, expected {}", name_, row.size(), columns_.size()));
    rows_.push_back(std::move(row));
}

std::string Table::format_cell(std::size_t row, std::size_t column) const {
    const Cell &cell = rows_.at(row).at(column);
    const Column &col = columns_.at(column);
    if (std::holds_alternative<std::monostate>(cell))
        return "";
    if (const auto *i = std::get_if<std::int64_t>(&cell))
        return col.kind == ColumnKind::real ? fixed(static_cast<double>(*i), col.decimals) : std::to_string(*i);
    if (const auto *d = std::get_if<double>(&cell)) {
        if (col.kind == ColumnKind::real)
            return fixed(*d, col.decimals);
        if (col.kind == ColumnKind::integer)
            return fixed(*d, 0);
        return fmt::format("{}", *d);
    }
    return std::get<std::string>(cell);
}

std::string Table::to_csv() const {
    std::vector<std::string> header;
    for (const auto &c : columns_)
        header.push_back(c.name);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        std::vector<std::string> fields;
        for (std::size_t c = 0; c < columns_.size(); ++c)
            fields.push_back(format_cell(r, c));
        rows.push_back(std::move(fields));
    }
    return write_delimited(header, rows);
}

nlohmann::ordered_json Table::to_json() const {
    nlohmann::ordered_json cols = nlohmann::ordered_json::array();
    for (const auto &c : columns_) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["type"] = c.kind == ColumnKind::integer ? "integer" : c.kind == ColumnKind::real ? "real" : "text";
        if (c.kind == ColumnKind::real)
            j["decimals"] = c.decimals;
        cols.push_back(std::move(j));
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            const Cell &cell = rows_[r][c];
            const Column &col = columns_[c];
            if (std::holds_alternative<std::monostate>(cell)) {
                row.push_back(nullptr);
            } else if (const auto *i = std::get_if<std::int64_t>(&cell)) {
                row.push_back(*i);
            } else if (const auto *d = std::get_if<double>(&cell)) {
                if (std::isnan(*d))
                    row.push_back(nullptr);
                else
                    row.push_back(col.kind == ColumnKind::real ? rounded(*d, col.decimals) : *d);
            } else {
                row.push_back(std::get<std::string>(cell));
            }
        }
        rows.push_back(std::move(row));
    }
    nlohmann::ordered_json j;
    j["name"] = name_;
    j["columns"] = std::move(cols);
    j["rows"] = std::move(rows);
    return j;
}

OutputFormat parse_output_format(std::string_view name) {
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw DataError(fmt::format("unknown output format '{}'", name));
}

std::string render(const Table &table, OutputFormat format) {
    if (format == OutputFormat::csv)
        return table.to_csv();
    return table.to_json().dump(2) + "\n";
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    std::string out;
    out.reserve(length * 2);
    for (unsigned int i = 0; i < length; ++i)
        out += fmt::format("{:02x}", digest[i]);
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string ReportDocument::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = {{"name", "scimet"}, {"version", tool_version}};
    if (timestamp)
        j["generated_at"] = *timestamp;
    nlohmann::ordered_json in = nlohmann::ordered_json::array();
    for (const auto &d : inputs)
        in.push_back({{"name", d.name}, {"sha256", d.sha256}, {"bytes", d.bytes}});
    j["inputs"] = std::move(in);
    j["configuration"] = configuration;
    nlohmann::ordered_json secs = nlohmann::ordered_json::array();
    for (const auto &t : sections)
        secs.push_back(t.to_json());
    j["sections"] = std::move(secs);
    return j.dump(2) + "\n";
}

namespace {

constexpr double kWidth = 720, kHeight = 400, kLeft = 70, kRight = 20, kTop = 40, kBottom = 80;

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string n2(double v) {
    return fixed(v, 2);
}

// Frame, title, y gridlines and x labels shared by both chart kinds.
std::string chart_frame(std::string_view title, const std::vector<ChartPoint> &points, double max_value,
                        double slot) {
    std::string s = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        "<text x=\"{2}\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\" text-anchor=\"middle\">{3}</text>\n",
        n2(kWidth), n2(kHeight), n2(kWidth / 2), xml_escape(title));
    const double plot_h = kHeight - kTop - kBottom;
    for (int k = 0; k <= 4; ++k) {
        const double v = max_value * k / 4.0;
        const double y = kTop + plot_h * (1.0 - k / 4.0);
        s += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#ddd\"/>\n"
                         "<text x=\"{3}\" y=\"{4}\" font-family=\"sans-serif\" font-size=\"11\" "
                         "text-anchor=\"end\">{5}</text>\n",
                         n2(kLeft), n2(y), n2(kWidth - kRight), n2(kLeft - 6), n2(y + 4), fixed(v, 0));
    }
    const std::size_t step = points.size() > 30 ? (points.size() + 29) / 30 : 1;
    for (std::size_t i = 0; i < points.size(); i += step) {
        const double x = kLeft + slot * (static_cast<double>(i) + 0.5);
        const double y = kHeight - kBottom + 14;
        s += fmt::format("<text x=\"{0}\" y=\"{1}\" font-family=\"sans-serif\" font-size=\"10\" "
                         "text-anchor=\"end\" transform=\"rotate(-45 {0} {1})\">{2}</text>\n",
                         n2(x), n2(y), xml_escape(points[i].label));
    }
    s += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", n2(kLeft),
                     n2(kHeight - kBottom), n2(kWidth - kRight));
    return s;
}

double max_of(const std::vector<ChartPoint> &points) {
    double m = 0.0;
    for (const auto &p : points)
        m = std::max(m, p.value);
    return m > 0 ? m : 1.0;
}

}  // namespace

std::string svg_bar_chart(std::string_view title, const std::vector<ChartPoint> &points) {
    const double max_value = max_of(points);
    const double slot = points.empty() ? 0 : (kWidth - kLeft - kRight) / static_cast<double>(points.size());
    const double plot_h = kHeight - kTop - kBottom;
    std::string s = chart_frame(title, points, max_value, slot);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double h = plot_h * std::max(0.0, points[i].value) / max_value;
        s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#4a78b0\"/>\n",
                         n2(kLeft + slot * static_cast<double>(i) + slot * 0.1), n2(kTop + plot_h - h),
                         n2(slot * 0.8), n2(h));
    }
    s += "</svg>\n";
    return s;
}

std::string svg_line_chart(std::string_view title, const std::vector<ChartPoint> &points) {
    const double max_value = max_of(points);
    const double slot = points.empty() ? 0 : (kWidth - kLeft - kRight) / static_cast<double>(points.size());
    const double plot_h = kHeight - kTop - kBottom;
    std::string s = chart_frame(title, points, max_value, slot);
    std::string path;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double x = kLeft + slot * (static_cast<double>(i) + 0.5);
        const double y = kTop + plot_h * (1.0 - std::max(0.0, points[i].value) / max_value);
        path += fmt::format("{}{},{}", i ? " L" : "M", n2(x), n2(y));
        s += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"#b0484a\"/>\n", n2(x), n2(y));
    }
    if (!path.empty())
        s += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"#b0484a\" stroke-width=\"1.5\"/>\n", path);
    s += "</svg>\n";
    return s;
}

}  // namespace scimet::report
