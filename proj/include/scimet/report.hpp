#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace scimet::report {

// Fixed-point text rounded half away from zero on the shortest decimal
// representation of value, so 2.675 gives "2.68" at two places.
std::string fixed(double value, int decimals);
double rounded(double value, int decimals);

enum class ColumnKind { integer, real, text };

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::text;
    int decimals = 0;
};

inline Column int_col(std::string name) { return {std::move(name), ColumnKind::integer, 0}; }
inline Column real_col(std::string name, int decimals) { return {std::move(name), ColumnKind::real, decimals}; }
inline Column text_col(std::string name) { return {std::move(name), ColumnKind::text, 0}; }

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

template <typename T>
Cell opt(const std::optional<T> &v) {
    if (!v)
        return std::monostate{};
    return Cell(*v);
}

class Table {
public:
    Table() = default;
    Table(std::string name, std::vector<Column> columns);

    void add_row(std::vector<Cell> row);

    const std::string &name() const { return name_; }
    const std::vector<Column> &columns() const { return columns_; }
    const std::vector<std::vector<Cell>> &rows() const { return rows_; }

    std::string format_cell(std::size_t row, std::size_t column) const;
    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;

private:
    std::string name_;
    std::vector<Column> columns_;
    std::vector<std::vector<Cell>> rows_;
};

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(std::string_view name);

std::string render(const Table &table, OutputFormat format);

std::string sha256_hex(std::string_view data);
std::string utc_timestamp();

struct InputDigest {
    std::string name;
    std::string sha256;
    std::size_t bytes = 0;
};

struct ReportDocument {
    std::string tool_version;
    std::vector<InputDigest> inputs;
    std::optional<std::string> timestamp;
    nlohmann::ordered_json configuration = nlohmann::ordered_json::object();
    std::vector<Table> sections;

    std::string to_json() const;
};

struct ChartPoint {
    std::string label;
    double value = 0.0;
};

std::string svg_bar_chart(std::string_view title, const std::vector<ChartPoint> &points);
std::string svg_line_chart(std::string_view title, const std::vector<ChartPoint> &points);

}  // namespace scimet::report
