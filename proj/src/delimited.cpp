#include "scimet/delimited.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "scimet/error.hpp"

namespace scimet {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

namespace {

std::vector<std::string> split_line(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && trim(current).empty()) {
            current.clear();
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            fields.push_back(was_quoted ? current : std::string(trim(current)));
            current.clear();
            was_quoted = false;
        } else {
            current += c;
        }
    }
    if (quoted)
        throw DataError(fmt::format("line {}: unterminated quoted field", line_no));
    fields.push_back(was_quoted ? current : std::string(trim(current)));
    return fields;
}

}  // namespace

std::optional<std::size_t> DelimitedTable::find_column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    return std::nullopt;
}

std::size_t DelimitedTable::column(std::string_view name) const {
    if (auto i = find_column(name))
        return *i;
    throw DataError(fmt::format("missing column '{}'", name));
}

DelimitedTable read_delimited(std::string_view text) {
    DelimitedTable table;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (trim(line).empty() || line.front() == '#') {
            if (end == text.size())
                break;
            continue;
        }
        auto fields = split_line(line, line_no);
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
        } else {
            if (fields.size() != table.header.size())
                throw DataError(fmt::format("line {}: expected {} fields, found {}", line_no,
                                            table.header.size(), fields.size()));
            table.rows.push_back(std::move(fields));
            table.row_lines.push_back(line_no);
        }
        if (end == text.size())
            break;
    }
    if (!have_header)
        throw DataError("delimited input has no header row");
    return table;
}

std::string quote_field(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos && trim(field) == field)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string write_delimited(const std::vector<std::string> &header,
                            const std::vector<std::vector<std::string>> &rows) {
    std::string out;
    auto emit = [&out](const std::vector<std::string> &fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i)
                out += ',';
            out += quote_field(fields[i]);
        }
        out += '\n';
    };
    emit(header);
    for (const auto &r : rows)
        emit(r);
    return out;
}

std::int64_t parse_integer(std::string_view field, std::string_view what) {
    const std::string_view s = trim(field);
    std::int64_t value = 0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (!s.empty() && s.front() == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc() || ptr != last)
        throw DataError(fmt::format("{}: '{}' is not an integer", what, field));
    return value;
}

double parse_real(std::string_view field, std::string_view what) {
    const std::string_view s = trim(field);
    double value = 0.0;
    const char *first = s.data();
    const char *last = s.data() + s.size();
    if (!s.empty() && s.front() == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (s.empty() || ec != std::errc() || ptr != last || !std::isfinite(value))
        throw DataError(fmt::format("{}: '{}' is not a number", what, field));
    return value;
}

}  // namespace scimet
