#include "scimet/records.hpp"

#include <map>

#include <fmt/format.h>

#include "scimet/delimited.hpp"
#include "scimet/error.hpp"

namespace scimet {

bool is_valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        std::size_t extra = 0;
        char32_t cp = 0;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + extra >= s.size())
            return false;
        for (std::size_t k = 1; k <= extra; ++k) {
            const auto cc = static_cast<unsigned char>(s[i + k]);
            if ((cc & 0xC0) != 0x80)
                return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        static constexpr char32_t min_for_length[] = {0, 0x80, 0x800, 0x10000};
        if (cp < min_for_length[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            return false;
        i += extra + 1;
    }
    return true;
}

namespace {

struct Field {
    std::vector<std::string> lines;
    std::size_t line = 0;
};

struct Block {
    std::size_t start_line = 0;
    std::map<std::string, Field> fields;
    bool malformed = false;
    std::string malformed_reason;
};

bool is_tag_char(char c, bool first) {
    if (c >= 'A' && c <= 'Z')
        return true;
    return !first && c >= '0' && c <= '9';
}

std::string join_lines(const Field &f) {
    std::string out;
    for (const auto &l : f.lines) {
        if (l.empty())
            continue;
        if (!out.empty())
            out += ' ';
        out += l;
    }
    return out;
}

std::vector<std::string> split_list(const Field &f) {
    std::vector<std::string> out;
    const std::string joined = join_lines(f);
    std::size_t pos = 0;
    while (pos <= joined.size()) {
        std::size_t end = joined.find(';', pos);
        if (end == std::string::npos)
            end = joined.size();
        auto item = trim(std::string_view(joined).substr(pos, end - pos));
        if (!item.empty())
            out.emplace_back(item);
        pos = end + 1;
    }
    return out;
}

class ExportParser {
public:
    ParseResult run(std::string_view text);

private:
    void note(std::size_t line, std::string message) {
        result_.report.diagnostics.push_back({line, std::move(message)});
    }
    void reject(std::size_t line, const std::string &why) {
        ++result_.report.rejected;
        note(line, "record rejected: " + why);
    }
    void finish_block();
    std::optional<BibRecord> build(const Block &b, std::string &why) const;

    ParseResult result_;
    std::optional<Block> block_;
    std::string current_tag_;
};

std::optional<BibRecord> ExportParser::build(const Block &b, std::string &why) const {
    BibRecord rec;
    auto get = [&b](const char *tag) -> const Field * {
        auto it = b.fields.find(tag);
        return it == b.fields.end() ? nullptr : &it->second;
    };

    const Field *py = get("PY");
    if (py == nullptr) {
        why = "missing PY";
        return std::nullopt;
    }
    try {
        const auto year = parse_integer(join_lines(*py), "PY");
        if (year < kMinYear || year > kMaxYear) {
            why = fmt::format("year {} outside [{}, {}]", year, kMinYear, kMaxYear);
            return std::nullopt;
        }
        rec.year = static_cast<int>(year);
        if (const Field *tc = get("TC")) {
            rec.citation_count = parse_integer(join_lines(*tc), "TC");
            if (rec.citation_count < 0) {
                why = "negative TC";
                return std::nullopt;
            }
        }
        if (const Field *pg = get("PG")) {
            const auto pages = parse_integer(join_lines(*pg), "PG");
            if (pages < 0) {
                why = "negative PG";
                return std::nullopt;
            }
            rec.page_count = pages;
        }
    } catch (const DataError &e) {
        why = e.what();
        return std::nullopt;
    }

    if (const Field *f = get("UT"))
        rec.id = join_lines(*f);
    if (const Field *f = get("PT"))
        rec.pub_type = join_lines(*f);
    if (const Field *f = get("TI"))
        rec.title = join_lines(*f);
    if (const Field *f = get("SO"))
        rec.journal = join_lines(*f);
    if (const Field *f = get("DT"))
        rec.doc_type = join_lines(*f);
    if (const Field *f = get("LA"))
        rec.language = join_lines(*f);
    if (const Field *f = get("AU"))
        for (const auto &l : f->lines)
            if (!l.empty())
                rec.authors.push_back(l);
    if (const Field *f = get("DE"))
        rec.keywords = split_list(*f);
    if (const Field *f = get("ID"))
        rec.keywords_plus = split_list(*f);
    if (const Field *f = get("CU"))
        for (auto &c : split_list(*f))
            rec.countries.insert(std::move(c));
    return rec;
}

void ExportParser::finish_block() {
    const Block b = std::move(*block_);
    block_.reset();
    current_tag_.clear();
    if (b.malformed) {
        reject(b.start_line, b.malformed_reason);
        return;
    }
    std::string why;
    auto rec = build(b, why);
    if (!rec) {
        reject(b.start_line, why);
        return;
    }
    ++result_.report.accepted;
    result_.records.push_back(std::move(*rec));
}

ParseResult ExportParser::run(std::string_view text) {
    bool saw_content = false;
    bool saw_ef = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (trim(line).empty()) {
            current_tag_.clear();
            continue;
        }
        if (saw_ef) {
            note(line_no, "content after EF ignored");
            break;
        }
        saw_content = true;

        const bool utf8_ok = is_valid_utf8(line);
        if (!utf8_ok) {
            if (block_) {
                if (!block_->malformed) {
                    block_->malformed = true;
                    block_->malformed_reason = fmt::format("invalid UTF-8 at line {}", line_no);
                }
            } else {
                note(line_no, "invalid UTF-8 outside a record ignored");
            }
            continue;
        }

        if (line.size() >= 3 && line.substr(0, 3) == "   ") {
            if (!block_ || current_tag_.empty()) {
                note(line_no, "continuation line without an open field");
                if (block_ && !block_->malformed) {
                    block_->malformed = true;
                    block_->malformed_reason = fmt::format("stray continuation at line {}", line_no);
                }
                continue;
            }
            block_->fields[current_tag_].lines.emplace_back(trim(line));
            continue;
        }

        if (line.size() < 2 || !is_tag_char(line[0], true) || !is_tag_char(line[1], false) ||
            (line.size() > 2 && line[2] != ' ')) {
            note(line_no, "malformed line");
            if (block_ && !block_->malformed) {
                block_->malformed = true;
                block_->malformed_reason = fmt::format("malformed line {}", line_no);
            }
            continue;
        }
        const std::string tag(line.substr(0, 2));
        const std::string value(line.size() > 3 ? trim(line.substr(3)) : std::string_view());

        if (tag == "EF") {
            if (block_) {
                reject(block_->start_line, "not terminated by ER");
                block_.reset();
            }
            saw_ef = true;
            current_tag_.clear();
            continue;
        }
        if (tag == "ER") {
            if (!block_)
                note(line_no, "ER without an open record");
            else
                finish_block();
            continue;
        }
        if (tag == "PT") {
            if (block_)
                reject(block_->start_line, "not terminated by ER");
            block_.emplace();
            block_->start_line = line_no;
        } else if (!block_) {
            if (tag != "FN" && tag != "VR")
                note(line_no, fmt::format("{} outside a record ignored", tag));
            continue;
        }

        auto [it, inserted] = block_->fields.try_emplace(tag);
        if (!inserted) {
            note(line_no, fmt::format("duplicate {} tag, keeping the later value", tag));
            it->second = Field{};
        }
        it->second.line = line_no;
        it->second.lines.push_back(value);
        current_tag_ = tag;
    }
    if (block_) {
        reject(block_->start_line, "unterminated at end of input");
        block_.reset();
    }
    if (saw_content && !saw_ef)
        note(line_no, "warning: missing EF terminator");
    return std::move(result_);
}

void check_value(const std::string &value, std::string_view what, bool list_item) {
    if (value.find_first_of("\r\n") != std::string::npos)
        throw DataError(fmt::format("{} contains a line break: '{}'", what, value));
    if (trim(value) != value)
        throw DataError(fmt::format("{} has surrounding whitespace: '{}'", what, value));
    if (list_item && (value.empty() || value.find(';') != std::string::npos))
        throw DataError(fmt::format("{} item cannot be empty or contain ';': '{}'", what, value));
    if (!is_valid_utf8(value))
        throw DataError(fmt::format("{} is not valid UTF-8", what));
}

template <typename Range>
void emit_list(std::string &out, const char *tag, const Range &items) {
    if (items.empty())
        return;
    out += tag;
    out += ' ';
    bool first = true;
    for (const auto &item : items) {
        check_value(item, tag, true);
        if (!first)
            out += "; ";
        out += item;
        first = false;
    }
    out += '\n';
}

void emit_scalar(std::string &out, const char *tag, const std::string &value) {
    if (value.empty())
        return;
    check_value(value, tag, false);
    out += fmt::format("{} {}\n", tag, value);
}

}  // namespace

ParseResult parse_export(std::string_view text) {
    return ExportParser{}.run(text);
}

std::string serialize_export(const std::vector<BibRecord> &records) {
    std::string out = "FN scimet export\nVR 1.0\n";
    for (const auto &r : records) {
        check_value(r.pub_type, "PT", false);
        out += r.pub_type.empty() ? std::string("PT\n") : fmt::format("PT {}\n", r.pub_type);
        emit_scalar(out, "UT", r.id);
        if (!r.authors.empty()) {
            for (std::size_t i = 0; i < r.authors.size(); ++i) {
                check_value(r.authors[i], "AU", true);
                out += (i == 0 ? "AU " : "   ") + r.authors[i] + '\n';
            }
        }
        emit_scalar(out, "TI", r.title);
        emit_scalar(out, "SO", r.journal);
        emit_scalar(out, "DT", r.doc_type);
        emit_scalar(out, "LA", r.language);
        out += fmt::format("PY {}\n", r.year);
        if (r.page_count)
            out += fmt::format("PG {}\n", *r.page_count);
        out += fmt::format("TC {}\n", r.citation_count);
        emit_list(out, "DE", r.keywords);
        emit_list(out, "ID", r.keywords_plus);
        emit_list(out, "CU", r.countries);
        out += "ER\n\n";
    }
    out += "EF\n";
    return out;
}

YearSeries parse_year_table(std::string_view text) {
    const auto table = read_delimited(text);
    const auto yc = table.column("year");
    const auto cc = table.column("count");
    std::vector<YearCount> points;
    points.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto where = fmt::format("line {}", table.row_lines[i]);
        const auto year = parse_integer(table.rows[i][yc], where + " year");
        const auto count = parse_integer(table.rows[i][cc], where + " count");
        points.push_back({static_cast<int>(year), count});
    }
    return YearSeries(std::move(points));
}

ProductivityDistribution parse_distribution(std::string_view text) {
    const auto table = read_delimited(text);
    const auto xc = table.column("x");
    const auto yc = table.column("y");
    std::vector<ProductivityPair> pairs;
    pairs.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto where = fmt::format("line {}", table.row_lines[i]);
        pairs.push_back({parse_integer(table.rows[i][xc], where + " x"),
                         parse_integer(table.rows[i][yc], where + " y")});
    }
    return ProductivityDistribution(std::move(pairs));
}

RankedList parse_ranked_table(std::string_view text, std::string_view label_column,
                              std::string_view value_column) {
    const auto table = read_delimited(text);
    const auto lc = table.column(label_column);
    const auto vc = table.column(value_column);
    std::vector<RankedEntry> entries;
    entries.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto where = fmt::format("line {} {}", table.row_lines[i], value_column);
        entries.push_back({table.rows[i][lc], parse_integer(table.rows[i][vc], where)});
    }
    return RankedList(std::move(entries));
}

std::string write_year_table(const YearSeries &series) {
    std::vector<std::vector<std::string>> rows;
    for (const auto &p : series.points())
        rows.push_back({std::to_string(p.year), std::to_string(p.count)});
    return write_delimited({"year", "count"}, rows);
}

std::string write_distribution(const ProductivityDistribution &dist) {
    std::vector<std::vector<std::string>> rows;
    for (const auto &p : dist.pairs())
        rows.push_back({std::to_string(p.papers), std::to_string(p.authors)});
    return write_delimited({"x", "y"}, rows);
}

std::string write_ranked_table(const RankedList &list, std::string_view label_column,
                               std::string_view value_column) {
    std::vector<std::vector<std::string>> rows;
    for (const auto &e : list.entries())
        rows.push_back({e.label, std::to_string(e.frequency)});
    return write_delimited({std::string(label_column), std::string(value_column)}, rows);
}

}  // namespace scimet
