#include "cplx/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cplx/error.hpp"

namespace cplx::csv {

namespace {

constexpr std::string_view kModule = "ingest";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool is_blank(const std::vector<std::string>& fields) {
    return fields.size() == 1 && trim(fields.front()).empty();
}

}  // namespace

std::optional<std::size_t> Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    return std::nullopt;
}

Table parse(std::string_view text) {
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::vector<Row> records;
    Row current{1, {}};
    std::string field;
    std::size_t line = 1;
    std::size_t quote_line = 0;
    bool in_quotes = false;
    bool field_was_quoted = false;

    auto end_record = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
        if (!is_blank(current.fields)) records.push_back(std::move(current));
        current = Row{line, {}};
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (!trim(field).empty() || field_was_quoted) {
                    throw Error(Errc::schema, kModule,
                                "line " + std::to_string(line) + ": stray quote inside field");
                }
                field.clear();
                in_quotes = true;
                field_was_quoted = true;
                quote_line = line;
                break;
            case ',':
                current.fields.push_back(std::move(field));
                field.clear();
                field_was_quoted = false;
                break;
            case '\r':
                if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
                [[fallthrough]];
            case '\n':
                ++line;
                end_record();
                break;
            default:
                if (field_was_quoted && c != ' ' && c != '\t') {
                    throw Error(Errc::schema, kModule,
                                "line " + std::to_string(line) + ": text after closing quote");
                }
                if (!field_was_quoted) field.push_back(c);
        }
    }
    if (in_quotes) {
        throw Error(Errc::schema, kModule,
                    "line " + std::to_string(quote_line) + ": unterminated quoted field");
    }
    if (!field.empty() || !current.fields.empty() || field_was_quoted) end_record();

    Table table;
    if (records.empty()) return table;
    table.header = std::move(records.front().fields);
    for (auto& h : table.header) h = std::string(trim(h));
    for (std::size_t r = 1; r < records.size(); ++r) {
        if (records[r].fields.size() != table.header.size()) {
            throw Error(Errc::schema, kModule,
                        "line " + std::to_string(records[r].line) + ": expected " +
                            std::to_string(table.header.size()) + " fields, found " +
                            std::to_string(records[r].fields.size()));
        }
        table.rows.push_back(std::move(records[r]));
    }
    return table;
}

Table read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::io, kModule, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error(Errc::io, kModule, "read failed: " + path.string());
    return parse(buffer.str());
}

std::string escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string format_row(std::span<const std::string> fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += escape(fields[i]);
    }
    out.push_back('\n');
    return out;
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view field, std::string_view what) {
    const auto s = trim(field);
    double value = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(value)) {
        throw Error(Errc::value, kModule,
                    std::string(what) + ": not a finite number: '" + std::string(field) + "'");
    }
    return value;
}

std::uint64_t parse_count(std::string_view field, std::string_view what) {
    const auto s = trim(field);
    std::uint64_t value = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw Error(Errc::value, kModule,
                    std::string(what) + ": not a non-negative integer: '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace cplx::csv
