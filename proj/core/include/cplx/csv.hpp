#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cplx::csv {

struct Row {
    std::size_t line;  // 1-based line on which the record starts
    std::vector<std::string> fields;
};

struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;

    /// Column index by exact header name.
    std::optional<std::size_t> column(std::string_view name) const;
};

/// RFC 4180 parse: header row required, quoted fields may span lines.
/// Ragged rows and unterminated quotes throw Errc::schema naming the line.
Table parse(std::string_view text);

/// Reads and parses a UTF-8 file. Unreadable files throw Errc::io.
Table read_file(const std::filesystem::path& path);

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

/// Comma-joined escaped fields terminated by "\n".
std::string format_row(std::span<const std::string> fields);

/// 17 significant digits; parses back to the identical double.
std::string format_double(double value);

/// Parses a whole field as a double; throws Errc::value mentioning `what`.
double parse_double(std::string_view field, std::string_view what);

/// Parses a whole field as a non-negative integer; throws Errc::value mentioning `what`.
std::uint64_t parse_count(std::string_view field, std::string_view what);

}  // namespace cplx::csv
