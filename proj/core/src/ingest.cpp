#include "cplx/ingest.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cplx/csv.hpp"
#include "cplx/error.hpp"

namespace cplx {

namespace {

constexpr std::string_view kModule = "ingest";

std::string trimmed(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

std::size_t require_column(const csv::Table& table, const std::string& name,
                           const std::filesystem::path& path) {
    if (table.header.empty()) {
        throw Error(Errc::schema, kModule, path.string() + ": missing header row");
    }
    auto idx = table.column(name);
    if (!idx) throw Error(Errc::schema, kModule, path.string() + ": no column named '" + name + "'");
    return *idx;
}

std::vector<std::size_t> require_columns(const csv::Table& table,
                                         const std::vector<std::string>& names,
                                         const std::filesystem::path& path) {
    std::vector<std::size_t> out;
    for (const auto& n : names) out.push_back(require_column(table, n, path));
    return out;
}

}  // namespace

bool natural_less(std::string_view lhs, std::string_view rhs) {
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    std::size_t i = 0, j = 0;
    while (i < lhs.size() && j < rhs.size()) {
        if (is_digit(lhs[i]) && is_digit(rhs[j])) {
            const auto si = i, sj = j;
            while (i < lhs.size() && is_digit(lhs[i])) ++i;
            while (j < rhs.size() && is_digit(rhs[j])) ++j;
            auto a = lhs.substr(si, i - si);
            auto b = rhs.substr(sj, j - sj);
            // Compare by value without overflow: strip leading zeros, then length, then text.
            const auto za = std::min(a.find_first_not_of('0'), a.size());
            const auto zb = std::min(b.find_first_not_of('0'), b.size());
            const auto va = a.substr(za), vb = b.substr(zb);
            if (va.size() != vb.size()) return va.size() < vb.size();
            if (va != vb) return va < vb;
            if (a.size() != b.size()) return a.size() < b.size();
        } else {
            if (lhs[i] != rhs[j]) return lhs[i] < rhs[j];
            ++i;
            ++j;
        }
    }
    return lhs.size() - i < rhs.size() - j;
}

std::vector<InspectionRecord> read_raw(const std::filesystem::path& path, const RawSchema& schema) {
    const auto table = csv::read_file(path);
    const auto attr_cols = require_columns(table, schema.attribute_columns, path);
    const auto result_col = require_column(table, schema.result_column, path);
    std::optional<std::size_t> id_col;
    if (schema.item_id_column) id_col = require_column(table, *schema.item_id_column, path);

    std::vector<InspectionRecord> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        InspectionRecord rec;
        if (id_col) rec.item_id = trimmed(row.fields[*id_col]);
        for (std::size_t a = 0; a < attr_cols.size(); ++a) {
            rec.attributes.push_back({schema.attribute_columns[a], trimmed(row.fields[attr_cols[a]])});
        }
        const auto result = trimmed(row.fields[result_col]);
        if (result == "0") {
            rec.result = InspectionResult::not_inspected;
        } else if (result == "1") {
            rec.result = InspectionResult::passed;
        } else if (result == "2") {
            rec.result = InspectionResult::failed;
        } else {
            throw Error(Errc::value, kModule,
                        at_line(row.line) + schema.result_column + " must be 0, 1 or 2, found '" +
                            result + "'");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<TypeCounts> aggregate(std::span<const InspectionRecord> records,
                                  std::span<const std::string> group_by) {
    std::map<std::vector<std::string>, TypeCounts> groups;
    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto& rec = records[r];
        std::vector<std::string> key;
        for (const auto& name : group_by) {
            auto it = std::find_if(rec.attributes.begin(), rec.attributes.end(),
                                   [&](const Attribute& a) { return a.name == name; });
            if (it == rec.attributes.end()) {
                throw Error(Errc::schema, kModule,
                            "record " + std::to_string(r + 1) + " has no attribute '" + name + "'");
            }
            key.push_back(it->value);
        }
        auto [slot, fresh] = groups.try_emplace(key);
        auto& tc = slot->second;
        if (fresh) {
            tc.total = 0;
            for (std::size_t g = 0; g < group_by.size(); ++g) tc.attributes.push_back({group_by[g], key[g]});
        }
        ++*tc.total;
        if (rec.result != InspectionResult::not_inspected) ++tc.inspected;
        if (rec.result == InspectionResult::failed) ++tc.repaired;
    }

    std::vector<TypeCounts> out;
    out.reserve(groups.size());
    for (auto& [key, tc] : groups) out.push_back(std::move(tc));
    // The map already orders by attribute values, so a stable sort on total
    // leaves ties in that order.
    std::stable_sort(out.begin(), out.end(),
                     [](const TypeCounts& x, const TypeCounts& y) { return *x.total > *y.total; });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].type_id = std::to_string(i + 1);
    return out;
}

std::vector<TypeCounts> read_aggregated(const std::filesystem::path& path,
                                        const AggregatedSchema& schema) {
    const auto table = csv::read_file(path);
    const auto type_col = require_column(table, schema.type_column, path);
    const auto insp_col = require_column(table, schema.inspected_column, path);
    const auto rep_col = require_column(table, schema.repaired_column, path);
    std::optional<std::size_t> total_col;
    if (schema.total_column) total_col = require_column(table, *schema.total_column, path);
    const auto attr_cols = require_columns(table, schema.attribute_columns, path);

    std::vector<TypeCounts> out;
    std::set<std::string> seen;
    for (const auto& row : table.rows) {
        const auto where = at_line(row.line);
        TypeCounts tc;
        tc.type_id = trimmed(row.fields[type_col]);
        if (tc.type_id.empty()) throw Error(Errc::value, kModule, where + "empty type id");
        if (!seen.insert(tc.type_id).second) {
            throw Error(Errc::duplicate_label, kModule, where + "duplicate type id '" + tc.type_id + "'");
        }
        for (std::size_t a = 0; a < attr_cols.size(); ++a) {
            tc.attributes.push_back({schema.attribute_columns[a], trimmed(row.fields[attr_cols[a]])});
        }
        tc.inspected = csv::parse_count(row.fields[insp_col], where + schema.inspected_column);
        tc.repaired = csv::parse_count(row.fields[rep_col], where + schema.repaired_column);
        if (total_col) tc.total = csv::parse_count(row.fields[*total_col], where + *schema.total_column);
        try {
            validate(tc);
        } catch (const Error& e) {
            throw Error(e.code(), kModule, where + e.what());
        }
        out.push_back(std::move(tc));
    }
    return out;
}

TopN top_n_by_business(std::span<const TypeCounts> counts, std::size_t n,
                       std::optional<std::uint64_t> grand_total) {
    for (const auto& c : counts) {
        if (!c.total) {
            throw Error(Errc::cannot_rank, kModule,
                        "type " + c.type_id + " has no total; business ranking needs totals");
        }
    }
    if (n == 0 || n > counts.size()) {
        throw Error(Errc::inconsistent_input, kModule,
                    "top-N must be between 1 and " + std::to_string(counts.size()) + ", got " +
                        std::to_string(n));
    }
    const std::uint64_t sum = std::accumulate(
        counts.begin(), counts.end(), std::uint64_t{0},
        [](std::uint64_t acc, const TypeCounts& c) { return acc + *c.total; });
    const std::uint64_t grand = grand_total.value_or(sum);
    if (grand < sum || grand == 0) {
        throw Error(Errc::inconsistent_input, kModule,
                    "grand total " + std::to_string(grand) + " is below the sum of type totals (" +
                        std::to_string(sum) + ") or zero");
    }

    std::vector<std::size_t> order(counts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (*counts[i].total != *counts[j].total) return *counts[i].total > *counts[j].total;
        return natural_less(counts[i].type_id, counts[j].type_id);
    });

    TopN out;
    out.summary.grand_total = grand;
    std::uint64_t running = 0;
    for (std::size_t r = 0; r < order.size(); ++r) {
        const auto& c = counts[order[r]];
        running += *c.total;
        out.summary.entries.push_back({c.type_id, *c.total,
                                       static_cast<double>(*c.total) / static_cast<double>(grand),
                                       static_cast<double>(running) / static_cast<double>(grand)});
        if (r < n) out.selected.push_back(c);
    }
    return out;
}

}  // namespace cplx
