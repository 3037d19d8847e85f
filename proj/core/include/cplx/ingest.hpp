#pragma once

// File ingestion: per-item inspection rows or pre-aggregated counts, grouping
// by design attributes, and business-volume ranking.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <span>
#include <string>
#include <vector>

#include "cplx/posterior.hpp"

namespace cplx {

enum class InspectionResult : std::uint8_t {
    not_inspected = 0,
    passed = 1,
    failed = 2,
};

struct InspectionRecord {
    std::optional<std::string> item_id;
    std::vector<Attribute> attributes;
    InspectionResult result = InspectionResult::not_inspected;

    friend bool operator==(const InspectionRecord&, const InspectionRecord&) = default;
};

struct RawSchema {
    std::vector<std::string> attribute_columns;
    std::string result_column;
    std::optional<std::string> item_id_column;
};

struct AggregatedSchema {
    std::string type_column;
    std::string inspected_column;
    std::string repaired_column;
    std::optional<std::string> total_column;
    std::vector<std::string> attribute_columns;
};

/// One record per data row. Missing columns throw Errc::schema; a result
/// outside {0,1,2} throws Errc::value naming the line.
std::vector<InspectionRecord> read_raw(const std::filesystem::path& path, const RawSchema& schema);

/// One TypeCounts per distinct combination of the `group_by` attributes.
/// Type ids are "1", "2", ... in descending total, ties by attribute values,
/// so the result does not depend on record order.
std::vector<TypeCounts> aggregate(std::span<const InspectionRecord> records,
                                  std::span<const std::string> group_by);

/// Counts validated per row; errors name the line. Duplicate type ids throw
/// Errc::duplicate_label.
std::vector<TypeCounts> read_aggregated(const std::filesystem::path& path,
                                        const AggregatedSchema& schema);

struct BusinessEntry {
    std::string type_id;
    std::uint64_t total = 0;
    double fraction = 0.0;    // total / grand total
    double cumulative = 0.0;  // running sum of fraction in rank order
};

struct BusinessSummary {
    std::uint64_t grand_total = 0;
    std::vector<BusinessEntry> entries;  // every input type, rank order
};

struct TopN {
    std::vector<TypeCounts> selected;
    BusinessSummary summary;
};

/// Ranks by total descending (ties: type id in natural order) and keeps the
/// first `n`. The grand total defaults to the sum of all totals; a larger
/// caller-supplied value accounts for types absent from the input.
/// Missing totals throw Errc::cannot_rank.
TopN top_n_by_business(std::span<const TypeCounts> counts, std::size_t n,
                       std::optional<std::uint64_t> grand_total = std::nullopt);

/// "2" < "10" < "10a" < "b": digit runs compare by value.
bool natural_less(std::string_view lhs, std::string_view rhs);

}  // namespace cplx
