#pragma once

// Rendering of analysis results. Every function here is a pure function of
// its arguments: equal reports give byte-identical documents.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cplx/clustering.hpp"
#include "cplx/divergence.hpp"
#include "cplx/ingest.hpp"
#include "cplx/scoring.hpp"

namespace cplx {

/// Library version, e.g. "0.3.0".
std::string_view tool_version() noexcept;

struct Provenance {
    std::string input;
    std::string mode;  // "raw" or "aggregated"
    std::vector<std::string> group_by;
    std::size_t n_analyzed = 0;
    std::optional<std::size_t> top_n;
    std::optional<std::size_t> k;
    std::string tool_version;
    std::string run_id;
};

struct AnalysisReport {
    std::vector<ScoredType> scored;           // rank order, least complex first
    std::vector<std::string> input_order;     // analyzed type ids as read
    DistanceMatrix matrix{std::vector<std::string>{}};
    std::optional<Dendrogram> dendrogram;
    std::optional<ClusterAssignment> clusters;  // labeled groups when k was given
    std::optional<BusinessSummary> business;
    std::vector<std::string> warnings;
    Provenance provenance;
};

enum class TableFormat { csv, json };
enum class BoxplotOrder { input, business };
enum class DendrogramFormat { json, newick, ascii, svg };

/// Throws Errc::usage for anything but json, newick, ascii or svg.
DendrogramFormat parse_dendrogram_format(std::string_view name);

/// Score at one decimal, as printed in human-facing output.
std::string one_decimal(double value);

/// "<id>.(<v1>, <v2>, ...).[<score>]", or "<id>.[<score>]" without attributes.
std::string leaf_label(const ScoredType& t);

/**
 * Machine-readable score table, highest scaled score first, values at full
 * precision. CSV columns: type_id, one per attribute, alpha, beta, median,
 * variance, raw_score, scaled_score, rank.
 */
std::string emit_score_table(const AnalysisReport& report, TableFormat format);

/// Inverse of emit_score_table. Throws Errc::schema on malformed input.
std::vector<ScoredType> read_score_table(std::string_view text, TableFormat format);

/// Fixed-width text table, scores at one decimal.
std::string render_score_table(const AnalysisReport& report);

/// Five-number summary per type. Business order needs a business summary
/// and throws Errc::cannot_rank without one.
std::string emit_boxplot_data(const AnalysisReport& report, BoxplotOrder order, TableFormat format);

/// Per-rank business fractions.
std::string emit_business_summary(const AnalysisReport& report, TableFormat format);

/// Cluster groups with letters, members, mean score and business fraction.
std::string emit_clusters(const AnalysisReport& report, TableFormat format);

/// Tree rendering; groups are annotated with their letters when the report
/// carries a cut. Throws Errc::inconsistent_input without a dendrogram.
std::string emit_dendrogram(const AnalysisReport& report, DendrogramFormat format);

/// Everything above in one JSON document.
std::string emit_report_json(const AnalysisReport& report);

}  // namespace cplx
