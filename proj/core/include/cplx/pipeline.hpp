#pragma once

// End-to-end run: ingest, analyze, render artifacts, write them atomically.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cplx/ingest.hpp"
#include "cplx/report.hpp"

namespace cplx {

enum class InputMode { raw, aggregated };

/// How far a run goes. Each stage includes the ones before it.
enum class Stage { distance, score, cluster, analyze };

struct RunConfig {
    std::filesystem::path input;
    InputMode mode = InputMode::aggregated;
    std::string type_col = "type_id";
    std::vector<std::string> attrs;  // attribute columns; the group-by key in raw mode
    std::string result_col = "result";
    std::optional<std::string> item_col;
    std::string inspected_col = "inspected";
    std::string repaired_col = "repaired";
    std::optional<std::string> total_col;
    std::optional<std::size_t> top_n;
    std::optional<std::uint64_t> grand_total;
    std::optional<std::size_t> k;
    std::filesystem::path out_dir = ".";
    std::vector<std::string> emit{"json", "csv"};
    std::string run_id = "none";
    BoxplotOrder boxplot_order = BoxplotOrder::input;
    Stage stage = Stage::analyze;
};

/// Reads the input file per the configured mode and column mapping.
std::vector<TypeCounts> load_counts(const RunConfig& config);

/**
 * Runs the analysis on counts already in memory.
 *
 * Types with nothing inspected are dropped with a warning. Throws
 * Errc::invalid_k unless 1 <= k <= number of analyzed types.
 */
AnalysisReport analyze_counts(const std::vector<TypeCounts>& counts, const RunConfig& config);

/// (file name, contents) in a fixed order.
using Artifacts = std::vector<std::pair<std::string, std::string>>;

/// Documents selected by config.emit for config.stage. Unknown formats, or
/// formats with nothing to render at the stage, throw Errc::usage.
Artifacts render_artifacts(const AnalysisReport& report, const RunConfig& config);

/// Writes every artifact to a temporary file first and renames only once all
/// writes succeeded. Throws Errc::io.
std::vector<std::filesystem::path> write_artifacts(const std::filesystem::path& dir,
                                                   const Artifacts& artifacts);

struct RunResult {
    AnalysisReport report;
    std::vector<std::filesystem::path> written;
};

/// load_counts, analyze_counts, render_artifacts, write_artifacts.
RunResult run_pipeline(const RunConfig& config);

}  // namespace cplx
