// cplx: product-type complexity from pass/fail inspection counts.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "cplx/error.hpp"
#include "cplx/pipeline.hpp"
#include "cplx/report.hpp"

namespace {

void add_run_options(CLI::App& cmd, cplx::RunConfig& cfg, bool clusters) {
    cmd.add_option("--input", cfg.input, "CSV file to analyze")->required();
    cmd.add_option_function<std::string>(
           "--mode",
           [&cfg](const std::string& v) { cfg.mode = v == "raw" ? cplx::InputMode::raw : cplx::InputMode::aggregated; },
           "Input shape: raw (one row per item) or aggregated (one row per type)")
        ->check(CLI::IsMember({"raw", "aggregated"}))
        ->default_str("aggregated");
    cmd.add_option("--type-col", cfg.type_col, "Type id column (aggregated)")->capture_default_str();
    cmd.add_option("--attrs", cfg.attrs, "Attribute columns, comma-separated; the grouping key for raw input")
        ->delimiter(',');
    cmd.add_option("--result-col", cfg.result_col, "Inspection result column, values 0/1/2 (raw)")
        ->capture_default_str();
    cmd.add_option("--item-col", cfg.item_col, "Item id column (raw, optional)");
    cmd.add_option("--inspected-col", cfg.inspected_col, "Inspected count column (aggregated)")
        ->capture_default_str();
    cmd.add_option("--repaired-col", cfg.repaired_col, "Repaired count column (aggregated)")
        ->capture_default_str();
    cmd.add_option("--total-col", cfg.total_col, "Total count column (aggregated, optional)");
    cmd.add_option("--top", cfg.top_n, "Keep the N types with the largest totals")->check(CLI::PositiveNumber);
    cmd.add_option("--grand-total", cfg.grand_total,
                   "Denominator for business fractions when the input lists only some types")
        ->check(CLI::PositiveNumber);
    if (clusters) cmd.add_option("--k", cfg.k, "Number of clusters to cut the dendrogram into");
    cmd.add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    cmd.add_option("--emit", cfg.emit, "Output formats: json,csv,newick,ascii,svg")
        ->delimiter(',')
        ->default_str("json,csv");
    cmd.add_option("--run-id", cfg.run_id, "Identifier recorded in the report provenance")->capture_default_str();
    cmd.add_option_function<std::string>(
           "--boxplot-order",
           [&cfg](const std::string& v) {
               cfg.boxplot_order = v == "business" ? cplx::BoxplotOrder::business : cplx::BoxplotOrder::input;
           },
           "Boxplot row order: input or business (largest total first)")
        ->check(CLI::IsMember({"input", "business"}))
        ->default_str("input");
}

void print_summary(const cplx::RunResult& result, const cplx::RunConfig& cfg) {
    const auto& r = result.report;
    if (cfg.stage >= cplx::Stage::score) std::cout << cplx::render_score_table(r);
    if (r.clusters) {
        std::cout << "\n";
        for (const auto& g : r.clusters->groups) {
            std::cout << g.label << ":";
            for (const auto& m : g.members) std::cout << ' ' << m;
            std::cout << "\n";
        }
    }
    if (cfg.stage == cplx::Stage::distance) {
        std::cout << r.matrix.size() << " types, " << r.matrix.size() * (r.matrix.size() - 1) / 2
                  << " distances\n";
    }
    for (const auto& p : result.written) std::cout << "wrote " << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Product-type complexity from pass/fail inspection counts", "cplx"};
    app.set_version_flag("--version", std::string(cplx::tool_version()));
    app.require_subcommand(1);

    cplx::RunConfig cfg;
    struct Command {
        const char* name;
        const char* help;
        cplx::Stage stage;
    };
    const Command commands[] = {
        {"analyze", "Full pipeline: scores, clusters, business summary and report", cplx::Stage::analyze},
        {"distance", "Pairwise Hellinger distance matrix only", cplx::Stage::distance},
        {"score", "Distance matrix and complexity scores", cplx::Stage::score},
        {"cluster", "Scores and the complete-linkage dendrogram", cplx::Stage::cluster},
    };
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        add_run_options(*sub, cfg, c.stage >= cplx::Stage::cluster);
        sub->callback([&cfg, stage = c.stage] { cfg.stage = stage; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cplx::exit_code(cplx::Errc::usage);
    }

    try {
        const auto result = cplx::run_pipeline(cfg);
        for (const auto& w : result.report.warnings) std::cerr << "warning: " << w << "\n";
        print_summary(result, cfg);
    } catch (const cplx::Error& e) {
        std::cerr << e.diagnostic() << "\n";
        return cplx::exit_code(e.code());
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error[cli/io]: " << e.what() << "\n";
        return cplx::exit_code(cplx::Errc::io);
    }
    return 0;
}
