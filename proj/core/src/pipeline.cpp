#include "cplx/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "cplx/clustering.hpp"
#include "cplx/divergence.hpp"
#include "cplx/error.hpp"
#include "cplx/posterior.hpp"
#include "cplx/scoring.hpp"

namespace cplx {

namespace {

constexpr std::string_view kModule = "cli";

std::string_view mode_name(InputMode m) { return m == InputMode::raw ? "raw" : "aggregated"; }

}  // namespace

std::vector<TypeCounts> load_counts(const RunConfig& config) {
    if (config.mode == InputMode::raw) {
        if (config.attrs.empty()) {
            throw Error(Errc::usage, kModule, "raw input needs at least one attribute column to group by");
        }
        const auto records = read_raw(config.input, {config.attrs, config.result_col, config.item_col});
        return aggregate(records, config.attrs);
    }
    return read_aggregated(config.input, {config.type_col, config.inspected_col, config.repaired_col,
                                          config.total_col, config.attrs});
}

AnalysisReport analyze_counts(const std::vector<TypeCounts>& counts, const RunConfig& config) {
    AnalysisReport report;
    auto& prov = report.provenance;
    prov.input = config.input.string();
    prov.mode = mode_name(config.mode);
    prov.group_by = config.attrs;
    prov.top_n = config.top_n;
    prov.k = config.k;
    prov.tool_version = tool_version();
    prov.run_id = config.run_id;

    if (counts.empty()) throw Error(Errc::inconsistent_input, kModule, "input has no types");

    // Business ranking: explicit top-N, or the full set whenever totals exist.
    std::set<std::string> selected;
    const bool have_totals = std::all_of(counts.begin(), counts.end(), [](const auto& c) { return c.total.has_value(); });
    if (config.top_n || config.grand_total || have_totals) {
        auto top = top_n_by_business(counts, config.top_n.value_or(counts.size()), config.grand_total);
        for (const auto& c : top.selected) selected.insert(c.type_id);
        report.business = std::move(top.summary);
    } else {
        for (const auto& c : counts) selected.insert(c.type_id);
    }

    std::vector<LabeledPosterior> posteriors;
    std::map<std::string, const TypeCounts*> source;
    for (const auto& c : counts) {
        if (!selected.contains(c.type_id)) continue;
        if (c.inspected == 0) {
            report.warnings.push_back("type " + c.type_id + ": nothing inspected; excluded from analysis");
            continue;
        }
        posteriors.push_back({c.type_id, posterior_from_counts(c)});
        source.emplace(c.type_id, &c);
        report.input_order.push_back(c.type_id);
    }
    prov.n_analyzed = posteriors.size();
    if (posteriors.empty()) {
        throw Error(Errc::inconsistent_input, kModule, "no type with inspected items left to analyze");
    }
    if (config.k && (*config.k < 1 || *config.k > posteriors.size())) {
        throw Error(Errc::invalid_k, kModule,
                    "k must be between 1 and " + std::to_string(posteriors.size()) +
                        " (analyzed types), got " + std::to_string(*config.k));
    }

    report.matrix = build_matrix(posteriors);
    if (config.stage == Stage::distance) return report;

    report.scored = score_types(posteriors, report.matrix);
    for (auto& t : report.scored) t.attributes = source.at(t.type_id)->attributes;
    if (report.scored.size() > 1 &&
        std::all_of(report.scored.begin(), report.scored.end(), [](const auto& t) { return t.raw_score == 0.0; })) {
        report.warnings.push_back("all posteriors coincide; every score is 0");
    }
    if (config.stage == Stage::score) return report;

    report.dendrogram = agglomerate(report.matrix);
    if (config.k) {
        std::map<std::string, double> business;
        if (report.business) {
            for (const auto& e : report.business->entries) {
                if (source.contains(e.type_id)) business.emplace(e.type_id, e.fraction);
            }
        }
        report.clusters = label_clusters(cut(*report.dendrogram, *config.k), report.scored, business);
    }
    return report;
}

Artifacts render_artifacts(const AnalysisReport& report, const RunConfig& config) {
    const auto at_least = [&](Stage s) { return config.stage >= s; };
    std::set<std::string> formats;
    for (const auto& f : config.emit) {
        if (f != "json" && f != "csv" && f != "newick" && f != "ascii" && f != "svg") {
            throw Error(Errc::usage, kModule, "unknown output format '" + f + "' (json, csv, newick, ascii, svg)");
        }
        if ((f == "newick" || f == "svg") && !at_least(Stage::cluster)) {
            throw Error(Errc::usage, kModule, "'" + f + "' output needs the cluster or analyze command");
        }
        if (f == "ascii" && !at_least(Stage::score)) {
            throw Error(Errc::usage, kModule, "'ascii' output needs the score, cluster or analyze command");
        }
        formats.insert(f);
    }

    Artifacts out;
    for (const auto& [fmt, ext] : {std::pair{TableFormat::json, "json"}, std::pair{TableFormat::csv, "csv"}}) {
        if (!formats.contains(ext)) continue;
        const std::string e = ext;
        out.emplace_back("matrix." + e, fmt == TableFormat::json ? matrix_to_json(report.matrix)
                                                                 : matrix_to_csv(report.matrix));
        if (!at_least(Stage::score)) continue;
        out.emplace_back("scores." + e, emit_score_table(report, fmt));
        out.emplace_back("boxplot." + e, emit_boxplot_data(report, config.boxplot_order, fmt));
        if (!at_least(Stage::cluster)) continue;
        if (fmt == TableFormat::json) out.emplace_back("dendrogram.json", emit_dendrogram(report, DendrogramFormat::json));
        if (report.clusters) out.emplace_back("clusters." + e, emit_clusters(report, fmt));
        if (!at_least(Stage::analyze)) continue;
        if (report.business) out.emplace_back("business." + e, emit_business_summary(report, fmt));
        if (fmt == TableFormat::json) out.emplace_back("report.json", emit_report_json(report));
    }
    if (formats.contains("ascii")) {
        out.emplace_back("scores.txt", render_score_table(report));
        if (at_least(Stage::cluster)) out.emplace_back("dendrogram.txt", emit_dendrogram(report, DendrogramFormat::ascii));
    }
    if (formats.contains("newick")) out.emplace_back("dendrogram.nwk", emit_dendrogram(report, DendrogramFormat::newick));
    if (formats.contains("svg")) out.emplace_back("dendrogram.svg", emit_dendrogram(report, DendrogramFormat::svg));
    return out;
}

std::vector<std::filesystem::path> write_artifacts(const std::filesystem::path& dir,
                                                   const Artifacts& artifacts) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(Errc::io, kModule, "cannot create " + dir.string() + ": " + ec.message());

    std::vector<fs::path> temps;
    auto discard = [&] {
        for (const auto& t : temps) fs::remove(t, ec);
    };
    for (const auto& [name, content] : artifacts) {
        const auto tmp = dir / ("." + name + ".tmp");
        temps.push_back(tmp);
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << content;
        f.close();
        if (!f) {
            discard();
            throw Error(Errc::io, kModule, "cannot write " + tmp.string());
        }
    }
    // Existing files are set aside so a failed rename can be undone.
    std::vector<fs::path> written;
    std::vector<std::pair<fs::path, fs::path>> backups;  // (backup, original)
    auto roll_back = [&] {
        for (const auto& w : written) fs::remove(w, ec);
        for (const auto& [bak, orig] : backups) fs::rename(bak, orig, ec);
        discard();
    };
    for (std::size_t i = 0; i < artifacts.size(); ++i) {
        const auto target = dir / artifacts[i].first;
        if (fs::is_regular_file(target, ec)) {
            const auto bak = dir / ("." + artifacts[i].first + ".bak");
            fs::rename(target, bak, ec);
            if (!ec) backups.emplace_back(bak, target);
        }
        fs::rename(temps[i], target, ec);
        if (ec) {
            const auto why = ec.message();
            roll_back();
            throw Error(Errc::io, kModule, "cannot rename to " + target.string() + ": " + why);
        }
        written.push_back(target);
    }
    for (const auto& [bak, orig] : backups) fs::remove(bak, ec);
    return written;
}

RunResult run_pipeline(const RunConfig& config) {
    RunResult result;
    result.report = analyze_counts(load_counts(config), config);
    result.written = write_artifacts(config.out_dir, render_artifacts(result.report, config));
    return result;
}

}  // namespace cplx
