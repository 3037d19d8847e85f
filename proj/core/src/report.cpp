#include "cplx/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>

#include <json.hpp>

#include "cplx/csv.hpp"
#include "cplx/error.hpp"

namespace cplx {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kModule = "report";
constexpr std::array<std::string_view, 7> kScoreColumns{
    "alpha", "beta", "median", "variance", "raw_score", "scaled_score", "rank"};

std::string fixed(double value, int digits) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, digits);
    return std::string(buf, res.ptr);
}

std::string percent(double fraction) { return fixed(100.0 * fraction, 1) + "%"; }

Json attributes_json(const std::vector<Attribute>& attrs) {
    Json out = Json::object();
    for (const auto& a : attrs) out[a.name] = a.value;
    return out;
}

std::vector<std::string> attribute_names(const AnalysisReport& r) {
    std::vector<std::string> out;
    if (!r.scored.empty()) {
        for (const auto& a : r.scored.front().attributes) out.push_back(a.name);
    }
    return out;
}

std::map<std::string, const ScoredType*> by_id(const AnalysisReport& r) {
    std::map<std::string, const ScoredType*> out;
    for (const auto& t : r.scored) out.emplace(t.type_id, &t);
    return out;
}

Json score_json(const ScoredType& t) {
    return Json{{"type_id", t.type_id},
                {"attributes", attributes_json(t.attributes)},
                {"alpha", t.posterior.a()},
                {"beta", t.posterior.b()},
                {"median", t.median},
                {"variance", t.variance},
                {"raw_score", t.raw_score},
                {"scaled_score", t.scaled_score},
                {"rank", t.rank}};
}

Json scores_json(const AnalysisReport& r) {
    Json out = Json::array();
    for (auto it = r.scored.rbegin(); it != r.scored.rend(); ++it) out.push_back(score_json(*it));
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<const ScoredType*> boxplot_rows(const AnalysisReport& r, BoxplotOrder order) {
    const auto index = by_id(r);
    std::vector<const ScoredType*> out;
    if (order == BoxplotOrder::input) {
        for (const auto& id : r.input_order) {
            if (auto it = index.find(id); it != index.end()) out.push_back(it->second);
        }
        return out;
    }
    if (!r.business) {
        throw Error(Errc::cannot_rank, kModule, "business order requested but no totals were given");
    }
    for (const auto& e : r.business->entries) {
        if (auto it = index.find(e.type_id); it != index.end()) out.push_back(it->second);
    }
    return out;
}

Json boxplot_json(const AnalysisReport& r, BoxplotOrder order) {
    Json out = Json::array();
    for (const auto* t : boxplot_rows(r, order)) {
        const auto s = five_number_summary(t->posterior);
        out.push_back(Json{{"type_id", t->type_id},
                           {"attributes", attributes_json(t->attributes)},
                           {"min", s.min},
                           {"q1", s.q1},
                           {"median", s.median},
                           {"q3", s.q3},
                           {"max", s.max}});
    }
    return out;
}

const BusinessSummary& require_business(const AnalysisReport& r) {
    if (!r.business) throw Error(Errc::cannot_rank, kModule, "no business summary: totals were not given");
    return *r.business;
}

Json business_json(const BusinessSummary& b) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < b.entries.size(); ++i) {
        const auto& e = b.entries[i];
        entries.push_back(Json{{"rank", i + 1},
                               {"type_id", e.type_id},
                               {"total", e.total},
                               {"fraction", e.fraction},
                               {"cumulative", e.cumulative}});
    }
    return Json{{"grand_total", b.grand_total}, {"entries", entries}};
}

const ClusterAssignment& require_clusters(const AnalysisReport& r) {
    if (!r.clusters) throw Error(Errc::inconsistent_input, kModule, "no cluster cut in this report");
    return *r.clusters;
}

Json clusters_json(const ClusterAssignment& c) {
    Json groups = Json::array();
    for (const auto& g : c.groups) {
        Json j{{"label", g.label}, {"members", g.members}, {"mean_scaled_score", g.mean_scaled_score}};
        j["business_fraction"] = g.business_fraction ? Json(*g.business_fraction) : Json(nullptr);
        groups.push_back(std::move(j));
    }
    return Json{{"k", c.k}, {"groups", groups}};
}

// ---- dendrogram geometry -------------------------------------------------

const Dendrogram& require_tree(const AnalysisReport& r) {
    if (!r.dendrogram) throw Error(Errc::inconsistent_input, kModule, "report has no dendrogram");
    return *r.dendrogram;
}

// Nodes are numbered leaves first (0..n-1), then merges (n..2n-2).
std::size_t node_id(const Dendrogram& t, NodeRef ref) {
    return ref.is_leaf() ? ref.index : t.leaves.size() + ref.index;
}

double node_height(const Dendrogram& t, NodeRef ref) {
    return ref.is_leaf() ? 0.0 : t.merges[ref.index].height;
}

/// Node id of each group's subtree root, or none when no cut is present.
std::map<std::size_t, const ClusterGroup*> cluster_roots(const AnalysisReport& r) {
    std::map<std::size_t, const ClusterGroup*> out;
    if (!r.clusters || !r.dendrogram) return out;
    const auto& t = *r.dendrogram;
    const std::size_t n = t.leaves.size();
    const std::size_t kept = n - r.clusters->k;  // merges inside groups
    std::vector<std::size_t> parent(n + t.merges.size(), SIZE_MAX);
    for (std::size_t m = 0; m < t.merges.size(); ++m) {
        parent[node_id(t, t.merges[m].left)] = m;
        parent[node_id(t, t.merges[m].right)] = m;
    }
    std::map<std::string, const ClusterGroup*> group_of;
    for (const auto& g : r.clusters->groups) {
        for (const auto& id : g.members) group_of[id] = &g;
    }
    auto consider = [&](NodeRef ref) {
        const auto id = node_id(t, ref);
        if (parent[id] != SIZE_MAX && parent[id] < kept) return;
        const auto first = t.members(ref).front();
        if (auto it = group_of.find(t.leaves[first]); it != group_of.end()) out.emplace(id, it->second);
    };
    for (std::size_t i = 0; i < n; ++i) consider(NodeRef::leaf(i));
    for (std::size_t m = 0; m < kept; ++m) consider(NodeRef::merge(m));
    return out;
}

std::string group_note(const ClusterGroup& g) {
    std::string s = g.label;
    if (g.business_fraction) s += " " + percent(*g.business_fraction);
    return s;
}

std::vector<std::string> leaf_labels(const AnalysisReport& r, const Dendrogram& t) {
    const auto index = by_id(r);
    std::vector<std::string> out;
    for (const auto& id : t.leaves) {
        auto it = index.find(id);
        out.push_back(it == index.end() ? id : leaf_label(*it->second));
    }
    return out;
}

std::string dendrogram_json(const AnalysisReport& r, const Dendrogram& t) {
    const auto labels = leaf_labels(r, t);
    Json leaves = Json::array();
    for (std::size_t i = 0; i < t.leaves.size(); ++i) {
        leaves.push_back(Json{{"index", i}, {"type_id", t.leaves[i]}, {"label", labels[i]}});
    }
    auto ref_json = [](NodeRef ref) {
        return Json{{ref.is_leaf() ? "leaf" : "merge", ref.index}};
    };
    Json merges = Json::array();
    for (const auto& m : t.merges) {
        merges.push_back(Json{{"left", ref_json(m.left)},
                              {"right", ref_json(m.right)},
                              {"height", m.height},
                              {"size", m.size}});
    }
    Json doc{{"leaves", leaves}, {"merges", merges}, {"leaf_order", t.leaf_order()}};
    if (r.clusters) doc["clusters"] = clusters_json(*r.clusters);
    return dump(doc);
}

std::string newick_quote(std::string_view s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out.push_back('\'');
        out.push_back(c);
    }
    out.push_back('\'');
    return out;
}

std::string dendrogram_newick(const AnalysisReport& r, const Dendrogram& t) {
    const auto labels = leaf_labels(r, t);
    const auto roots = cluster_roots(r);
    std::string out;
    // Explicit stack: (node, parent height, stage). Deep chains must not recurse.
    struct Frame {
        NodeRef ref;
        double parent_height;
        int stage;
    };
    std::vector<Frame> stack{{t.root(), node_height(t, t.root()), 0}};
    while (!stack.empty()) {
        auto& f = stack.back();
        const auto ref = f.ref;
        auto close = [&] {
            if (auto it = roots.find(node_id(t, ref)); it != roots.end()) {
                out += "[&&NHX:cluster=" + it->second->label;
                if (it->second->business_fraction) {
                    out += ":business=" + csv::format_double(*it->second->business_fraction);
                }
                out += "]";
            }
            if (!(ref == t.root())) out += ":" + csv::format_double(f.parent_height - node_height(t, ref));
        };
        if (ref.is_leaf()) {
            out += newick_quote(labels[ref.index]);
            close();
            stack.pop_back();
            continue;
        }
        const auto& m = t.merges[ref.index];
        if (f.stage == 0) {
            out += "(";
            f.stage = 1;
            stack.push_back({m.left, m.height, 0});
        } else if (f.stage == 1) {
            out += ",";
            f.stage = 2;
            stack.push_back({m.right, m.height, 0});
        } else {
            out += ")";
            close();
            stack.pop_back();
        }
    }
    return out + ";\n";
}

struct Layout {
    std::vector<double> y;  // per node id: row (leaves integral)
    double max_height = 0.0;
};

Layout layout(const Dendrogram& t) {
    const std::size_t n = t.leaves.size();
    Layout l;
    l.y.assign(n + t.merges.size(), 0.0);
    const auto order = t.leaf_order();
    for (std::size_t row = 0; row < order.size(); ++row) l.y[order[row]] = static_cast<double>(row);
    for (std::size_t m = 0; m < t.merges.size(); ++m) {
        l.y[n + m] = 0.5 * (l.y[node_id(t, t.merges[m].left)] + l.y[node_id(t, t.merges[m].right)]);
        l.max_height = std::max(l.max_height, t.merges[m].height);
    }
    return l;
}

std::string dendrogram_ascii(const AnalysisReport& r, const Dendrogram& t) {
    constexpr std::size_t kWidth = 50;
    const std::size_t n = t.leaves.size();
    const auto labels = leaf_labels(r, t);
    const auto roots = cluster_roots(r);
    std::size_t label_width = 0;
    for (const auto& s : labels) label_width = std::max(label_width, s.size());

    const auto geo = layout(t);
    // Column of each node's vertical bar; leaves sit on the gap after the label.
    const std::size_t origin = label_width + 1;
    std::vector<std::size_t> col(n + t.merges.size(), origin - 1);
    std::vector<std::size_t> row(n + t.merges.size(), 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = static_cast<std::size_t>(geo.y[i]);
    std::size_t right = origin;
    for (std::size_t m = 0; m < t.merges.size(); ++m) {
        const auto l = node_id(t, t.merges[m].left), rr = node_id(t, t.merges[m].right);
        const double frac = geo.max_height > 0 ? t.merges[m].height / geo.max_height : 0.0;
        auto c = origin + 1 + static_cast<std::size_t>(std::lround(frac * kWidth));
        c = std::max({c, col[l] + 2, col[rr] + 2});
        col[n + m] = c;
        row[n + m] = (row[l] + row[rr]) / 2;
        right = std::max(right, c);
    }

    std::vector<std::string> grid(n, std::string(right + 1, ' '));
    for (std::size_t i = 0; i < n; ++i) grid[row[i]].replace(0, labels[i].size(), labels[i]);
    for (std::size_t m = 0; m < t.merges.size(); ++m) {
        const auto c = col[n + m];
        const auto l = node_id(t, t.merges[m].left), rr = node_id(t, t.merges[m].right);
        for (auto child : {l, rr}) {
            for (auto x = col[child] + 1; x < c; ++x) grid[row[child]][x] = '-';
        }
        const auto top = std::min(row[l], row[rr]), bottom = std::max(row[l], row[rr]);
        for (auto y = top; y <= bottom; ++y) grid[y][c] = (y == top || y == bottom) ? '+' : '|';
        grid[row[n + m]][c] = '+';
    }

    // Group letters ride on the branch leaving each group's root.
    for (const auto& [id, g] : roots) {
        auto& line = grid[row[id]];
        const auto at = col[id] + 1;
        if (line.size() < at + g->label.size()) line.resize(at + g->label.size(), ' ');
        line.replace(at, g->label.size(), g->label);
    }

    std::string out;
    for (auto& line : grid) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    if (!t.merges.empty()) {
        out += std::string(origin, ' ') + "+" + std::string(right - origin - 1, '-') + "+\n";
        const std::string lo = "0", hi = fixed(geo.max_height, 4);
        const auto pad = right + 1 > origin + lo.size() + hi.size() ? right + 1 - origin - lo.size() - hi.size() : 1;
        out += std::string(origin, ' ') + lo + std::string(pad, ' ') + hi + "  (height)\n";
    }
    if (r.clusters) {
        out += "\n";
        for (const auto& g : r.clusters->groups) {
            out += g.label + ": mean score " + fixed(g.mean_scaled_score, 2);
            if (g.business_fraction) out += ", business " + percent(*g.business_fraction);
            out += ", types";
            for (std::size_t i = 0; i < g.members.size(); ++i) out += (i ? ", " : " ") + g.members[i];
            out += "\n";
        }
    }
    return out;
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string dendrogram_svg(const AnalysisReport& r, const Dendrogram& t) {
    constexpr double kRow = 20.0, kCharW = 7.2, kTree = 420.0, kMargin = 10.0;
    const std::size_t n = t.leaves.size();
    const auto labels = leaf_labels(r, t);
    const auto roots = cluster_roots(r);
    std::size_t label_chars = 0;
    for (const auto& s : labels) label_chars = std::max(label_chars, s.size());
    const double x0 = kMargin + kCharW * static_cast<double>(label_chars) + 8.0;
    const auto geo = layout(t);
    auto x_of = [&](double h) { return x0 + (geo.max_height > 0 ? h / geo.max_height * kTree : 0.0); };
    auto y_of = [&](double row) { return kMargin + kRow * (row + 0.5); };
    const double width = x0 + kTree + 60.0;
    const double height = kMargin * 2 + kRow * static_cast<double>(n) + 30.0;

    auto num = [](double v) { return fixed(v, 2); };
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                      "\" height=\"" + num(height) + "\" font-family=\"monospace\" font-size=\"12\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < n; ++i) {
        out += "<text x=\"" + num(x0 - 6.0) + "\" y=\"" + num(y_of(geo.y[i]) + 4.0) +
               "\" text-anchor=\"end\">" + xml_escape(labels[i]) + "</text>\n";
    }
    out += "<g stroke=\"black\" fill=\"none\">\n";
    for (std::size_t m = 0; m < t.merges.size(); ++m) {
        const auto& mg = t.merges[m];
        const double xc = x_of(mg.height);
        const double xl = x_of(node_height(t, mg.left)), yl = y_of(geo.y[node_id(t, mg.left)]);
        const double xr = x_of(node_height(t, mg.right)), yr = y_of(geo.y[node_id(t, mg.right)]);
        out += "<path d=\"M" + num(xl) + " " + num(yl) + " H" + num(xc) + " V" + num(yr) + " H" +
               num(xr) + "\"/>\n";
    }
    out += "</g>\n";
    for (const auto& [id, g] : roots) {
        const double x = id < n ? x0 : x_of(t.merges[id - n].height);
        out += "<text x=\"" + num(x + 4.0) + "\" y=\"" + num(y_of(geo.y[id]) - 4.0) +
               "\" fill=\"firebrick\">" + xml_escape(group_note(*g)) + "</text>\n";
    }
    if (!t.merges.empty()) {
        const double ya = y_of(static_cast<double>(n)) + 2.0;
        out += "<g stroke=\"gray\">\n<line x1=\"" + num(x0) + "\" y1=\"" + num(ya) + "\" x2=\"" +
               num(x0 + kTree) + "\" y2=\"" + num(ya) + "\"/>\n";
        for (int k = 0; k <= 4; ++k) {
            const double x = x0 + kTree * k / 4.0;
            out += "<line x1=\"" + num(x) + "\" y1=\"" + num(ya) + "\" x2=\"" + num(x) + "\" y2=\"" +
                   num(ya + 4.0) + "\"/>\n";
        }
        out += "</g>\n";
        for (int k = 0; k <= 4; ++k) {
            out += "<text x=\"" + num(x0 + kTree * k / 4.0) + "\" y=\"" + num(ya + 16.0) +
                   "\" text-anchor=\"middle\">" + fixed(geo.max_height * k / 4.0, 3) + "</text>\n";
        }
    }
    return out + "</svg>\n";
}

}  // namespace

std::string_view tool_version() noexcept { return CPLX_VERSION; }

DendrogramFormat parse_dendrogram_format(std::string_view name) {
    if (name == "json") return DendrogramFormat::json;
    if (name == "newick") return DendrogramFormat::newick;
    if (name == "ascii") return DendrogramFormat::ascii;
    if (name == "svg") return DendrogramFormat::svg;
    throw Error(Errc::usage, kModule,
                "unknown dendrogram format '" + std::string(name) + "' (json, newick, ascii, svg)");
}

std::string one_decimal(double value) {
    // Keep "-0.0" out of tables when a score sits just below zero.
    const auto s = fixed(value, 1);
    return s == "-0.0" ? "0.0" : s;
}

std::string leaf_label(const ScoredType& t) {
    std::string out = t.type_id + ".";
    if (!t.attributes.empty()) {
        out += "(";
        for (std::size_t i = 0; i < t.attributes.size(); ++i) {
            if (i) out += ", ";
            out += t.attributes[i].value;
        }
        out += ").";
    }
    return out + "[" + one_decimal(t.scaled_score) + "]";
}

std::string emit_score_table(const AnalysisReport& report, TableFormat format) {
    if (format == TableFormat::json) return dump(scores_json(report));
    std::vector<std::string> header{"type_id"};
    for (const auto& a : attribute_names(report)) header.push_back(a);
    for (auto c : kScoreColumns) header.emplace_back(c);
    std::string out = csv::format_row(header);
    for (auto it = report.scored.rbegin(); it != report.scored.rend(); ++it) {
        std::vector<std::string> row{it->type_id};
        for (const auto& a : it->attributes) row.push_back(a.value);
        for (double v : {it->posterior.a(), it->posterior.b(), it->median, it->variance, it->raw_score,
                         it->scaled_score}) {
            row.push_back(csv::format_double(v));
        }
        row.push_back(std::to_string(it->rank));
        out += csv::format_row(row);
    }
    return out;
}

std::vector<ScoredType> read_score_table(std::string_view text, TableFormat format) {
    std::vector<ScoredType> out;
    if (format == TableFormat::csv) {
        const auto table = csv::parse(text);
        const auto& h = table.header;
        if (h.size() < 1 + kScoreColumns.size() || h.front() != "type_id" ||
            !std::equal(kScoreColumns.begin(), kScoreColumns.end(), h.end() - kScoreColumns.size())) {
            throw Error(Errc::schema, kModule, "not a score table header");
        }
        const std::size_t n_attr = h.size() - 1 - kScoreColumns.size();
        for (const auto& row : table.rows) {
            const auto& f = row.fields;
            const auto where = "line " + std::to_string(row.line);
            std::vector<Attribute> attrs;
            for (std::size_t a = 0; a < n_attr; ++a) attrs.push_back({h[1 + a], f[1 + a]});
            double v[6];
            for (std::size_t k = 0; k < 6; ++k) v[k] = csv::parse_double(f[1 + n_attr + k], where);
            out.push_back({f[0], std::move(attrs), BetaDist(v[0], v[1]), v[2], v[3], v[4], v[5],
                           static_cast<std::size_t>(csv::parse_count(f.back(), where))});
        }
        return out;
    }
    try {
        const auto doc = Json::parse(text);
        for (const auto& j : doc) {
            std::vector<Attribute> attrs;
            for (const auto& [name, value] : j.at("attributes").items()) {
                attrs.push_back({name, value.get<std::string>()});
            }
            out.push_back({j.at("type_id").get<std::string>(), std::move(attrs),
                           BetaDist(j.at("alpha").get<double>(), j.at("beta").get<double>()),
                           j.at("median").get<double>(), j.at("variance").get<double>(),
                           j.at("raw_score").get<double>(), j.at("scaled_score").get<double>(),
                           j.at("rank").get<std::size_t>()});
        }
    } catch (const Json::exception& e) {
        throw Error(Errc::schema, kModule, std::string("malformed score table: ") + e.what());
    }
    return out;
}

std::string render_score_table(const AnalysisReport& report) {
    std::vector<std::array<std::string, 4>> rows{{"Type", "Attributes", "Median", "Cplx Score"}};
    for (auto it = report.scored.rbegin(); it != report.scored.rend(); ++it) {
        std::string attrs;
        for (std::size_t i = 0; i < it->attributes.size(); ++i) {
            attrs += (i ? ", " : "") + it->attributes[i].value;
        }
        rows.push_back({it->type_id, attrs.empty() ? "-" : "(" + attrs + ")", fixed(it->median, 4),
                        one_decimal(it->scaled_score)});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < 4; ++c) {
            const auto pad = std::string(width[c] - r[c].size(), ' ');
            line += c < 2 ? r[c] + pad : pad + r[c];  // numbers right-aligned
            if (c < 3) line += "  ";
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    return out;
}

std::string emit_boxplot_data(const AnalysisReport& report, BoxplotOrder order, TableFormat format) {
    if (format == TableFormat::json) return dump(boxplot_json(report, order));
    std::vector<std::string> header{"type_id"};
    for (const auto& a : attribute_names(report)) header.push_back(a);
    for (const char* c : {"min", "q1", "median", "q3", "max"}) header.emplace_back(c);
    std::string out = csv::format_row(header);
    for (const auto* t : boxplot_rows(report, order)) {
        const auto s = five_number_summary(t->posterior);
        std::vector<std::string> row{t->type_id};
        for (const auto& a : t->attributes) row.push_back(a.value);
        for (double v : {s.min, s.q1, s.median, s.q3, s.max}) row.push_back(csv::format_double(v));
        out += csv::format_row(row);
    }
    return out;
}

std::string emit_business_summary(const AnalysisReport& report, TableFormat format) {
    const auto& b = require_business(report);
    if (format == TableFormat::json) return dump(business_json(b));
    std::string out = csv::format_row(std::vector<std::string>{"rank", "type_id", "total", "fraction", "cumulative"});
    for (std::size_t i = 0; i < b.entries.size(); ++i) {
        const auto& e = b.entries[i];
        out += csv::format_row(std::vector<std::string>{std::to_string(i + 1), e.type_id, std::to_string(e.total),
                                                        csv::format_double(e.fraction),
                                                        csv::format_double(e.cumulative)});
    }
    return out;
}

std::string emit_clusters(const AnalysisReport& report, TableFormat format) {
    const auto& c = require_clusters(report);
    if (format == TableFormat::json) return dump(clusters_json(c));
    std::string out = csv::format_row(
        std::vector<std::string>{"cluster", "type_id", "mean_scaled_score", "business_fraction"});
    for (const auto& g : c.groups) {
        for (const auto& id : g.members) {
            out += csv::format_row(std::vector<std::string>{
                g.label, id, csv::format_double(g.mean_scaled_score),
                g.business_fraction ? csv::format_double(*g.business_fraction) : ""});
        }
    }
    return out;
}

std::string emit_dendrogram(const AnalysisReport& report, DendrogramFormat format) {
    const auto& t = require_tree(report);
    switch (format) {
        case DendrogramFormat::json: return dendrogram_json(report, t);
        case DendrogramFormat::newick: return dendrogram_newick(report, t);
        case DendrogramFormat::ascii: return dendrogram_ascii(report, t);
        case DendrogramFormat::svg: return dendrogram_svg(report, t);
    }
    throw Error(Errc::usage, kModule, "unknown dendrogram format");
}

std::string emit_report_json(const AnalysisReport& report) {
    const auto& p = report.provenance;
    Json prov{{"input", p.input},
              {"mode", p.mode},
              {"group_by", p.group_by},
              {"n_analyzed", p.n_analyzed},
              {"top_n", p.top_n ? Json(*p.top_n) : Json(nullptr)},
              {"k", p.k ? Json(*p.k) : Json(nullptr)},
              {"tool_version", p.tool_version},
              {"run_id", p.run_id}};
    Json doc{{"provenance", prov}, {"warnings", report.warnings}, {"scores", scores_json(report)}};
    doc["boxplot"] = boxplot_json(report, BoxplotOrder::input);
    doc["business"] = report.business ? business_json(*report.business) : Json(nullptr);
    doc["clusters"] = report.clusters ? clusters_json(*report.clusters) : Json(nullptr);
    doc["dendrogram"] = report.dendrogram ? Json::parse(dendrogram_json(report, *report.dendrogram))
                                          : Json(nullptr);
    doc["distance_matrix"] = Json::parse(matrix_to_json(report.matrix));
    return dump(doc);
}

}  // namespace cplx
