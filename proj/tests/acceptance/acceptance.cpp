// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cplx/clustering.hpp"
#include "cplx/divergence.hpp"
#include "cplx/error.hpp"
#include "cplx/ingest.hpp"
#include "cplx/pipeline.hpp"
#include "cplx/posterior.hpp"
#include "cplx/scoring.hpp"
#include "cplx/special_functions.hpp"
#include "expand.hpp"
#include "fixtures.hpp"
#include "oracles/brute_force_linkage.hpp"
#include "random_matrices.hpp"
#include "temp_dir.hpp"

namespace {

namespace fs = std::filesystem;
using cplx::test::kIllustrative;
using cplx::test::kReferenceMatrix;

struct Verdict {
    bool ok;
    std::string detail;
};

std::string num(double v, const char* fmt = "%.3g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

std::size_t index_of(const char* id) {
    for (std::size_t i = 0; i < kIllustrative.size(); ++i) {
        if (std::string(kIllustrative[i].id) == id) return i;
    }
    return SIZE_MAX;
}

Verdict posterior_golden() {
    double worst = 0.0;
    bool params = true;
    for (const auto& t : kIllustrative) {
        const auto d = cplx::posterior_from_counts({t.id, {}, std::nullopt, t.inspected, t.repaired});
        params = params && d.a() == t.a && d.b() == t.b;
        worst = std::max(worst, std::fabs(cplx::median(d) - t.median));
    }
    return {params && worst <= 5e-4,
            std::string("shapes ") + (params ? "exact" : "MISMATCH") + ", max median error " + num(worst)};
}

Verdict hellinger_golden() {
    const auto m = cplx::build_matrix(cplx::test::illustrative_posteriors());
    double worst = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) worst = std::max(worst, std::fabs(m(i, j) - kReferenceMatrix[i][j]));
    }
    return {worst <= 1e-4, "max |H - reference| " + num(worst)};
}

Verdict closed_form_vs_quadrature() {
    std::mt19937_64 rng(3);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const cplx::BetaDist x(log_uniform(rng, 0.5, 1e4), log_uniform(rng, 0.5, 1e4));
        const cplx::BetaDist y(log_uniform(rng, 0.5, 1e4), log_uniform(rng, 0.5, 1e4));
        worst = std::max(worst, std::fabs(cplx::hellinger_beta(x, y) - cplx::hellinger_numeric(x, y)));
    }
    return {worst <= 1e-6, "1000 pairs, max difference " + num(worst)};
}

Verdict scoring_golden() {
    // Chain accumulated from the reference matrix along the reference median order.
    std::vector<double> chain{0.0};
    for (std::size_t k = 1; k < cplx::test::kMedianOrder.size(); ++k) {
        const auto i = static_cast<std::size_t>(cplx::test::kMedianOrder[k] - 1);
        const auto j = static_cast<std::size_t>(cplx::test::kMedianOrder[k - 1] - 1);
        chain.push_back(chain.back() + kReferenceMatrix[i][j]);
    }
    const std::vector<double> stated{0, 0.0057, 0.1609, 0.2211, 0.5905, 0.6135, 0.7739, 0.7971};
    const auto posteriors = cplx::test::illustrative_posteriors();
    const auto scored = cplx::score_types(posteriors, cplx::build_matrix(posteriors));
    double chain_err = 0.0, score_err = 0.0;
    bool endpoints = false;
    for (std::size_t k = 0; k < scored.size(); ++k) {
        chain_err = std::max({chain_err, std::fabs(chain[k] - stated[k]), std::fabs(scored[k].raw_score - stated[k])});
        const auto& t = kIllustrative[index_of(scored[k].type_id.c_str())];
        score_err = std::max(score_err, std::fabs(scored[k].scaled_score - t.score));
    }
    std::map<std::string, double> by_id;
    for (const auto& s : scored) by_id[s.type_id] = s.scaled_score;
    endpoints = by_id.at("5") == 0.0 && by_id.at("4") == 10.0;
    return {score_err <= 0.05 && chain_err <= 2e-4 && endpoints,
            "max score error " + num(score_err) + ", max chain error " + num(chain_err) +
                ", endpoints " + (endpoints ? "0.0/10.0" : "WRONG")};
}

Verdict clustering_golden() {
    const auto tree = cplx::agglomerate(cplx::build_matrix(cplx::test::illustrative_posteriors()));
    const auto a = cplx::cut(tree, 4);
    std::set<std::set<std::string>> got;
    for (const auto& g : a.groups) got.insert({g.members.begin(), g.members.end()});
    const std::set<std::set<std::string>> want{{"1", "2"}, {"3", "4"}, {"5", "6"}, {"7", "8"}};
    std::string shown;
    for (const auto& g : got) {
        shown += "{";
        for (const auto& m : g) shown += m + (m == *g.rbegin() ? "" : ",");
        shown += "}";
    }
    return {got == want, "k=4 -> " + shown};
}

Verdict clustering_oracle() {
    std::mt19937_64 rng(6);
    int mismatches = 0, partitions = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const auto d = cplx::test::random_metric(rng, n, trial % 3 == 0 ? 2 : 0);
        const auto m = cplx::test::to_matrix(d);
        const auto tree = cplx::agglomerate(m);
        const auto ref = cplx::test::reference_complete_linkage(d);
        for (std::size_t s = 0; s < ref.merges.size(); ++s) {
            if (tree.merges[s].height != ref.merges[s].height) ++mismatches;
        }
        for (std::size_t k = 1; k <= n; ++k) {
            cplx::test::Partition p;
            for (const auto& g : cplx::cut(tree, k).groups) {
                std::set<std::size_t> s;
                for (const auto& id : g.members) s.insert(*m.index_of(id));
                p.insert(s);
            }
            ++partitions;
            if (p != ref.partitions[k]) ++mismatches;
        }
    }
    return {mismatches == 0, "200 matrices, " + std::to_string(partitions) + " cuts, " +
                                 std::to_string(mismatches) + " mismatches"};
}

Verdict metric_axioms() {
    std::mt19937_64 rng(7);
    double worst_excess = -1.0;
    bool exact = true;
    for (int i = 0; i < 1000; ++i) {
        std::array<cplx::BetaDist, 3> p{
            cplx::BetaDist(log_uniform(rng, 0.5, 1e4), log_uniform(rng, 0.5, 1e4)),
            cplx::BetaDist(log_uniform(rng, 0.5, 1e4), log_uniform(rng, 0.5, 1e4)),
            cplx::BetaDist(log_uniform(rng, 0.5, 1e4), log_uniform(rng, 0.5, 1e4))};
        for (std::size_t u = 0; u < 3; ++u) {
            exact = exact && cplx::hellinger_beta(p[u], p[u]) == 0.0;
            for (std::size_t v = 0; v < 3; ++v) {
                exact = exact && cplx::hellinger_beta(p[u], p[v]) == cplx::hellinger_beta(p[v], p[u]);
                const auto w = 3 - u - v;
                if (u == v) continue;
                const double excess = cplx::hellinger_beta(p[u], p[v]) -
                                      (cplx::hellinger_beta(p[u], p[w]) + cplx::hellinger_beta(p[w], p[v]));
                worst_excess = std::max(worst_excess, excess);
            }
        }
    }
    return {exact && worst_excess <= 1e-12,
            std::string("symmetry/identity ") + (exact ? "exact" : "VIOLATED") +
                ", smallest triangle slack " + num(-worst_excess)};
}

Verdict case_study() {
    cplx::test::TempDir dir;
    cplx::RunConfig cfg;
    cfg.input = fs::path(CPLX_TEST_DATA_DIR) / "weld_types_top35.csv";
    cfg.type_col = "Weld Type";
    cfg.inspected_col = "Inspected Welds";
    cfg.repaired_col = "Repaired Welds";
    cfg.total_col = "Total Welds";
    cfg.attrs = {"NPS", "Schedule", "Material"};
    cfg.top_n = 35;
    cfg.grand_total = cplx::test::kCaseStudyGrandTotal;
    cfg.k = 7;
    cfg.out_dir = dir.path();
    cfg.emit = {"json", "csv", "newick", "ascii", "svg"};
    const auto start = std::chrono::steady_clock::now();
    const auto result = cplx::run_pipeline(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto& r = result.report;
    const bool in_range = r.scored.size() == 35 && std::all_of(r.scored.begin(), r.scored.end(), [](const auto& t) {
                              return t.scaled_score >= 0.0 && t.scaled_score <= 10.0;
                          });
    std::string letters;
    for (const auto& g : r.clusters->groups) letters += g.label;
    const double cumulative = r.business->entries[34].cumulative;
    return {secs < 1.0 && in_range && letters == "ABCDEFG" && std::fabs(cumulative - 0.80) <= 0.01,
            num(secs * 1e3, "%.1f") + " ms, " + std::to_string(r.scored.size()) + " scores in [0,10]: " +
                (in_range ? "yes" : "NO") + ", clusters " + letters + ", cumulative share " +
                num(cumulative, "%.4f")};
}

Verdict round_trips() {
    std::mt19937_64 rng(9);
    int count_failures = 0, fixtures = 0;
    auto check = [&](const std::vector<cplx::TypeCounts>& counts) {
        ++fixtures;
        const auto records = cplx::test::expand(counts);
        std::vector<std::string> by{cplx::test::kOriginAttribute};
        for (const auto& a : counts.front().attributes) by.push_back(a.name);
        std::map<std::string, cplx::TypeCounts> back;
        for (auto tc : cplx::aggregate(records, by)) {
            tc.type_id = tc.attributes.front().value;
            tc.attributes.erase(tc.attributes.begin());
            back.emplace(tc.type_id, tc);
        }
        for (auto c : counts) {
            if (!c.total) c.total = c.inspected;
            if (*c.total == 0) continue;
            auto it = back.find(c.type_id);
            if (it == back.end() || !(it->second == c)) ++count_failures;
        }
    };
    check(cplx::test::illustrative_counts());
    check(cplx::read_aggregated(fs::path(CPLX_TEST_DATA_DIR) / "weld_types_top35.csv",
                                {"Weld Type", "Inspected Welds", "Repaired Welds", "Total Welds",
                                 {"NPS", "Schedule", "Material"}}));
    for (int f = 0; f < 200; ++f) {
        std::vector<cplx::TypeCounts> counts;
        const std::size_t n = 1 + rng() % 12;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t total = rng() % 80;
            const std::uint64_t inspected = total ? rng() % (total + 1) : 0;
            const std::uint64_t repaired = inspected ? rng() % (inspected + 1) : 0;
            counts.push_back({"T" + std::to_string(i), {{"grade", std::to_string(rng() % 3)}}, total, inspected, repaired});
        }
        check(counts);
    }

    // Quantile round trip over every posterior-shaped input: shapes >= 1/2.
    std::uniform_real_distribution<double> uq(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double a = log_uniform(rng, 0.5, 1e4), b = log_uniform(rng, 0.5, 1e4);
        const double q = uq(rng);
        if (q == 0.0) continue;
        worst = std::max(worst, std::fabs(cplx::special::reg_inc_beta(cplx::special::beta_quantile(q, a, b), a, b) - q));
    }

    // Shapes down to 0.1: where no double reaches q within 1e-9 the result
    // must be the closest double.
    int unattainable = 0, not_closest = 0;
    for (int i = 0; i < 10000; ++i) {
        const double a = log_uniform(rng, 0.1, 1e4), b = log_uniform(rng, 0.1, 1e4);
        const double q = uq(rng);
        if (q == 0.0) continue;
        const double x = cplx::special::beta_quantile(q, a, b);
        const double err = std::fabs(cplx::special::reg_inc_beta(x, a, b) - q);
        if (err <= 1e-9) continue;
        ++unattainable;
        for (double toward : {0.0, 1.0}) {
            const double t = std::nextafter(x, toward);
            if (std::fabs(cplx::special::reg_inc_beta(t, a, b) - q) < err) ++not_closest;
        }
    }
    return {count_failures == 0 && worst <= 1e-9 && not_closest == 0,
            std::to_string(fixtures) + " fixtures, " + std::to_string(count_failures) +
                " count mismatches; 10000 quantiles, max |I(Q(q)) - q| " + num(worst) +
                "; shapes from 0.1: " + std::to_string(unattainable) + " unreachable levels, " +
                std::to_string(not_closest) + " not at the closest double"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"AC1 posterior golden", posterior_golden},
        {"AC2 hellinger golden", hellinger_golden},
        {"AC3 closed form vs quadrature", closed_form_vs_quadrature},
        {"AC4 scoring golden", scoring_golden},
        {"AC5 clustering golden", clustering_golden},
        {"AC6 clustering oracle", clustering_oracle},
        {"AC7 metric axioms", metric_axioms},
        {"AC8 case-study scale", case_study},
        {"AC9 round trips", round_trips},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Verdict v{false, ""};
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        std::printf("[%s] %s: %s\n", v.ok ? "PASS" : "FAIL", name, v.detail.c_str());
        failed += v.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
