#include "cplx/scoring.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "cplx/error.hpp"
#include "fixtures.hpp"

namespace {

using cplx::BetaDist;
using cplx::LabeledPosterior;

cplx::DistanceMatrix reference_matrix() {
    std::vector<std::string> labels;
    std::vector<double> entries;
    for (int i = 0; i < 8; ++i) {
        labels.push_back(std::to_string(i + 1));
        for (int j = 0; j < 8; ++j) entries.push_back(cplx::test::kReferenceMatrix[i][j]);
    }
    return cplx::DistanceMatrix(std::move(labels), std::move(entries));
}

std::vector<LabeledPosterior> in_median_order() {
    const auto all = cplx::test::illustrative_posteriors();
    std::vector<LabeledPosterior> out;
    for (int id : cplx::test::kMedianOrder) out.push_back(all[id - 1]);
    return out;
}

// Accumulated by hand from the reference matrix along 5,6,2,1,8,7,3,4:
// 0.0057, +0.1552, +0.0602, +0.3694, +0.0230, +0.1604, +0.0232.
constexpr double kReferenceChain[] = {0.0, 0.0057, 0.1609, 0.2211, 0.5905, 0.6135, 0.7739, 0.7971};

TEST(SortByComplexity, ReferenceMedianOrder) {
    const auto sorted = cplx::sort_by_complexity(cplx::test::illustrative_posteriors());
    ASSERT_EQ(sorted.size(), 8u);
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_EQ(sorted[k].type_id, std::to_string(cplx::test::kMedianOrder[k]));
    }
}

TEST(SortByComplexity, StableForIdenticalDistributions) {
    const std::vector<LabeledPosterior> in{{"b", BetaDist(3, 40)}, {"a", BetaDist(3, 40)}};
    const auto out = cplx::sort_by_complexity(in);
    EXPECT_EQ(out[0].type_id, "b");
    EXPECT_EQ(out[1].type_id, "a");
}

TEST(SortByComplexity, EqualMediansBrokenByVarianceAgainstPairwiseOracle) {
    // Symmetric betas share median 0.5; variance 1 / (4 (2a + 1)).
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ua(0.5, 50.0);
    std::vector<LabeledPosterior> in;
    for (int i = 0; i < 10; ++i) {
        const double a = ua(rng);
        in.push_back({"s" + std::to_string(i), BetaDist(a, a)});
    }
    in.push_back({"dup", in[3].dist});
    for (int i = 0; i < 6; ++i) in.push_back({"x" + std::to_string(i), BetaDist(ua(rng), ua(rng))});

    const auto out = cplx::sort_by_complexity(in);
    std::map<std::string, std::size_t> input_pos;
    for (std::size_t i = 0; i < in.size(); ++i) input_pos[in[i].type_id] = i;
    auto before = [&](const LabeledPosterior& l, const LabeledPosterior& r) {
        const double ml = cplx::median(l.dist), mr = cplx::median(r.dist);
        if (ml != mr) return ml < mr;
        const double vl = cplx::variance(l.dist), vr = cplx::variance(r.dist);
        if (vl != vr) return vl < vr;
        return input_pos[l.type_id] < input_pos[r.type_id];
    };
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            EXPECT_TRUE(before(out[i], out[j])) << out[i].type_id << " vs " << out[j].type_id;
        }
    }
}

TEST(RawScores, ReferenceChainFromReferenceMatrix) {
    const auto raw = cplx::raw_scores(in_median_order(), reference_matrix());
    ASSERT_EQ(raw.size(), 8u);
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(raw[k], kReferenceChain[k], 1e-12) << k;
}

TEST(RawScores, ComputedChainMatchesReference) {
    const auto ps = cplx::test::illustrative_posteriors();
    const auto raw = cplx::raw_scores(cplx::sort_by_complexity(ps), cplx::build_matrix(ps));
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(raw[k], kReferenceChain[k], 2e-4) << k;
}

TEST(RawScores, DegenerateInputs) {
    const std::vector<LabeledPosterior> one{{"a", BetaDist(2, 9)}};
    EXPECT_EQ(cplx::raw_scores(one, cplx::build_matrix(one)), std::vector<double>{0.0});

    const std::vector<LabeledPosterior> same{
        {"a", BetaDist(2, 9)}, {"b", BetaDist(2, 9)}, {"c", BetaDist(2, 9)}};
    EXPECT_EQ(cplx::raw_scores(same, cplx::build_matrix(same)), std::vector<double>(3, 0.0));
}

TEST(RawScores, RejectsLabelMismatch) {
    const std::vector<LabeledPosterior> ps{{"a", BetaDist(2, 9)}, {"b", BetaDist(3, 9)}};
    const auto m = cplx::build_matrix(ps);
    const std::vector<LabeledPosterior> wrong{{"a", BetaDist(2, 9)}, {"z", BetaDist(3, 9)}};
    const std::vector<LabeledPosterior> twice{{"a", BetaDist(2, 9)}, {"a", BetaDist(2, 9)}};
    const std::vector<LabeledPosterior> short_list{{"a", BetaDist(2, 9)}};
    for (const auto* bad : {&wrong, &twice, &short_list}) {
        try {
            (void)cplx::raw_scores(*bad, m);
            ADD_FAILURE();
        } catch (const cplx::Error& e) {
            EXPECT_EQ(e.code(), cplx::Errc::inconsistent_input);
        }
    }
}

TEST(ScaleScores, ReferenceScoresFromReferenceChain) {
    const auto scaled = cplx::scale_scores(kReferenceChain);
    for (std::size_t k = 0; k < 8; ++k) {
        const auto& t = cplx::test::kIllustrative[cplx::test::kMedianOrder[k] - 1];
        EXPECT_NEAR(scaled[k], t.score, 0.05) << t.id;
        EXPECT_EQ(std::round(scaled[k] * 10.0) / 10.0, t.score) << t.id;
    }
}

TEST(ScaleScores, SmallCases) {
    EXPECT_TRUE(cplx::scale_scores({}).empty());
    EXPECT_EQ(cplx::scale_scores(std::vector<double>{0.0}), std::vector<double>{0.0});
    EXPECT_EQ(cplx::scale_scores(std::vector<double>{0.0, 5.0, 10.0}),
              (std::vector<double>{0.0, 5.0, 10.0}));
    EXPECT_EQ(cplx::scale_scores(std::vector<double>{0.3, 0.3}), (std::vector<double>{0.0, 0.0}));
}

TEST(ScaleScores, IdempotentAndMaxIsExactlyTen) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> raw{0.0};
        for (int i = 0; i < 20; ++i) raw.push_back(raw.back() + u(rng));
        const auto once = cplx::scale_scores(raw);
        EXPECT_EQ(cplx::scale_scores(once), once);
        EXPECT_EQ(*std::max_element(once.begin(), once.end()), 10.0);
        EXPECT_EQ(once.front(), 0.0);
        EXPECT_TRUE(std::is_sorted(once.begin(), once.end()));
    }
}

TEST(ScoreTypes, EndToEndReferenceScores) {
    const auto ps = cplx::test::illustrative_posteriors();
    const auto scored = cplx::score_types(ps, cplx::build_matrix(ps));
    ASSERT_EQ(scored.size(), 8u);
    for (std::size_t k = 0; k < scored.size(); ++k) {
        const auto& s = scored[k];
        const auto& t = cplx::test::kIllustrative[std::stoi(s.type_id) - 1];
        EXPECT_EQ(s.rank, k + 1);
        EXPECT_NEAR(s.scaled_score, t.score, 0.05) << s.type_id;
        EXPECT_NEAR(s.median, t.median, 0.0005) << s.type_id;
        if (k > 0) EXPECT_GE(s.raw_score, scored[k - 1].raw_score);
    }
    EXPECT_EQ(scored.front().type_id, "5");
    EXPECT_EQ(scored.front().scaled_score, 0.0);
    EXPECT_EQ(scored.back().type_id, "4");
    EXPECT_EQ(scored.back().scaled_score, 10.0);
}

TEST(ScoreTypes, PermutationInvariant) {
    std::mt19937_64 rng(31);
    auto ps = cplx::test::illustrative_posteriors();
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<int> n(1, 400);
        const int inspected = n(rng);
        ps.push_back({"r" + std::to_string(i),
                      cplx::posterior_from_counts({"", {}, std::nullopt,
                                                   static_cast<std::uint64_t>(inspected),
                                                   static_cast<std::uint64_t>(rng() % (inspected / 10 + 1))})});
    }
    auto score_map = [](const std::vector<LabeledPosterior>& in) {
        std::map<std::string, double> out;
        for (const auto& s : cplx::score_types(in, cplx::build_matrix(in))) {
            out[s.type_id] = s.scaled_score;
        }
        return out;
    };
    const auto base = score_map(ps);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(ps.begin(), ps.end(), rng);
        EXPECT_EQ(score_map(ps), base);
    }
}

}  // namespace
