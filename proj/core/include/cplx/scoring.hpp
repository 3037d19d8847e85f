#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cplx/divergence.hpp"
#include "cplx/posterior.hpp"

namespace cplx {

/// A product type placed on the 0-10 complexity scale.
struct ScoredType {
    std::string type_id;
    std::vector<Attribute> attributes;
    BetaDist posterior;
    double median;
    double variance;
    double raw_score;     // cumulative adjacent Hellinger distance
    double scaled_score;  // 0..10
    std::size_t rank;     // 1-based, median ascending
};

/**
 * Least complex first: ascending posterior median, ties by ascending
 * variance, remaining ties keep input order.
 */
std::vector<LabeledPosterior> sort_by_complexity(std::span<const LabeledPosterior> posteriors);

/**
 * Score chain along an ordering: score[0] = 0 and
 * score[k] = score[k-1] + H(P_k, P_{k-1}), with H looked up in `matrix`.
 *
 * Throws Errc::inconsistent_input unless the ordered ids are a permutation
 * of the matrix labels.
 */
std::vector<double> raw_scores(std::span<const LabeledPosterior> ordered,
                               const DistanceMatrix& matrix);

/// Linear min-max map onto [0, 10]; all zeros when every input is equal.
std::vector<double> scale_scores(std::span<const double> raw);

/// sort_by_complexity + raw_scores + scale_scores, returned in rank order.
std::vector<ScoredType> score_types(std::span<const LabeledPosterior> posteriors,
                                    const DistanceMatrix& matrix);

}  // namespace cplx
