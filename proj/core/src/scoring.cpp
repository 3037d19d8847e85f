#include "cplx/scoring.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cplx/error.hpp"

namespace cplx {

namespace {
constexpr std::string_view kModule = "scoring";
}

std::vector<LabeledPosterior> sort_by_complexity(std::span<const LabeledPosterior> posteriors) {
    struct Key {
        double median;
        double variance;
        std::size_t index;
    };
    std::vector<Key> keys;
    keys.reserve(posteriors.size());
    for (std::size_t i = 0; i < posteriors.size(); ++i) {
        keys.push_back({median(posteriors[i].dist), variance(posteriors[i].dist), i});
    }
    std::stable_sort(keys.begin(), keys.end(), [](const Key& l, const Key& r) {
        if (l.median != r.median) return l.median < r.median;
        return l.variance < r.variance;
    });
    std::vector<LabeledPosterior> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(posteriors[k.index]);
    return out;
}

std::vector<double> raw_scores(std::span<const LabeledPosterior> ordered,
                               const DistanceMatrix& matrix) {
    if (ordered.size() != matrix.size()) {
        throw Error(Errc::inconsistent_input, kModule,
                    "ordering has " + std::to_string(ordered.size()) + " types but matrix has " +
                        std::to_string(matrix.size()));
    }
    std::vector<std::size_t> index;
    std::unordered_set<std::size_t> seen;
    index.reserve(ordered.size());
    for (const auto& p : ordered) {
        const auto i = matrix.index_of(p.type_id);
        if (!i) {
            throw Error(Errc::inconsistent_input, kModule,
                        "type '" + p.type_id + "' is not in the distance matrix");
        }
        if (!seen.insert(*i).second) {
            throw Error(Errc::inconsistent_input, kModule,
                        "type '" + p.type_id + "' appears twice in the ordering");
        }
        index.push_back(*i);
    }

    std::vector<double> scores(ordered.size(), 0.0);
    for (std::size_t k = 1; k < scores.size(); ++k) {
        scores[k] = scores[k - 1] + matrix(index[k], index[k - 1]);
    }
    return scores;
}

std::vector<double> scale_scores(std::span<const double> raw) {
    if (raw.empty()) return {};
    const auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (lo == 0.0 && hi == 10.0) return {raw.begin(), raw.end()};

    std::vector<double> out(raw.size(), 0.0);
    if (hi == lo) return out;
    const double span = hi - lo;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out[i] = raw[i] == hi ? 10.0 : 10.0 * ((raw[i] - lo) / span);
    }
    return out;
}

std::vector<ScoredType> score_types(std::span<const LabeledPosterior> posteriors,
                                    const DistanceMatrix& matrix) {
    const auto ordered = sort_by_complexity(posteriors);
    const auto raw = raw_scores(ordered, matrix);
    const auto scaled = scale_scores(raw);

    std::vector<ScoredType> out;
    out.reserve(ordered.size());
    for (std::size_t k = 0; k < ordered.size(); ++k) {
        const auto& p = ordered[k];
        out.push_back(ScoredType{p.type_id, {}, p.dist, median(p.dist), variance(p.dist), raw[k],
                                 scaled[k], k + 1});
    }
    return out;
}

}  // namespace cplx
