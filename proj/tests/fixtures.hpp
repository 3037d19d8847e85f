#pragma once

// Reference illustrative-example values: eight product types.

#include <array>
#include <string>
#include <vector>

#include "cplx/posterior.hpp"

namespace cplx::test {

struct ReferenceType {
    const char* id;
    std::uint64_t inspected;
    std::uint64_t repaired;
    double a;
    double b;
    double median;  // four decimals
    double score;   // one decimal
};

inline constexpr std::array<ReferenceType, 8> kIllustrative{{
    {"1", 200, 5, 5.5, 195.5, 0.0258, 2.8},
    {"2", 170, 4, 4.5, 166.5, 0.0245, 2.0},
    {"3", 50, 2, 2.5, 48.5, 0.0432, 9.7},
    {"4", 48, 2, 2.5, 46.5, 0.0450, 10.0},
    {"5", 100, 2, 2.5, 98.5, 0.0217, 0.0},
    {"6", 99, 2, 2.5, 97.5, 0.0219, 0.1},
    {"7", 98, 4, 4.5, 94.5, 0.0424, 7.7},
    {"8", 101, 4, 4.5, 97.5, 0.0412, 7.4},
}};

// Reference 8x8 Hellinger matrix, four decimals.
inline constexpr double kReferenceMatrix[8][8] = {
    {0.0000, 0.0602, 0.4100, 0.4290, 0.2109, 0.2090, 0.3900, 0.3694},
    {0.0602, 0.0000, 0.4023, 0.4219, 0.1566, 0.1552, 0.3989, 0.3789},
    {0.4100, 0.4023, 0.0000, 0.0232, 0.3737, 0.3688, 0.1604, 0.1674},
    {0.4290, 0.4219, 0.0232, 0.0000, 0.3937, 0.3888, 0.1703, 0.1796},
    {0.2109, 0.1566, 0.3737, 0.3937, 0.0000, 0.0057, 0.4100, 0.3936},
    {0.2090, 0.1552, 0.3688, 0.3888, 0.0057, 0.0000, 0.4046, 0.3881},
    {0.3900, 0.3989, 0.1604, 0.1703, 0.4100, 0.4046, 0.0000, 0.0230},
    {0.3694, 0.3789, 0.1674, 0.1796, 0.3936, 0.3881, 0.0230, 0.0000},
};

// Median-ascending order (1-based type ids).
/// Welds across all 631 weld types; weld_types_top35.csv lists the 35 largest.
inline constexpr std::uint64_t kCaseStudyGrandTotal = 224298;

inline constexpr std::array<int, 8> kMedianOrder{5, 6, 2, 1, 8, 7, 3, 4};

inline std::vector<TypeCounts> illustrative_counts() {
    std::vector<TypeCounts> out;
    for (const auto& t : kIllustrative) {
        out.push_back(TypeCounts{t.id, {}, std::nullopt, t.inspected, t.repaired});
    }
    return out;
}

inline std::vector<LabeledPosterior> illustrative_posteriors() {
    std::vector<LabeledPosterior> out;
    for (const auto& t : kIllustrative) out.push_back({t.id, BetaDist(t.a, t.b)});
    return out;
}

}  // namespace cplx::test
