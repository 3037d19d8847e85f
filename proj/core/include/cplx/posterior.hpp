#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cplx {

struct Attribute {
    std::string name;
    std::string value;

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Inspection counts aggregated over one product type.
struct TypeCounts {
    std::string type_id;
    std::vector<Attribute> attributes;
    std::optional<std::uint64_t> total;  // absent for inspected/repaired-only inputs
    std::uint64_t inspected = 0;
    std::uint64_t repaired = 0;

    friend bool operator==(const TypeCounts&, const TypeCounts&) = default;
};

/// Throws Errc::inconsistent_counts unless repaired <= inspected <= total.
void validate(const TypeCounts& counts);

/// Beta(a, b) with finite a, b > 0, enforced at construction.
class BetaDist {
public:
    BetaDist(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }

    friend bool operator==(const BetaDist&, const BetaDist&) = default;

private:
    double a_;
    double b_;
};

struct LabeledPosterior {
    std::string type_id;
    BetaDist dist;
};

struct FiveNumberSummary {
    double min;
    double q1;
    double median;
    double q3;
    double max;
};

/// Shape added to both counts: the Jeffreys prior Beta(1/2, 1/2).
inline constexpr double kJeffreysShape = 0.5;

/// Quantile levels used for the boxplot whiskers.
inline constexpr double kWhiskerLow = 0.005;
inline constexpr double kWhiskerHigh = 0.995;

/// X / n. Throws Errc::undefined_ratio when nothing was inspected.
double fraction_nonconforming(const TypeCounts& counts);

/// Beta(X + 1/2, n - X + 1/2).
BetaDist posterior_from_counts(const TypeCounts& counts);

double mean(const BetaDist& d);
double median(const BetaDist& d);
double variance(const BetaDist& d);

/// Whiskers at the 0.5% / 99.5% quantiles; the box at the quartiles.
FiveNumberSummary five_number_summary(const BetaDist& d);

}  // namespace cplx
