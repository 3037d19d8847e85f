#include "cplx/posterior.hpp"

#include <cmath>
#include <string>

#include "cplx/error.hpp"
#include "cplx/special_functions.hpp"

namespace cplx {

namespace {
constexpr std::string_view kModule = "posterior";
}

void validate(const TypeCounts& counts) {
    if (counts.repaired > counts.inspected) {
        throw Error(Errc::inconsistent_counts, kModule,
                    "type " + counts.type_id + ": repaired (" + std::to_string(counts.repaired) +
                        ") exceeds inspected (" + std::to_string(counts.inspected) + ")");
    }
    if (counts.total && counts.inspected > *counts.total) {
        throw Error(Errc::inconsistent_counts, kModule,
                    "type " + counts.type_id + ": inspected (" + std::to_string(counts.inspected) +
                        ") exceeds total (" + std::to_string(*counts.total) + ")");
    }
}

BetaDist::BetaDist(double a, double b) : a_(a), b_(b) {
    if (!(std::isfinite(a) && a > 0.0 && std::isfinite(b) && b > 0.0)) {
        throw Error(Errc::domain, kModule,
                    "beta shape parameters must be finite and positive (a=" + std::to_string(a) +
                        ", b=" + std::to_string(b) + ")");
    }
}

double fraction_nonconforming(const TypeCounts& counts) {
    if (counts.inspected == 0) {
        throw Error(Errc::undefined_ratio, kModule,
                    "type " + counts.type_id + ": fraction nonconforming undefined with 0 inspected");
    }
    validate(counts);
    return static_cast<double>(counts.repaired) / static_cast<double>(counts.inspected);
}

BetaDist posterior_from_counts(const TypeCounts& counts) {
    validate(counts);
    const auto failed = static_cast<double>(counts.repaired);
    const auto passed = static_cast<double>(counts.inspected - counts.repaired);
    return BetaDist(failed + kJeffreysShape, passed + kJeffreysShape);
}

double mean(const BetaDist& d) { return d.a() / (d.a() + d.b()); }

double median(const BetaDist& d) { return special::beta_quantile(0.5, d.a(), d.b()); }

double variance(const BetaDist& d) {
    const double s = d.a() + d.b();
    return d.a() * d.b() / (s * s * (s + 1.0));
}

FiveNumberSummary five_number_summary(const BetaDist& d) {
    auto q = [&](double level) { return special::beta_quantile(level, d.a(), d.b()); };
    return {q(kWhiskerLow), q(0.25), q(0.5), q(0.75), q(kWhiskerHigh)};
}

}  // namespace cplx
