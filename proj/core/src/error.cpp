#include "cplx/error.hpp"

namespace cplx {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::domain: return "domain";
        case Errc::undefined_ratio: return "undefined-ratio";
        case Errc::inconsistent_counts: return "inconsistent-counts";
        case Errc::duplicate_label: return "duplicate-label";
        case Errc::invalid_matrix: return "invalid-matrix";
        case Errc::invalid_k: return "invalid-k";
        case Errc::inconsistent_input: return "inconsistent-input";
        case Errc::schema: return "schema";
        case Errc::value: return "value";
        case Errc::cannot_rank: return "cannot-rank";
        case Errc::numerical_integration: return "numerical-integration";
        case Errc::no_convergence: return "no-convergence";
        case Errc::usage: return "usage";
        case Errc::io: return "io";
    }
    return "unknown";
}

int exit_code(Errc code) noexcept {
    switch (code) {
        case Errc::usage:
        case Errc::invalid_k:
            return 2;
        case Errc::numerical_integration:
        case Errc::no_convergence:
            return 4;
        case Errc::io:
            return 5;
        default:
            return 3;
    }
}

Error::Error(Errc code, std::string_view module, const std::string& message)
    : std::runtime_error(message), code_(code), module_(module) {}

std::string Error::diagnostic() const {
    std::string out = "error[";
    out += module_;
    out += '/';
    out += errc_name(code_);
    out += "]: ";
    out += what();
    return out;
}

}  // namespace cplx
