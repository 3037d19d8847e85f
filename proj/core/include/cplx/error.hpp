#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cplx {

/// Stable error conditions. Each maps to one CLI exit code.
enum class Errc {
    domain,               // argument outside a function's domain
    undefined_ratio,      // X/n with n = 0
    inconsistent_counts,  // repaired > inspected, or inspected > total
    duplicate_label,
    invalid_matrix,
    invalid_k,
    inconsistent_input,
    schema,
    value,
    cannot_rank,
    numerical_integration,
    no_convergence,
    usage,
    io,
};

/// Short machine-readable name, e.g. "inconsistent-counts".
std::string_view errc_name(Errc code) noexcept;

/// Process exit code: 2 usage, 3 schema/value, 4 numerical, 5 I/O.
int exit_code(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string_view module, const std::string& message);

    Errc code() const noexcept { return code_; }
    std::string_view module() const noexcept { return module_; }

    /// "error[<module>/<code>]: <message>"
    std::string diagnostic() const;

private:
    Errc code_;
    std::string module_;
};

}  // namespace cplx
