#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cplx/posterior.hpp"

namespace cplx {

/**
 * Hellinger distance between two beta distributions in closed form:
 *
 *   H² = 1 - B((a1+a2)/2, (b1+b2)/2) / sqrt(B(a1,b1) B(a2,b2))
 *
 * evaluated in log space. Exactly symmetric, exactly 0 for equal arguments.
 */
double hellinger_beta(const BetaDist& x, const BetaDist& y);

/**
 * Hellinger distance from its definition, sqrt(1 - ∫ sqrt(f_x f_y) dt), with
 * the integral computed by adaptive Gauss-Kronrod quadrature to within
 * `abs_tol` (>= 1e-12). Used to check hellinger_beta.
 *
 * Throws Errc::numerical_integration if the subdivision budget runs out.
 */
double hellinger_numeric(const BetaDist& x, const BetaDist& y, double abs_tol = 1e-12);

/// Dense symmetric matrix of pairwise distances with row/column labels.
class DistanceMatrix {
public:
    /// All-zero matrix.
    explicit DistanceMatrix(std::vector<std::string> labels);

    /// Row-major square entries. Shape and label uniqueness are checked here;
    /// call validate() for the distance invariants.
    DistanceMatrix(std::vector<std::string> labels, std::vector<double> entries);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    double operator()(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

    /// Sets (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double value);

    /// Throws Errc::invalid_matrix unless the diagonal is zero, the matrix is
    /// exactly symmetric and every entry lies in [0, 1].
    void validate() const;

    /// Same matrix with rows/columns reordered: result(i, j) = (*this)(order[i], order[j]).
    DistanceMatrix permuted(std::span<const std::size_t> order) const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<double> entries_;
};

/// Pairwise hellinger_beta over the posteriors. Throws Errc::duplicate_label
/// on repeated ids and Errc::inconsistent_input on an empty list.
DistanceMatrix build_matrix(std::span<const LabeledPosterior> posteriors);

/// {"labels": [...], "entries": [[...], ...]}
std::string matrix_to_json(const DistanceMatrix& m);
DistanceMatrix matrix_from_json(std::string_view text);

/// Header row and first column carry the labels; entries at 17 significant digits.
std::string matrix_to_csv(const DistanceMatrix& m);
DistanceMatrix matrix_from_csv(std::string_view text);

}  // namespace cplx
