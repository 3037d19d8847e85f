#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cplx/divergence.hpp"
#include "cplx/scoring.hpp"

namespace cplx {

/// Refers to a leaf (input position) or to an earlier merge (merge position).
struct NodeRef {
    enum class Kind { leaf, merge };
    Kind kind;
    std::size_t index;

    static NodeRef leaf(std::size_t i) { return {Kind::leaf, i}; }
    static NodeRef merge(std::size_t i) { return {Kind::merge, i}; }
    bool is_leaf() const noexcept { return kind == Kind::leaf; }

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct Merge {
    NodeRef left;
    NodeRef right;
    double height;
    std::size_t size;  // leaves under this node
};

struct Dendrogram {
    std::vector<std::string> leaves;
    std::vector<Merge> merges;  // n - 1 merges, heights non-decreasing

    /// Leaf indices under `node`, ascending.
    std::vector<std::size_t> members(NodeRef node) const;

    /// Leaf indices in drawing order (left subtree first), so merged groups are contiguous.
    std::vector<std::size_t> leaf_order() const;

    /// The root (last merge), or the only leaf when there are no merges.
    NodeRef root() const;
};

struct ClusterGroup {
    std::string label;  // "A", "B", ... ; empty until label_clusters
    std::vector<std::string> members;
    double mean_scaled_score = 0.0;
    std::optional<double> business_fraction;
};

struct ClusterAssignment {
    std::size_t k = 0;
    std::vector<ClusterGroup> groups;
};

/**
 * Complete-linkage agglomerative clustering.
 *
 * Each step merges the two clusters whose farthest members are closest. A
 * cluster is identified by its smallest leaf index; among equally distant
 * candidates the lexicographically least (smaller id, larger id) pair wins.
 * O(n³) time, O(n²) memory.
 *
 * Throws Errc::invalid_matrix for a matrix that fails DistanceMatrix::validate()
 * and Errc::inconsistent_input for an empty one.
 */
Dendrogram agglomerate(const DistanceMatrix& matrix);

/// Undo the last k - 1 merges. Groups are ordered by their smallest leaf
/// index, members by leaf index. Throws Errc::invalid_k unless 1 <= k <= n.
ClusterAssignment cut(const Dendrogram& tree, std::size_t k);

/// Spreadsheet-style letters: 0 -> "A", 25 -> "Z", 26 -> "AA".
std::string cluster_letter(std::size_t index);

/**
 * Orders groups by mean scaled score, highest first, and letters them A, B, ...
 * When `business` (type id -> fraction of volume) is non-empty each group also
 * gets the sum of its members' fractions.
 */
ClusterAssignment label_clusters(ClusterAssignment groups, std::span<const ScoredType> scores,
                                 const std::map<std::string, double>& business = {});

}  // namespace cplx
