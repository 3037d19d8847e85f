#include "cplx/clustering.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <unordered_map>

#include "cplx/error.hpp"

namespace cplx {

namespace {
constexpr std::string_view kModule = "clustering";
}

std::vector<std::size_t> Dendrogram::members(NodeRef node) const {
    std::vector<std::size_t> out;
    std::vector<NodeRef> stack{node};
    while (!stack.empty()) {
        const NodeRef cur = stack.back();
        stack.pop_back();
        if (cur.is_leaf()) {
            out.push_back(cur.index);
        } else {
            stack.push_back(merges.at(cur.index).left);
            stack.push_back(merges.at(cur.index).right);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> Dendrogram::leaf_order() const {
    std::vector<std::size_t> out;
    if (leaves.empty()) return out;
    std::vector<NodeRef> stack{root()};
    while (!stack.empty()) {
        const NodeRef cur = stack.back();
        stack.pop_back();
        if (cur.is_leaf()) {
            out.push_back(cur.index);
        } else {
            stack.push_back(merges[cur.index].right);
            stack.push_back(merges[cur.index].left);
        }
    }
    return out;
}

NodeRef Dendrogram::root() const {
    return merges.empty() ? NodeRef::leaf(0) : NodeRef::merge(merges.size() - 1);
}

Dendrogram agglomerate(const DistanceMatrix& matrix) {
    matrix.validate();
    const std::size_t n = matrix.size();
    if (n == 0) throw Error(Errc::inconsistent_input, kModule, "cannot cluster zero types");

    // Working linkage matrix indexed by cluster id (= smallest member leaf).
    std::vector<double> link(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) link[i * n + j] = matrix(i, j);
    }
    std::vector<bool> active(n, true);
    std::vector<NodeRef> node(n);
    std::vector<std::size_t> size(n, 1);
    for (std::size_t i = 0; i < n; ++i) node[i] = NodeRef::leaf(i);

    Dendrogram tree;
    tree.leaves = matrix.labels();
    tree.merges.reserve(n - 1);

    for (std::size_t step = 0; step + 1 < n; ++step) {
        std::size_t best_i = n, best_j = n;
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!active[j]) continue;
                const double d = link[i * n + j];
                if (best_i == n || d < best) {
                    best = d;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        assert(tree.merges.empty() || best >= tree.merges.back().height);

        size[best_i] += size[best_j];
        tree.merges.push_back({node[best_i], node[best_j], best, size[best_i]});
        node[best_i] = NodeRef::merge(tree.merges.size() - 1);
        active[best_j] = false;
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k] || k == best_i) continue;
            const double d = std::max(link[best_i * n + k], link[best_j * n + k]);
            link[best_i * n + k] = d;
            link[k * n + best_i] = d;
        }
    }
    return tree;
}

ClusterAssignment cut(const Dendrogram& tree, std::size_t k) {
    const std::size_t n = tree.leaves.size();
    if (k < 1 || k > n) {
        throw Error(Errc::invalid_k, kModule,
                    "cluster count k=" + std::to_string(k) + " outside [1, " + std::to_string(n) +
                        "]");
    }
    // Union-find over the first n - k merges.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto representative = [&](NodeRef ref) {
        // Any leaf under the node will do; the leftmost path is cheapest.
        while (!ref.is_leaf()) ref = tree.merges[ref.index].left;
        return ref.index;
    };
    for (std::size_t m = 0; m < n - k; ++m) {
        const auto a = find(representative(tree.merges[m].left));
        const auto b = find(representative(tree.merges[m].right));
        parent[std::max(a, b)] = std::min(a, b);
    }

    ClusterAssignment out;
    out.k = k;
    std::unordered_map<std::size_t, std::size_t> group_of_root;
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
        const auto root = find(leaf);
        auto [it, inserted] = group_of_root.try_emplace(root, out.groups.size());
        if (inserted) out.groups.emplace_back();
        out.groups[it->second].members.push_back(tree.leaves[leaf]);
    }
    return out;
}

std::string cluster_letter(std::size_t index) {
    std::string out;
    std::size_t i = index + 1;
    while (i > 0) {
        --i;
        out.insert(out.begin(), static_cast<char>('A' + i % 26));
        i /= 26;
    }
    return out;
}

ClusterAssignment label_clusters(ClusterAssignment groups, std::span<const ScoredType> scores,
                                 const std::map<std::string, double>& business) {
    std::unordered_map<std::string, double> score_of;
    for (const auto& s : scores) score_of.emplace(s.type_id, s.scaled_score);

    if (!business.empty()) {
        double total = 0.0;
        for (const auto& [id, fraction] : business) {
            if (!(fraction >= 0.0 && fraction <= 1.0)) {
                throw Error(Errc::inconsistent_input, kModule,
                            "business fraction of '" + id + "' outside [0, 1]");
            }
            if (score_of.contains(id)) total += fraction;
        }
        if (total > 1.0 + 1e-9) {
            throw Error(Errc::inconsistent_input, kModule,
                        "business fractions of analyzed types sum to " + std::to_string(total));
        }
    }

    for (auto& g : groups.groups) {
        double sum = 0.0;
        double volume = 0.0;
        for (const auto& id : g.members) {
            const auto it = score_of.find(id);
            if (it == score_of.end()) {
                throw Error(Errc::inconsistent_input, kModule, "no score for type '" + id + "'");
            }
            sum += it->second;
            if (!business.empty()) {
                const auto b = business.find(id);
                if (b == business.end()) {
                    throw Error(Errc::inconsistent_input, kModule,
                                "no business fraction for type '" + id + "'");
                }
                volume += b->second;
            }
        }
        g.mean_scaled_score = g.members.empty() ? 0.0 : sum / static_cast<double>(g.members.size());
        if (!business.empty()) g.business_fraction = volume;
    }
    std::stable_sort(groups.groups.begin(), groups.groups.end(),
                     [](const ClusterGroup& l, const ClusterGroup& r) {
                         return l.mean_scaled_score > r.mean_scaled_score;
                     });
    for (std::size_t i = 0; i < groups.groups.size(); ++i) {
        groups.groups[i].label = cluster_letter(i);
    }
    return groups;
}

}  // namespace cplx
