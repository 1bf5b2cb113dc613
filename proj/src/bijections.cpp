#include "peakmod/bijections.hpp"

#include <map>
#include <optional>

#include "peakmod/statistics.hpp"
#include "peakmod/transforms.hpp"

namespace peakmod {

namespace {

void require_pure(const LatticePath& path) {
    if (path.spec().has_levels() || path.spec().end_height != 0) {
        throw Error(ErrorCode::IllegalStep, "psi is defined on pure k-Dyck paths");
    }
}

// Steps together with the index each step had in the original path, so that
// labels survive the block permutations applied on the way down.
struct Tracked {
    Steps steps;
    std::vector<std::size_t> ids;
};

Tracked slice(const Tracked& t, std::size_t begin, std::size_t end) {
    Tracked out;
    out.steps.assign(t.steps.begin() + static_cast<std::ptrdiff_t>(begin), t.steps.begin() + static_cast<std::ptrdiff_t>(end));
    out.ids.assign(t.ids.begin() + static_cast<std::ptrdiff_t>(begin), t.ids.begin() + static_cast<std::ptrdiff_t>(end));
    return out;
}

Tracked apply_kappa(const Tracked& t, int k, int power) {
    auto order = detail::kappa_order(t.steps, k, power);
    Tracked out;
    out.steps.reserve(order.size());
    out.ids.reserve(order.size());
    for (std::size_t i : order) {
        out.steps.push_back(t.steps[i]);
        out.ids.push_back(t.ids[i]);
    }
    return out;
}

// Index (within t) of the down-step closing the rightmost peak.
std::size_t rightmost_peak_down(const Tracked& t) {
    for (std::size_t i = t.steps.size(); i-- > 1;) {
        if (t.steps[i].is_down() && t.steps[i - 1].is_up()) return i;
    }
    throw Error(ErrorCode::EmptyPath, "segment has no peak");
}

using DownLabels = std::map<std::size_t, NodeLabel>;  // original down-step index -> label

TreeNode build(const Tracked& q, int k, const DownLabels* labels, std::optional<NodeLabel> own) {
    TreeNode node;
    node.label = own;
    const std::size_t last = q.steps.size() - 1;
    auto cuts = detail::last_passage_cuts(std::span<const Step>(q.steps).first(last), k, k);
    std::size_t begin = 0;
    for (int i = 0; i <= k; ++i) {
        std::size_t end = i < k ? cuts[static_cast<std::size_t>(i)] : last;
        if (end > begin) {
            Tracked part = slice(q, begin, end);
            std::optional<NodeLabel> child_label;
            if (labels) {
                std::size_t down = i < k ? part.ids[rightmost_peak_down(part)] : q.ids[last];
                child_label = labels->at(down);
            }
            TreeNode child = build(apply_kappa(part, k, i), k, labels, child_label);
            child.position = i + 1;
            node.children.push_back(std::move(child));
        }
        begin = end + 1;
    }
    return node;
}

Tracked track(const LatticePath& path) {
    Tracked t{path.steps(), std::vector<std::size_t>(path.size())};
    for (std::size_t i = 0; i < t.ids.size(); ++i) t.ids[i] = i;
    return t;
}

Steps unbuild(const TreeNode& node, int k) {
    Steps out;
    for (int i = 0; i <= k; ++i) {
        if (i > 0) out.push_back(Step::up());
        if (const TreeNode* child = node.child_at(i + 1)) {
            Steps part = unbuild(*child, k);
            auto order = detail::kappa_order(part, k, k - i);
            for (std::size_t t : order) out.push_back(part[t]);
        }
    }
    out.push_back(Step::down());
    return out;
}

}  // namespace

PositionalTree psi(const LatticePath& path) {
    require_pure(path);
    if (path.empty()) return PositionalTree::make(path.k() + 1, std::nullopt);
    return PositionalTree::make(path.k() + 1, build(track(path), path.k(), nullptr, std::nullopt));
}

PositionalTree psi_with_labels(const LatticePath& path) {
    require_pure(path);
    if (path.empty()) throw Error(ErrorCode::EmptyPath, "labeled psi needs a nonempty path");
    DownLabels labels;
    // label_features keys by the first step of the block; the labeled vertex
    // is the left endpoint of the following down-step.
    for (const auto& [block, label] : label_features(path)) labels[block + 1] = label;
    return PositionalTree::make(path.k() + 1, build(track(path), path.k(), &labels, NodeLabel::rightmost()));
}

LatticePath psi_inv(const PositionalTree& tree, int k) {
    if (tree.arity() != k + 1) {
        throw Error(ErrorCode::ArityMismatch, "tree arity " + std::to_string(tree.arity()) + " does not match k+1 = " +
                                                  std::to_string(k + 1));
    }
    FamilySpec spec = FamilySpec::k_dyck(k);
    if (tree.empty()) return LatticePath::trusted(spec, {});
    return LatticePath::trusted(spec, unbuild(*tree.root(), k));
}

LatticePath stat_permuter(const LatticePath& path, std::span<const int> sigma) {
    check_permutation(sigma, path.k() + 1);
    return psi_inv(permute_subtrees(psi(path), sigma), path.k());
}

}  // namespace peakmod
