#include "peakmod/transforms.hpp"

#include <algorithm>
#include <limits>

namespace peakmod {

namespace detail {

std::vector<std::size_t> last_passage_cuts(std::span<const Step> steps, int k, int top) {
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> last(static_cast<std::size_t>(top), none);
    int h = 0;
    for (std::size_t t = 0; t < steps.size(); ++t) {
        if (h >= 0 && h < top) last[static_cast<std::size_t>(h)] = t;
        if (steps[t].is_up()) ++h;
        else if (steps[t].is_down()) h -= k;
    }
    if (h != top) throw Error(ErrorCode::WrongEndHeight, "segment does not end at height " + std::to_string(top));
    for (std::size_t j = 0; j < last.size(); ++j) {
        if (last[j] == none || !steps[last[j]].is_up()) {
            throw Error(ErrorCode::NegativeHeight, "segment is not a first-quadrant path");
        }
    }
    return last;
}

namespace {

struct BlockLayout {
    std::vector<std::size_t> cuts;  // separator u of slot j
    std::size_t suffix_begin = 0;   // first step of the up-free suffix
    int suffix_downs = 0;
};

// nullopt-like: cuts empty and suffix_begin == 0 when the path has no up-step.
BlockLayout block_layout(std::span<const Step> steps, int k) {
    BlockLayout layout;
    auto last_up = std::find_if(steps.rbegin(), steps.rend(), [](const Step& s) { return s.is_up(); });
    if (last_up == steps.rend()) {
        layout.suffix_downs = static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const Step& s) { return s.is_down(); }));
        return layout;
    }
    layout.suffix_begin = static_cast<std::size_t>(steps.rend() - last_up);
    auto suffix = steps.subspan(layout.suffix_begin);
    layout.suffix_downs = static_cast<int>(std::count_if(suffix.begin(), suffix.end(), [](const Step& s) { return s.is_down(); }));
    layout.cuts = last_passage_cuts(steps.first(layout.suffix_begin), k, k * layout.suffix_downs);
    return layout;
}

}  // namespace

std::vector<std::size_t> kappa_order(std::span<const Step> steps, int k, int power) {
    std::vector<std::size_t> order(steps.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    if (steps.empty()) return order;
    BlockLayout layout = block_layout(steps, k);
    if (layout.cuts.empty()) return order;

    const int p = ((power % k) + k) % k;
    const int slots = static_cast<int>(layout.cuts.size());
    auto block_begin = [&](int j) { return j == 0 ? std::size_t{0} : layout.cuts[static_cast<std::size_t>(j - 1)] + 1; };

    order.clear();
    for (int j = 0; j < slots; ++j) {
        int src = (j % k < p) ? j + k - p : j - p;
        for (std::size_t t = block_begin(src); t < layout.cuts[static_cast<std::size_t>(src)]; ++t) order.push_back(t);
        order.push_back(layout.cuts[static_cast<std::size_t>(j)]);
    }
    for (std::size_t t = layout.suffix_begin; t < steps.size(); ++t) order.push_back(t);
    return order;
}

}  // namespace detail

namespace {

Steps slice(std::span<const Step> steps, std::size_t begin, std::size_t end) {
    return Steps(steps.begin() + static_cast<std::ptrdiff_t>(begin), steps.begin() + static_cast<std::ptrdiff_t>(end));
}

Steps join_with_ups(const std::vector<LatticePath>& parts) {
    Steps out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(Step::up());
        out.insert(out.end(), parts[i].steps().begin(), parts[i].steps().end());
    }
    return out;
}

}  // namespace

LatticePath RightPeakDecomposition::reassemble() const {
    Steps out;
    for (const LatticePath& b : blocks) {
        out.insert(out.end(), b.steps().begin(), b.steps().end());
        out.push_back(Step::up());
    }
    out.insert(out.end(), suffix.begin(), suffix.end());
    return LatticePath::validate(spec, std::move(out));
}

LatticePath LastStepDecomposition::reassemble() const {
    Steps out;
    if (!degenerate) {
        out = join_with_ups(parts);
        out.push_back(Step::down());
    }
    out.insert(out.end(), level_suffix.begin(), level_suffix.end());
    return LatticePath::validate(spec, std::move(out));
}

LatticePath BallotDecomposition::reassemble() const { return LatticePath::validate(spec, join_with_ups(parts)); }

LatticePath lift(const LatticePath& path, int height) {
    if (height < 0) throw Error(ErrorCode::NegativeHeight, "cannot lift to a negative height");
    return LatticePath::trusted(path.spec(), path.steps(), height);
}

RightPeakDecomposition right_peak_decompose(const LatticePath& path) {
    if (path.empty()) throw Error(ErrorCode::EmptyPath, "right-peak decomposition needs a nonempty path");
    const FamilySpec base = path.spec().with_end_height(0);
    auto steps = path.view();
    auto layout = detail::block_layout(steps, path.k());

    RightPeakDecomposition out;
    out.spec = base;
    out.suffix_downs = layout.suffix_downs;
    std::size_t begin = 0;
    for (std::size_t cut : layout.cuts) {
        out.blocks.push_back(LatticePath::trusted(base, slice(steps, begin, cut)));
        begin = cut + 1;
    }
    out.suffix = slice(steps, layout.suffix_begin, steps.size());
    return out;
}

LatticePath kappa(const LatticePath& path, int power) {
    auto order = detail::kappa_order(path.view(), path.k(), power);
    Steps out;
    out.reserve(order.size());
    for (std::size_t i : order) out.push_back(path.steps()[i]);
    return LatticePath::trusted(path.spec(), std::move(out), path.start_height());
}

LastStepDecomposition last_step_decompose(const LatticePath& path) {
    const FamilySpec base = path.spec().with_end_height(0);
    auto steps = path.view();
    LastStepDecomposition out;
    out.spec = base;

    std::size_t end = steps.size();
    while (end > 0 && steps[end - 1].is_level()) --end;
    out.level_suffix = slice(steps, end, steps.size());
    if (end == 0) {
        out.degenerate = true;
        return out;
    }
    if (!steps[end - 1].is_down()) {
        throw Error(ErrorCode::WrongEndHeight, "path does not return to its start height");
    }
    auto cuts = detail::last_passage_cuts(steps.first(end - 1), path.k(), path.k());
    std::size_t begin = 0;
    for (std::size_t cut : cuts) {
        out.parts.push_back(LatticePath::trusted(base, slice(steps, begin, cut)));
        begin = cut + 1;
    }
    out.parts.push_back(LatticePath::trusted(base, slice(steps, begin, end - 1)));
    return out;
}

BallotDecomposition ballot_decompose(const LatticePath& path) {
    const int m = path.spec().end_height;
    const FamilySpec base = path.spec().with_end_height(0);
    auto steps = path.view();
    auto cuts = detail::last_passage_cuts(steps, path.k(), m);
    BallotDecomposition out;
    out.spec = path.spec();
    std::size_t begin = 0;
    for (std::size_t cut : cuts) {
        out.parts.push_back(LatticePath::trusted(base, slice(steps, begin, cut)));
        begin = cut + 1;
    }
    out.parts.push_back(LatticePath::trusted(base, slice(steps, begin, steps.size())));
    return out;
}

BallotDecomposition ballot_decompose(const LatticePath& path, int m) {
    if (path.spec().end_height != m) {
        throw Error(ErrorCode::WrongEndHeight, "path ends at height " + std::to_string(path.spec().end_height) +
                                                   ", not " + std::to_string(m));
    }
    return ballot_decompose(path);
}

namespace {

Steps eta(std::span<const Step> steps) {
    if (steps.empty()) return {};
    // P = P_0 u P_1 d with the u the last step leaving height 0.
    auto body = steps.first(steps.size() - 1);
    std::size_t cut = detail::last_passage_cuts(body, 1, 1).front();
    Steps out = eta(body.subspan(cut + 1));
    out.push_back(Step::up());
    Steps left = eta(body.first(cut));
    out.insert(out.end(), left.begin(), left.end());
    out.push_back(Step::down());
    return out;
}

}  // namespace

LatticePath deutsch(const LatticePath& path) {
    if (path.k() != 1 || path.spec().has_levels() || path.spec().end_height != 0) {
        throw Error(ErrorCode::WrongK, "the Deutsch involution is defined on Dyck paths (k = 1) only");
    }
    return LatticePath::trusted(path.spec(), eta(path.view()), path.start_height());
}

void check_permutation(std::span<const int> sigma, int m) {
    if (static_cast<int>(sigma.size()) != m) {
        throw Error(ErrorCode::BadPermutation, "permutation has " + std::to_string(sigma.size()) +
                                                   " entries, expected " + std::to_string(m));
    }
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int v : sigma) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) {
            throw Error(ErrorCode::BadPermutation, "not a permutation of 1.." + std::to_string(m));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

namespace {

void permute_node(TreeNode& node, std::span<const int> sigma) {
    for (TreeNode& c : node.children) {
        c.position = sigma[static_cast<std::size_t>(c.position - 1)];
        permute_node(c, sigma);
    }
    std::sort(node.children.begin(), node.children.end(),
              [](const TreeNode& a, const TreeNode& b) { return a.position < b.position; });
}

}  // namespace

PositionalTree permute_subtrees(const PositionalTree& tree, std::span<const int> sigma) {
    check_permutation(sigma, tree.arity());
    if (tree.empty()) return tree;
    TreeNode root = *tree.root();
    permute_node(root, sigma);
    return PositionalTree::make(tree.arity(), std::move(root));
}

}  // namespace peakmod
