#include "peakmod/statistics.hpp"

#include <numeric>

namespace peakmod {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::Plain: return "plain";
        case Variant::Weak: return "weak";
        case Variant::PlainStarred: return "plain_starred";
        case Variant::WeakStarred: return "weak_starred";
    }
    return "plain";
}

Variant parse_variant(std::string_view text) {
    if (text == "plain") return Variant::Plain;
    if (text == "weak") return Variant::Weak;
    if (text == "plain_starred" || text == "plain-starred") return Variant::PlainStarred;
    if (text == "weak_starred" || text == "weak-starred") return Variant::WeakStarred;
    throw Error(ErrorCode::InvalidArgument, "unknown variant '" + std::string(text) + "'");
}

std::vector<int> StatVector::tuple() const {
    std::vector<int> t = pk;
    t.push_back(dd);
    return t;
}

int StatVector::total_peaks() const { return std::accumulate(pk.begin(), pk.end(), 0); }

namespace {

int residue(int height, int k) { return ((height % k) + k) % k; }

}  // namespace

std::vector<Feature> peaks(const LatticePath& path) {
    const Steps& s = path.steps();
    std::vector<Feature> out;
    int h = path.start_height();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i].is_up()) {
            ++h;
            if (s[i + 1].is_down()) out.push_back({i, h});
        } else if (s[i].is_down()) {
            h -= path.k();
        }
    }
    return out;
}

std::vector<std::size_t> double_descents(const LatticePath& path) {
    const Steps& s = path.steps();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i].is_down() && s[i + 1].is_down()) out.push_back(i);
    }
    return out;
}

std::vector<Feature> weak_peaks(const LatticePath& path) {
    const Steps& s = path.steps();
    std::vector<Feature> out;
    if (!s.empty() && s.front().is_level()) out.push_back({0, path.start_height()});
    int h = path.start_height();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i].is_up()) {
            ++h;
            if (!s[i + 1].is_up()) out.push_back({i, h});
        } else if (s[i].is_down()) {
            h -= path.k();
        }
    }
    return out;
}

std::vector<std::size_t> weak_double_descents(const LatticePath& path) {
    const Steps& s = path.steps();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (!s[i].is_up() && s[i + 1].is_down()) out.push_back(i);
    }
    return out;
}

StatVector stat_vector(const LatticePath& path, Variant variant) {
    StatVector sv;
    sv.k = path.k();
    sv.variant = variant;
    sv.pk.assign(static_cast<std::size_t>(path.k()), 0);

    const bool weak = is_weak(variant);
    std::vector<Feature> features = weak ? weak_peaks(path) : peaks(path);
    sv.dd = static_cast<int>(weak ? weak_double_descents(path).size() : double_descents(path).size());

    // The rightmost peak is the one with the largest step index.
    if (!is_starred(variant) && !features.empty()) features.pop_back();
    for (const Feature& f : features) ++sv.pk[static_cast<std::size_t>(residue(f.height, path.k()))];
    return sv;
}

std::map<std::size_t, NodeLabel> label_features(const LatticePath& path) {
    if (path.empty()) throw Error(ErrorCode::EmptyPath, "cannot label the features of an empty path");
    std::map<std::size_t, NodeLabel> labels;
    std::vector<Feature> pks = peaks(path);
    std::vector<int> next(static_cast<std::size_t>(path.k()), 1);
    for (std::size_t i = 0; i < pks.size(); ++i) {
        if (i + 1 == pks.size()) {
            labels[pks[i].index] = NodeLabel::rightmost();
        } else {
            int res = residue(pks[i].height, path.k());
            labels[pks[i].index] = NodeLabel::peak(res, next[static_cast<std::size_t>(res)]++);
        }
    }
    int ordinal = 1;
    for (std::size_t idx : double_descents(path)) labels[idx] = NodeLabel::double_descent(ordinal++);
    return labels;
}

std::vector<int> e_vector(const PositionalTree& tree) {
    std::vector<int> e(static_cast<std::size_t>(tree.arity()), 0);
    if (tree.empty()) return e;
    std::vector<const TreeNode*> stack{&*tree.root()};
    while (!stack.empty()) {
        const TreeNode* node = stack.back();
        stack.pop_back();
        for (const TreeNode& c : node->children) {
            ++e[static_cast<std::size_t>(c.position - 1)];
            stack.push_back(&c);
        }
    }
    return e;
}

std::string stat_vector_json(const StatVector& s) {
    std::string out = "{\"k\":" + std::to_string(s.k) + ",\"variant\":\"" + std::string(to_string(s.variant)) +
                      "\",\"pk\":[";
    for (std::size_t i = 0; i < s.pk.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.pk[i]);
    }
    out += "],\"dd\":" + std::to_string(s.dd) + "}";
    return out;
}

}  // namespace peakmod
