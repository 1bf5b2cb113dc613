#include "peakmod/render.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "peakmod/statistics.hpp"

namespace peakmod {

namespace {

struct Annotation {
    int x = 0;
    int y = 0;
    std::string text;
};

// x coordinate of every vertex (cumulative step length).
std::vector<int> vertex_x(const LatticePath& path) {
    std::vector<int> xs{0};
    for (const Step& s : path.steps()) xs.push_back(xs.back() + s.length);
    return xs;
}

std::vector<Annotation> annotations(const LatticePath& path) {
    std::vector<Annotation> out;
    if (path.empty()) return out;
    const auto xs = vertex_x(path);
    const auto hs = height_profile(path);
    auto at = [&](std::size_t vertex, std::string text) {
        out.push_back({xs[vertex], hs[vertex], std::move(text)});
    };
    if (!path.spec().has_levels()) {
        for (const auto& [block, label] : label_features(path)) at(block + 1, short_label(label));
    } else {
        auto wpk = weak_peaks(path);
        if (!wpk.empty()) wpk.pop_back();
        for (const Feature& f : wpk) {
            std::size_t vertex = path.steps()[f.index].is_level() ? f.index : f.index + 1;
            at(vertex, std::to_string(((f.height % path.k()) + path.k()) % path.k()));
        }
        for (std::size_t idx : weak_double_descents(path)) at(idx + 1, "d");
    }
    std::sort(out.begin(), out.end(), [](const Annotation& a, const Annotation& b) { return a.x < b.x; });
    return out;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

std::string render_path_ascii(const LatticePath& path, bool labels) {
    if (path.empty()) return "";
    const auto xs = vertex_x(path);
    const auto hs = height_profile(path);
    const int width = xs.back();
    int rows = 1;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Step& s = path.steps()[i];
        rows = std::max(rows, s.is_up() ? hs[i] + 1 : hs[i] + (s.is_level() ? 1 : 0));
    }
    // grid[row][col], row 0 is height band [0, 1).
    std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(width), ' '));
    auto put = [&](int row, int col, char c) { grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = c; };
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Step& s = path.steps()[i];
        if (s.is_up()) {
            put(hs[i], xs[i], '/');
        } else if (s.is_down()) {
            for (int row = hs[i + 1]; row < hs[i]; ++row) put(row, xs[i], '\\');
        } else {
            for (int col = xs[i]; col < xs[i + 1]; ++col) put(hs[i], col, '_');
        }
    }
    std::string out;
    for (int row = rows - 1; row >= 0; --row) {
        std::string line = grid[static_cast<std::size_t>(row)];
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    if (labels) {
        for (const Annotation& a : annotations(path)) {
            out += "x=" + std::to_string(a.x) + " y=" + std::to_string(a.y) + " " + a.text + "\n";
        }
    }
    return out;
}

std::string render_path_svg(const LatticePath& path, bool labels) {
    constexpr int unit = 20;
    constexpr int margin = 20;
    const auto xs = vertex_x(path);
    const auto hs = height_profile(path);
    const int max_h = *std::max_element(hs.begin(), hs.end());
    const int width = 2 * margin + unit * xs.back();
    const int height = 2 * margin + unit * max_h;
    auto px = [&](int x) { return margin + unit * x; };
    auto py = [&](int y) { return height - margin - unit * y; };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
                      std::to_string(height) + "\">\n";
    out += "<polyline fill=\"none\" stroke=\"black\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(px(xs[i])) + "," + std::to_string(py(hs[i]));
    }
    out += "\"/>\n";
    if (labels) {
        for (const Annotation& a : annotations(path)) {
            out += "<text x=\"" + std::to_string(px(a.x)) + "\" y=\"" + std::to_string(py(a.y) - 5) +
                   "\" font-size=\"10\" text-anchor=\"middle\">" + escape_xml(a.text) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

namespace {

std::string node_text(const TreeNode& node) { return node.label ? short_label(*node.label) : "o"; }

void outline(const TreeNode& node, const std::string& prefix, std::string& out) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        const TreeNode& c = node.children[i];
        const bool last = i + 1 == node.children.size();
        out += prefix + "+-" + std::to_string(c.position) + " " + node_text(c) + "\n";
        outline(c, prefix + (last ? "  " : "| "), out);
    }
}

}  // namespace

std::string render_tree_ascii(const PositionalTree& tree) {
    if (tree.empty()) return "";
    std::string out = node_text(*tree.root()) + "\n";
    outline(*tree.root(), "", out);
    return out;
}

std::string render_tree_svg(const PositionalTree& tree) {
    constexpr int unit = 40;
    constexpr int margin = 20;
    struct Placed {
        double x;
        int depth;
        const TreeNode* node;
        int parent;
    };
    std::vector<Placed> placed;
    int max_depth = 0;
    // Leaves take one slot, absent positions under an internal node take one
    // empty slot, and a parent sits centered over its slots.
    std::function<double(const TreeNode&, double, int, int, double&)> layout =
        [&](const TreeNode& node, double left, int depth, int parent, double& x_out) -> double {
        max_depth = std::max(max_depth, depth);
        const int self = static_cast<int>(placed.size());
        placed.push_back({0.0, depth, &node, parent});
        double cursor = left;
        if (node.children.empty()) {
            cursor += 1.0;
        } else {
            for (int pos = 1; pos <= tree.arity(); ++pos) {
                if (const TreeNode* child = node.child_at(pos)) {
                    double child_x = 0.0;
                    cursor += layout(*child, cursor, depth + 1, self, child_x);
                } else {
                    cursor += 1.0;
                }
            }
        }
        x_out = (left + cursor) / 2.0;
        placed[static_cast<std::size_t>(self)].x = x_out;
        return cursor - left;
    };

    double total = 0.0;
    if (!tree.empty()) {
        double root_x = 0.0;
        total = layout(*tree.root(), 0.0, 0, -1, root_x);
    }
    const int width = 2 * margin + static_cast<int>(unit * total);
    const int height = 2 * margin + unit * max_depth;
    auto px = [&](double x) { return std::to_string(margin + static_cast<int>(unit * x)); };
    auto py = [&](int depth) { return std::to_string(margin + unit * depth); };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
                      std::to_string(height) + "\">\n";
    for (const Placed& p : placed) {
        if (p.parent < 0) continue;
        const Placed& q = placed[static_cast<std::size_t>(p.parent)];
        out += "<line x1=\"" + px(q.x) + "\" y1=\"" + py(q.depth) + "\" x2=\"" + px(p.x) + "\" y2=\"" + py(p.depth) +
               "\" stroke=\"black\"/>\n";
    }
    for (const Placed& p : placed) {
        out += "<circle cx=\"" + px(p.x) + "\" cy=\"" + py(p.depth) + "\" r=\"10\" fill=\"white\" stroke=\"black\"/>\n";
        if (p.node->label) {
            out += "<text x=\"" + px(p.x) + "\" y=\"" + std::to_string(margin + unit * p.depth + 4) +
                   "\" font-size=\"10\" text-anchor=\"middle\">" + escape_xml(short_label(*p.node->label)) +
                   "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace peakmod
