#include "peakmod/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include <json.hpp>

namespace peakmod {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NegativeHeight: return "NegativeHeight";
        case ErrorCode::WrongEndHeight: return "WrongEndHeight";
        case ErrorCode::IllegalStep: return "IllegalStep";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DuplicatePosition: return "DuplicatePosition";
        case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
        case ErrorCode::EmptyPath: return "EmptyPath";
        case ErrorCode::WrongK: return "WrongK";
        case ErrorCode::BadPermutation: return "BadPermutation";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::NonIntegerResult: return "NonIntegerResult";
        case ErrorCode::ResourceLimit: return "ResourceLimit";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// FamilySpec
// ---------------------------------------------------------------------------

FamilySpec FamilySpec::make(int k, std::map<int, int> levels, int end_height) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be positive");
    if (end_height < 0) throw Error(ErrorCode::InvalidArgument, "end height must be nonnegative");
    for (const auto& [a, c] : levels) {
        if (a < 1 || c < 1) {
            throw Error(ErrorCode::InvalidArgument, "level lengths and color counts must be positive");
        }
    }
    FamilySpec spec;
    spec.k = k;
    spec.levels = std::move(levels);
    spec.end_height = end_height;
    return spec;
}

bool FamilySpec::allows(const Step& s) const {
    if (!s.is_level()) return s.length == 1 && s.color == 0;
    auto it = levels.find(s.length);
    return it != levels.end() && s.color >= 1 && s.color <= it->second;
}

namespace {

int parse_int(std::string_view text, std::size_t offset) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw Error(ErrorCode::ParseError, "expected integer at offset " + std::to_string(offset));
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::map<int, int> parse_levels(std::string_view text) {
    std::map<int, int> levels;
    text = trim(text);
    std::size_t offset = 0;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto item = trim(text.substr(0, comma));
        auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "level entry must be a:c at offset " + std::to_string(offset));
        }
        int a = parse_int(trim(item.substr(0, colon)), offset);
        int c = parse_int(trim(item.substr(colon + 1)), offset);
        if (a < 1 || c < 1) throw Error(ErrorCode::ParseError, "level a:c must be positive");
        if (!levels.emplace(a, c).second) {
            throw Error(ErrorCode::ParseError, "duplicate level length " + std::to_string(a));
        }
        if (comma == std::string_view::npos) break;
        offset += comma + 1;
        text.remove_prefix(comma + 1);
    }
    return levels;
}

std::string render_levels(const std::map<int, int>& levels) {
    std::string out;
    for (const auto& [a, c] : levels) {
        if (!out.empty()) out += ',';
        out += std::to_string(a) + ':' + std::to_string(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// LatticePath
// ---------------------------------------------------------------------------

LatticePath LatticePath::validate(const FamilySpec& spec, Steps steps, int start_height) {
    if (start_height < 0) throw Error(ErrorCode::NegativeHeight, "start height below zero");
    long height = start_height;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Step& s = steps[i];
        if (!spec.allows(s)) {
            throw Error(ErrorCode::IllegalStep, "step " + std::to_string(i) + " (" + render_step(s) +
                                                    ") not in the family alphabet");
        }
        if (s.is_up()) ++height;
        if (s.is_down()) height -= spec.k;
        if (height < 0) {
            throw Error(ErrorCode::NegativeHeight, "height drops below zero after step " + std::to_string(i));
        }
    }
    if (height != start_height + spec.end_height) {
        throw Error(ErrorCode::WrongEndHeight, "path ends at height " + std::to_string(height - start_height) +
                                                   " relative to its start, expected " +
                                                   std::to_string(spec.end_height));
    }
    return LatticePath(spec, std::move(steps), start_height);
}

LatticePath LatticePath::trusted(const FamilySpec& spec, Steps steps, int start_height) {
    return LatticePath(spec, std::move(steps), start_height);
}

int LatticePath::down_size() const {
    return static_cast<int>(std::count_if(steps_.begin(), steps_.end(), [](const Step& s) { return s.is_down(); }));
}

int LatticePath::up_count() const {
    return static_cast<int>(std::count_if(steps_.begin(), steps_.end(), [](const Step& s) { return s.is_up(); }));
}

int LatticePath::length() const {
    int total = 0;
    for (const Step& s : steps_) total += s.length;
    return total;
}

std::vector<int> height_profile(std::span<const Step> steps, int k, int start_height) {
    std::vector<int> heights;
    heights.reserve(steps.size() + 1);
    int h = start_height;
    heights.push_back(h);
    for (const Step& s : steps) {
        if (s.is_up()) h += 1;
        else if (s.is_down()) h -= k;
        heights.push_back(h);
    }
    return heights;
}

std::vector<int> height_profile(const LatticePath& path) {
    return height_profile(path.view(), path.k(), path.start_height());
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

Steps parse_steps(std::string_view text) {
    Steps steps;
    std::size_t i = 0;
    auto read_int = [&](std::size_t& pos) {
        std::size_t begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == begin) throw Error(ErrorCode::ParseError, "expected digits at offset " + std::to_string(begin));
        return parse_int(text.substr(begin, pos - begin), begin);
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == 'u') {
            steps.push_back(Step::up());
            ++i;
        } else if (c == 'd') {
            steps.push_back(Step::down());
            ++i;
        } else if (c == 'l') {
            ++i;
            int a = read_int(i);
            if (i >= text.size() || text[i] != '_') {
                throw Error(ErrorCode::ParseError, "expected '_' at offset " + std::to_string(i));
            }
            ++i;
            int b = read_int(i);
            steps.push_back(Step::level(a, b));
        } else {
            throw Error(ErrorCode::ParseError,
                        std::string("unexpected character '") + c + "' at offset " + std::to_string(i));
        }
    }
    return steps;
}

LatticePath parse_path(std::string_view text, const FamilySpec& spec, int start_height) {
    return LatticePath::validate(spec, parse_steps(text), start_height);
}

std::string render_step(const Step& step) {
    switch (step.kind) {
        case Step::Kind::Up: return "u";
        case Step::Kind::Down: return "d";
        case Step::Kind::Level: return "l" + std::to_string(step.length) + "_" + std::to_string(step.color);
    }
    return {};
}

std::string render_steps(std::span<const Step> steps) {
    std::string out;
    out.reserve(steps.size());
    for (const Step& s : steps) out += render_step(s);
    return out;
}

std::string render_path(const LatticePath& path) { return render_steps(path.view()); }

// ---------------------------------------------------------------------------
// Labels and trees
// ---------------------------------------------------------------------------

std::string to_string(const NodeLabel& label) {
    switch (label.kind) {
        case NodeLabel::Kind::RightmostPeak: return "r";
        case NodeLabel::Kind::Peak: return "p" + std::to_string(label.residue) + "_" + std::to_string(label.ordinal);
        case NodeLabel::Kind::DoubleDescent: return "dd_" + std::to_string(label.ordinal);
    }
    return {};
}

std::string short_label(const NodeLabel& label) {
    switch (label.kind) {
        case NodeLabel::Kind::RightmostPeak: return "r";
        case NodeLabel::Kind::Peak: return std::to_string(label.residue) + "_" + std::to_string(label.ordinal);
        case NodeLabel::Kind::DoubleDescent: return "d_" + std::to_string(label.ordinal);
    }
    return {};
}

NodeLabel parse_label(std::string_view text) {
    auto bad = [&] { return Error(ErrorCode::ParseError, "bad label '" + std::string(text) + "'"); };
    if (text == "r") return NodeLabel::rightmost();
    if (text.starts_with("dd_")) {
        int j = parse_int(text.substr(3), 3);
        if (j < 1) throw bad();
        return NodeLabel::double_descent(j);
    }
    if (text.starts_with("p")) {
        auto underscore = text.find('_');
        if (underscore == std::string_view::npos) throw bad();
        int i = parse_int(text.substr(1, underscore - 1), 1);
        int j = parse_int(text.substr(underscore + 1), underscore + 1);
        if (i < 0 || j < 1) throw bad();
        return NodeLabel::peak(i, j);
    }
    throw bad();
}

const TreeNode* TreeNode::child_at(int pos) const {
    for (const TreeNode& c : children) {
        if (c.position == pos) return &c;
    }
    return nullptr;
}

std::size_t TreeNode::size() const {
    std::size_t n = 1;
    for (const TreeNode& c : children) n += c.size();
    return n;
}

namespace {

void normalize(TreeNode& node, int arity) {
    for (TreeNode& c : node.children) {
        if (c.position < 1 || c.position > arity) {
            throw Error(ErrorCode::PositionOutOfRange,
                        "child position " + std::to_string(c.position) + " outside [1.." + std::to_string(arity) + "]");
        }
        normalize(c, arity);
    }
    std::sort(node.children.begin(), node.children.end(),
              [](const TreeNode& a, const TreeNode& b) { return a.position < b.position; });
    auto dup = std::adjacent_find(node.children.begin(), node.children.end(),
                                  [](const TreeNode& a, const TreeNode& b) { return a.position == b.position; });
    if (dup != node.children.end()) {
        throw Error(ErrorCode::DuplicatePosition, "two children at position " + std::to_string(dup->position));
    }
}

void write_node(const TreeNode& node, std::string& out) {
    out += '{';
    bool first = true;
    if (node.label) {
        out += "\"label\":\"" + to_string(*node.label) + "\"";
        first = false;
    }
    for (const TreeNode& c : node.children) {
        if (!first) out += ',';
        first = false;
        out += '"' + std::to_string(c.position) + "\":";
        write_node(c, out);
    }
    out += '}';
}

TreeNode read_node(const nlohmann::json& j, int position) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "tree node must be a JSON object");
    TreeNode node;
    node.position = position;
    for (const auto& [key, value] : j.items()) {
        if (key == "label") {
            if (!value.is_string()) throw Error(ErrorCode::ParseError, "label must be a string");
            node.label = parse_label(value.get<std::string>());
            continue;
        }
        if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw Error(ErrorCode::ParseError, "tree key '" + key + "' is neither a position nor \"label\"");
        }
        int pos = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), pos);
        if (ec != std::errc{}) throw Error(ErrorCode::PositionOutOfRange, "position '" + key + "' out of range");
        node.children.push_back(read_node(value, pos));
    }
    return node;
}

}  // namespace

PositionalTree PositionalTree::make(int arity, std::optional<TreeNode> root) {
    if (arity < 1) throw Error(ErrorCode::InvalidArgument, "arity must be positive");
    PositionalTree tree(arity);
    if (root) {
        root->position = 0;
        normalize(*root, arity);
    }
    tree.root_ = std::move(root);
    return tree;
}

std::string tree_to_json(const PositionalTree& tree) {
    if (tree.empty()) return "null";
    std::string out;
    write_node(*tree.root(), out);
    return out;
}

PositionalTree tree_from_json(std::string_view text, int arity) {
    // The parsed object keeps only the last of two equal keys, so duplicate
    // positions are detected while parsing.
    std::vector<std::set<std::string>> open_objects;
    bool duplicate = false;
    nlohmann::json::parser_callback_t watch = [&](int, nlohmann::json::parse_event_t event, nlohmann::json& parsed) {
        using Event = nlohmann::json::parse_event_t;
        if (event == Event::object_start) open_objects.emplace_back();
        if (event == Event::object_end) open_objects.pop_back();
        if (event == Event::key && !open_objects.back().insert(parsed.get<std::string>()).second) duplicate = true;
        return true;
    };
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text, watch);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("tree JSON: ") + e.what());
    }
    if (duplicate) throw Error(ErrorCode::DuplicatePosition, "duplicate key in tree JSON");
    if (j.is_null()) return PositionalTree::make(arity, std::nullopt);
    return PositionalTree::make(arity, read_node(j, 0));
}

}  // namespace peakmod
