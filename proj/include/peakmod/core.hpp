#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peakmod/error.hpp"

namespace peakmod {

// ---------------------------------------------------------------------------
// Steps and families
// ---------------------------------------------------------------------------

/// One step of a lattice path. Up = (1,1), Down = (1,-k), Level = (a,0) in color b.
///
/// The defaulted ordering gives the canonical enumeration order
/// Up < Down < Level, with level steps ordered by (length, color).
struct Step {
    enum class Kind : std::uint8_t { Up, Down, Level };

    Kind kind = Kind::Up;
    int length = 1;  // run-length a for level steps, 1 otherwise
    int color = 0;   // color b (1-based) for level steps, 0 otherwise

    static constexpr Step up() { return {Kind::Up, 1, 0}; }
    static constexpr Step down() { return {Kind::Down, 1, 0}; }
    static constexpr Step level(int a, int b) { return {Kind::Level, a, b}; }

    constexpr bool is_up() const { return kind == Kind::Up; }
    constexpr bool is_down() const { return kind == Kind::Down; }
    constexpr bool is_level() const { return kind == Kind::Level; }

    constexpr auto operator<=>(const Step&) const = default;
};

using Steps = std::vector<Step>;

/// Parameters of a path family: down-step drop k, colored level alphabet,
/// and target end height m = ell*k + r.
///
/// An empty level map means level steps are forbidden (pure k-Dyck and
/// ballot paths).
struct FamilySpec {
    int k = 1;
    std::map<int, int> levels;  // run-length a -> number of colors c_a
    int end_height = 0;

    static FamilySpec k_dyck(int k) { return make(k, {}, 0); }
    static FamilySpec ballot(int k, int m) { return make(k, {}, m); }
    static FamilySpec make(int k, std::map<int, int> levels, int end_height);

    int ell() const { return end_height / k; }
    int residue() const { return end_height % k; }
    bool has_levels() const { return !levels.empty(); }
    bool allows(const Step& s) const;

    /// Same alphabet, different target height.
    FamilySpec with_end_height(int m) const { return make(k, levels, m); }

    bool operator==(const FamilySpec&) const = default;
};

/// Parses the `a:c[,a:c]*` level grammar; an empty string yields no levels.
std::map<int, int> parse_levels(std::string_view text);
std::string render_levels(const std::map<int, int>& levels);

// ---------------------------------------------------------------------------
// Lattice paths
// ---------------------------------------------------------------------------

/// A validated, immutable step sequence of some family.
///
/// The start height is part of the value so that lifted copies are ordinary
/// paths. Every prefix stays at height >= 0 and the path ends at
/// start_height + spec.end_height.
class LatticePath {
public:
    /// Empty k=1 Dyck path.
    LatticePath() = default;

    /// Validates and constructs; throws Error(NegativeHeight | WrongEndHeight | IllegalStep).
    static LatticePath validate(const FamilySpec& spec, Steps steps, int start_height = 0);

    /// Skips validation. Only for steps already known to satisfy every invariant.
    static LatticePath trusted(const FamilySpec& spec, Steps steps, int start_height = 0);

    const FamilySpec& spec() const { return spec_; }
    int k() const { return spec_.k; }
    const Steps& steps() const { return steps_; }
    std::span<const Step> view() const { return steps_; }
    int start_height() const { return start_height_; }
    int final_height() const { return start_height_ + spec_.end_height; }

    bool empty() const { return steps_.empty(); }
    std::size_t size() const { return steps_.size(); }
    int down_size() const;
    int up_count() const;
    /// |P|: up and down steps have length 1, level step l_{a,b} has length a.
    int length() const;

    bool operator==(const LatticePath&) const = default;

private:
    LatticePath(FamilySpec spec, Steps steps, int start_height)
        : spec_(std::move(spec)), steps_(std::move(steps)), start_height_(start_height) {}

    FamilySpec spec_;
    Steps steps_;
    int start_height_ = 0;
};

/// Heights at every vertex, starting with the start height; one entry per step plus one.
std::vector<int> height_profile(const LatticePath& path);
std::vector<int> height_profile(std::span<const Step> steps, int k, int start_height = 0);

/// Tokenizes `u`, `d`, `l<a>_<b>` (whitespace ignored) and validates against spec.
LatticePath parse_path(std::string_view text, const FamilySpec& spec, int start_height = 0);
/// Tokenizes without validation; throws Error(ParseError) with the offending offset.
Steps parse_steps(std::string_view text);

std::string render_path(const LatticePath& path);
std::string render_steps(std::span<const Step> steps);
std::string render_step(const Step& step);

// ---------------------------------------------------------------------------
// Positional trees
// ---------------------------------------------------------------------------

/// Label of a peak or double descent, also carried by tree nodes.
struct NodeLabel {
    enum class Kind : std::uint8_t { RightmostPeak, Peak, DoubleDescent };

    Kind kind = Kind::RightmostPeak;
    int residue = 0;  // Peak only
    int ordinal = 0;  // Peak and DoubleDescent, 1-based

    static NodeLabel rightmost() { return {Kind::RightmostPeak, 0, 0}; }
    static NodeLabel peak(int residue, int ordinal) { return {Kind::Peak, residue, ordinal}; }
    static NodeLabel double_descent(int ordinal) { return {Kind::DoubleDescent, 0, ordinal}; }

    auto operator<=>(const NodeLabel&) const = default;
};

/// "r", "p<i>_<j>", "dd_<j>".
std::string to_string(const NodeLabel& label);
NodeLabel parse_label(std::string_view text);
/// Short form used in drawings: "r", "<i>_<j>", "d_<j>".
std::string short_label(const NodeLabel& label);

/// A node with children at explicit positions. Children are kept sorted by position.
struct TreeNode {
    int position = 0;  // position under the parent; 0 for the root
    std::vector<TreeNode> children;
    std::optional<NodeLabel> label;

    const TreeNode* child_at(int position) const;
    std::size_t size() const;

    bool operator==(const TreeNode&) const = default;
};

/// Rooted m-ary tree whose children occupy positions in [1..m]; may be empty.
class PositionalTree {
public:
    PositionalTree() = default;
    explicit PositionalTree(int arity) : arity_(arity) {}

    /// Validates positions (range and uniqueness) and sorts children;
    /// throws Error(DuplicatePosition | PositionOutOfRange).
    static PositionalTree make(int arity, std::optional<TreeNode> root);
    static PositionalTree single_node(int arity) { return make(arity, TreeNode{}); }

    int arity() const { return arity_; }
    bool empty() const { return !root_.has_value(); }
    const std::optional<TreeNode>& root() const { return root_; }
    std::size_t size() const { return root_ ? root_->size() : 0; }

    bool operator==(const PositionalTree&) const = default;

private:
    int arity_ = 1;
    std::optional<TreeNode> root_;
};

/// Canonical JSON: {"label":"...","1":{...},"3":{...}} with positions in
/// increasing numeric order and no whitespace; the empty tree is `null`.
std::string tree_to_json(const PositionalTree& tree);
PositionalTree tree_from_json(std::string_view text, int arity);

}  // namespace peakmod
