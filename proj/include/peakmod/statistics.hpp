#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "peakmod/core.hpp"

namespace peakmod {

enum class Variant { Plain, Weak, PlainStarred, WeakStarred };

std::string_view to_string(Variant v);
/// Accepts "plain", "weak", "plain_starred"/"plain-starred", "weak_starred"/"weak-starred".
Variant parse_variant(std::string_view text);

constexpr bool is_weak(Variant v) { return v == Variant::Weak || v == Variant::WeakStarred; }
constexpr bool is_starred(Variant v) { return v == Variant::PlainStarred || v == Variant::WeakStarred; }

/// (pk_0, ..., pk_{k-1}, dd) in one of the four flavours.
struct StatVector {
    int k = 1;
    std::vector<int> pk;  // dense, indexed by residue 0..k-1
    int dd = 0;
    Variant variant = Variant::Plain;

    /// pk_0, ..., pk_{k-1}, dd as one tuple of k+1 slots.
    std::vector<int> tuple() const;
    int total_peaks() const;

    bool operator==(const StatVector&) const = default;
};

/// A peak-like block: `index` is its first step, `height` the left endpoint
/// of its down (or level) step.
struct Feature {
    std::size_t index = 0;
    int height = 0;

    bool operator==(const Feature&) const = default;
};

/// Every ud block.
std::vector<Feature> peaks(const LatticePath& path);
/// Index of the first step of every dd block.
std::vector<std::size_t> double_descents(const LatticePath& path);

/// ud, u l_{a,b}, and a leftmost level step.
std::vector<Feature> weak_peaks(const LatticePath& path);
/// dd and l_{a,b} d blocks (index of the first step).
std::vector<std::size_t> weak_double_descents(const LatticePath& path);

StatVector stat_vector(const LatticePath& path, Variant variant);

/// Labels keyed by the first step of each ud / dd block, for a nonempty
/// pure path. Throws Error(EmptyPath).
std::map<std::size_t, NodeLabel> label_features(const LatticePath& path);

/// (e_1, ..., e_m): number of nodes at each position.
std::vector<int> e_vector(const PositionalTree& tree);

/// {"k":K,"variant":"...","pk":[...],"dd":D}
std::string stat_vector_json(const StatVector& s);

}  // namespace peakmod
