#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "peakmod/core.hpp"

namespace peakmod {

/// Q = Q_0 u Q_1 u ... Q_{kn-1} u D where D holds no up-steps and exactly n
/// down-steps (D = d^n for pure paths). Block Q_j starts at height j.
struct RightPeakDecomposition {
    FamilySpec spec;  // end height 0; shared by every block
    std::vector<LatticePath> blocks;
    Steps suffix;
    int suffix_downs = 0;

    LatticePath reassemble() const;
};

/// P = L, or P = P_0 u P_1 u ... u P_k d L with L a run of level steps.
struct LastStepDecomposition {
    FamilySpec spec;
    bool degenerate = false;  // P = L
    std::vector<LatticePath> parts;  // k+1 parts unless degenerate
    Steps level_suffix;

    LatticePath reassemble() const;
};

/// P = P_0 u P_1 u ... u P_m for a path ending at height m.
struct BallotDecomposition {
    FamilySpec spec;  // the ballot spec (end height m)
    std::vector<LatticePath> parts;

    LatticePath reassemble() const;
};

/// Same steps started at height `height`.
LatticePath lift(const LatticePath& path, int height);

/// Throws Error(EmptyPath) for the empty path.
RightPeakDecomposition right_peak_decompose(const LatticePath& path);

/// Blockwise cyclic shift raised to `power` (taken mod k). The empty path
/// and paths without up-steps are fixed.
LatticePath kappa(const LatticePath& path, int power = 1);

LastStepDecomposition last_step_decompose(const LatticePath& path);

BallotDecomposition ballot_decompose(const LatticePath& path);
/// Checks that the path ends at height m first; throws Error(WrongEndHeight).
BallotDecomposition ballot_decompose(const LatticePath& path, int m);

/// Involution on Dyck paths exchanging peaks and double descents. Throws Error(WrongK) unless k = 1
/// and the path has no level steps.
LatticePath deutsch(const LatticePath& path);

/// Moves every child at position i to sigma[i-1], recursively. Throws Error(BadPermutation).
PositionalTree permute_subtrees(const PositionalTree& tree, std::span<const int> sigma);

/// Throws Error(BadPermutation) unless sigma is a permutation of 1..m.
void check_permutation(std::span<const int> sigma, int m);

namespace detail {

/// For a step sequence rising from relative height 0 to `top` without going
/// below 0, the index of the last up-step leaving each height 0..top-1.
std::vector<std::size_t> last_passage_cuts(std::span<const Step> steps, int k, int top);

/// Index permutation realizing kappa^power: result[new_index] = old_index.
std::vector<std::size_t> kappa_order(std::span<const Step> steps, int k, int power);

}  // namespace detail

}  // namespace peakmod
