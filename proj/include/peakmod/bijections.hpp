#pragma once

#include <span>

#include "peakmod/core.hpp"

namespace peakmod {

/// Recursive bijection from pure k-Dyck paths to (k+1)-ary trees: the child at
/// position i+1 of the root is psi(kappa^i(P_i)) for the last-step parts P_i.
/// Non-rightmost peaks at height i mod k become (i+1)-st children and double
/// descents become (k+1)-st children.
PositionalTree psi(const LatticePath& path);

/// psi with every node carrying the label of the original peak or double
/// descent it comes from. Throws Error(EmptyPath).
PositionalTree psi_with_labels(const LatticePath& path);

/// Inverse of psi; throws Error(ArityMismatch) unless tree.arity() == k + 1.
LatticePath psi_inv(const PositionalTree& tree, int k);

/// Path whose (pk_0..pk_{k-1}, dd) is the sigma-permutation of the input's:
/// slot i of the input lands in slot sigma[i-1]. Throws Error(BadPermutation).
LatticePath stat_permuter(const LatticePath& path, std::span<const int> sigma);

}  // namespace peakmod
