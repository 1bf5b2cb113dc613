#pragma once

#include <string>

#include "peakmod/core.hpp"

namespace peakmod {

// Static drawings. Output is byte-deterministic for golden-file tests.
//
// Path labels: pure paths use the peak / double-descent labels (r, i_j, d_j);
// paths with level steps mark non-rightmost weak peaks with their residue and
// weak double descents with "d".

/// Character grid ('/', '\', '_'), followed by one `x=.. y=.. label` line per
/// labeled vertex when `labels` is set. The empty path renders as "".
std::string render_path_ascii(const LatticePath& path, bool labels);
std::string render_path_svg(const LatticePath& path, bool labels);

/// Indented outline, one node per line: `+-<position> <label>`.
std::string render_tree_ascii(const PositionalTree& tree);
std::string render_tree_svg(const PositionalTree& tree);

}  // namespace peakmod
