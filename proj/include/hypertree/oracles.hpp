#pragma once

#include <cstdint>
#include <optional>

#include "hypertree/chain.hpp"

namespace hypertree {

// Exponential reference checks, independent of the elimination engine. Each
// throws std::length_error when the instance exceeds its stated limit.

/// No nonempty subset of c has empty boundary. Requires |c| <= 24.
bool brute_is_forest(const ChainF2& c);

/// c is a nonempty cycle and no nonempty proper subset is a cycle.
/// Requires |c| <= 24.
bool brute_is_simple_cycle(const ChainF2& c);

struct TreeBoundarySearch {
  std::uint64_t subsets = 0;       // subsets of size C(n-1, d) examined
  std::optional<ChainF2> witness;  // a d-tree with boundary z, if any
};

/// Scans every set of C(n-1, d) d-simplices on [n] for a forest with boundary
/// z. Requires at most 10^7 such sets.
TreeBoundarySearch brute_tree_with_boundary(const ChainF2& z, int n);

}  // namespace hypertree
