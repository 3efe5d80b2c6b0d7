#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hypertree/chain.hpp"
#include "hypertree/hypertree.hpp"

namespace hypertree {

/// Choices consumed by the forest recursion, one entry per decision point:
/// the attachment vertex index in dimension 1, the subordinate-forest index in
/// higher dimensions. Missing entries default to 0.
struct ChoiceSeed {
  std::vector<std::uint64_t> entries;
};

struct ForestBuildResult {
  ChainF2 forest;
  std::uint64_t corank = 0;  // C(n-1, d) - |forest|
  std::vector<CollapseStep> collapse_witness;
  /// Transpositions (a, b) applied while recursing, outermost first. Every one
  /// is undone before returning, so `forest` is in the caller's labels.
  std::vector<std::pair<int, int>> relabeling;
  /// The choices actually made, after defaulting and range reduction.
  ChoiceSeed seed;
  /// Recorded anomalies: seed entries reduced modulo the available choices,
  /// auto-extended seeds, and any candidate shortfall against the expected
  /// count of subordinate forests.
  std::vector<std::string> notes;
};

/**
 * A collapsible d-forest on [n] whose boundary is the nontrivial
 * (d-1)-cycle z, with corank at most C(n-1, d-2).
 *
 * Recursion on (d, n): in dimension 1 vertex n is attached to a chosen vertex
 * i; for n < 2d the filling in the star at vertex 1 is returned; otherwise the
 * link of z at n is realized by a (d-1)-forest Y on [n-1], the rest of the
 * cycle is pushed down to [n-1], and the two pieces are joined by a conical
 * extension at n.
 */
ForestBuildResult forest_with_boundary(const ChainF2& z, int n, const ChoiceSeed& seed = {});

/// Up to `count` forests with boundary z and pairwise distinct supports,
/// obtained by varying the top-level choice.
std::vector<ForestBuildResult> enumerate_forests_with_boundary(const ChainF2& z, int n, std::size_t count);

struct ParityObstruction {
  ForestBuildResult near_witness;  // corank-1 forest with boundary z
};

/// A 2-hypertree with boundary z when |z| and C(n-1, 2) have equal parity.
std::variant<TreeStructure, ParityObstruction> two_tree_with_boundary(const ChainF2& z, int n);

struct NearestBoundary {
  ChainF2 z_prime;
  TreeStructure tree;
  std::uint64_t distance = 0;  // |z + z'|
  std::uint64_t bound = 0;     // (d+1) * C(n-1, d-2)
  bool within_bound() const { return distance <= bound; }
};

/// Boundary of a hypertree close to z: the forest from forest_with_boundary
/// completed to a hypertree. For the trivial cycle the empty forest is
/// completed instead.
NearestBoundary nearest_hypertree_boundary(const ChainF2& z, int n);

}  // namespace hypertree
