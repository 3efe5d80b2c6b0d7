#pragma once

// Seeded generators shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hypertree/chain.hpp"

namespace hypertree::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Each d-simplex on [n] kept independently with probability p.
inline ChainF2 random_chain(Rng& rng, int d, int n, double p = 0.3) {
  std::bernoulli_distribution keep(p);
  std::vector<Simplex> out;
  for (Simplex s : all_simplices(n, d + 1))
    if (keep(rng)) out.push_back(s);
  return ChainF2(d, n, std::move(out));
}

/// A nonempty (d-1)-cycle on [n]: the boundary of a random d-chain.
inline ChainF2 random_cycle(Rng& rng, int d, int n, double p = 0.3) {
  for (;;) {
    ChainF2 z = boundary(random_chain(rng, d, n, p));
    if (!z.empty()) return z;
  }
}

/// Nonempty 1-cycles on [n], one per nonzero element of the cycle space,
/// spanned by the triangles through vertex 1.
inline std::vector<ChainF2> all_nontrivial_1cycles(int n) {
  std::vector<ChainF2> basis;
  for (Simplex e : all_simplices(n, 2))
    if (!e.contains(1)) basis.push_back(boundary(ChainF2(2, n, {e.with(1)})));
  std::vector<ChainF2> out;
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    ChainF2 z(1, n);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((mask >> k) & 1u) z ^= basis[k];
    out.push_back(z);
  }
  return out;
}

/// A random permutation of [n]; index 0 unused.
inline std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(n + 1);
  for (int v = 0; v <= n; ++v) perm[v] = v;
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

}  // namespace hypertree::testing
