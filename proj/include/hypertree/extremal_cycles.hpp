#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypertree/boundary_synth.hpp"
#include "hypertree/chain.hpp"

namespace hypertree {

struct ExtremalCycleResult {
  ChainF2 cycle;
  std::size_t kernel_dim = 0;  // 1 certifies simplicity
  Simplex seed_simplex;        // sigma closing the forest into a cycle
  ChoiceSeed choices;
  std::uint64_t corank = 0;    // of the forest F = cycle - sigma

  std::size_t size() const { return cycle.size(); }
  bool simple() const { return kernel_dim == 1; }
};

/// Why no Hamiltonian 2-cycle exists on [n].
struct HamiltonianNonexistence {
  int n = 0;
  /// A Hamiltonian cycle minus sigma is a 2-tree with boundary of size 3,
  /// which needs C(n-1, 2) odd, i.e. n = 0 or 3 (mod 4).
  std::string parity_argument;
};

/// A simple 2-cycle of size C(n-1, 2) + 1 on [n], or the parity certificate of
/// nonexistence when n = 1 or 2 (mod 4). Requires n >= 4.
std::variant<ExtremalCycleResult, HamiltonianNonexistence> hamiltonian_2cycle(int n);

/// The fundamental cycle F + sigma where F is a forest with boundary(F) equal
/// to the boundary of sigma. Its size is at least C(n-1,d) - C(n-1,d-2) + 1.
/// Requires n >= d + 2. Defaults to sigma = {1, ..., d+1}.
ExtremalCycleResult large_simple_cycle(int d, int n, std::optional<Simplex> sigma = {});

struct MaxSimpleCycle {
  std::size_t size = 0;
  ChainF2 witness;
  std::uint64_t nodes = 0;  // search nodes visited
};

/// Largest simple d-cycle on [n] by branch and bound over subsets of the
/// d-simplices, pruning any branch whose kernel dimension reaches 2. Requires
/// C(n, d+1) <= 24 and C(n, d) <= 64; throws std::length_error otherwise.
MaxSimpleCycle max_simple_cycle_bruteforce(int d, int n, unsigned threads = 0);

struct DualMaxCutReport {
  int n = 0;
  std::uint64_t max_cut = 0;           // largest edge cut of K_n
  MaxSimpleCycle max_cycle;            // largest simple (n-3)-cycle
  ChainF2 dual_witness;                // dual of max_cycle.witness, a graph
  std::uint64_t cut_side_mask = 0;     // S with dual_witness = edges(S, [n] - S)
  bool dual_is_cut = false;
  bool equal() const { return max_cut == max_cycle.size; }
};

/// For 5 <= n <= 7, compares the largest graph cut of K_n with the largest
/// simple (n-3)-cycle and checks that the dual of the witness is a cut.
DualMaxCutReport dual_maxcut_crosscheck(int n);

/// Edge set between S and its complement, S given as a vertex mask on [n].
ChainF2 graph_cut(int n, std::uint64_t side_mask);

}  // namespace hypertree
