#include "hypertree/extremal_cycles.hpp"

#include <array>
#include <bit>
#include <stdexcept>

#include "hypertree/f2_solver.hpp"
#include "hypertree/parallel.hpp"

namespace hypertree {

std::variant<ExtremalCycleResult, HamiltonianNonexistence> hamiltonian_2cycle(int n) {
  if (n < 4) throw std::invalid_argument("hamiltonian_2cycle needs n >= 4");
  if (n % 4 == 1 || n % 4 == 2) {
    return HamiltonianNonexistence{
        n, "removing a face sigma from a Hamiltonian 2-cycle leaves a 2-hypertree T with boundary(T) = "
           "boundary(sigma), which has 3 edges; since every triangle has 3 edges, |T| and |boundary(T)| "
           "have equal parity, so C(n-1,2) = |T| would have to be odd, but C(" +
               std::to_string(n - 1) + ",2) = " + std::to_string(binom(n - 1, 2)) + " is even"};
  }
  const Simplex sigma{1, 2, 3};
  auto realized = two_tree_with_boundary(simplex_boundary(sigma, n), n);
  if (!std::holds_alternative<TreeStructure>(realized))
    throw std::logic_error("parity-compatible triangle was not realized by a 2-hypertree");
  const TreeStructure& tree = std::get<TreeStructure>(realized);
  ExtremalCycleResult out;
  out.cycle = tree.faces() ^ ChainF2(2, n, {sigma});
  out.kernel_dim = kernel_dimension(out.cycle);
  out.seed_simplex = sigma;
  out.corank = 0;
  return out;
}

ExtremalCycleResult large_simple_cycle(int d, int n, std::optional<Simplex> sigma) {
  if (d < 1) throw std::invalid_argument("large_simple_cycle needs d >= 1");
  if (n < d + 2) throw std::invalid_argument("large_simple_cycle needs n >= d + 2");
  const Simplex s = sigma.value_or(Simplex::prefix(d + 1));
  if (s.dimension() != d || s.max_vertex() > n)
    throw std::invalid_argument("seed simplex must be a d-simplex on [n]");
  ForestBuildResult built = forest_with_boundary(simplex_boundary(s, n), n);
  ExtremalCycleResult out;
  out.cycle = built.forest ^ ChainF2(d, n, {s});
  out.kernel_dim = kernel_dimension(out.cycle);
  out.seed_simplex = s;
  out.choices = built.seed;
  out.corank = built.corank;
  return out;
}

namespace {

// Echelon basis over at most 64 rows, cheap enough to copy per search node.
struct SmallBasis {
  std::array<std::uint64_t, 64> by_pivot{};
  int rank = 0;

  // Returns true if independent (and inserts).
  bool insert(std::uint64_t col) {
    while (col) {
      const int p = std::countr_zero(col);
      if (!by_pivot[p]) {
        by_pivot[p] = col;
        ++rank;
        return true;
      }
      col ^= by_pivot[p];
    }
    return false;
  }
};

struct Search {
  const std::vector<std::uint64_t>& columns;
  std::size_t best = 0;
  std::uint64_t best_set = 0;
  std::uint64_t nodes = 0;

  void run(std::size_t i, const SmallBasis& basis, std::uint64_t chosen, int size, int kernel, std::uint64_t sum) {
    ++nodes;
    if (kernel == 1 && sum == 0 && static_cast<std::size_t>(size) > best) {
      best = size;
      best_set = chosen;
    }
    if (i == columns.size()) return;
    if (static_cast<std::size_t>(size) + (columns.size() - i) <= best) return;

    SmallBasis with = basis;
    const bool independent = with.insert(columns[i]);
    const int kernel_with = kernel + (independent ? 0 : 1);
    if (kernel_with <= 1)
      run(i + 1, with, chosen | (std::uint64_t{1} << i), size + 1, kernel_with, sum ^ columns[i]);
    run(i + 1, basis, chosen, size, kernel, sum);
  }
};

}  // namespace

MaxSimpleCycle max_simple_cycle_bruteforce(int d, int n, unsigned threads) {
  if (d < 1 || n < d + 1) throw std::invalid_argument("max_simple_cycle_bruteforce needs 1 <= d < n");
  if (binom(n, d + 1) > 24 || binom(n, d) > 64)
    throw std::length_error("instance too large for subset enumeration");
  const std::vector<Simplex> items = all_simplices(n, d + 1);
  std::vector<std::uint64_t> columns;
  for (Simplex s : items) {
    std::uint64_t col = 0;
    for (Simplex f : s.facets()) col |= std::uint64_t{1} << f.colex_rank();
    columns.push_back(col);
  }

  // Fix the first few include/exclude decisions per task; each task searches
  // its subtree independently so the winner is independent of scheduling.
  const std::size_t prefix = std::min<std::size_t>(4, columns.size());
  const std::size_t tasks = std::size_t{1} << prefix;
  std::vector<Search> results(tasks, Search{columns});
  parallel_chunks(tasks, threads, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      SmallBasis basis;
      std::uint64_t chosen = 0, sum = 0;
      int size = 0, kernel = 0;
      for (std::size_t i = 0; i < prefix; ++i) {
        if (!((t >> i) & 1u)) continue;
        if (!basis.insert(columns[i])) ++kernel;
        chosen |= std::uint64_t{1} << i;
        sum ^= columns[i];
        ++size;
      }
      if (kernel > 1) continue;
      results[t].run(prefix, basis, chosen, size, kernel, sum);
    }
  });

  MaxSimpleCycle out;
  std::uint64_t best_set = 0;
  for (const auto& r : results) {
    out.nodes += r.nodes;
    if (r.best > out.size) {
      out.size = r.best;
      best_set = r.best_set;
    }
  }
  std::vector<Simplex> witness;
  for (std::size_t i = 0; i < items.size(); ++i)
    if ((best_set >> i) & 1u) witness.push_back(items[i]);
  out.witness = ChainF2(d, n, std::move(witness));
  return out;
}

ChainF2 graph_cut(int n, std::uint64_t side_mask) {
  std::vector<Simplex> edges;
  for (Simplex e : all_simplices(n, 2))
    if (std::popcount(e.mask() & side_mask) == 1) edges.push_back(e);
  return ChainF2(1, n, std::move(edges));
}

DualMaxCutReport dual_maxcut_crosscheck(int n) {
  if (n < 5 || n > 7) throw std::length_error("dual_maxcut_crosscheck supports 5 <= n <= 7");
  DualMaxCutReport report;
  report.n = n;
  const std::uint64_t full = Simplex::prefix(n).mask();
  for (std::uint64_t side = 0; side <= full; ++side) {
    const std::uint64_t k = std::popcount(side);
    report.max_cut = std::max(report.max_cut, k * (n - k));
  }
  report.max_cycle = max_simple_cycle_bruteforce(n - 3, n);
  report.dual_witness = dual(report.max_cycle.witness);
  // Vertex 1 may be fixed on one side.
  for (std::uint64_t side = 1; side <= full; side += 2) {
    if (graph_cut(n, side) == report.dual_witness) {
      report.dual_is_cut = true;
      report.cut_side_mask = side;
      break;
    }
  }
  return report;
}

}  // namespace hypertree
