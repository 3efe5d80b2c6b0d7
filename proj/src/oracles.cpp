#include "hypertree/oracles.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace hypertree {

namespace {

using Row = std::vector<std::uint64_t>;

// Boundary of each simplex as a bit row over the (d-1)-faces of [n].
std::vector<Row> boundary_rows(const ChainF2& c) {
  const int n = c.ambient();
  const std::size_t words = (binom(n, c.dimension()) + 63) / 64 + 1;
  std::vector<Row> rows;
  for (Simplex s : c) {
    Row r(words, 0);
    for (Simplex f : s.facets()) {
      const std::uint64_t k = f.colex_rank();
      r[k / 64] ^= std::uint64_t{1} << (k % 64);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

bool zero(const Row& r) {
  for (auto w : r)
    if (w) return false;
  return true;
}

struct CycleScan {
  bool proper = false;  // some nonempty proper subset is a cycle
  bool full = false;    // c itself is a cycle
};

// Visits the nonempty subsets in Gray-code order, stopping at the first
// proper cycle.
CycleScan scan_cycles(const ChainF2& c) {
  if (c.size() > 24) throw std::length_error("subset oracle limited to 24 simplices");
  if (c.dimension() == 0) throw std::invalid_argument("subset oracle needs dimension >= 1");
  const auto rows = boundary_rows(c);
  const std::uint64_t full = (std::uint64_t{1} << c.size()) - 1;
  Row acc(rows.empty() ? 1 : rows[0].size(), 0);
  CycleScan out;
  for (std::uint64_t g = 1; g <= full; ++g) {
    const int flip = std::countr_zero(g);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= rows[flip][w];
    if (zero(acc)) {
      if ((g ^ (g >> 1)) != full) {
        out.proper = true;
        return out;
      }
      out.full = true;
    }
  }
  return out;
}

}  // namespace

bool brute_is_forest(const ChainF2& c) {
  if (c.empty()) return true;
  const CycleScan scan = scan_cycles(c);
  return !scan.proper && !scan.full;
}

bool brute_is_simple_cycle(const ChainF2& c) {
  if (c.empty() || c.dimension() == 0) return false;
  if (!boundary(c).empty()) return false;
  return !scan_cycles(c).proper;
}

TreeBoundarySearch brute_tree_with_boundary(const ChainF2& z, int n) {
  const int d = z.dimension() + 1;
  const std::vector<Simplex> all = all_simplices(n, d + 1);
  const std::size_t k = binom(n - 1, d);
  if (all.size() > 63 || binom(all.size(), k) > 10'000'000)
    throw std::length_error("tree-boundary oracle limited to 10^7 subsets");
  const ChainF2 target = z.with_ambient(n);

  TreeBoundarySearch out;
  // Gosper's hack over k-subsets of the simplex list.
  std::uint64_t set = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << all.size();
  while (set < limit) {
    ++out.subsets;
    std::vector<Simplex> chosen;
    for (std::uint64_t s = set; s; s &= s - 1) chosen.push_back(all[std::countr_zero(s)]);
    ChainF2 candidate(d, n, std::move(chosen));
    if (boundary(candidate) == target && brute_is_forest(candidate)) {
      out.witness = std::move(candidate);
      return out;
    }
    if (set == 0) break;
    const std::uint64_t c = set & (~set + 1);
    const std::uint64_t r = set + c;
    set = (((r ^ set) >> 2) / c) | r;
  }
  return out;
}

}  // namespace hypertree
