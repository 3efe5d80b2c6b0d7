#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hypertree {

/// Largest vertex label representable by a Simplex.
inline constexpr int kMaxVertex = 64;

/// Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.
/// Valid for 0 <= n <= 64.
std::uint64_t binom(int n, int k);

/**
 * A finite set of vertex labels in [1, 64], stored as a bit mask.
 *
 * Bit (v - 1) is set iff vertex v belongs to the simplex. For simplices of
 * equal size, numeric order of the masks is colexicographic order, which is
 * the canonical order used throughout the library.
 *
 * The empty simplex (dimension -1) is representable; it appears as the unique
 * facet of a vertex when 0-chains are reduced over the augmented complex.
 */
class Simplex {
public:
  constexpr Simplex() = default;

  /// Vertices must be strictly increasing and lie in [1, 64].
  explicit Simplex(std::span<const int> vertices);
  Simplex(std::initializer_list<int> vertices);

  static constexpr Simplex from_mask(std::uint64_t mask) {
    Simplex s;
    s.mask_ = mask;
    return s;
  }

  /// The full simplex {1, ..., k}.
  static Simplex prefix(int k);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr int dimension() const { return size() - 1; }
  constexpr bool empty() const { return mask_ == 0; }

  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxVertex && ((mask_ >> (v - 1)) & 1u);
  }
  /// Largest vertex, or 0 for the empty simplex.
  constexpr int max_vertex() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
  constexpr int min_vertex() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

  Simplex with(int v) const;
  Simplex without(int v) const;

  std::vector<int> vertices() const;

  /// The dimension-1 faces, in colex order.
  std::vector<Simplex> facets() const;

  /// Rank among all simplices of the same size in colex order (0-based).
  std::uint64_t colex_rank() const;
  /// Inverse of colex_rank for simplices with `size` vertices.
  static Simplex colex_unrank(std::uint64_t rank, int size);

  std::string to_string() const;

  friend constexpr bool operator==(Simplex a, Simplex b) = default;
  friend constexpr std::strong_ordering operator<=>(Simplex a, Simplex b) {
    return a.mask_ <=> b.mask_;
  }

private:
  std::uint64_t mask_ = 0;
};

struct SimplexHash {
  std::size_t operator()(Simplex s) const noexcept {
    std::uint64_t x = s.mask() + 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

/// Maps vertex labels through a permutation. `perm[v]` is the image of v;
/// index 0 is unused. Labels beyond perm.size() - 1 are fixed.
Simplex permute(Simplex s, std::span<const int> perm);

/// All simplices with `size` vertices inside [n], in colex order.
std::vector<Simplex> all_simplices(int n, int size);

}  // namespace hypertree
