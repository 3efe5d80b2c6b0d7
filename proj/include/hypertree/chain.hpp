#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hypertree/simplex.hpp"

namespace hypertree {

/**
 * A d-chain over the two-element field on the vertex universe [n].
 *
 * A chain is identified with its support: a set of d-simplices. Addition is
 * symmetric difference. The support is kept sorted in colex order and is
 * immutable after construction.
 *
 * The ambient size n is part of the value because duals and relabelings
 * depend on the universe, not just on the largest vertex used.
 */
class ChainF2 {
public:
  ChainF2() = default;
  ChainF2(int dimension, int ambient);
  /// Throws on a dimension mismatch, a vertex above `ambient`, or a duplicate.
  ChainF2(int dimension, int ambient, std::vector<Simplex> simplices);
  ChainF2(int dimension, int ambient, std::initializer_list<Simplex> simplices);

  /// Builds the chain whose coefficient on each simplex is the parity of its
  /// multiplicity in `simplices`.
  static ChainF2 from_parity(int dimension, int ambient, std::vector<Simplex> simplices);

  /// Convenience: simplices as vertex lists, e.g. {{1,2,3},{2,3,4}}.
  static ChainF2 of(int ambient, std::initializer_list<std::initializer_list<int>> simplices);

  int dimension() const { return dimension_; }
  int ambient() const { return ambient_; }
  std::size_t size() const { return support_.size(); }
  bool empty() const { return support_.empty(); }

  std::span<const Simplex> simplices() const { return support_; }
  auto begin() const { return support_.begin(); }
  auto end() const { return support_.end(); }

  bool contains(Simplex s) const;
  /// Largest vertex occurring in the support, or 0 if empty.
  int max_vertex() const;

  /// Same support, different universe. Throws if a vertex exceeds `ambient`.
  ChainF2 with_ambient(int ambient) const;

  /// Symmetric difference. The result lives on the larger universe.
  ChainF2 operator^(const ChainF2& other) const;
  ChainF2& operator^=(const ChainF2& other);

  friend bool operator==(const ChainF2& a, const ChainF2& b) {
    return a.dimension_ == b.dimension_ && a.support_ == b.support_;
  }

  std::string to_string() const;

private:
  int dimension_ = 0;
  int ambient_ = 0;
  std::vector<Simplex> support_;
};

/// The (d-1)-faces of odd degree. Throws for 0-chains.
ChainF2 boundary(const ChainF2& c);

/// Boundary over the augmented complex: for 0-chains this is the (-1)-face
/// count parity, reported as true iff the chain has even size. For d >= 1 it
/// is boundary(c).empty().
bool is_cycle(const ChainF2& c);

ChainF2 simplex_boundary(Simplex s, int ambient);

/// { s \ {v} : s in c, v in s }. Keeps original labels.
ChainF2 link(const ChainF2& c, int v);

/// { s + {v} : s in c }. Throws if v occurs in c.
ChainF2 cone(const ChainF2& c, int v);

/// x + cone(y, v), where x is a d-chain and y a (d-1)-chain avoiding v.
ChainF2 conical_extension(const ChainF2& x, const ChainF2& y, int v);

/// Complements each simplex in [n].
ChainF2 dual(const ChainF2& c);

/// True iff |z| and C(n-1, 2) have the same parity; z must be a nontrivial
/// 1-cycle.
bool parity_check_2tree(const ChainF2& z, int n);

/// Relabels every vertex through `perm` (perm[v] is the image of v).
ChainF2 permute(const ChainF2& c, std::span<const int> perm);

/// Same chain with vertices a and b exchanged.
ChainF2 transpose(const ChainF2& c, int a, int b);

/// Every d-simplex on [n].
ChainF2 complete_chain(int dimension, int n);

/// All d-simplices on [n] containing vertex `apex`.
ChainF2 star(int dimension, int n, int apex = 1);

}  // namespace hypertree
