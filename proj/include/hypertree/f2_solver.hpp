#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <variant>
#include <unordered_set>
#include <vector>

#include "hypertree/chain.hpp"

namespace hypertree {

/// Packed bit vector with word-level XOR.
class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t bits() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }
  std::uint64_t word(std::size_t i) const { return words_[i]; }
  std::uint64_t& word(std::size_t i) { return words_[i]; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  /// XOR of words [from, end).
  void xor_from(const BitVector& other, std::size_t from = 0) {
    for (std::size_t w = from; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  }

  bool none() const;
  /// Index of the lowest set bit, or bits() if none.
  std::size_t lowest() const;

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t m = words_[w]; m; m &= m - 1) f(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
  }

private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/**
 * Incremental column-echelon basis of boundary columns over GF(2).
 *
 * Rows are the (d-1)-faces on [n], indexed by colex rank. Each stored column
 * keeps its reduced bit vector (whose lowest set bit is its pivot row, unique
 * across columns) together with the set of original columns it is the XOR of.
 * That record yields cycle certificates and fillings without re-elimination.
 *
 * A frozen basis is safe to query from several threads.
 */
class F2ColumnBasis {
public:
  struct Independent {};
  struct Dependent {
    /// A set of simplices containing the rejected one whose boundary is empty.
    ChainF2 certificate;
  };
  using InsertResult = std::variant<Independent, Dependent>;

  /// Basis for d-simplices on [n]; d may be 0 (augmented rows).
  F2ColumnBasis(int dimension, int n);

  int dimension() const { return dimension_; }
  int ambient() const { return n_; }
  std::size_t rank() const { return columns_.size(); }
  std::size_t row_count() const { return rows_; }

  /// The inserted independent simplices, in insertion order.
  const std::vector<Simplex>& members() const { return members_; }

  InsertResult try_insert(Simplex s);

  /// Inserts s when independent; skips the certificate work otherwise.
  bool insert_if_independent(Simplex s);

  /// True iff the boundary of `s` lies in the current column span.
  bool in_span(Simplex s) const;

  /// The unique subset F of the stored simplices with boundary(F) = z, or
  /// nullopt if z is outside the span. z is a (d-1)-chain, so d >= 1.
  std::optional<ChainF2> solve(const ChainF2& z) const;

  BitVector column_of(Simplex s) const;
  BitVector column_of(const ChainF2& z) const;

private:
  struct Column {
    BitVector reduced;
    BitVector combination;
  };

  /// Reduces `vec` against the stored pivots. Returns the first row that has
  /// no pivot, or row_count() if `vec` reduced to zero.
  std::size_t reduce(BitVector& vec, BitVector& combination) const;
  std::vector<Simplex> members_of(const BitVector& combination) const;

  int dimension_;
  int n_;
  std::size_t rows_;
  std::size_t capacity_;
  std::vector<int> pivot_column_;  // row -> column index or -1
  std::vector<Column> columns_;
  std::vector<Simplex> members_;
  std::unordered_set<Simplex, SimplexHash> present_;
};

/// True iff the boundary columns of c are linearly independent.
bool is_forest(const ChainF2& c);

/// Rank of the boundary columns of c.
std::size_t boundary_rank(const ChainF2& c);

/// |c| minus the rank of its boundary columns.
std::size_t kernel_dimension(const ChainF2& c);

/// The unique subset of `forest` with boundary z, or nullopt.
std::optional<ChainF2> solve_fill(const ChainF2& forest, const ChainF2& z);

}  // namespace hypertree
