#include "hypertree/f2_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypertree {

bool BitVector::none() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

std::size_t BitVector::lowest() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return bits_;
}

F2ColumnBasis::F2ColumnBasis(int dimension, int n)
    : dimension_(dimension), n_(n) {
  if (dimension < 0) throw std::invalid_argument("basis dimension must be non-negative");
  if (n < 0 || n > kMaxVertex) throw std::invalid_argument("ambient size outside [0, 64]");
  rows_ = binom(n, dimension);
  capacity_ = n >= 1 ? binom(n - 1, dimension) : 0;
  pivot_column_.assign(rows_, -1);
}

BitVector F2ColumnBasis::column_of(Simplex s) const {
  BitVector col(rows_);
  for (Simplex f : s.facets()) col.flip(f.colex_rank());
  return col;
}

BitVector F2ColumnBasis::column_of(const ChainF2& z) const {
  if (z.dimension() != dimension_ - 1) throw std::invalid_argument("solve: chain has wrong dimension");
  if (z.max_vertex() > n_) throw std::invalid_argument("solve: chain exceeds basis ambient");
  BitVector col(rows_);
  for (Simplex f : z) col.flip(f.colex_rank());
  return col;
}

std::size_t F2ColumnBasis::reduce(BitVector& vec, BitVector& combination) const {
  for (std::size_t w = 0; w < vec.word_count(); ++w) {
    while (vec.word(w)) {
      const std::size_t row = w * 64 + static_cast<std::size_t>(std::countr_zero(vec.word(w)));
      const int c = pivot_column_[row];
      if (c < 0) return row;
      vec.xor_from(columns_[c].reduced, w);
      combination.xor_from(columns_[c].combination);
    }
  }
  return rows_;
}

std::vector<Simplex> F2ColumnBasis::members_of(const BitVector& combination) const {
  std::vector<Simplex> out;
  combination.for_each_set([&](std::size_t i) { out.push_back(members_[i]); });
  return out;
}

F2ColumnBasis::InsertResult F2ColumnBasis::try_insert(Simplex s) {
  if (s.dimension() != dimension_)
    throw std::invalid_argument("simplex " + s.to_string() + " has wrong dimension for basis");
  if (s.max_vertex() > n_)
    throw std::invalid_argument("simplex " + s.to_string() + " exceeds ambient [" + std::to_string(n_) + "]");
  if (present_.contains(s)) throw std::invalid_argument("duplicate simplex " + s.to_string());

  BitVector vec = column_of(s);
  BitVector combination(capacity_);
  const std::size_t free_row = reduce(vec, combination);
  if (free_row == rows_) {
    std::vector<Simplex> cert = members_of(combination);
    cert.push_back(s);
    return Dependent{ChainF2(dimension_, n_, std::move(cert))};
  }
  const std::size_t ordinal = columns_.size();
  combination.set(ordinal);
  pivot_column_[free_row] = static_cast<int>(ordinal);
  columns_.push_back({std::move(vec), std::move(combination)});
  members_.push_back(s);
  present_.insert(s);
  return Independent{};
}

bool F2ColumnBasis::insert_if_independent(Simplex s) {
  if (s.dimension() != dimension_ || s.max_vertex() > n_)
    throw std::invalid_argument("simplex " + s.to_string() + " does not fit the basis");
  if (present_.contains(s)) return false;
  BitVector vec = column_of(s);
  BitVector combination(capacity_);
  const std::size_t free_row = reduce(vec, combination);
  if (free_row == rows_) return false;
  const std::size_t ordinal = columns_.size();
  combination.set(ordinal);
  pivot_column_[free_row] = static_cast<int>(ordinal);
  columns_.push_back({std::move(vec), std::move(combination)});
  members_.push_back(s);
  present_.insert(s);
  return true;
}

bool F2ColumnBasis::in_span(Simplex s) const {
  BitVector vec = column_of(s);
  BitVector combination(capacity_);
  return reduce(vec, combination) == rows_;
}

std::optional<ChainF2> F2ColumnBasis::solve(const ChainF2& z) const {
  BitVector vec = column_of(z);
  BitVector combination(capacity_);
  if (reduce(vec, combination) != rows_) return std::nullopt;
  return ChainF2(dimension_, n_, members_of(combination));
}

std::size_t boundary_rank(const ChainF2& c) {
  F2ColumnBasis basis(c.dimension(), std::max(c.ambient(), c.max_vertex()));
  for (Simplex s : c) basis.insert_if_independent(s);
  return basis.rank();
}

bool is_forest(const ChainF2& c) { return boundary_rank(c) == c.size(); }

std::size_t kernel_dimension(const ChainF2& c) { return c.size() - boundary_rank(c); }

std::optional<ChainF2> solve_fill(const ChainF2& forest, const ChainF2& z) {
  const int n = std::max({forest.ambient(), z.ambient(), forest.max_vertex(), z.max_vertex()});
  F2ColumnBasis basis(forest.dimension(), n);
  for (Simplex s : forest)
    if (std::holds_alternative<F2ColumnBasis::Dependent>(basis.try_insert(s)))
      throw std::invalid_argument("solve_fill: column set is not a forest");
  auto filled = basis.solve(z);
  if (!filled) return std::nullopt;
  return filled->with_ambient(forest.ambient());
}

}  // namespace hypertree
