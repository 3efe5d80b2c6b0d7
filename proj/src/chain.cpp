#include "hypertree/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypertree {

namespace {

void validate(int dimension, int ambient, const std::vector<Simplex>& support) {
  if (dimension < 0) throw std::invalid_argument("chain dimension must be non-negative");
  if (ambient < 0 || ambient > kMaxVertex) throw std::invalid_argument("ambient size outside [0, 64]");
  for (std::size_t i = 0; i < support.size(); ++i) {
    const Simplex s = support[i];
    if (s.dimension() != dimension)
      throw std::invalid_argument("simplex " + s.to_string() + " has dimension " +
                                  std::to_string(s.dimension()) + ", expected " +
                                  std::to_string(dimension));
    if (s.max_vertex() > ambient)
      throw std::invalid_argument("simplex " + s.to_string() + " exceeds ambient [" +
                                  std::to_string(ambient) + "]");
    if (i > 0 && support[i - 1] == s) throw std::invalid_argument("duplicate simplex " + s.to_string());
  }
}

std::vector<Simplex> symmetric_merge(const std::vector<Simplex>& a, const std::vector<Simplex>& b) {
  std::vector<Simplex> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ChainF2::ChainF2(int dimension, int ambient) : dimension_(dimension), ambient_(ambient) {
  validate(dimension, ambient, support_);
}

ChainF2::ChainF2(int dimension, int ambient, std::vector<Simplex> simplices)
    : dimension_(dimension), ambient_(ambient), support_(std::move(simplices)) {
  std::sort(support_.begin(), support_.end());
  validate(dimension_, ambient_, support_);
}

ChainF2::ChainF2(int dimension, int ambient, std::initializer_list<Simplex> simplices)
    : ChainF2(dimension, ambient, std::vector<Simplex>(simplices)) {}

ChainF2 ChainF2::from_parity(int dimension, int ambient, std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end());
  std::vector<Simplex> odd;
  odd.reserve(simplices.size());
  for (std::size_t i = 0; i < simplices.size();) {
    std::size_t j = i;
    while (j < simplices.size() && simplices[j] == simplices[i]) ++j;
    if ((j - i) % 2 == 1) odd.push_back(simplices[i]);
    i = j;
  }
  return ChainF2(dimension, ambient, std::move(odd));
}

ChainF2 ChainF2::of(int ambient, std::initializer_list<std::initializer_list<int>> simplices) {
  std::vector<Simplex> support;
  int dimension = -1;
  for (const auto& vs : simplices) {
    support.emplace_back(vs);
    dimension = static_cast<int>(vs.size()) - 1;
  }
  if (dimension < 0) throw std::invalid_argument("ChainF2::of needs at least one simplex");
  return ChainF2(dimension, ambient, std::move(support));
}

bool ChainF2::contains(Simplex s) const {
  return std::binary_search(support_.begin(), support_.end(), s);
}

int ChainF2::max_vertex() const {
  std::uint64_t all = 0;
  for (Simplex s : support_) all |= s.mask();
  return Simplex::from_mask(all).max_vertex();
}

ChainF2 ChainF2::with_ambient(int ambient) const {
  ChainF2 out = *this;
  out.ambient_ = ambient;
  validate(out.dimension_, out.ambient_, out.support_);
  return out;
}

ChainF2 ChainF2::operator^(const ChainF2& other) const {
  if (dimension_ != other.dimension_) throw std::invalid_argument("chain sum: dimension mismatch");
  ChainF2 out;
  out.dimension_ = dimension_;
  out.ambient_ = std::max(ambient_, other.ambient_);
  out.support_ = symmetric_merge(support_, other.support_);
  return out;
}

ChainF2& ChainF2::operator^=(const ChainF2& other) { return *this = *this ^ other; }

std::string ChainF2::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) out += ' ';
    out += support_[i].to_string();
  }
  return out + "]";
}

ChainF2 boundary(const ChainF2& c) {
  if (c.dimension() == 0) throw std::invalid_argument("boundary of 0-chain undefined");
  std::vector<Simplex> faces;
  faces.reserve(c.size() * (c.dimension() + 1));
  for (Simplex s : c)
    for (Simplex f : s.facets()) faces.push_back(f);
  return ChainF2::from_parity(c.dimension() - 1, c.ambient(), std::move(faces));
}

bool is_cycle(const ChainF2& c) {
  if (c.dimension() == 0) return c.size() % 2 == 0;
  return boundary(c).empty();
}

ChainF2 simplex_boundary(Simplex s, int ambient) {
  if (s.dimension() < 1) throw std::invalid_argument("boundary of 0-chain undefined");
  return ChainF2(s.dimension() - 1, ambient, s.facets());
}

ChainF2 link(const ChainF2& c, int v) {
  if (c.dimension() == 0) throw std::invalid_argument("link of a 0-chain is not a chain");
  std::vector<Simplex> out;
  for (Simplex s : c)
    if (s.contains(v)) out.push_back(s.without(v));
  return ChainF2(c.dimension() - 1, c.ambient(), std::move(out));
}

ChainF2 cone(const ChainF2& c, int v) {
  std::vector<Simplex> out;
  out.reserve(c.size());
  for (Simplex s : c) {
    if (s.contains(v))
      throw std::invalid_argument("cone vertex " + std::to_string(v) + " occurs in " + s.to_string());
    out.push_back(s.with(v));
  }
  return ChainF2(c.dimension() + 1, std::max(c.ambient(), v), std::move(out));
}

ChainF2 conical_extension(const ChainF2& x, const ChainF2& y, int v) {
  if (x.dimension() != y.dimension() + 1)
    throw std::invalid_argument("conical extension: dimension mismatch");
  for (Simplex s : x)
    if (s.contains(v))
      throw std::invalid_argument("conical extension vertex " + std::to_string(v) + " occurs in " +
                                  s.to_string());
  ChainF2 coned = cone(y, v);
  // The summands are disjoint: every coned simplex contains v.
  return x ^ coned;
}

ChainF2 dual(const ChainF2& c) {
  const int n = c.ambient();
  if (c.dimension() > n - 2) throw std::invalid_argument("dual: dimension too large for ambient");
  const std::uint64_t full = Simplex::prefix(n).mask();
  std::vector<Simplex> out;
  out.reserve(c.size());
  for (Simplex s : c) out.push_back(Simplex::from_mask(full & ~s.mask()));
  return ChainF2(n - c.dimension() - 2, n, std::move(out));
}

bool parity_check_2tree(const ChainF2& z, int n) {
  if (z.dimension() != 1) throw std::invalid_argument("parity check expects a 1-chain");
  if (z.empty()) throw std::invalid_argument("the trivial cycle cannot be the boundary of an acyclic set");
  if (!boundary(z).empty()) throw std::invalid_argument("parity check expects a 1-cycle");
  return z.size() % 2 == binom(n - 1, 2) % 2;
}

ChainF2 permute(const ChainF2& c, std::span<const int> perm) {
  std::vector<Simplex> out;
  out.reserve(c.size());
  for (Simplex s : c) out.push_back(permute(s, perm));
  return ChainF2(c.dimension(), c.ambient(), std::move(out));
}

ChainF2 transpose(const ChainF2& c, int a, int b) {
  if (a == b) return c;
  std::vector<int> perm(std::max(a, b) + 1);
  for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<int>(v);
  std::swap(perm[a], perm[b]);
  return permute(c, perm);
}

ChainF2 complete_chain(int dimension, int n) {
  return ChainF2(dimension, n, all_simplices(n, dimension + 1));
}

ChainF2 star(int dimension, int n, int apex) {
  std::vector<Simplex> out;
  for (Simplex s : all_simplices(n, dimension + 1))
    if (s.contains(apex)) out.push_back(s);
  return ChainF2(dimension, n, std::move(out));
}

}  // namespace hypertree
