#include "hypertree/simplex.hpp"

#include <array>
#include <stdexcept>

namespace hypertree {

namespace {

struct BinomialTable {
  std::array<std::array<std::uint64_t, 65>, 65> c{};
  BinomialTable() {
    for (int n = 0; n <= 64; ++n) {
      c[n][0] = 1;
      for (int k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
    }
  }
};

const BinomialTable& table() {
  static const BinomialTable t;
  return t;
}

void check_label(int v) {
  if (v < 1 || v > kMaxVertex)
    throw std::invalid_argument("vertex label " + std::to_string(v) + " outside [1, 64]");
}

}  // namespace

std::uint64_t binom(int n, int k) {
  if (n < 0 || n > 64) throw std::out_of_range("binom: n outside [0, 64]");
  if (k < 0 || k > n) return 0;
  return table().c[n][k];
}

Simplex::Simplex(std::span<const int> vertices) {
  int prev = 0;
  for (int v : vertices) {
    check_label(v);
    if (v <= prev) throw std::invalid_argument("simplex vertices must be strictly increasing");
    mask_ |= std::uint64_t{1} << (v - 1);
    prev = v;
  }
}

Simplex::Simplex(std::initializer_list<int> vertices)
    : Simplex(std::span<const int>(vertices.begin(), vertices.size())) {}

Simplex Simplex::prefix(int k) {
  if (k < 0 || k > kMaxVertex) throw std::invalid_argument("prefix simplex size outside [0, 64]");
  return from_mask(k == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1));
}

Simplex Simplex::with(int v) const {
  check_label(v);
  return from_mask(mask_ | (std::uint64_t{1} << (v - 1)));
}

Simplex Simplex::without(int v) const {
  check_label(v);
  return from_mask(mask_ & ~(std::uint64_t{1} << (v - 1)));
}

std::vector<int> Simplex::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::vector<Simplex> Simplex::facets() const {
  // Dropping a larger vertex yields a colex-smaller facet.
  std::vector<Simplex> out;
  out.reserve(size());
  std::uint64_t bits[64];
  int count = 0;
  for (std::uint64_t m = mask_; m; m &= m - 1) bits[count++] = m & (~m + 1);
  for (int i = count - 1; i >= 0; --i) out.push_back(from_mask(mask_ ^ bits[i]));
  return out;
}

std::uint64_t Simplex::colex_rank() const {
  std::uint64_t rank = 0;
  int i = 1;
  for (std::uint64_t m = mask_; m; m &= m - 1, ++i) rank += binom(std::countr_zero(m), i);
  return rank;
}

Simplex Simplex::colex_unrank(std::uint64_t rank, int size) {
  std::uint64_t mask = 0;
  for (int i = size; i >= 1; --i) {
    int v = i - 1;
    while (v + 1 <= 63 && binom(v + 1, i) <= rank) ++v;
    rank -= binom(v, i);
    mask |= std::uint64_t{1} << v;
  }
  return from_mask(mask);
}

std::string Simplex::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Simplex permute(Simplex s, std::span<const int> perm) {
  std::uint64_t mask = 0;
  for (int v : s.vertices()) {
    int image = v < static_cast<int>(perm.size()) ? perm[v] : v;
    check_label(image);
    mask |= std::uint64_t{1} << (image - 1);
  }
  return Simplex::from_mask(mask);
}

std::vector<Simplex> all_simplices(int n, int size) {
  if (n < 0 || n > kMaxVertex) throw std::invalid_argument("ambient size outside [0, 64]");
  std::vector<Simplex> out;
  if (size < 0 || size > n) return out;
  std::uint64_t total = binom(n, size);
  out.reserve(total);
  if (size == 0) {
    out.emplace_back();
    return out;
  }
  // Gosper's hack enumerates same-popcount masks in increasing order.
  std::uint64_t m = (size == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
  for (std::uint64_t i = 0; i < total; ++i) {
    out.push_back(Simplex::from_mask(m));
    if (i + 1 == total) break;
    std::uint64_t c = m & (~m + 1);
    std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

}  // namespace hypertree
