#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hypertree/chain.hpp"
#include "hypertree/hypertree.hpp"

namespace hypertree {

/// c_d = 16 * 48^(-3^(d-1)).
double volume_constant(int d);

/// ceil((1 - 1/d) * n), i.e. n - floor(n / d).
int volume_split(int d, int n);

struct CutFillWitness {
  Simplex tau;
  Simplex sigma;                 // a largest filling in Cut(tau)
  std::uint64_t cut_size = 0;
  std::uint64_t fill_size = 0;
  std::uint64_t product = 0;     // cut_size * fill_size
  double threshold = 0.0;        // (c^3/8) * C(n, d+1) * C(n-1, d)
  std::uint64_t f_tau = 0;       // sum of fill sizes over Cut(tau)
  std::uint64_t sum_f = 0;       // sum over all tau in T of f(tau)
  std::uint64_t sum_fill_squares = 0;  // sum over all sigma of |fill(sigma)|^2
  double mu = 0.0;

  bool meets_threshold() const { return static_cast<double>(product) >= threshold; }
};

/// Finds tau in t and sigma in Cut(tau, t) maximizing |Cut(tau)| * |Fill(sigma)|.
/// Ties go to the colex-smallest tau, then the colex-smallest sigma. Throws
/// std::domain_error if mu(t) < c * C(n-1, d).
CutFillWitness lemma4_search(const TreeStructure& t, double c);

/// The permutation of [n] exchanging sorted(x - y) with sorted(y - x) pointwise;
/// perm[v] is the image of v (index 0 unused).
std::vector<int> swap_permutation(Simplex x, Simplex y, int n);

/// The tree relabelled so that x and y exchange roles. Requires x in the tree,
/// y in Cut(x), x != y.
TreeStructure relabel_swap(const TreeStructure& x_tree, Simplex x, Simplex y);

struct VolumeLevel {
  int i = 0;                                     // layer lives on [i], apex i+1
  ChainF2 forest;                                // F_i on [m] + {i}
  std::shared_ptr<const TreeStructure> layer;    // T_i, a (d-1)-tree on [i] containing F_i
};

/// Faces {i} + g with i in [min_level, n], g in cut_x for even i and in
/// cut_y for odd i.
struct GoodFaces {
  int min_level = 0;
  std::vector<Simplex> cut_x;  // Cut(x, X)
  std::vector<Simplex> cut_y;  // Cut(y, Y)

  bool contains(Simplex gamma) const;
  std::uint64_t count(int n) const;
};

struct VolumeTreeArtifact {
  int d = 0;
  int n = 0;
  int m = 0;
  bool explicit_2d = false;
  std::shared_ptr<const TreeStructure> base;  // on [m+1]
  std::shared_ptr<const TreeStructure> x_tree;
  std::shared_ptr<const TreeStructure> y_tree;
  std::optional<Simplex> x;
  std::optional<Simplex> y;
  std::optional<CutFillWitness> witness;      // from the cut-fill search on X
  std::vector<VolumeLevel> levels;            // i = m+1 .. n-1
  std::shared_ptr<const TreeStructure> tree;  // the final d-tree on [n]
  GoodFaces good;
  /// Artifacts of the recursive sub-builds, innermost last.
  std::vector<CutFillWitness> nested_witnesses;

  const VolumeLevel& level(int i) const { return levels.at(i - m - 1); }
};

/// The explicit 2-tree: base star on [n/2+1], extended by Hamiltonian paths
/// P_A i P_B P_C whose A and B halves alternate orientation with the parity of
/// i. Requires n >= 16 and n divisible by 4.
VolumeTreeArtifact build_2d_volume_tree(int n, std::shared_ptr<const TreeStructure> base = nullptr);

/// The general d-dimensional build: a Hamiltonian path for d = 1, a star for
/// n < 10d, and otherwise conical extension of a star on [m+1] by completions
/// of the layer forests F_i derived from a recursive (d-1)-tree X on [m].
VolumeTreeArtifact build_general_volume_tree(int d, int n);

struct LinkTraceLevel {
  int i = 0;
  ChainF2 link;              // Link_i(Z_i)
  std::optional<ChainF2> expected;
  std::size_t fill_size = 0; // |Fill(Link_{i+1}(Z_{i+1}), T_i)|, absent for i = n
};

struct LinkTraceReport {
  Simplex sigma;
  std::vector<LinkTraceLevel> levels;  // i = n down to m+1
  bool links_match = true;
};

/// The link sequence of Z_i for a good 2-simplex {a, b, c} of the explicit
/// 2-dimensional build, alongside the closed-form prediction.
LinkTraceReport claim3_trace(const VolumeTreeArtifact& artifact, Simplex sigma);

struct GoodFaceWitness {
  ChainF2 k_gamma;
  std::size_t fill_size = 0;   // |Fill(gamma, T)|
  std::size_t bound = 0;       // |Fill(y, X)| * (i - m - 2)
  bool contained = false;      // K_gamma within Fill(gamma, T)
  bool holds() const { return contained && k_gamma.size() >= bound && fill_size >= bound; }
};

/// K_gamma, the union over j = m+1 .. i-1 of Cone_{j+1}(Fill(sigma_j, F_j)),
/// compared with the full filling of gamma. Throws if gamma is not good.
GoodFaceWitness good_face_witness(const VolumeTreeArtifact& artifact, Simplex gamma,
                                  const TreeFiller* filler = nullptr);

struct BinomialBoundCheck {
  double lhs_top = 0, rhs_top = 0;        // C(m,d) vs a^d C(n-1,d)
  double lhs_bottom = 0, rhs_bottom = 0;  // C(m-1,d-1) vs a^(d-1) C(n-2,d-1)
  bool holds() const { return lhs_top >= rhs_top && lhs_bottom >= rhs_bottom; }
};

/// C(m,d) >= a^d C(n-1,d) and C(m-1,d-1) >= a^(d-1) C(n-2,d-1) with
/// a = 1 - 1/d and m = ceil(a n). Requires d >= 2.
BinomialBoundCheck observation6_check(int d, int n);

}  // namespace hypertree
