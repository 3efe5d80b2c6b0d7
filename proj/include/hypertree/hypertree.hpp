#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypertree/chain.hpp"
#include "hypertree/f2_solver.hpp"

namespace hypertree {

class TreeStructure;

/// One conical-extension step: the tree on [vertex - 1] is extended by coning
/// `layer`, a (d-1)-hypertree on [vertex - 1], with apex `vertex`.
struct ExtensionLayer {
  int vertex = 0;
  std::shared_ptr<const TreeStructure> layer;
};

/// Construction record of a tree obtained by iterated conical extension.
struct ConicalHistory {
  std::shared_ptr<const TreeStructure> base;
  std::vector<ExtensionLayer> layers;  // increasing apex
};

enum class TreeKind { generic, nice };

/**
 * A d-hypertree on [n]: an acyclic set of C(n-1, d) d-simplices.
 *
 * Trees built by conical extension carry their history, which lets fillings
 * be computed layer by layer instead of by elimination over the whole tree.
 * A tree is `nice` when its history starts from the single simplex
 * {1, ..., d+1}.
 */
class TreeStructure {
public:
  /// Validates that `faces` is a hypertree.
  explicit TreeStructure(ChainF2 faces);

  /// Replays `base` extended by each layer in turn.
  static TreeStructure from_history(std::shared_ptr<const TreeStructure> base,
                                    std::vector<ExtensionLayer> layers);

  const ChainF2& faces() const { return faces_; }
  int dimension() const { return faces_.dimension(); }
  int ambient() const { return faces_.ambient(); }
  std::size_t size() const { return faces_.size(); }
  bool contains(Simplex s) const { return faces_.contains(s); }

  TreeKind kind() const { return kind_; }
  const std::optional<ConicalHistory>& history() const { return history_; }

private:
  TreeStructure() = default;

  ChainF2 faces_;
  TreeKind kind_ = TreeKind::generic;
  std::optional<ConicalHistory> history_;
};

/// True iff c is a forest of size C(n-1, d) on its ambient [n].
bool is_hypertree(const ChainF2& c);

/**
 * Precomputed filling engine for one tree.
 *
 * For trees with a conical history and d >= 2 the filling is assembled layer
 * by layer: at apex v the link of the current cycle is filled in the layer
 * tree, coned, and the remainder pushed down to the smaller tree. Otherwise a
 * frozen elimination basis over the tree's boundary columns is used.
 *
 * Immutable after construction; `fill` may be called concurrently.
 */
class TreeFiller {
public:
  enum class Strategy { automatic, solver };

  explicit TreeFiller(const TreeStructure& tree, Strategy strategy = Strategy::automatic);

  int dimension() const { return dimension_; }
  int ambient() const { return n_; }
  bool recursive() const { return !layers_.empty(); }

  /// Fill of a (d-1)-cycle. Throws if z is not in the span of the tree.
  ChainF2 fill(const ChainF2& z) const;
  /// Fill of the boundary of a d-simplex.
  ChainF2 fill(Simplex sigma) const;

  struct LevelTrace {
    int vertex;
    ChainF2 link;        // link of the current cycle at `vertex`
    ChainF2 layer_fill;  // its filling in the layer tree
  };
  struct Trace {
    std::vector<LevelTrace> levels;  // from the top apex down
    ChainF2 base_cycle;              // what is left for the base tree
    ChainF2 base_fill;
    ChainF2 total;
  };
  /// The layer-by-layer decomposition of a fill; requires recursive().
  Trace trace(const ChainF2& z) const;

private:
  int dimension_;
  int n_;
  std::unique_ptr<F2ColumnBasis> basis_;
  std::unique_ptr<TreeFiller> base_;
  struct Layer {
    int vertex;
    std::unique_ptr<TreeFiller> filler;
  };
  std::vector<Layer> layers_;  // decreasing apex
};

ChainF2 fill(const TreeStructure& tree, const ChainF2& z);

/// Fill via the conical history only; throws if the tree has none.
ChainF2 fill_nice_recursive(const TreeStructure& tree, const ChainF2& z);

/// A hypertree containing forest f, completed by colex scan.
TreeStructure complete_to_tree(const ChainF2& f, int n);

/// { sigma : tau in fill(tree, boundary(sigma)) }.
std::vector<Simplex> cut(const TreeStructure& tree, Simplex tau);

/// fill(tree, boundary(sigma)) + {sigma} for sigma outside the tree.
ChainF2 fundamental_cycle(const TreeStructure& tree, Simplex sigma);

struct CollapseStep {
  Simplex face;     // exposed (d-1)-face
  Simplex simplex;  // its unique coface
};

struct CollapseResult {
  std::vector<CollapseStep> order;
  ChainF2 core;  // d-simplices left when no face is exposed
  bool collapsible() const { return core.empty(); }
};

/// Exhaustive degree-1 peeling. Exposed faces are processed from a queue
/// seeded in colex order; with `shuffle_seed` the processing order is random.
CollapseResult is_collapsible(const ChainF2& c, std::optional<std::uint64_t> shuffle_seed = {});

/// True iff the only cycle supported within z is z itself. Throws if z is
/// empty or not a cycle.
bool is_simple_cycle(const ChainF2& z);

struct MuReport {
  std::string tree_id;
  bool exact = true;
  std::uint64_t seed = 0;   // sampled mode only
  int n = 0;
  int d = 0;
  std::uint64_t total = 0;  // C(n, d+1)
  std::uint64_t count = 0;  // simplices measured
  std::uint64_t sum = 0;
  std::uint64_t sum_squares = 0;
  double mean = 0.0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // fill size -> count

  /// Standard error of the mean (0 in exact mode).
  double standard_error() const;
};

struct MuOptions {
  bool exact = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: default parallelism
};

MuReport mu(const TreeStructure& tree, const MuOptions& options = {});
MuReport mu(const TreeStructure& tree, const TreeFiller& filler, const MuOptions& options = {});

/// Stable identifier of a tree's face set.
std::string tree_id(const ChainF2& faces);

/// Layer rules for nice trees.
struct StarLayers {};
struct RandomLayers {
  std::uint64_t seed = 0;
};
struct ExplicitLayers {
  /// layers[k - (d+1)] is a (d-1)-hypertree on [k], k = d+1 .. n-1.
  std::vector<TreeStructure> layers;
};
using LayerSource = std::variant<StarLayers, RandomLayers, ExplicitLayers>;

TreeStructure build_nice_tree(int d, int n, const LayerSource& source);

/// A uniformly shuffled maximal forest of d-simplices on [n].
TreeStructure random_hypertree(int d, int n, std::uint64_t seed);

/// The star at vertex 1, a collapsible d-hypertree on [n].
TreeStructure star_tree(int d, int n);

}  // namespace hypertree
