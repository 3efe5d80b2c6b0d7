#include "hypertree/hypertree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "hypertree/parallel.hpp"

namespace hypertree {

bool is_hypertree(const ChainF2& c) {
  const int n = c.ambient();
  if (n < 1) return false;
  return c.size() == binom(n - 1, c.dimension()) && is_forest(c);
}

TreeStructure::TreeStructure(ChainF2 faces) : faces_(std::move(faces)) {
  if (!is_hypertree(faces_))
    throw std::invalid_argument("not a " + std::to_string(faces_.dimension()) + "-hypertree on [" +
                                std::to_string(faces_.ambient()) + "]");
}

TreeStructure TreeStructure::from_history(std::shared_ptr<const TreeStructure> base,
                                          std::vector<ExtensionLayer> layers) {
  if (!base) throw std::invalid_argument("conical history needs a base tree");
  const int d = base->dimension();
  ChainF2 faces = base->faces();
  for (const auto& step : layers) {
    if (!step.layer) throw std::invalid_argument("conical history: missing layer tree");
    if (step.vertex != faces.ambient() + 1)
      throw std::invalid_argument("conical history: apex " + std::to_string(step.vertex) +
                                  " does not follow ambient [" + std::to_string(faces.ambient()) + "]");
    if (step.layer->dimension() != d - 1 || step.layer->ambient() != step.vertex - 1)
      throw std::invalid_argument("conical history: layer at apex " + std::to_string(step.vertex) +
                                  " is not a " + std::to_string(d - 1) + "-hypertree on [" +
                                  std::to_string(step.vertex - 1) + "]");
    faces = conical_extension(faces, step.layer->faces(), step.vertex).with_ambient(step.vertex);
  }
  if (faces.size() != binom(faces.ambient() - 1, d))
    throw std::logic_error("conical history replayed to a set of the wrong size");

  TreeStructure tree;
  tree.faces_ = std::move(faces);
  const bool single_simplex = base->ambient() == d + 1;
  tree.kind_ = single_simplex ? TreeKind::nice : TreeKind::generic;
  tree.history_ = ConicalHistory{std::move(base), std::move(layers)};
  return tree;
}

// ---------------------------------------------------------------------------

TreeFiller::TreeFiller(const TreeStructure& tree, Strategy strategy)
    : dimension_(tree.dimension()), n_(tree.ambient()) {
  const auto& history = tree.history();
  if (strategy == Strategy::automatic && history && dimension_ >= 2) {
    base_ = std::make_unique<TreeFiller>(*history->base, strategy);
    for (auto it = history->layers.rbegin(); it != history->layers.rend(); ++it)
      layers_.push_back({it->vertex, std::make_unique<TreeFiller>(*it->layer, strategy)});
    return;
  }
  basis_ = std::make_unique<F2ColumnBasis>(dimension_, n_);
  for (Simplex s : tree.faces())
    if (!basis_->insert_if_independent(s)) throw std::logic_error("tree faces are dependent");
}

ChainF2 TreeFiller::fill(const ChainF2& z) const {
  if (z.dimension() != dimension_ - 1) throw std::invalid_argument("fill: cycle has wrong dimension");
  if (z.max_vertex() > n_) throw std::invalid_argument("fill: cycle exceeds the tree's vertex set");
  if (basis_) {
    auto filled = basis_->solve(z);
    if (!filled) throw std::domain_error("fill: chain is not in the span of the tree");
    return filled->with_ambient(n_);
  }
  ChainF2 result(dimension_, n_);
  ChainF2 current = z.with_ambient(n_);
  for (const auto& layer : layers_) {
    const int v = layer.vertex;
    ChainF2 lk = link(current, v).with_ambient(v - 1);
    if (!lk.empty()) {
      ChainF2 layer_fill = layer.filler->fill(lk);
      result ^= cone(layer_fill, v);
      current = current ^ cone(lk, v) ^ layer_fill;
    }
    current = current.with_ambient(v - 1);
  }
  result ^= base_->fill(current);
  return result.with_ambient(n_);
}

ChainF2 TreeFiller::fill(Simplex sigma) const { return fill(simplex_boundary(sigma, n_)); }

TreeFiller::Trace TreeFiller::trace(const ChainF2& z) const {
  if (!recursive()) throw std::invalid_argument("fill trace needs a conical history");
  Trace out;
  ChainF2 current = z.with_ambient(n_);
  out.total = ChainF2(dimension_, n_);
  for (const auto& layer : layers_) {
    const int v = layer.vertex;
    ChainF2 lk = link(current, v).with_ambient(v - 1);
    ChainF2 layer_fill(dimension_ - 1, v - 1);
    if (!lk.empty()) {
      layer_fill = layer.filler->fill(lk);
      out.total ^= cone(layer_fill, v);
      current = current ^ cone(lk, v) ^ layer_fill;
    }
    out.levels.push_back({v, lk, layer_fill});
    current = current.with_ambient(v - 1);
  }
  out.base_cycle = current;
  out.base_fill = base_->fill(current);
  out.total = (out.total ^ out.base_fill).with_ambient(n_);
  return out;
}

ChainF2 fill(const TreeStructure& tree, const ChainF2& z) { return TreeFiller(tree).fill(z); }

ChainF2 fill_nice_recursive(const TreeStructure& tree, const ChainF2& z) {
  if (!tree.history()) throw std::invalid_argument("fill_nice_recursive: tree has no conical history");
  // For d = 1 the filler falls back to elimination: the unique tree path.
  return TreeFiller(tree).fill(z);
}

// ---------------------------------------------------------------------------

TreeStructure complete_to_tree(const ChainF2& f, int n) {
  const int d = f.dimension();
  F2ColumnBasis basis(d, n);
  for (Simplex s : f)
    if (!basis.insert_if_independent(s)) throw std::invalid_argument("complete_to_tree: input is not a forest");
  const std::size_t target = binom(n - 1, d);
  for (Simplex s : all_simplices(n, d + 1)) {
    if (basis.rank() == target) break;
    basis.insert_if_independent(s);
  }
  return TreeStructure(ChainF2(d, n, basis.members()));
}

std::vector<Simplex> cut(const TreeStructure& tree, Simplex tau) {
  if (!tree.contains(tau)) throw std::invalid_argument("cut: " + tau.to_string() + " is not in the tree");
  TreeFiller filler(tree);
  std::vector<Simplex> out;
  for (Simplex sigma : all_simplices(tree.ambient(), tree.dimension() + 1)) {
    if (sigma == tau) {
      out.push_back(sigma);
      continue;
    }
    if (tree.contains(sigma)) continue;
    if (filler.fill(sigma).contains(tau)) out.push_back(sigma);
  }
  return out;
}

ChainF2 fundamental_cycle(const TreeStructure& tree, Simplex sigma) {
  if (sigma.dimension() != tree.dimension())
    throw std::invalid_argument("fundamental_cycle: simplex has wrong dimension");
  if (tree.contains(sigma)) throw std::invalid_argument("fundamental_cycle: simplex is in the tree");
  const ChainF2 filled = fill(tree, simplex_boundary(sigma, tree.ambient()));
  return filled ^ ChainF2(tree.dimension(), tree.ambient(), {sigma});
}

// ---------------------------------------------------------------------------

CollapseResult is_collapsible(const ChainF2& c, std::optional<std::uint64_t> shuffle_seed) {
  const std::vector<Simplex> simplices(c.begin(), c.end());
  std::unordered_map<Simplex, std::vector<std::uint32_t>, SimplexHash> cofaces;
  for (std::uint32_t i = 0; i < simplices.size(); ++i)
    for (Simplex f : simplices[i].facets()) cofaces[f].push_back(i);
  std::unordered_map<Simplex, std::uint32_t, SimplexHash> degree;
  std::vector<Simplex> exposed;
  for (const auto& [face, list] : cofaces) {
    degree[face] = static_cast<std::uint32_t>(list.size());
    if (list.size() == 1) exposed.push_back(face);
  }
  std::sort(exposed.begin(), exposed.end());

  std::vector<char> alive(simplices.size(), 1);
  CollapseResult result;
  std::deque<Simplex> queue(exposed.begin(), exposed.end());
  std::mt19937_64 rng(shuffle_seed.value_or(0));
  while (!queue.empty()) {
    Simplex face;
    if (shuffle_seed) {
      std::uniform_int_distribution<std::size_t> pick(0, queue.size() - 1);
      const std::size_t i = pick(rng);
      face = queue[i];
      queue[i] = queue.back();
      queue.pop_back();
    } else {
      face = queue.front();
      queue.pop_front();
    }
    if (degree[face] != 1) continue;
    std::uint32_t owner = 0;
    for (std::uint32_t i : cofaces[face])
      if (alive[i]) owner = i;
    alive[owner] = 0;
    result.order.push_back({face, simplices[owner]});
    for (Simplex g : simplices[owner].facets())
      if (--degree[g] == 1) queue.push_back(g);
  }
  std::vector<Simplex> core;
  for (std::size_t i = 0; i < simplices.size(); ++i)
    if (alive[i]) core.push_back(simplices[i]);
  result.core = ChainF2(c.dimension(), c.ambient(), std::move(core));
  return result;
}

bool is_simple_cycle(const ChainF2& z) {
  if (z.empty()) throw std::invalid_argument("is_simple_cycle: empty chain");
  if (!is_cycle(z)) throw std::invalid_argument("is_simple_cycle: chain is not a cycle");
  return kernel_dimension(z) == 1;
}

// ---------------------------------------------------------------------------

double MuReport::standard_error() const {
  if (exact || count < 2) return 0.0;
  const double n = static_cast<double>(count);
  const double m = static_cast<double>(sum) / n;
  const double var = (static_cast<double>(sum_squares) - n * m * m) / (n - 1.0);
  return std::sqrt(std::max(0.0, var) / n);
}

std::string tree_id(const ChainF2& faces) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint64_t>(faces.dimension()));
  mix(static_cast<std::uint64_t>(faces.ambient()));
  for (Simplex s : faces) mix(s.mask());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

MuReport mu(const TreeStructure& tree, const MuOptions& options) {
  TreeFiller filler(tree);
  return mu(tree, filler, options);
}

MuReport mu(const TreeStructure& tree, const TreeFiller& filler, const MuOptions& options) {
  const int n = tree.ambient();
  const int d = tree.dimension();
  MuReport report;
  report.tree_id = tree_id(tree.faces());
  report.exact = options.exact;
  report.seed = options.exact ? 0 : options.seed;
  report.n = n;
  report.d = d;
  report.total = binom(n, d + 1);

  std::vector<std::uint64_t> ranks;
  if (!options.exact) {
    if (options.samples == 0) throw std::invalid_argument("mu: sampled mode needs a positive sample count");
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, report.total - 1);
    ranks.resize(options.samples);
    for (auto& r : ranks) r = pick(rng);
  }
  const std::uint64_t count = options.exact ? report.total : ranks.size();

  struct Partial {
    std::uint64_t sum = 0, sum_squares = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;
  };
  unsigned workers = options.threads ? options.threads : default_parallelism();
  std::vector<Partial> partials(std::max(1u, workers));
  parallel_chunks(count, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    Partial& p = partials[w];
    for (std::uint64_t i = begin; i < end; ++i) {
      const Simplex sigma = Simplex::colex_unrank(options.exact ? i : ranks[i], d + 1);
      const std::uint64_t size = tree.contains(sigma) ? 1 : filler.fill(sigma).size();
      p.sum += size;
      p.sum_squares += size * size;
      ++p.histogram[size];
    }
  });
  for (const auto& p : partials) {
    report.sum += p.sum;
    report.sum_squares += p.sum_squares;
    for (const auto& [size, k] : p.histogram) report.histogram[size] += k;
  }
  report.count = count;
  report.mean = count ? static_cast<double>(report.sum) / static_cast<double>(count) : 0.0;
  return report;
}

// ---------------------------------------------------------------------------

TreeStructure star_tree(int d, int n) { return TreeStructure(star(d, n, 1)); }

TreeStructure random_hypertree(int d, int n, std::uint64_t seed) {
  std::vector<Simplex> candidates = all_simplices(n, d + 1);
  std::mt19937_64 rng(seed);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  F2ColumnBasis basis(d, n);
  const std::size_t target = binom(n - 1, d);
  for (Simplex s : candidates) {
    if (basis.rank() == target) break;
    basis.insert_if_independent(s);
  }
  return TreeStructure(ChainF2(d, n, basis.members()));
}

TreeStructure build_nice_tree(int d, int n, const LayerSource& source) {
  if (d < 1) throw std::invalid_argument("nice trees need d >= 1");
  if (n < d + 1) throw std::invalid_argument("nice trees need n >= d + 1");
  auto base = std::make_shared<const TreeStructure>(ChainF2(d, d + 1, {Simplex::prefix(d + 1)}));

  std::vector<ExtensionLayer> layers;
  std::mt19937_64 rng(std::holds_alternative<RandomLayers>(source) ? std::get<RandomLayers>(source).seed : 0);
  if (const auto* explicit_layers = std::get_if<ExplicitLayers>(&source)) {
    if (explicit_layers->layers.size() != static_cast<std::size_t>(n - 1 - d))
      throw std::invalid_argument("nice tree: expected " + std::to_string(n - 1 - d) + " layers");
  }
  for (int k = d + 1; k <= n - 1; ++k) {
    std::shared_ptr<const TreeStructure> layer;
    if (std::holds_alternative<StarLayers>(source)) {
      layer = std::make_shared<const TreeStructure>(star_tree(d - 1, k));
    } else if (std::holds_alternative<RandomLayers>(source)) {
      layer = std::make_shared<const TreeStructure>(random_hypertree(d - 1, k, rng()));
    } else {
      const TreeStructure& given = std::get<ExplicitLayers>(source).layers[k - (d + 1)];
      if (given.dimension() != d - 1 || given.ambient() != k)
        throw std::invalid_argument("nice tree: layer " + std::to_string(k) + " is not a " +
                                    std::to_string(d - 1) + "-hypertree on [" + std::to_string(k) + "]");
      layer = std::make_shared<const TreeStructure>(given);
    }
    layers.push_back({k + 1, std::move(layer)});
  }
  return TreeStructure::from_history(std::move(base), std::move(layers));
}

}  // namespace hypertree
