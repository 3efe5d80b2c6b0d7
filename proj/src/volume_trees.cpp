#include "hypertree/volume_trees.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>

#include "hypertree/f2_solver.hpp"
#include "hypertree/parallel.hpp"

namespace hypertree {

double volume_constant(int d) {
  if (d < 1) throw std::invalid_argument("volume_constant needs d >= 1");
  return 16.0 * std::pow(48.0, -std::pow(3.0, d - 1));
}

int volume_split(int d, int n) {
  if (d < 1) throw std::invalid_argument("volume_split needs d >= 1");
  return n - n / d;
}

CutFillWitness lemma4_search(const TreeStructure& t, double c) {
  const int d = t.dimension();
  const int n = t.ambient();
  const std::vector<Simplex> all = all_simplices(n, d + 1);
  const std::span<const Simplex> faces = t.faces().simplices();

  TreeFiller filler(t);
  std::vector<ChainF2> fills(all.size());
  parallel_chunks(all.size(), default_parallelism(), [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t k = begin; k < end; ++k) fills[k] = filler.fill(all[k]);
  });

  CutFillWitness w;
  std::uint64_t sum = 0;
  for (const auto& f : fills) {
    sum += f.size();
    w.sum_fill_squares += f.size() * f.size();
  }
  w.mu = static_cast<double>(sum) / static_cast<double>(all.size());
  if (w.mu < c * static_cast<double>(binom(n - 1, d)))
    throw std::domain_error("lemma4_search: average filling-volume " + std::to_string(w.mu) + " is below c * C(n-1,d)");

  struct PerFace {
    std::uint64_t cut = 0, f = 0, best = 0;
    std::size_t best_index = 0;
  };
  std::vector<PerFace> per(faces.size());
  for (std::size_t k = 0; k < all.size(); ++k) {
    const std::uint64_t size = fills[k].size();
    for (Simplex tau : fills[k]) {
      auto& p = per[std::lower_bound(faces.begin(), faces.end(), tau) - faces.begin()];
      ++p.cut;
      p.f += size;
      if (size > p.best) {
        p.best = size;
        p.best_index = k;
      }
    }
  }

  std::size_t pick = 0;
  for (std::size_t k = 0; k < per.size(); ++k) {
    w.sum_f += per[k].f;
    if (per[k].cut * per[k].best > per[pick].cut * per[pick].best) pick = k;
  }
  w.tau = faces[pick];
  w.sigma = all[per[pick].best_index];
  w.cut_size = per[pick].cut;
  w.fill_size = per[pick].best;
  w.product = w.cut_size * w.fill_size;
  w.f_tau = per[pick].f;
  w.threshold = c * c * c / 8.0 * static_cast<double>(binom(n, d + 1)) * static_cast<double>(binom(n - 1, d));
  return w;
}

std::vector<int> swap_permutation(Simplex x, Simplex y, int n) {
  std::vector<int> perm(n + 1);
  for (int v = 0; v <= n; ++v) perm[v] = v;
  const auto a = Simplex::from_mask(x.mask() & ~y.mask()).vertices();
  const auto b = Simplex::from_mask(y.mask() & ~x.mask()).vertices();
  for (std::size_t k = 0; k < a.size(); ++k) {
    perm[a[k]] = b[k];
    perm[b[k]] = a[k];
  }
  return perm;
}

TreeStructure relabel_swap(const TreeStructure& x_tree, Simplex x, Simplex y) {
  const int n = x_tree.ambient();
  if (!x_tree.contains(x)) throw std::invalid_argument("relabel_swap: x is not in the tree");
  if (x == y) throw std::invalid_argument("relabel_swap: x and y coincide");
  if (y.size() != x.size() || y.max_vertex() > n) throw std::invalid_argument("relabel_swap: y is not a face of the right dimension");
  if (!fill(x_tree, simplex_boundary(y, n)).contains(x))
    throw std::invalid_argument("relabel_swap: y is not in the cut of x");
  return TreeStructure(permute(x_tree.faces(), swap_permutation(x, y, n)));
}

bool GoodFaces::contains(Simplex gamma) const {
  const int i = gamma.max_vertex();
  if (min_level == 0 || i < min_level) return false;
  const auto& cut = (i % 2 == 0) ? cut_x : cut_y;
  return std::binary_search(cut.begin(), cut.end(), gamma.without(i));
}

std::uint64_t GoodFaces::count(int n) const {
  std::uint64_t total = 0;
  for (int i = min_level; min_level > 0 && i <= n; ++i) total += (i % 2 == 0) ? cut_x.size() : cut_y.size();
  return total;
}

namespace {

// F_i = X + x + Cone_i(boundary x), on [i].
ChainF2 layer_forest(const TreeStructure& pattern, Simplex face, int i) {
  const int d = pattern.dimension();
  return pattern.faces().with_ambient(i) ^ ChainF2(d, i, {face}) ^ cone(simplex_boundary(face, i), i);
}

ChainF2 path_edges(const std::vector<int>& order, int n) {
  std::vector<Simplex> edges;
  for (std::size_t k = 0; k + 1 < order.size(); ++k) edges.push_back(Simplex::from_mask((std::uint64_t{1} << (order[k] - 1)) | (std::uint64_t{1} << (order[k + 1] - 1))));
  std::sort(edges.begin(), edges.end());
  return ChainF2(1, n, std::move(edges));
}

std::vector<int> iota_range(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

void finish(VolumeTreeArtifact& a) {
  std::vector<ExtensionLayer> layers;
  for (const auto& level : a.levels) layers.push_back({level.i + 1, level.layer});
  a.tree = std::make_shared<const TreeStructure>(TreeStructure::from_history(a.base, std::move(layers)));
  a.good.min_level = a.m + 3;
  a.good.cut_x = cut(*a.x_tree, *a.x);
  a.good.cut_y = cut(*a.y_tree, *a.y);
}

}  // namespace

VolumeTreeArtifact build_2d_volume_tree(int n, std::shared_ptr<const TreeStructure> base) {
  if (n < 16 || n % 4 != 0) throw std::invalid_argument("build_2d_volume_tree needs n >= 16 divisible by 4");
  const int m = n / 2;
  const int q = n / 4;
  if (!base) base = std::make_shared<const TreeStructure>(star_tree(2, m + 1));
  if (base->dimension() != 2 || base->ambient() != m + 1)
    throw std::invalid_argument("build_2d_volume_tree: base must be a 2-tree on [n/2+1]");

  VolumeTreeArtifact a;
  a.d = 2;
  a.n = n;
  a.m = m;
  a.explicit_2d = true;
  a.base = std::move(base);

  std::vector<int> x_order = iota_range(1, m);
  std::vector<int> y_order;
  for (int v = q; v >= 1; --v) y_order.push_back(v);
  for (int v = m; v >= q + 1; --v) y_order.push_back(v);
  a.x_tree = std::make_shared<const TreeStructure>(TreeStructure(path_edges(x_order, m)));
  a.y_tree = std::make_shared<const TreeStructure>(TreeStructure(path_edges(y_order, m)));
  a.x = Simplex{q, q + 1};
  a.y = Simplex{1, m};

  for (int i = m + 1; i <= n - 1; ++i) {
    const bool odd = i % 2 == 1;
    const std::vector<int>& pattern = odd ? x_order : y_order;
    std::vector<int> order(pattern.begin(), pattern.begin() + q);
    order.push_back(i);
    order.insert(order.end(), pattern.begin() + q, pattern.end());
    for (int v = m + 1; v <= i - 1; ++v) order.push_back(v);

    VolumeLevel level;
    level.i = i;
    level.forest = odd ? layer_forest(*a.x_tree, *a.x, i) : layer_forest(*a.y_tree, *a.y, i);
    level.layer = std::make_shared<const TreeStructure>(TreeStructure(path_edges(order, i)));
    for (Simplex s : level.forest)
      if (!level.layer->contains(s)) throw std::logic_error("explicit layer path does not contain its forest");
    a.levels.push_back(std::move(level));
  }
  finish(a);
  return a;
}

VolumeTreeArtifact build_general_volume_tree(int d, int n) {
  if (d < 1 || n < d + 1) throw std::invalid_argument("build_general_volume_tree needs d >= 1 and n >= d + 1");
  VolumeTreeArtifact a;
  a.d = d;
  a.n = n;
  if (d == 1) {
    a.tree = std::make_shared<const TreeStructure>(TreeStructure(path_edges(iota_range(1, n), n)));
    return a;
  }
  if (n < 10 * d) {
    a.tree = std::make_shared<const TreeStructure>(star_tree(d, n));
    return a;
  }

  const int m = volume_split(d, n);
  a.m = m;
  VolumeTreeArtifact inner = build_general_volume_tree(d - 1, m);
  a.nested_witnesses = std::move(inner.nested_witnesses);
  if (inner.witness) a.nested_witnesses.push_back(*inner.witness);
  a.x_tree = inner.tree;

  const CutFillWitness w = lemma4_search(*a.x_tree, volume_constant(d - 1));
  if (!w.meets_threshold()) throw std::logic_error("cut-fill witness falls short of its bound");
  a.witness = w;
  a.x = w.tau;
  a.y = w.sigma;
  a.y_tree = std::make_shared<const TreeStructure>(relabel_swap(*a.x_tree, w.tau, w.sigma));
  a.base = std::make_shared<const TreeStructure>(star_tree(d, m + 1));

  for (int i = m + 1; i <= n - 1; ++i) {
    VolumeLevel level;
    level.i = i;
    level.forest = (i % 2 == 1) ? layer_forest(*a.x_tree, *a.x, i) : layer_forest(*a.y_tree, *a.y, i);
    level.layer = std::make_shared<const TreeStructure>(complete_to_tree(level.forest, i));
    a.levels.push_back(std::move(level));
  }
  finish(a);
  return a;
}

LinkTraceReport claim3_trace(const VolumeTreeArtifact& artifact, Simplex sigma) {
  if (!artifact.explicit_2d) throw std::invalid_argument("claim3_trace needs the explicit 2-dimensional build");
  const int n = artifact.n;
  const int m = artifact.m;
  const int q = n / 4;
  if (sigma.size() != 3) throw std::invalid_argument("claim3_trace: sigma must be a 2-simplex");
  const auto v = sigma.vertices();
  const int a = v[0], b = v[1], c = v[2];
  if (a > q || b <= q || b > m || c < m + 2) throw std::invalid_argument("claim3_trace: " + sigma.to_string() + " is not good");

  const TreeFiller filler(*artifact.tree);
  const TreeFiller::Trace trace = filler.trace(simplex_boundary(sigma, n));

  LinkTraceReport report;
  report.sigma = sigma;
  std::size_t above = 0;  // fill size of the level above, i.e. Fill_i is the layer fill at apex i+1
  for (const auto& level : trace.levels) {
    LinkTraceLevel out;
    out.i = level.vertex;
    out.link = level.link;
    out.fill_size = above;
    above = level.layer_fill.size();
    report.levels.push_back(std::move(out));
  }
  LinkTraceLevel bottom;
  bottom.i = m + 1;
  bottom.link = link(trace.base_cycle, m + 1).with_ambient(m);
  bottom.fill_size = above;
  report.levels.push_back(std::move(bottom));

  for (auto& level : report.levels) {
    const int i = level.i;
    if (i > c)
      level.expected = ChainF2(0, i - 1);
    else if (i == c)
      level.expected = ChainF2(0, i - 1, {Simplex{a}, Simplex{b}});
    else if (i % 2 == 1)
      level.expected = ChainF2(0, i - 1, {Simplex{q}, Simplex{q + 1}});
    else
      level.expected = ChainF2(0, i - 1, {Simplex{1}, Simplex{m}});
    if (!(level.link == *level.expected)) report.links_match = false;
  }
  return report;
}

GoodFaceWitness good_face_witness(const VolumeTreeArtifact& artifact, Simplex gamma, const TreeFiller* filler) {
  if (!artifact.x || gamma.size() != artifact.d + 1 || !artifact.good.contains(gamma))
    throw std::invalid_argument("good_face_witness: " + gamma.to_string() + " is not a good face");
  const int n = artifact.n;
  const int m = artifact.m;
  const int d = artifact.d;
  const int i = gamma.max_vertex();

  GoodFaceWitness w;
  w.k_gamma = ChainF2(d, n);
  for (int j = m + 1; j <= i - 1; ++j) {
    const Simplex s = (j == i - 1) ? gamma.without(i) : (j % 2 == 1 ? *artifact.y : *artifact.x);
    auto part = solve_fill(artifact.level(j).forest, simplex_boundary(s, j));
    if (!part) throw std::logic_error("layer forest does not fill " + s.to_string());
    w.k_gamma ^= cone(*part, j + 1).with_ambient(n);
  }

  const ChainF2 full = filler ? filler->fill(gamma) : fill(*artifact.tree, simplex_boundary(gamma, n));
  w.fill_size = full.size();
  w.contained = std::all_of(w.k_gamma.begin(), w.k_gamma.end(), [&](Simplex s) { return full.contains(s); });
  const std::size_t fill_y = fill(*artifact.x_tree, simplex_boundary(*artifact.y, m)).size();
  w.bound = fill_y * static_cast<std::size_t>(i - m - 2);
  return w;
}

BinomialBoundCheck observation6_check(int d, int n) {
  if (d < 2 || n < 1) throw std::invalid_argument("observation6_check needs d >= 2 and n >= 1");
  const double alpha = 1.0 - 1.0 / d;
  const int m = volume_split(d, n);
  BinomialBoundCheck r;
  r.lhs_top = static_cast<double>(binom(m, d));
  r.rhs_top = std::pow(alpha, d) * static_cast<double>(binom(n - 1, d));
  r.lhs_bottom = static_cast<double>(binom(m - 1, d - 1));
  r.rhs_bottom = std::pow(alpha, d - 1) * static_cast<double>(binom(n - 2, d - 1));
  return r;
}

}  // namespace hypertree
