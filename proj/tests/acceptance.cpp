// Acceptance run: one PASS/FAIL line per criterion, INFO lines for context.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hypertree/boundary_synth.hpp"
#include "hypertree/extremal_cycles.hpp"
#include "hypertree/f2_solver.hpp"
#include "hypertree/hypertree.hpp"
#include "hypertree/io.hpp"
#include "hypertree/oracles.hpp"
#include "hypertree/volume_trees.hpp"
#include "support.hpp"

using namespace hypertree;
using hypertree::testing::Rng;
using hypertree::testing::uniform_int;

namespace {

int failures = 0;

class Criterion {
public:
  explicit Criterion(std::string id) : id_(std::move(id)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    ok_ = ok_ && ok;
  }
  void note(const std::string& detail) { detail_ = detail; }
  void time_limit(double seconds) { limit_ = seconds; }

  ~Criterion() {
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (limit_ > 0 && elapsed > limit_) expect(false, "runtime over budget");
    std::string line = (ok_ ? "PASS " : "FAIL ") + id_ + " (" + std::to_string(checks_) + " checks, ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", elapsed);
    line += buf;
    line += ")";
    if (!detail_.empty()) line += " " + detail_;
    if (!ok_) line += " first failure: " + first_failure_;
    std::puts(line.c_str());
    if (!ok_) ++failures;
  }

private:
  std::string id_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::size_t checks_ = 0;
  double limit_ = 0;
  std::string first_failure_;
  std::string detail_;
};

void info(const std::string& text) { std::printf("INFO %s\n", text.c_str()); }

std::string str(const ChainF2& c) { return io::chain_to_text(c); }

TreeStructure path_tree(int n) {
  std::vector<Simplex> edges;
  for (int v = 1; v < n; ++v) edges.push_back(Simplex{v, v + 1});
  return TreeStructure(ChainF2(1, n, edges));
}

bool exact_third(const MuReport& r, int n) {
  return r.sum * 3 == static_cast<std::uint64_t>(n + 1) * binom(n, 2);
}

void chain_laws() {
  Criterion k("1 chain algebra laws");
  k.time_limit(5);
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    const int d = uniform_int(rng, 1, 4);
    const int n = uniform_int(rng, d + 2, 12);
    const int v = uniform_int(rng, 1, n);
    const ChainF2 raw = hypertree::testing::random_chain(rng, d, n, 0.3);
    std::vector<Simplex> avoid;
    for (Simplex s : raw)
      if (!s.contains(v)) avoid.push_back(s);
    const ChainF2 c(d, n, std::move(avoid));

    if (d >= 2) k.expect(boundary(boundary(raw)).empty(), "boundary twice");
    k.expect(boundary(cone(c, v)) == (c ^ cone(boundary(c), v)), "cone boundary identity");
    k.expect(link(cone(c, v), v) == c, "link of cone");
    const ChainF2 back = cone(link(raw, v), v);
    for (Simplex s : back) k.expect(raw.contains(s) && s.contains(v), "cone of link");
    if (d <= n - 2) k.expect(dual(dual(raw)) == raw && dual(raw).size() == raw.size(), "dual involution");
  }
}

void tree_size_law() {
  Criterion k("2 tree size law");
  std::vector<TreeStructure> trees;
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    const int d = uniform_int(rng, 1, 4);
    const int n = uniform_int(rng, d + 2, 11);
    const ChainF2 c = hypertree::testing::random_chain(rng, d, n, 0.2);
    F2ColumnBasis b(d, n);
    std::vector<Simplex> forest;
    for (Simplex s : c)
      if (b.insert_if_independent(s)) forest.push_back(s);
    trees.push_back(complete_to_tree(ChainF2(d, n, forest), n));
    trees.push_back(build_nice_tree(d, n, RandomLayers{static_cast<std::uint64_t>(t)}));
    trees.push_back(build_nice_tree(d, n, StarLayers{}));
    trees.push_back(random_hypertree(d, n, t));
  }
  for (int n : {16, 20, 32}) {
    if (n % 4 == 0) trees.push_back(*build_2d_volume_tree(n).tree);
    trees.push_back(*build_general_volume_tree(2, n).tree);
  }
  trees.push_back(*build_general_volume_tree(3, 30).tree);
  trees.push_back(*build_general_volume_tree(1, 20).tree);
  for (const auto& t : trees) {
    const std::uint64_t want = binom(t.ambient() - 1, t.dimension());
    k.expect(t.size() == want, "size");
    k.expect(boundary_rank(t.faces()) == want, "rank");
  }
  k.note(std::to_string(trees.size()) + " trees");
}

bool forest_ok(const ForestBuildResult& r, const ChainF2& z, int n, std::uint64_t corank_bound) {
  const int d = z.dimension() + 1;
  return boundary(r.forest) == z && is_forest(r.forest) && is_collapsible(r.forest).collapsible() &&
         r.corank == binom(n - 1, d) - r.forest.size() && r.corank <= corank_bound;
}

void prescribed_boundaries() {
  Criterion k("3 forests with prescribed boundary");
  k.time_limit(120);
  std::size_t exhaustive = 0;
  for (int n = 4; n <= 6; ++n)
    for (const ChainF2& z : hypertree::testing::all_nontrivial_1cycles(n)) {
      k.expect(forest_ok(forest_with_boundary(z, n), z, n, 1), "exhaustive d=2");
      ++exhaustive;
    }
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    const int n = uniform_int(rng, 7, 12);
    const ChainF2 z = hypertree::testing::random_cycle(rng, 2, n);
    k.expect(forest_ok(forest_with_boundary(z, n), z, n, 1), "random d=2");
  }
  for (int t = 0; t < 100; ++t) {
    const int n = uniform_int(rng, 8, 11);
    const ChainF2 z = hypertree::testing::random_cycle(rng, 3, n, 0.15);
    k.expect(forest_ok(forest_with_boundary(z, n), z, n, n - 1), "random d=3");
  }
  auto multiplicity = [&](int d, int n) {
    const std::size_t want = n - 2 * d;
    const ChainF2 z = hypertree::testing::random_cycle(rng, d, n);
    const auto found = enumerate_forests_with_boundary(z, n, want + 2);
    std::set<std::vector<Simplex>> distinct;
    for (const auto& r : found) {
      k.expect(forest_ok(r, z, n, binom(n - 1, d - 2)), "enumerated forest");
      distinct.insert({r.forest.begin(), r.forest.end()});
    }
    k.expect(distinct.size() >= want, "multiplicity at d=" + std::to_string(d) + " n=" + std::to_string(n));
  };
  for (int n = 5; n <= 10; ++n) multiplicity(1, n);
  for (int n = 8; n <= 12; ++n) multiplicity(2, n);
  k.note(std::to_string(exhaustive) + " exhaustive cycles");
}

void two_tree_parity() {
  Criterion k("4 parity of 2-tree boundaries at n=5");
  k.time_limit(60);
  std::size_t even = 0, odd = 0;
  for (const ChainF2& z : hypertree::testing::all_nontrivial_1cycles(5)) {
    if (z.size() % 2 == 0) {
      ++even;
      auto r = two_tree_with_boundary(z, 5);
      const auto* t = std::get_if<TreeStructure>(&r);
      k.expect(t && boundary(t->faces()) == z, "even cycle realized");
    } else {
      ++odd;
      k.expect(std::holds_alternative<ParityObstruction>(two_tree_with_boundary(z, 5)), "odd cycle obstructed");
      const auto search = brute_tree_with_boundary(z, 5);
      k.expect(search.subsets == 210 && !search.witness, "oracle finds no tree");
    }
  }
  k.note(std::to_string(even) + " even, " + std::to_string(odd) + " odd");
}

void extremal_cycles() {
  Criterion k("5 Hamiltonian and large simple cycles");
  k.time_limit(180);
  for (int n : {4, 7, 8, 11, 12}) {
    auto r = hamiltonian_2cycle(n);
    const auto* c = std::get_if<ExtremalCycleResult>(&r);
    k.expect(c && c->size() == binom(n - 1, 2) + 1 && c->simple() && is_simple_cycle(c->cycle),
             "Hamiltonian n=" + std::to_string(n));
  }
  for (int n : {5, 6}) {
    k.expect(std::holds_alternative<HamiltonianNonexistence>(hamiltonian_2cycle(n)), "nonexistence n=" + std::to_string(n));
    const auto best = max_simple_cycle_bruteforce(2, n);
    k.expect(best.size < binom(n - 1, 2) + 1, "oracle maximum n=" + std::to_string(n));
    info("largest simple 2-cycle on [" + std::to_string(n) + "] has " + std::to_string(best.size) + " faces (Hamiltonian would be " +
         std::to_string(binom(n - 1, 2) + 1) + ")");
  }
  auto general = [&](int d, int n) {
    const auto c = large_simple_cycle(d, n);
    const std::uint64_t bound = binom(n - 1, d) - binom(n - 1, d - 2) + 1;
    k.expect(c.size() >= bound && c.simple() && boundary(c.cycle).empty(),
             "general d=" + std::to_string(d) + " n=" + std::to_string(n));
  };
  for (int n = 7; n <= 10; ++n) general(3, n);
  for (int n = 9; n <= 11; ++n) general(4, n);
}

void duality() {
  Criterion k("6 duality with graph cuts");
  for (int n : {5, 6}) {
    const auto r = dual_maxcut_crosscheck(n);
    k.expect(r.max_cut == static_cast<std::uint64_t>(n * n / 4), "max cut n=" + std::to_string(n));
    k.expect(r.equal(), "cut equals cycle n=" + std::to_string(n));
    k.expect(r.dual_is_cut && graph_cut(n, r.cut_side_mask) == r.dual_witness, "dual witness is a cut");
  }
}

void layered_filling() {
  Criterion k("7 recursive filling of nice trees");
  Rng rng(7);
  std::size_t nonempty = 0;
  for (int t = 0; t < 200; ++t) {
    const int d = uniform_int(rng, 2, 3);
    const int n = uniform_int(rng, d + 2, 10);
    const TreeStructure tree = build_nice_tree(d, n, RandomLayers{static_cast<std::uint64_t>(t)});
    const ChainF2 z = boundary(hypertree::testing::random_chain(rng, d, n, 0.2));
    const ChainF2 fast = fill_nice_recursive(tree, z);
    k.expect(fast == TreeFiller(tree, TreeFiller::Strategy::solver).fill(z), "recursive equals solver");
    nonempty += !fast.empty();
  }
  k.note(std::to_string(nonempty) + " nonempty fills");
}

void nearest_boundaries() {
  Criterion k("8 nearest hypertree boundary");
  Rng rng(8);
  std::size_t zero = 0, parity_good = 0;
  std::uint64_t worst = 0;
  for (int t = 0; t < 200; ++t) {
    const int d = uniform_int(rng, 2, 3);
    const int n = uniform_int(rng, d + 2, 12);
    const ChainF2 z = hypertree::testing::random_cycle(rng, d, n, d == 2 ? 0.3 : 0.15);
    const auto r = nearest_hypertree_boundary(z, n);
    k.expect(r.bound == (d + 1) * binom(n - 1, d - 2), "bound value");
    k.expect(r.within_bound() && boundary(r.tree.faces()) == r.z_prime && (z ^ r.z_prime).size() == r.distance,
             "within bound");
    if (d == 2 && parity_check_2tree(z, n)) {
      ++parity_good;
      k.expect(r.distance == 0, "parity-good input at distance 0");
    }
    zero += r.distance == 0;
    worst = std::max(worst, r.distance);
  }
  k.note(std::to_string(zero) + " at distance 0, " + std::to_string(parity_good) + " parity-good, max distance " +
         std::to_string(worst));
}

void explicit_construction() {
  for (int n : {16, 32}) {
    const auto start = std::chrono::steady_clock::now();
    const VolumeTreeArtifact a = build_2d_volume_tree(n);
    const int q = n / 4, m = n / 2;
    std::vector<LinkTraceReport> reports;
    for (int x = 1; x <= q; ++x)
      for (int y = q + 1; y <= m; ++y)
        for (int c = m + 2; c <= n; ++c) reports.push_back(claim3_trace(a, Simplex{x, y, c}));

    {
      Criterion k("9a-links n=" + std::to_string(n) + " link sequence for every good triangle");
      for (const auto& r : reports) k.expect(r.links_match, "links for " + r.sigma.to_string());
      k.note(std::to_string(reports.size()) + " good triangles");
    }
    {
      Criterion k("9a-fill n=" + std::to_string(n) + " |Fill_i| = n/2+1 for i in n/2+1..c-1");
      std::map<std::size_t, std::size_t> interior, top;
      for (const auto& r : reports) {
        const int c = r.sigma.max_vertex();
        for (const auto& level : r.levels) {
          if (level.i < m + 1 || level.i > c - 1) continue;
          k.expect(level.fill_size == static_cast<std::size_t>(m + 1),
                   "level " + std::to_string(level.i) + " of " + r.sigma.to_string() + " has " + std::to_string(level.fill_size));
          (level.i == c - 1 ? top : interior)[level.fill_size]++;
        }
      }
      std::string hist;
      for (const auto& [size, count] : interior) hist += " " + std::to_string(size) + "x" + std::to_string(count);
      info("n=" + std::to_string(n) + " fill sizes for i in n/2+1..c-2:" + hist);
      hist.clear();
      for (const auto& [size, count] : top) hist += " " + std::to_string(size) + "x" + std::to_string(count);
      info("n=" + std::to_string(n) + " fill sizes at i = c-1 (path from a to b):" + hist);
    }
    {
      Criterion k("9b n=" + std::to_string(n) + " good-face bound for every face in Gamma");
      const TreeFiller filler(*a.tree);
      std::size_t count = 0;
      for (Simplex gamma : all_simplices(n, 3)) {
        if (!a.good.contains(gamma)) continue;
        const auto w = good_face_witness(a, gamma, &filler);
        k.expect(w.contained, "K_gamma inside the fill of " + gamma.to_string());
        k.expect(w.fill_size >= w.bound, "bound for " + gamma.to_string());
        ++count;
      }
      k.expect(count == a.good.count(n), "good-face count");
      k.note(std::to_string(count) + " good faces");

      std::size_t approx_hold = 0;
      for (const auto& r : reports) {
        const int c = r.sigma.max_vertex();
        approx_hold += filler.fill(r.sigma).size() >= static_cast<std::size_t>((c - m - 2) * (m + 1));
      }
      info("n=" + std::to_string(n) + " |Fill(abc)| >= (c-n/2-2)(n/2+1) holds for " + std::to_string(approx_hold) + " of " +
           std::to_string(reports.size()) + " good triangles");
    }
    {
      Criterion k("9c n=" + std::to_string(n) + " exact mu >= n^2/2^9");
      k.time_limit(60 - std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      const MuReport r = mu(*a.tree);
      const double bound = n * n / 512.0;
      k.expect(r.count == binom(n, 3) && r.mean >= bound, "mu");
      char buf[96];
      std::snprintf(buf, sizeof buf, "mu=%.4f bound=%.4f ratio mu/n^2=%.4f", r.mean, bound, r.mean / (n * n));
      k.note(buf);
    }
  }
}

std::vector<CutFillWitness> volume_bounds(std::vector<CutFillWitness>& witnesses) {
  Criterion k("10 average filling-volume of the general construction");
  k.time_limit(600);
  for (int n = 4; n <= 64; ++n) {
    const MuReport r = mu(*build_general_volume_tree(1, n).tree);
    k.expect(exact_third(r, n), "d=1 mu=(n+1)/3 at n=" + std::to_string(n));
    k.expect(r.mean >= volume_constant(1) * (n - 1), "d=1 bound");
  }
  std::string d2;
  for (int n = 16; n <= 40; n += 4) {
    const auto a = build_general_volume_tree(2, n);
    const MuReport r = mu(*a.tree);
    k.expect(r.mean >= volume_constant(2) * binom(n - 1, 2), "d=2 n=" + std::to_string(n));
    char buf[48];
    std::snprintf(buf, sizeof buf, " %d:%.2f", n, r.mean);
    d2 += buf;
    if (a.witness) witnesses.push_back(*a.witness);
    witnesses.insert(witnesses.end(), a.nested_witnesses.begin(), a.nested_witnesses.end());
  }
  info("exact d=2 mu by n:" + d2);

  const auto a = build_general_volume_tree(3, 30);
  if (a.witness) witnesses.push_back(*a.witness);
  witnesses.insert(witnesses.end(), a.nested_witnesses.begin(), a.nested_witnesses.end());
  MuOptions opt;
  opt.exact = false;
  opt.samples = 10000;
  opt.seed = 30;
  const MuReport r = mu(*a.tree, opt);
  const double lower = r.mean - 3 * r.standard_error();
  const double bound = volume_constant(3) * binom(29, 3);
  k.expect(lower >= bound, "d=3 n=30 sampled");
  char buf[128];
  std::snprintf(buf, sizeof buf, "d=3 n=30 sampled mu=%.2f se=%.2f lower=%.2f bound=%.3g", r.mean, r.standard_error(), lower, bound);
  k.note(buf);
  return witnesses;
}

void cut_fill_witnesses(const std::vector<CutFillWitness>& witnesses) {
  Criterion k("11 cut-fill witnesses and the l2 identity");
  for (const auto& w : witnesses) k.expect(w.meets_threshold(), "witness at tau " + w.tau.to_string());
  k.expect(!witnesses.empty(), "witnesses collected");
  Rng rng(11);
  std::size_t trees = 0;
  for (int d = 1; d <= 2; ++d)
    for (int n = d + 2; n <= 12; ++n) {
      std::vector<TreeStructure> pool{random_hypertree(d, n, n), build_nice_tree(d, n, RandomLayers{static_cast<std::uint64_t>(n)}),
                                      star_tree(d, n)};
      if (d == 1) pool.push_back(path_tree(n));
      for (const auto& t : pool) {
        const auto w = lemma4_search(t, 0.0);
        k.expect(w.sum_f == w.sum_fill_squares, "l2 identity");
        ++trees;
      }
    }
  k.note(std::to_string(witnesses.size()) + " construction witnesses, " + std::to_string(trees) + " identity trees");
}

// Every artifact the suite writes, rendered to text.
std::string artifact_bundle(unsigned threads) {
  std::ostringstream out;
  out << io::tree_to_text(*build_2d_volume_tree(16).tree);
  out << io::tree_to_text(*build_general_volume_tree(2, 24).tree);
  out << io::tree_to_text(*build_general_volume_tree(3, 30).tree);
  out << str(std::get<ExtremalCycleResult>(hamiltonian_2cycle(11)).cycle);
  out << str(large_simple_cycle(3, 9).cycle);
  out << str(max_simple_cycle_bruteforce(2, 6, threads).witness);
  out << str(dual_maxcut_crosscheck(6).dual_witness);
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const ChainF2 z = hypertree::testing::random_cycle(rng, 2, 9);
    out << str(forest_with_boundary(z, 9, ChoiceSeed{{static_cast<std::uint64_t>(t), 1, 2}}).forest);
    out << str(nearest_hypertree_boundary(z, 9).z_prime);
  }
  MuOptions opt;
  opt.exact = false;
  opt.samples = 2000;
  opt.seed = 99;
  opt.threads = threads;
  out << io::mu_report_to_json(mu(*build_general_volume_tree(2, 20).tree, opt)).dump();
  opt.exact = true;
  out << io::mu_report_to_json(mu(*build_2d_volume_tree(16).tree, opt)).dump();
  return out.str();
}

void determinism() {
  Criterion k("12 deterministic artifacts");
  const std::string first = artifact_bundle(1);
  const std::string second = artifact_bundle(4);
  const std::string third = artifact_bundle(1);
  k.expect(first == second, "one thread vs four threads");
  k.expect(first == third, "rerun");
  k.note(std::to_string(first.size()) + " bytes compared");
}

}  // namespace

int main() {
  chain_laws();
  tree_size_law();
  prescribed_boundaries();
  two_tree_parity();
  extremal_cycles();
  duality();
  layered_filling();
  nearest_boundaries();
  explicit_construction();
  std::vector<CutFillWitness> witnesses;
  volume_bounds(witnesses);
  cut_fill_witnesses(witnesses);
  determinism();
  std::printf("%s: %d criterion line(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
