#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hypertree/f2_solver.hpp"
#include "hypertree/volume_trees.hpp"
#include "support.hpp"

using namespace hypertree;
using hypertree::testing::Rng;

namespace {

TreeStructure path_tree(int n) {
  std::vector<Simplex> edges;
  for (int v = 1; v < n; ++v) edges.push_back(Simplex{v, v + 1});
  return TreeStructure(ChainF2(1, n, edges));
}

// fill(F_i, s) = fill(P, s) + face + Cone_i(boundary face) for s in Cut(face, P).
void check_layer_identity(const VolumeLevel& level, const TreeStructure& pattern, Simplex face) {
  const int i = level.i;
  const ChainF2 extra = ChainF2(pattern.dimension(), i, {face}) ^ cone(simplex_boundary(face, i), i);
  for (Simplex s : cut(pattern, face)) {
    const auto lhs = solve_fill(level.forest, simplex_boundary(s, i));
    REQUIRE(lhs);
    CHECK(*lhs == (fill(pattern, simplex_boundary(s, pattern.ambient())).with_ambient(i) ^ extra));
  }
}

}  // namespace

TEST_CASE("constants") {
  CHECK(volume_constant(1) == doctest::Approx(1.0 / 3.0));
  CHECK(volume_constant(2) == doctest::Approx(16.0 / (48.0 * 48.0 * 48.0)));
  CHECK(volume_split(2, 20) == 10);
  CHECK(volume_split(3, 30) == 20);
  CHECK(volume_split(3, 31) == 21);
}

TEST_CASE("cut-fill search on a path") {
  const TreeStructure p = path_tree(12);
  const CutFillWitness w = lemma4_search(p, 1.0 / 3.0);
  CHECK(w.meets_threshold());
  CHECK(w.sum_f == w.sum_fill_squares);
  CHECK(w.mu == doctest::Approx(13.0 / 3.0));
  CHECK(fill(p, simplex_boundary(w.sigma, 12)).contains(w.tau));
  CHECK(cut(p, Simplex{6, 7}).size() == 36);
  CHECK_THROWS_AS(lemma4_search(p, 1.0), std::domain_error);

  const CutFillWitness s = lemma4_search(TreeStructure(star(2, 5)), 0.01);
  CHECK(s.product == s.cut_size * s.fill_size);
  CHECK(s.sum_f == s.sum_fill_squares);
}

TEST_CASE("relabel swap") {
  const TreeStructure p = path_tree(4);
  const TreeStructure y = relabel_swap(p, Simplex{2, 3}, Simplex{1, 4});
  CHECK(y.faces() == ChainF2::of(4, {{1, 2}, {1, 4}, {3, 4}}));
  CHECK(swap_permutation(Simplex{2, 3}, Simplex{1, 4}, 4) == std::vector<int>{0, 2, 1, 4, 3});
  CHECK(swap_permutation(Simplex{1, 2}, Simplex{2, 3}, 3) == std::vector<int>{0, 3, 2, 1});
  CHECK_THROWS(relabel_swap(p, Simplex{1, 3}, Simplex{2, 3}));
  CHECK_THROWS(relabel_swap(p, Simplex{1, 2}, Simplex{3, 4}));
  CHECK_THROWS(relabel_swap(p, Simplex{2, 3}, Simplex{2, 3}));

  // Sizes transfer: |cut(Y, y)| = |cut(X, x)| and |fill(Y, x)| = |fill(X, y)|.
  const TreeStructure t = build_nice_tree(2, 7, RandomLayers{5});
  for (Simplex x : t.faces()) {
    for (Simplex s : cut(t, x)) {
      if (s == x) continue;
      const TreeStructure u = relabel_swap(t, x, s);
      CHECK(u.contains(s));
      CHECK(cut(u, s).size() == cut(t, x).size());
      CHECK(fill(u, simplex_boundary(x, 7)).size() == fill(t, simplex_boundary(s, 7)).size());
    }
  }
}

TEST_CASE("fills are equivariant under relabeling") {
  Rng rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const TreeStructure t = random_hypertree(2, 8, trial);
    const auto perm = hypertree::testing::random_permutation(rng, 8);
    const TreeStructure u(permute(t.faces(), perm));
    for (Simplex s : all_simplices(8, 3)) {
      const ChainF2 moved = permute(ChainF2(2, 8, {s}), perm);
      CHECK(fill(u, boundary(moved)) == permute(fill(t, simplex_boundary(s, 8)), perm));
    }
  }
}

TEST_CASE("explicit 2-dimensional build at n = 16") {
  const VolumeTreeArtifact a = build_2d_volume_tree(16);
  CHECK(a.tree->size() == 105);
  CHECK(is_hypertree(a.tree->faces()));
  CHECK(a.m == 8);
  CHECK(a.levels.size() == 7);
  for (const auto& level : a.levels) {
    CHECK(is_forest(level.forest));
    for (Simplex s : level.forest) CHECK(level.layer->contains(s));
    if (level.i % 2 == 1)
      check_layer_identity(level, *a.x_tree, *a.x);
    else
      check_layer_identity(level, *a.y_tree, *a.y);
  }
  CHECK(a.good.count(16) == 6 * 16);
  CHECK_THROWS(build_2d_volume_tree(18));
  CHECK_THROWS(build_2d_volume_tree(12));
}

TEST_CASE("link trace at n = 16") {
  const VolumeTreeArtifact a = build_2d_volume_tree(16);
  for (int x = 1; x <= 4; ++x)
    for (int y = 5; y <= 8; ++y)
      for (int c = 10; c <= 16; ++c) {
        const LinkTraceReport r = claim3_trace(a, Simplex{x, y, c});
        CHECK(r.links_match);
        REQUIRE(r.levels.size() == 8);
        CHECK(r.levels.front().i == 16);
        CHECK(r.levels.back().i == 9);
        for (const auto& level : r.levels)
          if (level.i < c - 1) CHECK(level.fill_size == 8);
      }
  CHECK_THROWS(claim3_trace(a, Simplex{1, 2, 12}));
  CHECK_THROWS(claim3_trace(a, Simplex{1, 5, 9}));
}

TEST_CASE("good-face witnesses at n = 16") {
  const VolumeTreeArtifact a = build_2d_volume_tree(16);
  const TreeFiller filler(*a.tree);
  std::size_t checked = 0;
  for (Simplex gamma : all_simplices(16, 3)) {
    if (!a.good.contains(gamma)) continue;
    const GoodFaceWitness w = good_face_witness(a, gamma, &filler);
    CHECK(w.holds());
    ++checked;
  }
  CHECK(checked == a.good.count(16));
  const GoodFaceWitness w = good_face_witness(a, Simplex{1, 5, 16});
  CHECK(w.contained);
  CHECK(w.bound == fill(*a.x_tree, simplex_boundary(*a.y, 8)).size() * 6);
  CHECK_THROWS(good_face_witness(a, Simplex{4, 5, 10}));
  CHECK_THROWS(good_face_witness(a, Simplex{4, 5, 9}));
}

TEST_CASE("binomial bounds for the split") {
  const auto r = observation6_check(2, 20);
  CHECK(r.lhs_top == 45);
  CHECK(r.rhs_top == doctest::Approx(42.75));
  CHECK(r.holds());
  CHECK(observation6_check(3, 30).holds());
  CHECK_THROWS(observation6_check(1, 10));
}

TEST_CASE("general build") {
  const auto path = build_general_volume_tree(1, 10);
  CHECK(mu(*path.tree).mean == doctest::Approx(11.0 / 3.0));

  const auto small = build_general_volume_tree(2, 12);
  CHECK(small.tree->faces() == star(2, 12));

  const auto a = build_general_volume_tree(2, 20);
  CHECK(a.m == 10);
  CHECK(a.tree->size() == binom(19, 2));
  CHECK(is_hypertree(a.tree->faces()));
  REQUIRE(a.witness);
  CHECK(a.witness->meets_threshold());
  CHECK(a.y_tree->contains(*a.y));
  for (const auto& level : a.levels) {
    CHECK(is_forest(level.forest));
    for (Simplex s : level.forest) CHECK(level.layer->contains(s));
    if (level.i % 2 == 1)
      check_layer_identity(level, *a.x_tree, *a.x);
    else
      check_layer_identity(level, *a.y_tree, *a.y);
  }
  const MuReport r = mu(*a.tree);
  CHECK(r.mean >= volume_constant(2) * binom(19, 2));
  CHECK(r.mean == doctest::Approx(21.33).epsilon(0.001));
}
