#include "hypertree/boundary_synth.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hypertree {

namespace {

struct Context {
  std::vector<std::uint64_t> entries;
  std::size_t cursor = 0;
  std::vector<std::uint64_t> used;
  std::size_t defaulted = 0;
  std::vector<std::string> notes;
  std::vector<std::pair<int, int>> relabeling;

  std::uint64_t peek() const { return cursor < entries.size() ? entries[cursor] : 0; }
  std::uint64_t take() {
    if (cursor >= entries.size()) ++defaulted;
    return cursor < entries.size() ? entries[cursor++] : (++cursor, 0);
  }
};

ChainF2 single(int dimension, int n, Simplex s) { return ChainF2(dimension, n, {s}); }

std::int64_t signed_binom(int n, int k) { return static_cast<std::int64_t>(binom(n, k)); }

// Filling of z in the star at vertex 1: cone the faces of z avoiding 1.
ChainF2 fill_in_star(const ChainF2& z, int n) {
  std::vector<Simplex> out;
  for (Simplex s : z)
    if (!s.contains(1)) out.push_back(s.with(1));
  return ChainF2(z.dimension() + 1, n, std::move(out));
}

std::optional<ChainF2> synth(const ChainF2& z, int n, Context& ctx, bool strict);

std::optional<ChainF2> synth_dim1(const ChainF2& z, int n, Context& ctx, bool strict) {
  if (n == 2) {
    if (strict && ctx.peek() > 0) return std::nullopt;
    return ChainF2(1, 2, {Simplex{1, 2}});
  }
  if (!z.contains(Simplex{n})) {
    const int w = z.max_vertex();
    ctx.relabeling.emplace_back(w, n);
    auto inner = synth_dim1(transpose(z, w, n), n, ctx, strict);
    if (!inner) return std::nullopt;
    return transpose(*inner, w, n);
  }
  int excluded = 0;
  if (z.size() == 2) excluded = z.simplices()[0].min_vertex();
  std::vector<int> candidates;
  for (int i = 1; i <= n - 1; ++i)
    if (i != excluded) candidates.push_back(i);

  if (strict && ctx.peek() >= candidates.size()) return std::nullopt;
  std::uint64_t e = ctx.take();
  if (e >= candidates.size()) {
    ctx.notes.push_back("choice " + std::to_string(e) + " at dimension 1, n=" + std::to_string(n) +
                        " reduced modulo " + std::to_string(candidates.size()));
    e %= candidates.size();
  }
  ctx.used.push_back(e);
  const int i = candidates[e];
  const ChainF2 rest = (z ^ ChainF2(0, n, {Simplex{i}, Simplex{n}})).with_ambient(n - 1);
  auto lower = synth(rest, n - 1, ctx, false);
  return lower->with_ambient(n) ^ single(1, n, Simplex{i, n});
}

std::optional<ChainF2> synth(const ChainF2& z, int n, Context& ctx, bool strict) {
  const int d = z.dimension() + 1;
  if (z.empty()) return ChainF2(d, n);
  if (d == 1) return synth_dim1(z, n, ctx, strict);

  if (n <= 2 * d - 1) {
    if (strict && ctx.peek() > 0) return std::nullopt;
    return fill_in_star(z, n);
  }

  bool touches_top = false;
  for (Simplex s : z) touches_top = touches_top || s.contains(n);
  if (!touches_top) {
    const int w = z.max_vertex();
    ctx.relabeling.emplace_back(w, n);
    auto inner = synth(transpose(z, w, n), n, ctx, strict);
    if (!inner) return std::nullopt;
    return transpose(*inner, w, n);
  }

  const ChainF2 lk = link(z, n).with_ambient(n - 1);
  const ChainF2 rest = (z ^ cone(lk, n)).with_ambient(n - 1);
  const std::uint64_t wanted = ctx.peek();

  // Candidate subordinate forests Y with boundary(Y) = lk, generated lazily by
  // varying the top-level choice of the (d-1)-dimensional recursion.
  std::vector<ChainF2> valid;
  std::optional<ChainF2> violating;
  std::set<std::vector<Simplex>> seen;
  const std::int64_t min_size = signed_binom(n - 2, d - 1) - signed_binom(n - 2, d - 3);
  bool exhausted = false;
  for (std::uint64_t k = 0; valid.size() <= wanted; ++k) {
    Context sub;
    sub.entries = {k};
    auto candidate = synth(lk, n - 1, sub, true);
    if (!candidate) {
      exhausted = true;
      break;
    }
    for (auto& note : sub.notes) ctx.notes.push_back(std::move(note));
    if (!seen.insert({candidate->begin(), candidate->end()}).second) continue;
    if (static_cast<std::int64_t>(candidate->size()) < min_size)
      ctx.notes.push_back("candidate forest of size " + std::to_string(candidate->size()) + " below " +
                          std::to_string(min_size) + " at d=" + std::to_string(d) + ", n=" + std::to_string(n));
    if (*candidate == rest)
      violating = std::move(candidate);
    else
      valid.push_back(std::move(*candidate));
  }
  if (exhausted && n > 2 * d && static_cast<std::int64_t>(valid.size()) < n - 2 * d)
    ctx.notes.push_back("only " + std::to_string(valid.size()) + " admissible subordinate forests at d=" +
                        std::to_string(d) + ", n=" + std::to_string(n) + " (expected at least " +
                        std::to_string(n - 2 * d) + ")");

  ChainF2 y;
  ChainF2 lower_cycle;
  if (!valid.empty()) {
    if (strict && wanted >= valid.size()) return std::nullopt;
    std::uint64_t e = ctx.take();
    if (e >= valid.size()) {
      ctx.notes.push_back("choice " + std::to_string(e) + " at d=" + std::to_string(d) + ", n=" +
                          std::to_string(n) + " reduced modulo " + std::to_string(valid.size()));
      e %= valid.size();
    }
    ctx.used.push_back(e);
    y = valid[e];
    lower_cycle = rest ^ y;
  } else {
    if (strict && wanted > 0) return std::nullopt;
    if (!violating) throw std::logic_error("no subordinate forest realizes the link cycle");
    ctx.take();
    ctx.used.push_back(0);
    if (n != 2 * d)
      ctx.notes.push_back("fallback branch taken at d=" + std::to_string(d) + ", n=" + std::to_string(n));
    y = *violating;
    lower_cycle = ChainF2(d - 1, n - 1);
  }

  auto lower = synth(lower_cycle, n - 1, ctx, false);
  return lower->with_ambient(n) ^ cone(y, n);
}

void validate_cycle(const ChainF2& z, int n) {
  if (n < 1 || n > kMaxVertex) throw std::invalid_argument("n outside [1, 64]");
  if (z.empty()) throw std::invalid_argument("the trivial cycle cannot be the boundary of an acyclic set");
  if (z.max_vertex() > n) throw std::invalid_argument("cycle does not live on [n]");
  if (!is_cycle(z)) throw std::invalid_argument("input chain is not a cycle");
  if (n < z.dimension() + 2) throw std::invalid_argument("n must be at least d + 1");
}

std::optional<ForestBuildResult> run(const ChainF2& z, int n, Context& ctx, bool strict) {
  const int d = z.dimension() + 1;
  auto forest = synth(z.with_ambient(n), n, ctx, strict);
  if (!forest) return std::nullopt;
  ForestBuildResult out;
  out.forest = forest->with_ambient(n);
  out.corank = binom(n - 1, d) - out.forest.size();

  if (!(boundary(out.forest) == z)) throw std::logic_error("constructed forest has the wrong boundary");
  if (!is_forest(out.forest)) throw std::logic_error("constructed set is not a forest");
  auto collapse = is_collapsible(out.forest);
  if (!collapse.collapsible()) throw std::logic_error("constructed forest is not collapsible");
  if (out.corank > binom(n - 1, d - 2)) throw std::logic_error("constructed forest exceeds the corank bound");

  out.collapse_witness = std::move(collapse.order);
  out.relabeling = std::move(ctx.relabeling);
  out.seed.entries = std::move(ctx.used);
  out.notes = std::move(ctx.notes);
  if (ctx.defaulted > 0)
    out.notes.push_back("seed auto-extended with " + std::to_string(ctx.defaulted) + " zero entries");
  return out;
}

}  // namespace

ForestBuildResult forest_with_boundary(const ChainF2& z, int n, const ChoiceSeed& seed) {
  validate_cycle(z, n);
  Context ctx;
  ctx.entries = seed.entries;
  return *run(z, n, ctx, false);
}

std::vector<ForestBuildResult> enumerate_forests_with_boundary(const ChainF2& z, int n, std::size_t count) {
  validate_cycle(z, n);
  std::vector<ForestBuildResult> out;
  std::set<std::vector<Simplex>> seen;
  for (std::uint64_t k = 0; out.size() < count; ++k) {
    Context ctx;
    ctx.entries = {k};
    auto r = run(z, n, ctx, true);
    if (!r) break;
    if (seen.insert({r->forest.begin(), r->forest.end()}).second) out.push_back(std::move(*r));
  }
  return out;
}

std::variant<TreeStructure, ParityObstruction> two_tree_with_boundary(const ChainF2& z, int n) {
  if (z.dimension() != 1) throw std::invalid_argument("two_tree_with_boundary expects a 1-cycle");
  const bool parity_ok = parity_check_2tree(z, n);
  ForestBuildResult built = forest_with_boundary(z, n);
  if (!parity_ok) return ParityObstruction{std::move(built)};
  if (built.corank != 0) throw std::logic_error("parity-compatible cycle produced a forest of positive corank");
  return TreeStructure(built.forest);
}

NearestBoundary nearest_hypertree_boundary(const ChainF2& z, int n) {
  const int d = z.dimension() + 1;
  if (z.max_vertex() > n) throw std::invalid_argument("cycle does not live on [n]");
  if (!is_cycle(z)) throw std::invalid_argument("input chain is not a cycle");
  ChainF2 start = z.empty() ? ChainF2(d, n) : forest_with_boundary(z, n).forest;
  TreeStructure tree = complete_to_tree(start, n);
  ChainF2 z_prime = boundary(tree.faces());
  const std::uint64_t distance = (z.with_ambient(n) ^ z_prime).size();
  const std::uint64_t bound = static_cast<std::uint64_t>(d + 1) * binom(n - 1, d - 2);
  return NearestBoundary{std::move(z_prime), std::move(tree), distance, bound};
}

}  // namespace hypertree
