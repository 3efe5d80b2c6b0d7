// hypertree: command-line front end for the hypertree library.
//
// Every subcommand prints a report in the format chosen by --format (json,
// csv or text). Chain and tree artifacts go to <out>.<ext> files when --out is
// given; otherwise they are embedded in the JSON report, or printed ahead of
// the report in text mode.
//
// Exit codes: 0 success, 1 malformed input, 2 infeasible instance, 3 oracle
// size limit exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypertree/boundary_synth.hpp"
#include "hypertree/extremal_cycles.hpp"
#include "hypertree/f2_solver.hpp"
#include "hypertree/hypertree.hpp"
#include "hypertree/io.hpp"
#include "hypertree/oracles.hpp"
#include "hypertree/volume_trees.hpp"

using nlohmann::json;
using namespace hypertree;

namespace {

constexpr int kInfeasible = 2;
constexpr int kTooLarge = 3;

struct Config {
  std::string format = "json";
  std::string out;
  std::uint64_t rng_seed = 0;
  unsigned threads = 0;
};

struct CsvRow {
  int d;
  int n;
  std::string metric;
  std::string value;
  std::string bound;
  std::string pass;
};

class Report {
public:
  Report(const Config& cfg, std::string command, int d, int n) : cfg_(cfg), d_(d), n_(n) {
    body_["command"] = std::move(command);
    body_["rng_seed"] = cfg.rng_seed;
    if (d >= 0) body_["d"] = d;
    if (n >= 0) body_["n"] = n;
  }

  json& body() { return body_; }

  void metric(const std::string& name, const json& value, const json& bound = nullptr,
              std::optional<bool> pass = std::nullopt) {
    body_[name] = value;
    auto str = [](const json& j) { return j.is_null() ? std::string() : (j.is_string() ? j.get<std::string>() : j.dump()); };
    rows_.push_back({d_, n_, name, str(value), str(bound), pass ? (*pass ? "true" : "false") : ""});
  }

  void chain(const std::string& key, const std::string& ext, const ChainF2& c) {
    artifact(key, ext, io::chain_to_text(c), io::chain_to_json(c));
  }
  void tree(const std::string& key, const std::string& ext, const TreeStructure& t) {
    artifact(key, ext, io::tree_to_text(t), io::chain_to_json(t.faces()));
  }

  void emit(std::ostream& os) const {
    if (cfg_.format == "json") {
      os << body_.dump(2) << '\n';
    } else if (cfg_.format == "csv") {
      os << "d,n,metric,value,bound,pass\n";
      for (const auto& r : rows_) os << r.d << ',' << r.n << ',' << r.metric << ',' << quote(r.value) << ',' << r.bound << ',' << r.pass << '\n';
    } else {
      for (const auto& text : inline_text_) os << text;
      for (auto it = body_.begin(); it != body_.end(); ++it) {
        if (it.key() == "artifacts") continue;
        os << "# " << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
      }
    }
  }

private:
  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
  }

  void artifact(const std::string& key, const std::string& ext, const std::string& text, const json& j) {
    if (!cfg_.out.empty()) {
      const std::string path = cfg_.out + (key.empty() || key == ext ? "" : "." + key) + "." + ext;
      io::write_file(path, text);
      body_["files"][key.empty() ? ext : key] = path;
    } else if (cfg_.format == "json") {
      body_["artifacts"][key.empty() ? ext : key] = j;
    } else if (cfg_.format == "text") {
      inline_text_.push_back(text);
    }
  }

  const Config& cfg_;
  int d_, n_;
  json body_ = json::object();
  std::vector<CsvRow> rows_;
  std::vector<std::string> inline_text_;
};

ChainF2 load_chain(const std::string& path) {
  const std::string text = io::read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return io::chain_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw io::ParseError(std::string("malformed JSON: ") + e.what());
    }
  }
  // Tree files with a construction history are accepted wherever a chain is.
  if (text.find("\nhistory\n") != std::string::npos) return io::tree_from_text(text).faces();
  return io::chain_from_text(text);
}

TreeStructure load_tree(const std::string& path) { return io::tree_from_text(io::read_file(path)); }

ChainF2 load_cycle(const std::string& path, int n) {
  ChainF2 z = load_chain(path);
  if (n <= 0) n = z.ambient();
  if (z.max_vertex() > n) throw io::ParseError("cycle does not live on [n]");
  return z.with_ambient(n);
}

std::vector<std::uint64_t> parse_seed(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      throw io::ParseError("choice seed entries must be non-negative integers");
    }
    if (pos != item.size() || item[0] == '-') throw io::ParseError("choice seed entries must be non-negative integers");
    out.push_back(v);
  }
  return out;
}

Simplex parse_simplex(std::string s) {
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream ss(s);
  std::vector<int> v;
  int x;
  while (ss >> x) v.push_back(x);
  if (!ss.eof()) throw io::ParseError("malformed simplex '" + s + "'");
  try {
    return Simplex(v);
  } catch (const std::exception& e) {
    throw io::ParseError(e.what());
  }
}

json forest_json(const ForestBuildResult& r, int d, int n) {
  json relabel = json::array();
  for (auto [a, b] : r.relabeling) relabel.push_back({a, b});
  return {{"size", r.forest.size()},
          {"corank", r.corank},
          {"corank_bound", binom(n - 1, d - 2)},
          {"choice_seed", r.seed.entries},
          {"relabeling", relabel},
          {"collapse_steps", r.collapse_witness.size()},
          {"notes", r.notes}};
}

json witness_json(const CutFillWitness& w) {
  return {{"tau", w.tau.vertices()},       {"sigma", w.sigma.vertices()},   {"cut_size", w.cut_size},
          {"fill_size", w.fill_size},      {"product", w.product},          {"threshold", w.threshold},
          {"f_tau", w.f_tau},              {"sum_f", w.sum_f},              {"sum_fill_squares", w.sum_fill_squares},
          {"mu", w.mu},                    {"meets_threshold", w.meets_threshold()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypertrees over GF(2): boundaries, fillings, extremal cycles and volume trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "Write artifacts to <out>.<ext> files");
  app.add_option("--rng-seed", cfg.rng_seed, "Seed for every random choice");
  app.add_option("--threads", cfg.threads, "Worker threads (default: HYPERTREE_THREADS or hardware)");

  std::string chain_path, tree_path, cycle_path, seed_text, sigma_text, check = "forest";
  int d = -1, n = 0;
  std::uint64_t samples = 0, count = 1;
  bool exact = false, brute = false, explicit_2d = false;

  auto* boundary_cmd = app.add_subcommand("boundary", "Boundary of a chain");
  boundary_cmd->add_option("--chain", chain_path)->required();

  auto* fill_cmd = app.add_subcommand("fill", "Filling of a cycle in a tree");
  fill_cmd->add_option("--tree", tree_path)->required();
  fill_cmd->add_option("--cycle", cycle_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Forest, tree, collapsibility and simplicity checks");
  verify_cmd->add_option("--chain", chain_path)->required();

  auto* forest_cmd = app.add_subcommand("forest-from-boundary", "Collapsible forest with a prescribed boundary");
  forest_cmd->add_option("--cycle", cycle_path)->required();
  forest_cmd->add_option("--n", n);
  forest_cmd->add_option("--choice-seed", seed_text, "Comma-separated choice indices");
  forest_cmd->add_option("--count", count, "Enumerate up to this many distinct forests");

  auto* two_tree_cmd = app.add_subcommand("two-tree-boundary", "2-hypertree with a prescribed boundary");
  two_tree_cmd->add_option("--cycle", cycle_path)->required();
  two_tree_cmd->add_option("--n", n);

  auto* nearest_cmd = app.add_subcommand("nearest-tree-boundary", "Nearby boundary of a hypertree");
  nearest_cmd->add_option("--cycle", cycle_path)->required();
  nearest_cmd->add_option("--n", n);

  auto* ham_cmd = app.add_subcommand("hamiltonian", "Hamiltonian 2-cycle on [n]");
  ham_cmd->add_option("--n", n)->required();

  auto* large_cmd = app.add_subcommand("large-simple-cycle", "Large simple d-cycle on [n]");
  large_cmd->add_option("--d", d)->required();
  large_cmd->add_option("--n", n)->required();
  large_cmd->add_option("--sigma", sigma_text, "Seed simplex, e.g. \"1 2 3\"");

  auto* max_cmd = app.add_subcommand("max-simple-cycle", "Largest simple d-cycle by exhaustive search");
  max_cmd->add_flag("--brute", brute)->required();
  max_cmd->add_option("--d", d)->required();
  max_cmd->add_option("--n", n)->required();

  auto* volume_cmd = app.add_subcommand("volume-tree", "d-tree with large average filling-volume");
  volume_cmd->add_option("--d", d)->required();
  volume_cmd->add_option("--n", n)->required();
  volume_cmd->add_flag("--explicit", explicit_2d, "Use the explicit 2-dimensional construction");
  volume_cmd->add_option("--samples", samples, "Sampled mu instead of exact");

  auto* mu_cmd = app.add_subcommand("mu", "Average filling-volume of a tree");
  mu_cmd->add_option("--tree", tree_path)->required();
  mu_cmd->add_flag("--exact", exact);
  mu_cmd->add_option("--samples", samples);

  auto* oracle_cmd = app.add_subcommand("oracle", "Subset-enumeration checks");
  oracle_cmd->add_option("--check", check)->check(CLI::IsMember({"forest", "simple", "tree-boundary"}));
  oracle_cmd->add_option("--chain", chain_path)->required();
  oracle_cmd->add_option("--n", n);

  auto* dual_cmd = app.add_subcommand("dual-maxcut", "Largest (n-3)-cycle against the largest graph cut");
  dual_cmd->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  int status = 0;
  try {
    if (*boundary_cmd) {
      const ChainF2 c = load_chain(chain_path);
      Report r(cfg, "boundary", c.dimension(), c.ambient());
      const ChainF2 b = boundary(c);
      r.metric("size", b.size());
      r.chain("", "chain", b);
      r.emit(std::cout);
    } else if (*fill_cmd) {
      const TreeStructure t = load_tree(tree_path);
      const ChainF2 z = load_cycle(cycle_path, t.ambient());
      Report r(cfg, "fill", t.dimension(), t.ambient());
      const ChainF2 f = fill(t, z);
      r.metric("size", f.size(), t.size());
      r.metric("recursive", TreeFiller(t).recursive());
      r.chain("", "chain", f);
      r.emit(std::cout);
    } else if (*verify_cmd) {
      const ChainF2 c = load_chain(chain_path);
      Report r(cfg, "verify", c.dimension(), c.ambient());
      const std::uint64_t tree_size = binom(c.ambient() - 1, c.dimension());
      r.metric("size", c.size(), tree_size);
      if (c.dimension() >= 1) {
        const bool forest = is_forest(c);
        r.metric("rank", boundary_rank(c));
        r.metric("forest", forest);
        r.metric("hypertree", forest && c.size() == tree_size);
        const auto collapse = is_collapsible(c);
        r.metric("collapsible", collapse.collapsible());
        r.metric("core_size", collapse.core.size());
        const bool cycle = boundary(c).empty();
        r.metric("cycle", cycle);
        if (cycle && !c.empty()) r.metric("simple", is_simple_cycle(c));
        r.metric("kernel_dimension", kernel_dimension(c));
      }
      r.emit(std::cout);
    } else if (*forest_cmd) {
      const ChainF2 z = load_cycle(cycle_path, n);
      const int nn = z.ambient();
      const int dd = z.dimension() + 1;
      Report r(cfg, "forest-from-boundary", dd, nn);
      if (count > 1) {
        const auto all = enumerate_forests_with_boundary(z, nn, count);
        r.metric("distinct", all.size(), nn > 2 * dd ? json(nn - 2 * dd) : json(nullptr),
                 nn > 2 * dd ? std::optional<bool>(all.size() >= static_cast<std::size_t>(std::min<std::uint64_t>(count, nn - 2 * dd))) : std::nullopt);
        json list = json::array();
        for (std::size_t k = 0; k < all.size(); ++k) {
          list.push_back(forest_json(all[k], dd, nn));
          r.chain("forest" + std::to_string(k), "chain", all[k].forest);
        }
        r.body()["forests"] = list;
      } else {
        const auto result = forest_with_boundary(z, nn, ChoiceSeed{parse_seed(seed_text)});
        r.metric("size", result.forest.size());
        r.metric("corank", result.corank, binom(nn - 1, dd - 2), result.corank <= binom(nn - 1, dd - 2));
        r.body()["forest"] = forest_json(result, dd, nn);
        r.chain("forest", "chain", result.forest);
      }
      r.emit(std::cout);
    } else if (*two_tree_cmd) {
      const ChainF2 z = load_cycle(cycle_path, n);
      const int nn = z.ambient();
      Report r(cfg, "two-tree-boundary", 2, nn);
      r.metric("cycle_size", z.size());
      r.metric("parity_ok", parity_check_2tree(z, nn));
      auto result = two_tree_with_boundary(z, nn);
      if (auto* t = std::get_if<TreeStructure>(&result)) {
        r.metric("realized", true);
        r.metric("size", t->size(), binom(nn - 1, 2));
        r.tree("tree", "tree", *t);
      } else {
        const auto& obstruction = std::get<ParityObstruction>(result);
        r.metric("realized", false);
        r.body()["obstruction"] = {{"reason", "|Z| and C(n-1,2) differ in parity"},
                                   {"near_witness", forest_json(obstruction.near_witness, 2, nn)}};
        r.chain("near_witness", "chain", obstruction.near_witness.forest);
        status = kInfeasible;
      }
      r.emit(std::cout);
    } else if (*nearest_cmd) {
      const ChainF2 z = load_cycle(cycle_path, n);
      const int nn = z.ambient();
      const int dd = z.dimension() + 1;
      Report r(cfg, "nearest-tree-boundary", dd, nn);
      const auto result = nearest_hypertree_boundary(z, nn);
      r.metric("distance", result.distance, result.bound, result.within_bound());
      r.chain("boundary", "chain", result.z_prime);
      r.tree("tree", "tree", result.tree);
      r.emit(std::cout);
    } else if (*ham_cmd) {
      Report r(cfg, "hamiltonian", 2, n);
      auto result = hamiltonian_2cycle(n);
      if (auto* c = std::get_if<ExtremalCycleResult>(&result)) {
        r.metric("exists", true);
        r.metric("size", c->size(), binom(n - 1, 2) + 1, c->size() == binom(n - 1, 2) + 1);
        r.metric("kernel_dimension", c->kernel_dim);
        r.metric("simple", c->simple());
        r.body()["seed_simplex"] = c->seed_simplex.vertices();
        r.chain("cycle", "chain", c->cycle);
      } else {
        r.metric("exists", false);
        r.body()["certificate"] = std::get<HamiltonianNonexistence>(result).parity_argument;
        status = kInfeasible;
      }
      r.emit(std::cout);
    } else if (*large_cmd) {
      Report r(cfg, "large-simple-cycle", d, n);
      std::optional<Simplex> sigma;
      if (!sigma_text.empty()) sigma = parse_simplex(sigma_text);
      const auto c = large_simple_cycle(d, n, sigma);
      const std::uint64_t bound = binom(n - 1, d) - binom(n - 1, d - 2) + 1;
      r.metric("size", c.size(), bound, c.size() >= bound);
      r.metric("kernel_dimension", c.kernel_dim);
      r.metric("simple", c.simple());
      r.body()["seed_simplex"] = c.seed_simplex.vertices();
      r.body()["choice_seed"] = c.choices.entries;
      r.chain("cycle", "chain", c.cycle);
      r.emit(std::cout);
    } else if (*max_cmd) {
      Report r(cfg, "max-simple-cycle", d, n);
      const auto result = max_simple_cycle_bruteforce(d, n, cfg.threads);
      r.metric("max_size", result.size, binom(n - 1, d) + 1);
      r.metric("nodes", result.nodes);
      r.chain("witness", "chain", result.witness);
      r.emit(std::cout);
    } else if (*volume_cmd) {
      Report r(cfg, "volume-tree", d, n);
      if (explicit_2d && d != 2) throw std::invalid_argument("--explicit needs --d 2");
      const VolumeTreeArtifact a = explicit_2d ? build_2d_volume_tree(n) : build_general_volume_tree(d, n);
      MuOptions options;
      options.exact = samples == 0;
      options.samples = samples;
      options.seed = cfg.rng_seed;
      options.threads = cfg.threads;
      const MuReport m = mu(*a.tree, options);
      const double bound = volume_constant(d) * static_cast<double>(binom(n - 1, d));
      r.metric("size", a.tree->size(), binom(n - 1, d), a.tree->size() == binom(n - 1, d));
      r.metric("mu", m.mean, bound, m.mean >= bound);
      json manifest = {{"m", a.m}, {"explicit", a.explicit_2d}};
      if (a.x) manifest["x"] = a.x->vertices();
      if (a.y) manifest["y"] = a.y->vertices();
      json levels = json::array();
      for (const auto& level : a.levels)
        levels.push_back({{"i", level.i}, {"forest_size", level.forest.size()}, {"layer_size", level.layer->size()}});
      manifest["levels"] = levels;
      if (a.good.min_level > 0)
        manifest["good_faces"] = {{"min_level", a.good.min_level},
                                  {"cut_x_size", a.good.cut_x.size()},
                                  {"cut_y_size", a.good.cut_y.size()},
                                  {"count", a.good.count(n)}};
      if (a.witness) manifest["cut_fill_witness"] = witness_json(*a.witness);
      r.body()["manifest"] = manifest;
      r.body()["mu_report"] = io::mu_report_to_json(m);
      r.tree("tree", "tree", *a.tree);
      r.emit(std::cout);
    } else if (*mu_cmd) {
      const TreeStructure t = load_tree(tree_path);
      Report r(cfg, "mu", t.dimension(), t.ambient());
      MuOptions options;
      options.exact = exact || samples == 0;
      options.samples = samples;
      options.seed = cfg.rng_seed;
      options.threads = cfg.threads;
      const MuReport m = mu(t, options);
      r.metric("mean", m.mean);
      r.metric("sum", m.sum);
      r.metric("count", m.count);
      r.body()["mu_report"] = io::mu_report_to_json(m);
      r.emit(std::cout);
    } else if (*oracle_cmd) {
      const ChainF2 c = load_chain(chain_path);
      Report r(cfg, "oracle", c.dimension(), n > 0 ? n : c.ambient());
      r.body()["check"] = check;
      if (check == "forest") {
        const bool brute = brute_is_forest(c);
        r.metric("forest", brute, nullptr, brute == is_forest(c));
      } else if (check == "simple") {
        const bool brute = brute_is_simple_cycle(c);
        const bool fast = boundary(c).empty() && !c.empty() && is_simple_cycle(c);
        r.metric("simple", brute, nullptr, brute == fast);
      } else {
        const int nn = n > 0 ? n : c.ambient();
        const auto search = brute_tree_with_boundary(c, nn);
        r.metric("subsets", search.subsets);
        r.metric("exists", search.witness.has_value());
        if (search.witness) r.chain("witness", "chain", *search.witness);
        else status = kInfeasible;
      }
      r.emit(std::cout);
    } else if (*dual_cmd) {
      Report r(cfg, "dual-maxcut", n - 3, n);
      const auto rep = dual_maxcut_crosscheck(n);
      r.metric("max_cut", rep.max_cut, (n * n) / 4, rep.max_cut == static_cast<std::uint64_t>((n * n) / 4));
      r.metric("max_simple_cycle", rep.max_cycle.size, rep.max_cut, rep.equal());
      r.metric("dual_is_cut", rep.dual_is_cut);
      r.body()["cut_side"] = Simplex::from_mask(rep.cut_side_mask).vertices();
      r.chain("witness", "chain", rep.max_cycle.witness);
      r.chain("dual", "chain", rep.dual_witness);
      r.emit(std::cout);
    }
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}
