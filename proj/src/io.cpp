#include "hypertree/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace hypertree::io {

namespace {

std::vector<long long> parse_ints(const std::string& line) {
  std::istringstream ls(line);
  std::vector<long long> out;
  long long v;
  while (ls >> v) out.push_back(v);
  ls.clear();
  std::string rest;
  if (ls >> rest) throw ParseError("unexpected token '" + rest + "'");
  return out;
}

bool is_numeric_line(const std::string& line) {
  for (char ch : line)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == ' ' || ch == '\t' || ch == '-' || ch == '\r')) return false;
  return true;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

struct LineReader {
  std::istream& is;
  std::optional<std::string> pending;
  std::size_t number = 0;

  std::optional<std::string> peek() {
    if (pending) return pending;
    std::string line;
    while (std::getline(is, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!blank(line)) return pending = line;
    }
    return std::nullopt;
  }
  std::string next(const char* what) {
    auto line = peek();
    if (!line) throw ParseError(std::string("unexpected end of input, expected ") + what);
    pending.reset();
    return *line;
  }
  ParseError error(const std::string& msg) const { return ParseError("line " + std::to_string(number) + ": " + msg); }
};

ChainF2 parse_chain(LineReader& in) {
  const std::string header = in.next("'d n' header");
  std::vector<long long> dn;
  try {
    dn = parse_ints(header);
  } catch (const ParseError& e) {
    throw in.error(e.what());
  }
  if (dn.size() != 2) throw in.error("header must be 'd n'");
  const long long d = dn[0], n = dn[1];
  if (d < 0 || n < 0 || n > kMaxVertex || d + 1 > n) throw in.error("header values out of range");

  std::vector<Simplex> simplices;
  while (auto line = in.peek()) {
    if (!is_numeric_line(*line)) break;
    in.next("simplex");
    std::vector<long long> vs;
    try {
      vs = parse_ints(*line);
    } catch (const ParseError& e) {
      throw in.error(e.what());
    }
    if (static_cast<long long>(vs.size()) != d + 1) throw in.error("simplex has the wrong number of vertices");
    std::vector<int> verts;
    for (long long v : vs) {
      if (v < 1 || v > n) throw in.error("vertex outside [1, n]");
      verts.push_back(static_cast<int>(v));
    }
    try {
      simplices.push_back(Simplex(verts));
    } catch (const std::exception& e) {
      throw in.error(e.what());
    }
  }
  try {
    return ChainF2(static_cast<int>(d), static_cast<int>(n), std::move(simplices));
  } catch (const std::exception& e) {
    throw in.error(e.what());
  }
}

TreeStructure parse_tree(LineReader& in) {
  ChainF2 faces = parse_chain(in);
  auto marker = in.peek();
  if (!marker || *marker != "history") {
    try {
      return TreeStructure(std::move(faces));
    } catch (const std::exception& e) {
      throw ParseError(std::string("not a hypertree: ") + e.what());
    }
  }
  in.next("history");
  if (in.next("base") != "base") throw in.error("expected 'base'");
  auto base = std::make_shared<const TreeStructure>(parse_tree(in));
  std::vector<ExtensionLayer> layers;
  for (;;) {
    const std::string line = in.next("'layer' or 'end'");
    if (line == "end") break;
    std::istringstream ls(line);
    std::string word;
    int k = 0, v = 0;
    if (!(ls >> word >> k >> v) || word != "layer" || v != k + 1) throw in.error("expected 'layer k k+1'");
    auto layer = std::make_shared<const TreeStructure>(parse_tree(in));
    if (layer->ambient() != k) throw in.error("layer ambient does not match its header");
    layers.push_back({v, std::move(layer)});
  }
  TreeStructure tree = [&] {
    try {
      return TreeStructure::from_history(std::move(base), std::move(layers));
    } catch (const std::exception& e) {
      throw ParseError(std::string("invalid history: ") + e.what());
    }
  }();
  if (!(tree.faces() == faces) || tree.ambient() != faces.ambient())
    throw ParseError("history does not replay to the listed faces");
  return tree;
}

}  // namespace

void write_chain(std::ostream& os, const ChainF2& c) {
  os << c.dimension() << ' ' << c.ambient() << '\n';
  for (Simplex s : c) {
    bool first = true;
    for (int v : s.vertices()) {
      if (!first) os << ' ';
      os << v;
      first = false;
    }
    os << '\n';
  }
}

std::string chain_to_text(const ChainF2& c) {
  std::ostringstream os;
  write_chain(os, c);
  return os.str();
}

ChainF2 read_chain(std::istream& is) {
  LineReader in{is, std::nullopt};
  ChainF2 c = parse_chain(in);
  if (in.peek()) throw in.error("trailing content after chain");
  return c;
}

ChainF2 chain_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_chain(is);
}

void write_tree(std::ostream& os, const TreeStructure& t) {
  write_chain(os, t.faces());
  if (!t.history()) return;
  os << "history\nbase\n";
  write_tree(os, *t.history()->base);
  for (const auto& layer : t.history()->layers) {
    os << "layer " << layer.vertex - 1 << ' ' << layer.vertex << '\n';
    write_tree(os, *layer.layer);
  }
  os << "end\n";
}

std::string tree_to_text(const TreeStructure& t) {
  std::ostringstream os;
  write_tree(os, t);
  return os.str();
}

TreeStructure read_tree(std::istream& is) {
  LineReader in{is, std::nullopt};
  TreeStructure t = parse_tree(in);
  if (in.peek()) throw in.error("trailing content after tree");
  return t;
}

TreeStructure tree_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_tree(is);
}

nlohmann::json chain_to_json(const ChainF2& c) {
  nlohmann::json simplices = nlohmann::json::array();
  for (Simplex s : c) simplices.push_back(s.vertices());
  return {{"d", c.dimension()}, {"n", c.ambient()}, {"simplices", simplices}};
}

ChainF2 chain_from_json(const nlohmann::json& j) {
  try {
    const int d = j.at("d").get<int>();
    const int n = j.at("n").get<int>();
    std::vector<Simplex> simplices;
    for (const auto& s : j.at("simplices")) {
      const auto verts = s.get<std::vector<int>>();
      for (int v : verts)
        if (v < 1 || v > n) throw ParseError("vertex outside [1, n]");
      simplices.push_back(Simplex(verts));
    }
    return ChainF2(d, n, std::move(simplices));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed chain JSON: ") + e.what());
  }
}

nlohmann::json mu_report_to_json(const MuReport& r) {
  nlohmann::json histogram = nlohmann::json::array();
  for (const auto& [size, count] : r.histogram) histogram.push_back({size, count});
  nlohmann::json j = {{"tree_id", r.tree_id},
                      {"mode", r.exact ? "exact" : "sampled"},
                      {"seed", r.seed},
                      {"n", r.n},
                      {"d", r.d},
                      {"total", r.total},
                      {"count", r.count},
                      {"sum", r.sum},
                      {"mean", r.mean},
                      {"histogram", histogram}};
  if (!r.exact) j["standard_error"] = r.standard_error();
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << contents;
}

}  // namespace hypertree::io
