#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hypertree/chain.hpp"
#include "hypertree/hypertree.hpp"

namespace hypertree::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chain text format:
//   d n
//   v0 v1 ... vd        one simplex per line, colex order
// An empty chain is the header alone.
void write_chain(std::ostream& os, const ChainF2& c);
std::string chain_to_text(const ChainF2& c);
ChainF2 read_chain(std::istream& is);
ChainF2 chain_from_text(const std::string& text);

// Tree files are chain text, optionally followed by the construction history:
//   history
//   base
//   <tree>
//   layer k v           a (d-1)-tree on [k] coned at v = k + 1
//   <tree>
//   ...
//   end
// Nested trees use the same format, so histories nest.
void write_tree(std::ostream& os, const TreeStructure& t);
std::string tree_to_text(const TreeStructure& t);
TreeStructure read_tree(std::istream& is);
TreeStructure tree_from_text(const std::string& text);

nlohmann::json chain_to_json(const ChainF2& c);
ChainF2 chain_from_json(const nlohmann::json& j);
nlohmann::json mu_report_to_json(const MuReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace hypertree::io
