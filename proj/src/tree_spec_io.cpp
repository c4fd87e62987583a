#include "chkit/tree_spec_io.hpp"

#include <fstream>
#include <iterator>

#include <nlohmann/json.hpp>

namespace chkit {
namespace {

using nlohmann::json;

TreeSpec from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() != "leaf") throw TreeSpecError(path, "expected \"leaf\" or an object");
    return TreeSpec::leaf();
  }
  if (!j.is_object()) throw TreeSpecError(path, "expected \"leaf\" or an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "h" && key != "children") throw TreeSpecError(path, "unknown field '" + key + "'");
  }
  if (!j.contains("h") || !j["h"].is_number_integer()) throw TreeSpecError(path, "missing integer field 'h'");
  if (!j.contains("children") || !j["children"].is_array()) throw TreeSpecError(path, "missing array 'children'");
  const auto h = j["h"].get<long long>();
  if (h < 1) throw TreeSpecError(path, "h must be >= 1, got " + std::to_string(h));
  const auto& kids = j["children"];
  if (static_cast<long long>(kids.size()) != 3 * h + 1) {
    throw TreeSpecError(path, "h=" + std::to_string(h) + " requires " + std::to_string(3 * h + 1) +
                                  " children, got " + std::to_string(kids.size()));
  }
  std::vector<TreeSpec> children;
  children.reserve(kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    children.push_back(from_json(kids[i], path + ".children[" + std::to_string(i) + "]"));
  }
  return TreeSpec::node(static_cast<int>(h), std::move(children));
}

json to_json(const TreeSpec& t) {
  if (t.is_leaf()) return "leaf";
  json kids = json::array();
  for (const auto& c : t.children()) kids.push_back(to_json(c));
  return json{{"h", t.h()}, {"children", std::move(kids)}};
}

}  // namespace

TreeSpec parse_tree_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw TreeSpecError("root", std::string("malformed JSON: ") + e.what());
  }
  return from_json(j, "root");
}

TreeSpec read_tree_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_tree_spec(text);
}

std::string format_tree_spec(const TreeSpec& tree) { return to_json(tree).dump() + "\n"; }

}  // namespace chkit
