#pragma once

#include <string>
#include <string_view>

#include "chkit/extremal.hpp"

namespace chkit {

// JSON document. A node is the string "leaf" or {"h": <int >= 1>, "children": [...]}
// with exactly 3h+1 children. Errors are TreeSpecError naming the node path.
TreeSpec parse_tree_spec(std::string_view text);
TreeSpec read_tree_spec_file(const std::string& path);
std::string format_tree_spec(const TreeSpec& tree);

}  // namespace chkit
