#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chkit/orgraph.hpp"

namespace chkit {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   orgraph <n>
//   <u> <v>        one edge u->v per line, 0-based
//   # ...          comment, ignored anywhere after the header
// Blank lines are ignored. Writers emit edges sorted by (u, v) and end with a
// newline.
Orgraph parse_orgraph(std::string_view text);
Orgraph read_orgraph(std::istream& in);
Orgraph read_orgraph_file(const std::string& path);

std::string format_orgraph(const Orgraph& g);
void write_orgraph(std::ostream& out, const Orgraph& g);

}  // namespace chkit
