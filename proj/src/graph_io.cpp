#include "chkit/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace chkit {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

int parse_int(std::string_view field, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Orgraph parse_orgraph(std::string_view text) {
  std::optional<OrgraphBuilder> builder;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (!builder) {
      if (fields.size() != 2 || fields[0] != "orgraph") {
        throw ParseError(line_no, "expected header 'orgraph <n>'");
      }
      int n = parse_int(fields[1], line_no);
      try {
        builder.emplace(n);
      } catch (const GraphError& e) {
        throw ParseError(line_no, e.what());
      }
      continue;
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    try {
      builder->add_edge(parse_int(fields[0], line_no), parse_int(fields[1], line_no));
    } catch (const GraphError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!builder) throw ParseError(std::max(line_no, 1), "missing 'orgraph <n>' header");
  return builder->build();
}

Orgraph read_orgraph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_orgraph(text);
}

Orgraph read_orgraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_orgraph(in);
}

std::string format_orgraph(const Orgraph& g) {
  std::ostringstream out;
  write_orgraph(out, g);
  return out.str();
}

void write_orgraph(std::ostream& out, const Orgraph& g) {
  out << "orgraph " << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace chkit
