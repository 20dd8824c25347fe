#include "cayley/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cayley/error.hpp"

namespace cayley {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

GraphFile parse_graph(std::istream& in) {
  std::optional<int> count;
  std::optional<Edge> base;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;

  auto require_vertex = [&](int v, int line) {
    if (!count) throw ParseError(line, "'n' must precede edges");
    if (v >= *count) {
      throw ParseError(line, "vertex " + std::to_string(v) + " out of range (n=" +
                                 std::to_string(*count) + ")");
    }
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = split_tokens(line);
    if (tok.empty()) continue;

    if (tok[0] == "n") {
      if (tok.size() != 2) throw ParseError(line_no, "'n' takes exactly one count");
      if (count) throw ParseError(line_no, "duplicate 'n' line");
      count = parse_int(tok[1], line_no);
    } else if (tok[0] == "e" || tok[0] == "base") {
      if (tok.size() != 3) {
        throw ParseError(line_no, "'" + std::string(tok[0]) + "' takes exactly two vertex ids");
      }
      int a = parse_int(tok[1], line_no);
      int b = parse_int(tok[2], line_no);
      require_vertex(a, line_no);
      require_vertex(b, line_no);
      if (a == b) throw ParseError(line_no, "self-loop at " + std::to_string(a));
      if (tok[0] == "e") {
        edges.emplace_back(a, b);
        edge_lines.push_back(line_no);
      } else {
        if (base) throw ParseError(line_no, "duplicate 'base' line");
        base = Edge(a, b);
      }
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tok[0]) + "'");
    }
  }
  if (!count) throw ParseError(line_no, "missing 'n' line");

  std::vector<std::pair<Edge, int>> seen;
  seen.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) seen.emplace_back(edges[i], edge_lines[i]);
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw ParseError(seen[i].second, "duplicate edge " + to_string(seen[i].first));
    }
  }
  return GraphFile{Graph(*count, edges), base};
}

GraphFile parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

GraphFile read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::optional<Edge>& base) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.w << '\n';
  if (base) out << "base " << base->u << ' ' << base->w << '\n';
}

std::string format_graph(const Graph& g, const std::optional<Edge>& base) {
  std::ostringstream out;
  write_graph(out, g, base);
  return out.str();
}

}  // namespace cayley
