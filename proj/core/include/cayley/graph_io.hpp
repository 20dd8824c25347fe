#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "cayley/graph.hpp"

namespace cayley {

/// Line-based text format:
///
///   # comment
///   n <count>
///   e <u> <w>
///   base <u> <w>      (optional, at most once)
///
/// Ids are taken verbatim and must be < count.
struct GraphFile {
  Graph graph;
  std::optional<Edge> base;
};

GraphFile parse_graph(std::istream& in);
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::filesystem::path& path);

/// Canonical form: `n`, then edges in sorted order, then `base` if given.
void write_graph(std::ostream& out, const Graph& g,
                 const std::optional<Edge>& base = std::nullopt);
std::string format_graph(const Graph& g,
                         const std::optional<Edge>& base = std::nullopt);

}  // namespace cayley
