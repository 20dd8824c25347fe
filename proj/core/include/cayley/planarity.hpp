#pragma once

#include "cayley/graph.hpp"

namespace cayley {

/// Boyer-Myrvold planarity test (Boost.Graph), linear time.
bool is_planar(const Graph& g);

}  // namespace cayley
