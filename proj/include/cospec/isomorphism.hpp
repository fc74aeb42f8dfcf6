#pragma once

#include <cstdint>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

inline constexpr std::size_t kCanonicalMaxOrder = 10;
inline constexpr std::size_t kAllGraphsCap = 7;

// Isomorphism-invariant code: the least upper-triangle bit string over all
// relabelings that list vertices by ascending degree. Only for small graphs
// (n <= kCanonicalMaxOrder); std::out_of_range otherwise.
std::uint64_t canonical_code(const Graph& g);
// The relabeling of g that realizes canonical_code.
Graph canonical_form(const Graph& g);

// One canonical representative per isomorphism class of graphs on n vertices,
// ordered by canonical code. n <= kAllGraphsCap.
std::vector<Graph> enumerate_graphs(std::size_t n);

}  // namespace cospec
