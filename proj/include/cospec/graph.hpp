#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cospec {

using Vertex = std::size_t;

// Fixed-capacity bitset over vertex ids 0..size-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_subset_of(const VertexSet& other) const;

  // Smallest member, or size() when empty.
  Vertex first() const;
  // Smallest member greater than v, or size() when none.
  Vertex next(Vertex v) const;

  std::vector<Vertex> members() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  // Removes every member of other.
  VertexSet& subtract(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class GraphBuilder;

// Simple undirected graph on vertices 0..n-1, one adjacency bitset per row.
// Values are immutable once built; use GraphBuilder to construct one.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  std::size_t order() const { return rows_.size(); }
  std::size_t edge_count() const;
  std::size_t degree(Vertex v) const { return rows_.at(v).count(); }

  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).test(v); }

  // Open neighborhood N(v).
  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  // Closed neighborhood N[v].
  VertexSet closed_neighbors(Vertex v) const;

  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(Graph g) : graph_(std::move(g)) {}

  std::size_t order() const { return graph_.order(); }

  // Throws std::out_of_range on bad ids, std::invalid_argument on loops.
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);

  Graph build() && { return std::move(graph_); }
  const Graph& peek() const { return graph_; }

 private:
  void check(Vertex u, Vertex v) const;
  Graph graph_;
};

Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Vertex i of the result is s[i]. Throws std::out_of_range or
// std::invalid_argument for bad or repeated ids.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
// Graph with the listed vertices deleted; survivors keep their relative order.
Graph delete_vertices(const Graph& g, const VertexSet& removed);

// Components ordered by minimum vertex id; members ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
// Components of the subgraph induced on `within`.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

// Number of distinct adjacency rows that are not all zero.
std::size_t distinct_nonzero_rows(const Graph& g);
bool has_isolated_vertex(const Graph& g);

// Vertices split into a clique and an independent set
// (degree-sequence test of Hammer and Simeone).
bool is_split(const Graph& g);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6 interchange. A leading ">>graph6<<" header is accepted on input.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace cospec
