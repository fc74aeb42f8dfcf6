#include "cospec/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace cospec {

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

Vertex VertexSet::next(Vertex v) const {
  Vertex start = v + 1;
  if (start >= size_) return size_;
  std::size_t i = start >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++i == words_.size()) return size_;
    w = words_[i];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Vertex v = first(); v < size_; v = next(v)) out.push_back(v);
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = rows_.at(v);
  s.set(v);
  return s;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = rows_[u].next(u); v < order(); v = rows_[u].next(v)) out.emplace_back(u, v);
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : graph_(n) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) throw std::out_of_range("vertex id out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  graph_.rows_[u].set(v);
  graph_.rows_[v].set(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  graph_.rows_[u].reset(v);
  graph_.rows_[v].reset(u);
  return *this;
}

Graph graph_from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  return join(Graph(a), Graph(b));
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
  const std::size_t gn = g.order();
  GraphBuilder b(gn + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + gn, v + gn);
  if (cross)
    for (Vertex u = 0; u < gn; ++u)
      for (Vertex v = 0; v < h.order(); ++v) b.add_edge(u, v + gn);
  return std::move(b).build();
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet seen(g.order());
  for (Vertex v : s) {
    if (v >= g.order()) throw std::out_of_range("induced_subgraph: vertex id out of range");
    if (seen.test(v)) throw std::invalid_argument("induced_subgraph: repeated vertex id");
    seen.set(v);
  }
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) b.add_edge(i, j);
  return std::move(b).build();
}

Graph delete_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!removed.test(v)) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unvisited = within;
  while (!unvisited.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.set(unvisited.first());
    while (!frontier.empty()) {
      comp |= frontier;
      unvisited.subtract(frontier);
      VertexSet grown(g.order());
      for (Vertex v = frontier.first(); v < g.order(); v = frontier.next(v)) grown |= g.neighbors(v);
      grown &= unvisited;
      frontier = std::move(grown);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all.set(v);
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : connected_components(g, all)) out.push_back(c.members());
  return out;
}

std::size_t distinct_nonzero_rows(const Graph& g) {
  std::map<VertexSet, int> rows;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.neighbors(v).empty()) rows.emplace(g.neighbors(v), 0);
  return rows.size();
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool is_split(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end(), std::greater<>());
  std::size_t m = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] >= i) m = i + 1;
  std::size_t head = 0, tail = 0;
  for (std::size_t i = 0; i < d.size(); ++i) (i < m ? head : tail) += d[i];
  return head == (m == 0 ? 0 : m * (m - 1)) + tail;
}

}  // namespace cospec
