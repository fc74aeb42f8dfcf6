#include "cospec/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cospec {

namespace {

std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& order) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < order.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
  return code;
}

struct Search {
  const Graph& g;
  std::vector<Vertex> order;
  std::vector<std::size_t> cell_start;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<Vertex> best_order;

  void run(std::size_t cell) {
    if (cell + 1 == cell_start.size()) {
      const std::uint64_t c = code_of(g, order);
      if (c < best) {
        best = c;
        best_order = order;
      }
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(cell_start[cell]);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(cell_start[cell + 1]);
    std::sort(first, last);
    do {
      run(cell + 1);
    } while (std::next_permutation(first, last));
  }
};

Search canonical_search(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalMaxOrder) throw std::out_of_range("canonical form limited to small graphs");
  Search s{g, std::vector<Vertex>(n), {}, ~std::uint64_t{0}, {}};
  std::iota(s.order.begin(), s.order.end(), Vertex{0});
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  for (std::size_t i = 0; i < n; ++i)
    if (i == 0 || g.degree(s.order[i]) != g.degree(s.order[i - 1])) s.cell_start.push_back(i);
  s.cell_start.push_back(n);
  s.run(0);
  return s;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) { return canonical_search(g).best; }

Graph canonical_form(const Graph& g) {
  const Search s = canonical_search(g);
  return induced_subgraph(g, s.best_order);
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > kAllGraphsCap) throw std::out_of_range("all-graph enumeration limited to n <= " + std::to_string(kAllGraphsCap));
  if (n == 0) return {Graph(0)};
  std::vector<Graph> level{Graph(1)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> next;
    for (const Graph& base : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        GraphBuilder b(m);
        for (auto [u, v] : base.edges()) b.add_edge(u, v);
        for (Vertex u = 0; u + 1 < m; ++u)
          if ((mask >> u) & 1u) b.add_edge(u, m - 1);
        const Search s = canonical_search(b.peek());
        if (seen.insert(s.best).second) next.emplace_back(s.best, induced_subgraph(b.peek(), s.best_order));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    level.clear();
    for (auto& [_, gr] : next) level.push_back(std::move(gr));
  }
  return level;
}

}  // namespace cospec
