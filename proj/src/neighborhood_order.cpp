#include "cospec/neighborhood_order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cospec {

namespace {

template <typename Key>
std::vector<VertexClass> group_by(const Graph& g, Key key) {
  std::map<VertexSet, VertexClass> groups;
  for (Vertex v = 0; v < g.order(); ++v) groups[key(v)].push_back(v);
  std::vector<VertexClass> out;
  for (auto& [_, members] : groups)
    if (members.size() >= 2) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(), [](const VertexClass& a, const VertexClass& b) { return a.front() < b.front(); });
  return out;
}

std::size_t excess(const std::vector<VertexClass>& classes) {
  std::size_t s = 0;
  for (const auto& c : classes) s += c.size() - 1;
  return s;
}

}  // namespace

std::vector<VertexClass> duplication_classes(const Graph& g) {
  return group_by(g, [&](Vertex v) { return g.neighbors(v); });
}

std::vector<VertexClass> coduplication_classes(const Graph& g) {
  return group_by(g, [&](Vertex v) { return g.closed_neighbors(v); });
}

std::size_t ClassPartition::duplication_excess() const { return excess(duplication); }
std::size_t ClassPartition::coduplication_excess() const { return excess(coduplication); }

bool ClassPartition::kinds_intersect() const {
  for (const auto& c : duplication)
    for (const auto& d : coduplication)
      for (Vertex v : c)
        if (std::find(d.begin(), d.end(), v) != d.end()) return true;
  return false;
}

ClassPartition class_partition(const Graph& g) {
  return ClassPartition{duplication_classes(g), coduplication_classes(g)};
}

bool equivalent(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return true;
  if (g.adjacent(u, v)) return g.closed_neighbors(u) == g.closed_neighbors(v);
  return g.neighbors(u) == g.neighbors(v);
}

QuotientOrder equivalence_classes(const Graph& g) {
  const std::size_t n = g.order();
  QuotientOrder q;
  q.membership_.assign(n, n);
  q.index_of_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (q.membership_[v] != n) continue;
    VertexClass cls{v};
    q.membership_[v] = v;
    q.index_of_[v] = q.reps_.size();
    for (Vertex u = v + 1; u < n; ++u) {
      if (q.membership_[u] == n && equivalent(g, v, u)) {
        q.membership_[u] = v;
        q.index_of_[u] = q.reps_.size();
        cls.push_back(u);
      }
    }
    q.reps_.push_back(v);
    q.classes_.push_back(std::move(cls));
  }
  q.less_.assign(q.reps_.size() * q.reps_.size(), 0);
  return q;
}

QuotientOrder build_order(const Graph& g) {
  QuotientOrder q = equivalence_classes(g);
  const std::size_t k = q.reps_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const VertexSet& open = g.neighbors(q.reps_[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && open.is_subset_of(g.closed_neighbors(q.reps_[j]))) q.less_[i * k + j] = 1;
  }
  const auto fail = [&](const std::string& what) {
    throw std::logic_error("neighborhood order is not a strict partial order: " + what);
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (q.less(i, i)) fail("reflexive at " + std::to_string(q.reps_[i]));
    for (std::size_t j = 0; j < k; ++j) {
      if (!q.less(i, j)) continue;
      if (q.less(j, i)) fail("symmetric pair " + std::to_string(q.reps_[i]) + "," + std::to_string(q.reps_[j]));
      for (std::size_t l = 0; l < k; ++l)
        if (q.less(j, l) && !q.less(i, l))
          fail("not transitive through " + std::to_string(q.reps_[j]));
    }
  }
  return q;
}

namespace {

struct Matcher {
  const QuotientOrder& q;
  std::vector<std::size_t> match_right;  // predecessor chosen for each right copy
  std::vector<char> seen;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool augment(std::size_t u) {
    for (std::size_t v = 0; v < q.size(); ++v) {
      if (!q.less(u, v) || seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] == kNone || augment(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

ChainCover min_chain_cover(const QuotientOrder& q) {
  const std::size_t k = q.size();
  constexpr auto kNone = Matcher::kNone;
  Matcher m{q, std::vector<std::size_t>(k, kNone), {}};
  for (std::size_t u = 0; u < k; ++u) {
    m.seen.assign(k, 0);
    m.augment(u);
  }
  std::vector<std::size_t> succ(k, kNone);
  for (std::size_t v = 0; v < k; ++v)
    if (m.match_right[v] != kNone) succ[m.match_right[v]] = v;

  ChainCover cover;
  for (std::size_t v = 0; v < k; ++v) {
    if (m.match_right[v] != kNone) continue;
    std::vector<std::size_t> chain;
    for (std::size_t x = v; x != kNone; x = succ[x]) chain.push_back(x);
    cover.chains.push_back(std::move(chain));
  }

  // Konig: alternate from unmatched left copies; the antichain is every
  // element whose left copy is reached and whose right copy is not.
  std::vector<char> left(k, 0), right(k, 0);
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < k; ++u)
    if (succ[u] == kNone) {
      left[u] = 1;
      stack.push_back(u);
    }
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < k; ++v) {
      if (!q.less(u, v) || right[v]) continue;
      right[v] = 1;
      const std::size_t w = m.match_right[v];
      if (w != kNone && !left[w]) {
        left[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (std::size_t x = 0; x < k; ++x)
    if (left[x] && !right[x]) cover.antichain.push_back(x);
  if (cover.antichain.size() != cover.chains.size())
    throw std::logic_error("chain cover and antichain sizes differ");
  return cover;
}

bool is_threshold(const Graph& g) { return min_chain_cover(build_order(g)).count() <= 1; }

}  // namespace cospec
