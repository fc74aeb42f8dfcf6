#include "cospec/cograph.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cospec {

std::size_t Cotree::leaf_count() const {
  if (op == CotreeOp::Leaf) return 1;
  std::size_t c = 0;
  for (const auto& ch : children) c += ch.leaf_count();
  return c;
}

std::optional<P4Witness> find_induced_p4(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    const VertexSet na = g.closed_neighbors(a);
    const VertexSet& nbrs_a = g.neighbors(a);
    for (Vertex b = nbrs_a.first(); b < n; b = nbrs_a.next(b)) {
      VertexSet cs = g.neighbors(b);
      cs.subtract(na);
      const VertexSet nab = na | g.neighbors(b);
      for (Vertex c = cs.first(); c < n; c = cs.next(c)) {
        VertexSet ds = g.neighbors(c);
        ds.subtract(nab);
        const Vertex d = ds.first();
        if (d < n) return P4Witness{{a, b, c, d}};
      }
    }
  }
  return std::nullopt;
}

bool is_cograph(const Graph& g) { return !find_induced_p4(g).has_value(); }

namespace {

struct Decomposer {
  const Graph& g;
  Graph co;

  // Empty optional signals a prime (P4-containing) subgraph.
  std::optional<Cotree> build(const VertexSet& s) {
    if (s.count() == 1) return Cotree::make_leaf(s.first());
    auto parts = connected_components(g, s);
    CotreeOp op = CotreeOp::Union;
    if (parts.size() == 1) {
      parts = connected_components(co, s);
      op = CotreeOp::Join;
      if (parts.size() == 1) return std::nullopt;
    }
    std::sort(parts.begin(), parts.end(), [](const VertexSet& x, const VertexSet& y) {
      const auto cx = x.count(), cy = y.count();
      return cx != cy ? cx < cy : x.first() < y.first();
    });
    std::vector<Cotree> children;
    children.reserve(parts.size());
    for (const auto& p : parts) {
      auto child = build(p);
      if (!child) return std::nullopt;
      children.push_back(std::move(*child));
    }
    return Cotree::make_node(op, std::move(children));
  }
};

}  // namespace

std::variant<Cotree, P4Witness> build_cotree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("build_cotree: the empty graph has no cotree");
  Decomposer d{g, complement(g)};
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all.set(v);
  if (auto t = d.build(all)) return std::move(*t);
  auto w = find_induced_p4(g);
  if (!w) throw std::logic_error("build_cotree: prime node without an induced P4");
  return *w;
}

namespace {

void collect_leaves(const Cotree& t, std::vector<Vertex>& out) {
  if (t.op == CotreeOp::Leaf) {
    out.push_back(t.leaf);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

void add_edges(const Cotree& t, GraphBuilder& b) {
  if (t.op == CotreeOp::Leaf) return;
  for (const auto& c : t.children) add_edges(c, b);
  if (t.op != CotreeOp::Join) return;
  std::vector<std::vector<Vertex>> leaves(t.children.size());
  for (std::size_t i = 0; i < t.children.size(); ++i) collect_leaves(t.children[i], leaves[i]);
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j)
      for (Vertex u : leaves[i])
        for (Vertex v : leaves[j]) b.add_edge(u, v);
}

void validate_node(const Cotree& t, CotreeOp parent) {
  if (t.op == CotreeOp::Leaf) return;
  if (t.children.size() < 2) throw std::invalid_argument("cotree: internal node with fewer than 2 children");
  if (t.op == parent) throw std::invalid_argument("cotree: operators do not alternate");
  for (const auto& c : t.children) validate_node(c, t.op);
}

}  // namespace

void validate_cotree(const Cotree& t) {
  validate_node(t, CotreeOp::Leaf);
  std::vector<Vertex> leaves;
  collect_leaves(t, leaves);
  std::sort(leaves.begin(), leaves.end());
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (leaves[i] != i) throw std::invalid_argument("cotree: leaf ids are not exactly 0..n-1");
}

Graph cotree_to_graph(const Cotree& t) {
  GraphBuilder b(t.leaf_count());
  add_edges(t, b);
  return std::move(b).build();
}

std::string to_string(const Cotree& t) {
  if (t.op == CotreeOp::Leaf) return std::to_string(t.leaf);
  std::string s(1, t.op == CotreeOp::Union ? 'U' : 'J');
  s += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ',';
    s += to_string(t.children[i]);
  }
  s += ')';
  return s;
}

namespace {

struct CotreeParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  void expect(char c) {
    skip_space();
    if (pos >= text.size() || text[pos] != c) throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  }

  Cotree node() {
    skip_space();
    if (pos >= text.size()) throw ParseError(pos, "unexpected end of cotree");
    const char c = text[pos];
    if (c == 'U' || c == 'J') {
      ++pos;
      expect('(');
      std::vector<Cotree> kids;
      kids.push_back(node());
      skip_space();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        kids.push_back(node());
        skip_space();
      }
      expect(')');
      return Cotree::make_node(c == 'U' ? CotreeOp::Union : CotreeOp::Join, std::move(kids));
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(pos, "expected 'U', 'J' or a leaf id");
    Vertex v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<Vertex>(text[pos] - '0');
      if (v > 1'000'000) throw ParseError(pos, "leaf id too large");
      ++pos;
    }
    return Cotree::make_leaf(v);
  }
};

}  // namespace

Cotree parse_cotree(std::string_view text) {
  CotreeParser p{text};
  Cotree t = p.node();
  p.skip_space();
  if (p.pos != text.size()) throw ParseError(p.pos, "trailing characters after cotree");
  validate_cotree(t);
  return t;
}

std::string canonical_encoding(const Cotree& t) {
  if (t.op == CotreeOp::Leaf) return "L";
  std::vector<std::string> parts;
  parts.reserve(t.children.size());
  for (const auto& c : t.children) parts.push_back(canonical_encoding(c));
  std::sort(parts.begin(), parts.end());
  std::string s(1, t.op == CotreeOp::Union ? 'U' : 'J');
  s += '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  s += ')';
  return s;
}

namespace {

// Unlabeled cotree shapes with the root operator left implicit: a shape of
// size m >= 2 is a multiset of at least two child shapes whose sizes sum to m.
// Each child is referenced as (size, index into shapes[size]).
struct ShapeTable {
  using ChildRef = std::pair<std::size_t, std::size_t>;
  std::vector<std::vector<std::vector<ChildRef>>> shapes;

  explicit ShapeTable(std::size_t n) : shapes(n + 1) {
    if (n >= 1) shapes[1].emplace_back();
    for (std::size_t m = 2; m <= n; ++m) {
      std::vector<ChildRef> current;
      extend(m, m, {1, 0}, current);
    }
  }

  // Appends children in non-decreasing (size, index) order.
  void extend(std::size_t m, std::size_t remaining, ChildRef min_ref, std::vector<ChildRef>& current) {
    if (remaining == 0) {
      if (current.size() >= 2) shapes[m].push_back(current);
      return;
    }
    for (std::size_t s = min_ref.first; s <= remaining && s < m; ++s) {
      const std::size_t first_index = (s == min_ref.first) ? min_ref.second : 0;
      for (std::size_t i = first_index; i < shapes[s].size(); ++i) {
        current.emplace_back(s, i);
        extend(m, remaining - s, {s, i}, current);
        current.pop_back();
      }
    }
  }

  Cotree materialize(std::size_t size, std::size_t index, CotreeOp op, Vertex& next_label) const {
    if (size == 1) return Cotree::make_leaf(next_label++);
    const CotreeOp child_op = op == CotreeOp::Union ? CotreeOp::Join : CotreeOp::Union;
    std::vector<Cotree> kids;
    for (auto [s, i] : shapes[size][index]) kids.push_back(materialize(s, i, child_op, next_label));
    return Cotree::make_node(op, std::move(kids));
  }
};

void check_cap(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::out_of_range("cograph enumeration needs n >= 1");
  if (n > cap)
    throw std::out_of_range("cograph enumeration n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

void for_each_cotree(std::size_t n, const std::function<void(const Cotree&)>& visit, std::size_t cap) {
  check_cap(n, cap);
  const ShapeTable table(n);
  if (n == 1) {
    visit(Cotree::make_leaf(0));
    return;
  }
  for (CotreeOp root : {CotreeOp::Union, CotreeOp::Join}) {
    for (std::size_t i = 0; i < table.shapes[n].size(); ++i) {
      Vertex label = 0;
      visit(table.materialize(n, i, root, label));
    }
  }
}

std::vector<Graph> enumerate_cographs(std::size_t n, std::size_t cap) {
  std::vector<Graph> out;
  for_each_cotree(n, [&](const Cotree& t) { out.push_back(cotree_to_graph(t)); }, cap);
  return out;
}

std::size_t count_cographs(std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  const ShapeTable table(n);
  return n == 1 ? 1 : 2 * table.shapes[n].size();
}

namespace {

// Unbiased draw from [lo, hi] on top of the standardized engine so the
// sequence does not depend on the standard library's distributions.
std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::size_t>(x % span);
}

Cotree random_node(std::size_t m, CotreeOp op, std::mt19937_64& rng) {
  if (m == 1) return Cotree::make_leaf(0);
  const std::size_t k = draw(rng, 2, std::min<std::size_t>(4, m));
  // k-1 distinct cut points from 1..m-1 give a uniform composition of m.
  std::vector<std::size_t> cuts(m - 1);
  std::iota(cuts.begin(), cuts.end(), std::size_t{1});
  for (std::size_t i = 0; i + 1 < k; ++i) std::swap(cuts[i], cuts[draw(rng, i, cuts.size() - 1)]);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  const CotreeOp child_op = op == CotreeOp::Union ? CotreeOp::Join : CotreeOp::Union;
  std::vector<Cotree> kids;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t end = i + 1 < k ? cuts[i] : m;
    kids.push_back(random_node(end - prev, child_op, rng));
    prev = end;
  }
  return Cotree::make_node(op, std::move(kids));
}

void relabel(Cotree& t, const std::vector<Vertex>& perm, std::size_t& counter) {
  if (t.op == CotreeOp::Leaf) {
    t.leaf = perm[counter++];
    return;
  }
  for (auto& c : t.children) relabel(c, perm, counter);
}

}  // namespace

Cotree random_cotree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_cotree needs n >= 1");
  std::mt19937_64 rng(seed);
  const CotreeOp root = draw(rng, 0, 1) == 0 ? CotreeOp::Union : CotreeOp::Join;
  Cotree t = random_node(n, root, rng);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[draw(rng, 0, i - 1)]);
  std::size_t counter = 0;
  relabel(t, perm, counter);
  return t;
}

Graph random_cograph(std::size_t n, std::uint64_t seed) { return cotree_to_graph(random_cotree(n, seed)); }

}  // namespace cospec
