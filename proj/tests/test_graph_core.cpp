#include <doctest.h>

#include <random>

#include "cospec/graph.hpp"
#include "oracles.hpp"

using namespace cospec;

namespace {

Graph p4() { return path_graph(4); }

}  // namespace

TEST_CASE("graph6 decodes the standard small examples") {
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6("C?") == empty_graph(4));
  CHECK(parse_graph6("Ch") == p4());
  CHECK(parse_graph6(">>graph6<<Ch") == p4());
  CHECK(parse_graph6("?") == Graph(0));
}

TEST_CASE("graph6 path encoding matches hand-packed bits") {
  // (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) -> 1 0 1 0 0 1
  const int bits[6] = {1, 0, 1, 0, 0, 1};
  int value = 0;
  for (int b : bits) value = value * 2 + b;
  CHECK(value == 41);
  const std::string expected{static_cast<char>(4 + 63), static_cast<char>(value + 63)};
  CHECK(expected == "Ch");
  CHECK(write_graph6(p4()) == expected);
  CHECK(write_graph6(complete_graph(4)) == "C~");
  CHECK(write_graph6(empty_graph(4)) == "C?");
}

TEST_CASE("graph6 rejects malformed input with an offset") {
  auto offset_of = [](std::string_view s) -> std::size_t {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("C") == 1);       // missing edge byte
  CHECK(offset_of("Ch?") == 2);     // trailing garbage
  CHECK(offset_of("C\x20") == 1);   // below 63
  CHECK(offset_of("\x7f") == 0);    // above 126
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // n=3 carries 3 bits; 'x' sets padding
  CHECK_THROWS_AS(parse_graph6("~~??????"), ParseError);  // 8-byte size form
}

TEST_CASE("graph6 long size form round trips") {
  std::mt19937_64 rng(11);
  const Graph g = oracle::random_graph(70, 0.3, rng);
  const std::string s = write_graph6(g);
  CHECK(static_cast<unsigned char>(s[0]) == 126);
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("graph6 round trip on random graphs up to 62 vertices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = trial % 63;
    const Graph g = oracle::random_graph(n, (trial % 9 + 1) / 10.0, rng);
    REQUIRE(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)) == empty_graph(4));
  // C4 a-b-c-d -> two disjoint edges a-c, b-d
  const std::pair<Vertex, Vertex> diag[] = {{0, 2}, {1, 3}};
  CHECK(complement(cycle_graph(4)) == graph_from_edges(4, diag));
}

TEST_CASE("disjoint union and join") {
  CHECK(disjoint_union(Graph(1), Graph(1)) == empty_graph(2));
  const Graph two_k2 = disjoint_union(complete_graph(2), complete_graph(2));
  CHECK(two_k2.order() == 4);
  CHECK(two_k2.edge_count() == 2);
  const Graph p3k1 = disjoint_union(path_graph(3), Graph(1));
  CHECK(p3k1.edge_count() == 2);
  CHECK(p3k1.degree(3) == 0);

  CHECK(join(Graph(1), Graph(1)) == complete_graph(2));
  const Graph star = join(Graph(1), Graph(3));
  CHECK(star.degree(0) == 3);
  CHECK(star.edge_count() == 3);
  CHECK(join(complete_graph(2), complete_graph(2)) == complete_graph(4));
}

TEST_CASE("complement, union and join identities on random graphs") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(trial % 9, 0.4, rng);
    const Graph h = oracle::random_graph(trial % 7, 0.6, rng);
    REQUIRE(complement(complement(g)) == g);
    REQUIRE(complement(disjoint_union(g, h)) == join(complement(g), complement(h)));
    std::vector<Vertex> all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    REQUIRE(induced_subgraph(g, all) == g);
  }
}

TEST_CASE("induced subgraph") {
  const Vertex tri[] = {0, 1, 2};
  CHECK(induced_subgraph(complete_graph(4), tri) == complete_graph(3));
  const Vertex four[] = {0, 1, 2, 3};
  CHECK(induced_subgraph(cycle_graph(5), four) == p4());
  CHECK(induced_subgraph(complete_graph(4), std::span<const Vertex>{}) == Graph(0));
  const Vertex bad[] = {0, 7};
  CHECK_THROWS_AS(induced_subgraph(complete_graph(4), bad), std::out_of_range);
  const Vertex dup[] = {1, 1};
  CHECK_THROWS_AS(induced_subgraph(complete_graph(4), dup), std::invalid_argument);
  // vertex i of the result is s[i]
  const Vertex perm[] = {3, 0, 1};
  const Graph sub = induced_subgraph(p4(), perm);
  CHECK(sub.adjacent(1, 2));
  CHECK_FALSE(sub.adjacent(0, 1));
}

TEST_CASE("connected components in order of minimum id") {
  const auto two = connected_components(disjoint_union(complete_graph(2), complete_graph(2)));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::vector<Vertex>{0, 1});
  CHECK(two[1] == std::vector<Vertex>{2, 3});
  CHECK(connected_components(complete_graph(4)).size() == 1);
  const auto p3k1 = connected_components(disjoint_union(path_graph(3), Graph(1)));
  REQUIRE(p3k1.size() == 2);
  CHECK(p3k1[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(p3k1[1] == std::vector<Vertex>{3});
  CHECK(connected_components(Graph(0)).empty());
}

TEST_CASE("builder rejects loops and bad ids") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(b.add_edge(0, 3), std::out_of_range);
}

TEST_CASE("vertex sets across word boundaries") {
  VertexSet s(130);
  s.set(0);
  s.set(63);
  s.set(64);
  s.set(129);
  CHECK(s.count() == 4);
  CHECK(s.members() == std::vector<Vertex>{0, 63, 64, 129});
  CHECK(s.next(64) == 129);
  CHECK(s.next(129) == 130);
  VertexSet t = s;
  t.reset(63);
  CHECK(t.is_subset_of(s));
  CHECK_FALSE(s.is_subset_of(t));
}

TEST_CASE("split test agrees with subset search") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(trial % 9, (trial % 5 + 1) / 6.0, rng);
    REQUIRE(is_split(g) == oracle::is_split_brute(g));
  }
  CHECK(is_split(join(Graph(1), Graph(3))));
  CHECK_FALSE(is_split(cycle_graph(4)));
}

TEST_CASE("row statistics") {
  CHECK(distinct_nonzero_rows(cycle_graph(4)) == 2);
  CHECK(distinct_nonzero_rows(Graph(3)) == 0);
  CHECK(has_isolated_vertex(disjoint_union(complete_graph(2), Graph(1))));
  CHECK_FALSE(has_isolated_vertex(complete_graph(2)));
}
