#include <doctest.h>

#include <random>
#include <set>

#include "cospec/cograph.hpp"
#include "cospec/isomorphism.hpp"
#include "cospec/neighborhood_order.hpp"
#include "oracles.hpp"

using namespace cospec;

TEST_CASE("induced P4 search") {
  const auto w = find_induced_p4(path_graph(4));
  REQUIRE(w);
  CHECK(w->path == std::array<Vertex, 4>{0, 1, 2, 3});
  CHECK_FALSE(find_induced_p4(complete_graph(4)));
  const auto c5 = find_induced_p4(cycle_graph(5));
  REQUIRE(c5);
  CHECK(c5->path == std::array<Vertex, 4>{0, 1, 2, 3});
  CHECK_FALSE(find_induced_p4(Graph(0)));
}

TEST_CASE("P4 witnesses induce a path and agree with the 4-subset oracle") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = oracle::random_graph(trial % 10, 0.5, rng);
    const auto w = find_induced_p4(g);
    REQUIRE(w.has_value() == oracle::has_induced_p4(g));
    if (!w) continue;
    const auto [a, b, c, d] = w->path;
    CHECK((g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d)));
    CHECK_FALSE((g.adjacent(a, c) || g.adjacent(a, d) || g.adjacent(b, d)));
  }
}

TEST_CASE("P4 witness is the lexicographically least ordered quadruple") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    std::optional<std::array<Vertex, 4>> least;
    for (Vertex a = 0; a < 7 && !least; ++a)
      for (Vertex b = 0; b < 7 && !least; ++b)
        for (Vertex c = 0; c < 7 && !least; ++c)
          for (Vertex d = 0; d < 7 && !least; ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
                !g.adjacent(a, d) && !g.adjacent(b, d))
              least = std::array<Vertex, 4>{a, b, c, d};
          }
    const auto w = find_induced_p4(g);
    REQUIRE(w.has_value() == least.has_value());
    if (w) CHECK(w->path == *least);
  }
}

TEST_CASE("cotree construction") {
  const auto k3 = build_cotree(complete_graph(3));
  REQUIRE(std::holds_alternative<Cotree>(k3));
  CHECK(to_string(std::get<Cotree>(k3)) == "J(0,1,2)");

  const auto two = build_cotree(Graph(2));
  REQUIRE(std::holds_alternative<Cotree>(two));
  CHECK(to_string(std::get<Cotree>(two)) == "U(0,1)");

  const auto p4 = build_cotree(path_graph(4));
  REQUIRE(std::holds_alternative<P4Witness>(p4));
  CHECK(std::get<P4Witness>(p4).path == std::array<Vertex, 4>{0, 1, 2, 3});

  const auto p3 = build_cotree(path_graph(3));
  CHECK(to_string(std::get<Cotree>(p3)) == "J(1,U(0,2))");

  const auto k1 = build_cotree(Graph(1));
  CHECK(to_string(std::get<Cotree>(k1)) == "0");

  CHECK_THROWS_AS(build_cotree(Graph(0)), std::invalid_argument);
}

TEST_CASE("cotree evaluation") {
  const Cotree t = parse_cotree("J(0,U(1,2))");
  const Graph g = cotree_to_graph(t);
  CHECK(g.order() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(cotree_to_graph(parse_cotree("U(0,1,2,3)")) == empty_graph(4));
  CHECK(cotree_to_graph(parse_cotree("J(0,1,2,3,4)")) == complete_graph(5));
}

TEST_CASE("cotree text form") {
  CHECK(to_string(parse_cotree(" J( 0 , U(1,2) ) ")) == "J(0,U(1,2))");
  CHECK_THROWS_AS(parse_cotree("J(0)"), std::invalid_argument);            // one child
  CHECK_THROWS_AS(parse_cotree("J(0,J(1,2))"), std::invalid_argument);     // no alternation
  CHECK_THROWS_AS(parse_cotree("U(0,2)"), std::invalid_argument);          // labels not 0..n-1
  CHECK_THROWS_AS(parse_cotree("U(0,0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cotree("U(0,1"), ParseError);
  CHECK_THROWS_AS(parse_cotree("U(0,1)x"), ParseError);
  CHECK_THROWS_AS(parse_cotree("X(0,1)"), ParseError);
}

TEST_CASE("recognition consistency and round trip on every graph up to 7 vertices") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const auto t = build_cotree(g);
      const bool tree = std::holds_alternative<Cotree>(t);
      REQUIRE(tree == !find_induced_p4(g).has_value());
      if (!tree) continue;
      const Cotree& c = std::get<Cotree>(t);
      CHECK_NOTHROW(validate_cotree(c));
      CHECK(cotree_to_graph(c) == g);
      CHECK(parse_cotree(to_string(c)) == c);
    }
  }
}

TEST_CASE("round trip on every labeled cograph of the enumeration up to 8 vertices, relabeled") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_cographs(n)) {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), Vertex{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      const Graph h = induced_subgraph(g, perm);
      const auto t = build_cotree(h);
      REQUIRE(std::holds_alternative<Cotree>(t));
      CHECK(cotree_to_graph(std::get<Cotree>(t)) == h);
    }
  }
}

TEST_CASE("recognition consistency on random graphs beyond the exhaustive range") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(8 + trial % 12, trial % 2 ? 0.2 : 0.8, rng);
    const auto t = build_cotree(g);
    REQUIRE(std::holds_alternative<Cotree>(t) == !find_induced_p4(g).has_value());
    if (const auto* c = std::get_if<Cotree>(&t)) CHECK(cotree_to_graph(*c) == g);
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_cographs(1).size() == 1);
  const auto two = enumerate_cographs(2);
  REQUIRE(two.size() == 2);
  CHECK(std::set<std::string>{write_graph6(two[0]), write_graph6(two[1])} ==
        std::set<std::string>{write_graph6(complete_graph(2)), write_graph6(Graph(2))});
  CHECK(enumerate_cographs(4).size() == 10);
  CHECK_THROWS_AS(enumerate_cographs(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_cographs(13), std::out_of_range);
  CHECK_THROWS_AS(enumerate_cographs(5, 4), std::out_of_range);
}

TEST_CASE("enumeration matches the brute-force isomorphism-class oracle for n = 1..6") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto graphs = enumerate_cographs(n);
    std::set<std::uint64_t> codes;
    for (const Graph& g : graphs) {
      REQUIRE_FALSE(oracle::has_induced_p4(g));
      codes.insert(oracle::brute_canonical_code(g));
    }
    CHECK(codes.size() == graphs.size());
    CHECK(graphs.size() == oracle::cograph_class_count(n));
    CHECK(count_cographs(n) == graphs.size());
  }
}

TEST_CASE("canonical encodings are pairwise distinct and label independent") {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<std::string> encodings;
    std::size_t count = 0;
    for_each_cotree(n, [&](const Cotree& t) {
      validate_cotree(t);
      encodings.insert(canonical_encoding(t));
      ++count;
    });
    CHECK(encodings.size() == count);
  }
  // Same cograph under a relabeling keeps its encoding.
  const Graph g = cotree_to_graph(parse_cotree("U(J(0,1,U(2,3)),4,J(5,6))"));
  const Vertex perm[] = {6, 2, 4, 0, 5, 1, 3};
  const Graph h = induced_subgraph(g, perm);
  CHECK(canonical_encoding(std::get<Cotree>(build_cotree(g))) ==
        canonical_encoding(std::get<Cotree>(build_cotree(h))));
}

TEST_CASE("enumeration is deterministic") {
  std::vector<std::string> a, b;
  for (const auto& g : enumerate_cographs(7)) a.push_back(write_graph6(g));
  for (const auto& g : enumerate_cographs(7)) b.push_back(write_graph6(g));
  CHECK(a == b);
}

TEST_CASE("every enumerated cograph with two or more vertices has a duplicate or coduplicate pair") {
  for (std::size_t n = 2; n <= 9; ++n)
    for (const Graph& g : enumerate_cographs(n)) REQUIRE(class_partition(g).class_count() >= 1);
}

TEST_CASE("random cographs") {
  CHECK(random_cograph(1, 99) == Graph(1));
  CHECK_FALSE(find_induced_p4(random_cograph(20, 7)));
  CHECK(write_graph6(random_cograph(20, 7)) == write_graph6(random_cograph(20, 7)));
  std::set<std::string> distinct;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Cotree t = random_cotree(1 + seed % 40, seed);
    REQUIRE_NOTHROW(validate_cotree(t));
    const Graph g = cotree_to_graph(t);
    REQUIRE_FALSE(oracle::has_induced_p4(g));
    distinct.insert(write_graph6(g));
  }
  CHECK(distinct.size() > 150);
}
