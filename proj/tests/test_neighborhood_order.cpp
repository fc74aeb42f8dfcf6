#include <doctest.h>

#include <random>

#include "cospec/cograph.hpp"
#include "cospec/isomorphism.hpp"
#include "cospec/neighborhood_order.hpp"
#include "oracles.hpp"

using namespace cospec;

namespace {

// K4 minus the edge 1-3.
Graph diamond() {
  GraphBuilder b(complete_graph(4));
  b.remove_edge(1, 3);
  return std::move(b).build();
}

Graph star3() { return join(Graph(1), Graph(3)); }

std::vector<VertexClass> classes(std::initializer_list<VertexClass> cs) { return cs; }

// Classes of u and v are comparable in the quotient order.
bool comparable_vertices(const QuotientOrder& q, Vertex u, Vertex v) {
  return q.comparable(q.class_index(u), q.class_index(v));
}

}  // namespace

TEST_CASE("duplication classes") {
  CHECK(duplication_classes(cycle_graph(4)) == classes({{0, 2}, {1, 3}}));
  CHECK(duplication_classes(complete_graph(3)).empty());
  CHECK(duplication_classes(Graph(3)) == classes({{0, 1, 2}}));
}

TEST_CASE("coduplication classes") {
  CHECK(coduplication_classes(complete_graph(3)) == classes({{0, 1, 2}}));
  CHECK(coduplication_classes(cycle_graph(4)).empty());
  CHECK(coduplication_classes(diamond()) == classes({{0, 2}}));
}

TEST_CASE("equivalence classes") {
  CHECK(equivalence_classes(diamond()).classes() == classes({{0, 2}, {1, 3}}));
  CHECK(equivalence_classes(path_graph(4)).classes() == classes({{0}, {1}, {2}, {3}}));
  const auto k5 = equivalence_classes(complete_graph(5));
  CHECK(k5.representatives() == std::vector<Vertex>{0});
  CHECK(k5.representative_of(4) == 0);
}

TEST_CASE("order on small graphs") {
  const auto star = build_order(star3());
  REQUIRE(star.representatives() == std::vector<Vertex>{0, 1});
  CHECK(star.less(1, 0));  // leaf class below the center
  CHECK_FALSE(star.less(0, 1));

  const auto c4 = build_order(cycle_graph(4));
  REQUIRE(c4.size() == 2);
  CHECK_FALSE(c4.comparable(0, 1));

  const auto k4 = build_order(complete_graph(4));
  CHECK(k4.size() == 1);
  CHECK_FALSE(k4.less(0, 0));
}

TEST_CASE("chain covers") {
  const auto star = min_chain_cover(build_order(star3()));
  CHECK(star.count() == 1);
  CHECK(star.antichain.size() == 1);

  const auto c4 = min_chain_cover(build_order(cycle_graph(4)));
  CHECK(c4.count() == 2);
  CHECK(c4.antichain.size() == 2);

  const auto single = min_chain_cover(build_order(complete_graph(3)));
  CHECK(single.count() == 1);

  CHECK(min_chain_cover(build_order(Graph(0))).count() == 0);
}

TEST_CASE("threshold detection") {
  CHECK(is_threshold(star3()));
  CHECK_FALSE(is_threshold(cycle_graph(4)));
  CHECK_FALSE(is_threshold(path_graph(4)));
  CHECK(is_threshold(complete_graph(5)));
  CHECK(is_threshold(Graph(4)));
}

TEST_CASE("threshold by total order agrees with cograph-and-split on all graphs up to 7 vertices") {
  for (std::size_t n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n))
      REQUIRE(is_threshold(g) == (!oracle::has_induced_p4(g) && oracle::is_split_brute(g)));
}

TEST_CASE("duplication and coduplication classes never intersect in cographs up to 10 vertices") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (const Graph& g : enumerate_cographs(n)) REQUIRE_FALSE(class_partition(g).kinds_intersect());
}

TEST_CASE("every induced subgraph of a cograph with two or more vertices has a class") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_cograph(4 + trial % 20, trial);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 3) keep.push_back(v);
    if (keep.size() < 2) continue;
    REQUIRE(class_partition(induced_subgraph(g, keep)).class_count() >= 1);
  }
}

TEST_CASE("nontrivial equivalence classes are exactly the duplication and coduplication classes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = trial % 2 ? oracle::random_graph(trial % 11, 0.5, rng) : random_cograph(1 + trial % 15, trial);
    const ClassPartition p = class_partition(g);
    std::vector<VertexClass> expected = p.duplication;
    expected.insert(expected.end(), p.coduplication.begin(), p.coduplication.end());
    std::sort(expected.begin(), expected.end());
    std::vector<VertexClass> nontrivial;
    const QuotientOrder q = equivalence_classes(g);
    for (const auto& c : q.classes())
      if (c.size() >= 2) nontrivial.push_back(c);
    std::sort(nontrivial.begin(), nontrivial.end());
    REQUIRE(nontrivial == expected);
  }
}

TEST_CASE("order axioms on random graphs and agreement with the two-case definition") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = trial % 3 ? oracle::random_graph(trial % 12, (trial % 7 + 1) / 8.0, rng)
                              : random_cograph(1 + trial % 18, trial);
    const QuotientOrder q = build_order(g);  // throws on an axiom violation
    const auto& reps = q.representatives();
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK_FALSE(q.less(i, i));
      for (std::size_t j = 0; j < reps.size(); ++j) {
        const Vertex u = reps[i], v = reps[j];
        if (i == j) continue;
        const bool two_case = g.adjacent(u, v) ? g.closed_neighbors(u).is_subset_of(g.closed_neighbors(v))
                                               : g.neighbors(u).is_subset_of(g.neighbors(v));
        REQUIRE(q.less(i, j) == two_case);
        if (q.less(i, j)) REQUIRE_FALSE(q.less(j, i));
        for (std::size_t k = 0; k < reps.size(); ++k)
          if (q.less(i, j) && q.less(j, k)) REQUIRE(q.less(i, k));
      }
    }
    // Class members behave like their representative.
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v) {
        if (equivalent(g, u, v)) continue;
        REQUIRE(comparable_vertices(q, u, v) ==
                (g.neighbors(u).is_subset_of(g.closed_neighbors(v)) ||
                 g.neighbors(v).is_subset_of(g.closed_neighbors(u))));
      }
  }
}

TEST_CASE("Dilworth certificate") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = trial % 2 ? oracle::random_graph(trial % 13, 0.5, rng) : random_cograph(1 + trial % 20, trial);
    const QuotientOrder q = build_order(g);
    const ChainCover c = min_chain_cover(q);
    REQUIRE(c.count() == c.antichain.size());
    std::vector<int> covered(q.size(), 0);
    for (const auto& chain : c.chains) {
      REQUIRE_FALSE(chain.empty());
      for (std::size_t i = 0; i < chain.size(); ++i) {
        ++covered[chain[i]];
        for (std::size_t j = i + 1; j < chain.size(); ++j) REQUIRE(q.less(chain[i], chain[j]));
      }
    }
    for (int x : covered) REQUIRE(x == 1);
    for (std::size_t i = 0; i < c.antichain.size(); ++i)
      for (std::size_t j = i + 1; j < c.antichain.size(); ++j)
        REQUIRE_FALSE(q.comparable(c.antichain[i], c.antichain[j]));
  }
}

TEST_CASE("Dilworth width matches a brute-force maximum antichain") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = trial % 2 ? oracle::random_graph(1 + trial % 10, 0.5, rng) : random_cograph(1 + trial % 12, trial);
    const QuotientOrder q = build_order(g);
    const std::size_t k = q.size();
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
      bool anti = true;
      for (std::size_t i = 0; i < k && anti; ++i)
        for (std::size_t j = i + 1; j < k && anti; ++j)
          if (((s >> i) & 1u) && ((s >> j) & 1u) && q.comparable(i, j)) anti = false;
      if (anti) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(s)));
    }
    REQUIRE(min_chain_cover(q).count() == best);
  }
}

TEST_CASE("removing part of a class keeps surviving pairs of the same kind") {
  // For every class C and every subset C' of C with 1 <= |C'| <= |C|-2, each
  // duplicate (coduplicate) pair of G - C' is such a pair in G.
  for (std::size_t n = 3; n <= 8; ++n) {
    for (const Graph& g : enumerate_cographs(n)) {
      const ClassPartition p = class_partition(g);
      const auto check_class = [&](const VertexClass& c, bool dup_kind) {
        if (c.size() < 3) return;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c.size()); ++mask) {
          const auto removed_count = static_cast<std::size_t>(std::popcount(mask));
          if (removed_count > c.size() - 2) continue;
          VertexSet removed(n);
          for (std::size_t i = 0; i < c.size(); ++i)
            if ((mask >> i) & 1u) removed.set(c[i]);
          std::vector<Vertex> keep;
          for (Vertex v = 0; v < n; ++v)
            if (!removed.test(v)) keep.push_back(v);
          const Graph h = induced_subgraph(g, keep);
          const auto in_h = dup_kind ? duplication_classes(h) : coduplication_classes(h);
          for (const auto& cls : in_h)
            for (std::size_t i = 0; i < cls.size(); ++i)
              for (std::size_t j = i + 1; j < cls.size(); ++j) {
                const Vertex u = keep[cls[i]], v = keep[cls[j]];
                if (dup_kind)
                  REQUIRE(g.neighbors(u) == g.neighbors(v));
                else
                  REQUIRE(g.closed_neighbors(u) == g.closed_neighbors(v));
              }
        }
      };
      for (const auto& c : p.duplication) check_class(c, true);
      for (const auto& c : p.coduplication) check_class(c, false);
    }
  }
}
