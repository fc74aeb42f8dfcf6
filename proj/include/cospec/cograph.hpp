#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

enum class CotreeOp { Leaf, Union, Join };

// Rooted union/join tree. Internal nodes have at least two children and
// alternate operators; leaves carry distinct vertex ids.
struct Cotree {
  CotreeOp op = CotreeOp::Leaf;
  Vertex leaf = 0;
  std::vector<Cotree> children;

  static Cotree make_leaf(Vertex v) { return Cotree{CotreeOp::Leaf, v, {}}; }
  static Cotree make_node(CotreeOp op, std::vector<Cotree> children) {
    return Cotree{op, 0, std::move(children)};
  }

  std::size_t leaf_count() const;
  bool operator==(const Cotree&) const = default;
};

// Induced path a-b-c-d.
struct P4Witness {
  std::array<Vertex, 4> path{};
  bool operator==(const P4Witness&) const = default;
};

// Lexicographically least ordered quadruple inducing a P4, if any.
std::optional<P4Witness> find_induced_p4(const Graph& g);
bool is_cograph(const Graph& g);

// Children of each node are ordered by (leaf count, minimum leaf id).
// Throws std::invalid_argument for the empty graph.
std::variant<Cotree, P4Witness> build_cotree(const Graph& g);

Graph cotree_to_graph(const Cotree& t);

// Throws std::invalid_argument naming the violated invariant.
void validate_cotree(const Cotree& t);

// `J(0,U(1,2))` text form, and its inverse. Parsing validates the result.
std::string to_string(const Cotree& t);
Cotree parse_cotree(std::string_view text);

// Operator tags plus sorted child encodings, leaf labels stripped.
// Two cotrees encode equally iff their cographs are isomorphic.
std::string canonical_encoding(const Cotree& t);

inline constexpr std::size_t kDefaultEnumerationCap = 12;

// One cotree per isomorphism class of cographs on n vertices, leaves labeled
// 0..n-1 in depth-first order. Deterministic. Throws std::out_of_range when
// n is 0 or exceeds cap.
void for_each_cotree(std::size_t n, const std::function<void(const Cotree&)>& visit,
                     std::size_t cap = kDefaultEnumerationCap);
std::vector<Graph> enumerate_cographs(std::size_t n, std::size_t cap = kDefaultEnumerationCap);
std::size_t count_cographs(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

// Deterministic in (n, seed); always a cograph. Vertex labels are shuffled.
Cotree random_cotree(std::size_t n, std::uint64_t seed);
Graph random_cograph(std::size_t n, std::uint64_t seed);

}  // namespace cospec
