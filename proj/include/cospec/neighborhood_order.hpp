#pragma once

#include <cstddef>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

using VertexClass = std::vector<Vertex>;

// Maximal sets of at least two vertices sharing an open neighborhood, ordered
// by minimum member; members ascending.
std::vector<VertexClass> duplication_classes(const Graph& g);
// Same for closed neighborhoods.
std::vector<VertexClass> coduplication_classes(const Graph& g);

struct ClassPartition {
  std::vector<VertexClass> duplication;
  std::vector<VertexClass> coduplication;

  std::size_t class_count() const { return duplication.size() + coduplication.size(); }
  // Sum of (|C| - 1) over duplication classes.
  std::size_t duplication_excess() const;
  std::size_t coduplication_excess() const;
  // True when some vertex lies in both a duplication and a coduplication class.
  bool kinds_intersect() const;
};

ClassPartition class_partition(const Graph& g);

// N(u) = N(v) for non-adjacent u, v or N[u] = N[v] for adjacent u, v.
bool equivalent(const Graph& g, Vertex u, Vertex v);

// The quotient of V(G) by the equivalence above, with u < v iff u and v are
// inequivalent and N(u) is contained in N[v]. Representatives are the minimum
// vertex of each class, listed ascending; `less` is indexed by position.
class QuotientOrder {
 public:
  const std::vector<Vertex>& representatives() const { return reps_; }
  std::size_t size() const { return reps_.size(); }

  // Representative of v's class.
  Vertex representative_of(Vertex v) const { return membership_.at(v); }
  // Position of v's class in representatives().
  std::size_t class_index(Vertex v) const { return index_of_.at(v); }
  const std::vector<VertexClass>& classes() const { return classes_; }

  bool less(std::size_t i, std::size_t j) const { return less_[i * reps_.size() + j] != 0; }
  bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }

 private:
  friend QuotientOrder equivalence_classes(const Graph& g);
  friend QuotientOrder build_order(const Graph& g);

  std::vector<Vertex> reps_;
  std::vector<Vertex> membership_;
  std::vector<std::size_t> index_of_;
  std::vector<VertexClass> classes_;
  std::vector<char> less_;
};

// Classes only; the order relation is left empty.
QuotientOrder equivalence_classes(const Graph& g);

// Throws std::logic_error if the relation fails to be a strict partial order.
QuotientOrder build_order(const Graph& g);

struct ChainCover {
  // Each chain lists positions into representatives() in increasing order.
  std::vector<std::vector<std::size_t>> chains;
  // Pairwise incomparable positions, as many as there are chains.
  std::vector<std::size_t> antichain;

  std::size_t count() const { return chains.size(); }
};

// Minimum chain partition of the quotient via bipartite matching, with a
// maximum antichain certificate recovered from the Konig cover.
ChainCover min_chain_cover(const QuotientOrder& q);

bool is_threshold(const Graph& g);

}  // namespace cospec
