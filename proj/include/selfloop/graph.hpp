#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace selfloop {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Dense symmetric 0/1 matrix of a self-loop graph: off-diagonal entries are
// proper edges, diagonal entries mark looped vertices.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  std::int64_t trace() const;
  bool is_symmetric() const;
  std::span<const int> data() const noexcept { return entries_; }

  friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<int> entries_;
};

// A simple undirected graph G on vertices 0..n-1 together with a loop set
// S ⊆ V(G). Loops never appear among the edges and never count toward the
// degree. Immutable once built.
class SelfLoopGraph {
 public:
  // Throws Error{InvalidOrder, IndexOutOfRange, SelfPairInEdgeList,
  // DuplicateEdge, DuplicateLoop}. Edge endpoints may be given in either
  // order; the stored edge list is canonical (u < v, sorted).
  static SelfLoopGraph build(std::size_t order, std::span<const Edge> edges,
                             std::span<const Vertex> loops);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::size_t sigma() const noexcept { return loops_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& loops() const noexcept { return loops_; }
  bool has_loop(Vertex v) const { return looped_[v] != 0; }

  // Sorted proper neighbours of v.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const SelfLoopGraph& a, const SelfLoopGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_ && a.loops_ == b.loops_;
  }

 private:
  SelfLoopGraph() = default;

  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> loops_;
  std::vector<char> looped_;
  std::vector<std::vector<Vertex>> adjacency_;
};

AdjacencyMatrix adjacency(const SelfLoopGraph& g);

// Reachability over proper edges; loops play no part.
bool is_connected(const SelfLoopGraph& g);

}  // namespace selfloop
