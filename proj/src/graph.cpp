#include "selfloop/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "selfloop/error.hpp"

namespace selfloop {

std::int64_t AdjacencyMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool AdjacencyMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

SelfLoopGraph SelfLoopGraph::build(std::size_t order, std::span<const Edge> edges,
                                   std::span<const Vertex> loops) {
  if (order == 0) throw Error(ErrorCode::InvalidOrder, "graph order must be positive");

  SelfLoopGraph g;
  g.order_ = order;
  g.looped_.assign(order, 0);
  g.adjacency_.resize(order);

  auto check_index = [order](Vertex v) {
    if (v >= order)
      throw Error(ErrorCode::IndexOutOfRange,
                  "vertex " + std::to_string(v) + " not in 0.." + std::to_string(order - 1));
  };

  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_index(e.u);
    check_index(e.v);
    if (e.u == e.v)
      throw Error(ErrorCode::SelfPairInEdgeList,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} is a loop; list it as a loop instead");
    g.edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto it = std::adjacent_find(g.edges_.begin(), g.edges_.end()); it != g.edges_.end())
    throw Error(ErrorCode::DuplicateEdge,
                "edge {" + std::to_string(it->u) + "," + std::to_string(it->v) + "} listed twice");

  g.loops_.assign(loops.begin(), loops.end());
  for (Vertex v : g.loops_) check_index(v);
  std::sort(g.loops_.begin(), g.loops_.end());
  if (auto it = std::adjacent_find(g.loops_.begin(), g.loops_.end()); it != g.loops_.end())
    throw Error(ErrorCode::DuplicateLoop, "loop at vertex " + std::to_string(*it) + " listed twice");
  for (Vertex v : g.loops_) g.looped_[v] = 1;

  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool SelfLoopGraph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

AdjacencyMatrix adjacency(const SelfLoopGraph& g) {
  AdjacencyMatrix a(g.order());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  for (Vertex v : g.loops()) a(v, v) = 1;
  return a;
}

bool is_connected(const SelfLoopGraph& g) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  return reached == n;
}

}  // namespace selfloop
