#include "selfloop/census.hpp"

#include <algorithm>
#include <iterator>

#include "selfloop/checked.hpp"

namespace selfloop {

namespace {

std::vector<Vertex> intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::int64_t choose2(std::int64_t x) { return checked_mul(x, x - 1) / 2; }

}  // namespace

std::int64_t first_zagreb(const SelfLoopGraph& g) {
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto d = static_cast<std::int64_t>(g.degree(v));
    total = checked_add(total, checked_mul(d, d));
  }
  return total;
}

std::int64_t degree_sum_over_loops(const SelfLoopGraph& g) {
  std::int64_t total = 0;
  for (Vertex v : g.loops()) total = checked_add(total, static_cast<std::int64_t>(g.degree(v)));
  return total;
}

LoopBoundary loop_boundary(const SelfLoopGraph& g) {
  const std::size_t n = g.order();
  LoopBoundary b;
  b.n1.assign(n, 0);
  b.n2.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) {
      if (g.has_loop(v)) {
        if (g.has_loop(w))
          ++b.n2[v];
        else
          ++b.n1[v];
      } else if (g.has_loop(w)) {
        ++b.n1[v];
      }
    }
  }
  for (Vertex v : g.loops()) b.n1_sum_S += b.n1[v];
  return b;
}

TriangleCensus triangle_census(const SelfLoopGraph& g) {
  TriangleCensus t;
  t.per_vertex.assign(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : intersect(g.neighbors(u), g.neighbors(v))) {
        if (w <= v) continue;
        ++t.total;
        ++t.per_vertex[u];
        ++t.per_vertex[v];
        ++t.per_vertex[w];
        int looped = g.has_loop(u) + g.has_loop(v) + g.has_loop(w);
        ++t.by_loops[static_cast<std::size_t>(looped)];
      }
    }
  }
  return t;
}

FourCycleCensus four_cycle_census(const SelfLoopGraph& g) {
  const std::size_t n = g.order();
  FourCycleCensus c;
  c.c4_per_vertex.assign(n, 0);
  c.k4_per_vertex.assign(n, 0);

  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      auto ab = intersect(g.neighbors(a), g.neighbors(b));
      for (Vertex x : ab) {
        if (x <= b) continue;
        for (Vertex y : intersect(ab, g.neighbors(x))) {
          if (y <= x) continue;
          ++c.k4_count;
          for (Vertex v : {a, b, x, y}) ++c.k4_per_vertex[v];
        }
      }
    }
  }

  // cycles_at[v] = Σ_{w≠v} C(codeg(v,w), 2): each 4-cycle through v has a
  // unique vertex opposite to v.
  std::vector<std::int64_t> codeg(n, 0);
  std::int64_t opposite_pairs = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::fill(codeg.begin(), codeg.end(), 0);
    for (Vertex x : g.neighbors(v))
      for (Vertex w : g.neighbors(x))
        if (w != v) ++codeg[w];
    std::int64_t at_v = 0;
    for (Vertex w = 0; w < n; ++w) {
      if (codeg[w] < 2) continue;
      std::int64_t pairs = choose2(codeg[w]);
      at_v = checked_add(at_v, pairs);
      if (w > v) opposite_pairs = checked_add(opposite_pairs, pairs);
    }
    c.c4_per_vertex[v] = checked_sub(at_v, checked_mul(3, c.k4_per_vertex[v]));
  }
  // Every 4-cycle has two diagonals.
  std::int64_t all_cycles = opposite_pairs / 2;
  c.c4_not_k4 = checked_sub(all_cycles, checked_mul(3, c.k4_count));
  return c;
}

SubgraphCensus census(const SelfLoopGraph& g) {
  SubgraphCensus c;
  c.zagreb1 = first_zagreb(g);
  c.degree_sum_S = degree_sum_over_loops(g);
  c.boundary = loop_boundary(g);
  c.triangles = triangle_census(g);
  c.four_cycles = four_cycle_census(g);
  return c;
}

}  // namespace selfloop
