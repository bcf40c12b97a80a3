#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "selfloop/graph.hpp"

namespace selfloop {

// Edges across the loop boundary, seen from each vertex.
//   v ∈ S: n1[v] = unlooped neighbours, n2[v] = looped neighbours.
//   v ∉ S: n1[v] = looped neighbours, n2[v] = 0.
struct LoopBoundary {
  std::vector<std::int64_t> n1;
  std::vector<std::int64_t> n2;
  std::int64_t n1_sum_S = 0;
};

struct TriangleCensus {
  std::int64_t total = 0;
  // by_loops[r] = triangles with exactly r looped vertices, r = 0..3.
  std::array<std::int64_t, 4> by_loops{};
  // Triangles containing each vertex.
  std::vector<std::int64_t> per_vertex;
};

struct FourCycleCensus {
  // 4-cycles whose vertex set does not induce K4.
  std::int64_t c4_not_k4 = 0;
  std::int64_t k4_count = 0;
  std::vector<std::int64_t> c4_per_vertex;
  std::vector<std::int64_t> k4_per_vertex;

  // Every distinct 4-cycle, including the three inside each K4.
  std::int64_t total_four_cycles() const { return c4_not_k4 + 3 * k4_count; }
};

struct SubgraphCensus {
  std::int64_t zagreb1 = 0;
  std::int64_t degree_sum_S = 0;
  LoopBoundary boundary;
  TriangleCensus triangles;
  FourCycleCensus four_cycles;

  std::int64_t triangles_total() const { return triangles.total; }
  std::int64_t tri_loops(int r) const { return triangles.by_loops[static_cast<std::size_t>(r)]; }
  std::int64_t c4_not_k4() const { return four_cycles.c4_not_k4; }
  std::int64_t k4_count() const { return four_cycles.k4_count; }
};

// Σ d_G(v)^2 over proper degrees.
std::int64_t first_zagreb(const SelfLoopGraph& g);

std::int64_t degree_sum_over_loops(const SelfLoopGraph& g);

LoopBoundary loop_boundary(const SelfLoopGraph& g);

TriangleCensus triangle_census(const SelfLoopGraph& g);

// K4s by 4-clique enumeration; all 4-cycles from pair codegrees, since each
// 4-cycle is counted once by each of its two diagonal pairs.
FourCycleCensus four_cycle_census(const SelfLoopGraph& g);

SubgraphCensus census(const SelfLoopGraph& g);

}  // namespace selfloop
