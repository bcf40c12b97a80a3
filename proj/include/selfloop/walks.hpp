#pragma once

#include <cstdint>
#include <vector>

#include "selfloop/census.hpp"
#include "selfloop/families.hpp"
#include "selfloop/graph.hpp"

namespace selfloop {

// Closed k-walk totals w_k for k = 1..4, from degrees and subgraph counts.
struct WalkCounts {
  std::int64_t w1 = 0;
  std::int64_t w2 = 0;
  std::int64_t w3 = 0;
  std::int64_t w4 = 0;

  std::int64_t operator[](int k) const;
};

std::int64_t w1_formula(const SelfLoopGraph& g);

// 2m + σ
std::int64_t w2_formula(const SelfLoopGraph& g);

// 3 Σ_{v∈S} d(v) + 6 n_tri(G) + σ
std::int64_t w3_formula(const SelfLoopGraph& g);
std::int64_t w3_formula(const SelfLoopGraph& g, const SubgraphCensus& c);

// σ + 2(M1 - m) + 6 Σ_{v∈S} d(v) - 2 Σ_{v∈S} n1(v)
//   + 8 (t1 + 2 t2 + 3 t3 + n_C4 + 3 n_K4)
// where t_r counts triangles with exactly r looped vertices and n_C4
// excludes 4-cycles lying inside a K4.
std::int64_t w4_formula(const SelfLoopGraph& g);
std::int64_t w4_formula(const SelfLoopGraph& g, const SubgraphCensus& c);

WalkCounts walk_counts(const SelfLoopGraph& g);

// Loop statistics of a path or cycle.
struct PathLoopProfile {
  std::int64_t sigma_e = 0;    // looped endpoints (always 0 on a cycle)
  std::int64_t sigma_ne = 0;   // looped non-endpoints
  std::int64_t run_count = 0;  // maximal runs of >= 2 consecutive looped vertices
  std::int64_t sigma_na = 0;   // looped vertices with no looped neighbour

  friend bool operator==(const PathLoopProfile&, const PathLoopProfile&) = default;
};

// `looped[i]` says whether the i-th vertex of the sequence carries a loop.
// On a fully looped cycle the whole cycle is one run.
PathLoopProfile loop_profile(const std::vector<bool>& looped, bool cyclic);

// Throws NotAPathOrCycle unless G is a path P_n (n >= 1) or cycle C_n (n >= 3).
PathLoopProfile path_loop_profile(const SelfLoopGraph& g);

// Per-family closed forms, evaluated from the spec alone without building a
// graph. Throw UnsupportedFamily when the family (or its parameter range) has
// no closed form and InvalidLoopPlacement when the loop pattern is not one the
// closed form covers.
//
// w3: complete (n >= 3), complete_bipartite, kneser, petersen, cycle,
//     wheel (n >= 5).
// w4: complete (n >= 4, no loops), complete_bipartite, star,
//     path (n >= 2; loops pairwise non-adjacent, or no looped endpoint),
//     cycle.
std::int64_t closed_form_w3(const FamilySpec& spec);
std::int64_t closed_form_w4(const FamilySpec& spec);

}  // namespace selfloop
