#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "selfloop/graph.hpp"

namespace selfloop {

enum class Family { complete, complete_bipartite, cycle, path, wheel, star, kneser, petersen };

std::string_view to_string(Family f);
// Throws InvalidSpec for unknown names.
Family parse_family(std::string_view name);

// Loops at the listed vertices.
struct ExplicitLoops {
  std::vector<Vertex> vertices;
};

// Bipartite and star families: loops at the first sigma_a vertices of part A
// and the first sigma_b vertices of part B.
struct PartLoops {
  std::size_t sigma_a = 0;
  std::size_t sigma_b = 0;
};

// Wheel: optional loop at the centre (vertex 0) plus loops at rim vertices
// 1..rim.
struct WheelLoops {
  bool center = false;
  std::size_t rim = 0;
};

using LoopPlacement = std::variant<ExplicitLoops, PartLoops, WheelLoops>;

// Parametric description of a named family plus where its loops go.
//
// Vertex layout of the generated graph:
//   complete_bipartite  A = 0..a-1, B = a..a+b-1
//   star                centre 0 (part A), leaves 1..n-1 (part B)
//   wheel               centre 0, rim 1..n-1 in cyclic order
//   path, cycle         0..n-1 in sequence order
//   kneser, petersen    k-subsets of {1..2k+1} in lexicographic order
struct FamilySpec {
  Family family = Family::complete;
  std::size_t n = 0;  // complete, cycle, path, wheel, star
  std::size_t a = 0;  // complete_bipartite
  std::size_t b = 0;
  std::size_t k = 0;  // kneser; petersen is kneser with k = 2
  LoopPlacement loops = ExplicitLoops{};

  static FamilySpec complete(std::size_t n, LoopPlacement loops = ExplicitLoops{});
  static FamilySpec complete_bipartite(std::size_t a, std::size_t b, LoopPlacement loops = ExplicitLoops{});
  static FamilySpec cycle(std::size_t n, LoopPlacement loops = ExplicitLoops{});
  static FamilySpec path(std::size_t n, LoopPlacement loops = ExplicitLoops{});
  static FamilySpec wheel(std::size_t n, LoopPlacement loops = ExplicitLoops{});
  static FamilySpec star(std::size_t n, LoopPlacement loops = ExplicitLoops{});
  static FamilySpec kneser(std::size_t k, LoopPlacement loops = ExplicitLoops{});
  static FamilySpec petersen(LoopPlacement loops = ExplicitLoops{});

  std::string describe() const;
};

// Throws InvalidSpec when parameters or the loop placement do not fit the family.
void validate(const FamilySpec& spec);

std::size_t family_order(const FamilySpec& spec);

// Structured placements expanded to a sorted vertex list. Validates the spec.
std::vector<Vertex> loop_vertices(const FamilySpec& spec);

SelfLoopGraph generate(const FamilySpec& spec);

// Exhaustive labeled enumeration: every edge subset of K_n times every loop
// subset. Index i encodes (edge mask << n) | loop mask, so ranges of indices
// can be sharded across workers.
inline constexpr std::size_t kMaxEnumerationOrder = 5;
std::uint64_t graph_count(std::size_t n);
SelfLoopGraph graph_at(std::size_t n, std::uint64_t index);
std::vector<SelfLoopGraph> enumerate_all_graphs(std::size_t n, bool connected_only);

}  // namespace selfloop
