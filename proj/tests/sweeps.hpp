#pragma once

// Parameter sweeps over the generated families, shared by the unit tests and
// the acceptance binary.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "selfloop/families.hpp"

namespace sweeps {

using selfloop::ExplicitLoops;
using selfloop::FamilySpec;
using selfloop::PartLoops;
using selfloop::Vertex;
using selfloop::WheelLoops;

inline std::vector<Vertex> subset(std::size_t n, std::uint64_t mask) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v)
    if (mask >> v & 1U) out.push_back(v);
  return out;
}

inline std::vector<Vertex> prefix(std::size_t count) {
  std::vector<Vertex> out(count);
  for (std::size_t v = 0; v < count; ++v) out[v] = v;
  return out;
}

// Every family with n <= 10 under every loop placement its generator accepts,
// except Kneser graphs, which get prefix and random placements.
inline void for_each_family_spec(const std::function<void(const FamilySpec&)>& fn) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      fn(FamilySpec::complete(n, ExplicitLoops{subset(n, mask)}));
      fn(FamilySpec::path(n, ExplicitLoops{subset(n, mask)}));
      if (n >= 3) fn(FamilySpec::cycle(n, ExplicitLoops{subset(n, mask)}));
      if (n >= 4) fn(FamilySpec::wheel(n, ExplicitLoops{subset(n, mask)}));
      if (n >= 2) fn(FamilySpec::star(n, ExplicitLoops{subset(n, mask)}));
    }
  for (std::size_t n = 4; n <= 10; ++n)
    for (std::size_t rim = 0; rim < n; ++rim)
      for (bool center : {false, true}) fn(FamilySpec::wheel(n, WheelLoops{center, rim}));
  for (std::size_t n = 2; n <= 10; ++n)
    for (std::size_t sb = 0; sb < n; ++sb)
      for (std::size_t sa = 0; sa <= 1; ++sa) fn(FamilySpec::star(n, PartLoops{sa, sb}));
  for (std::size_t a = 1; a <= 9; ++a)
    for (std::size_t b = 1; a + b <= 10; ++b)
      for (std::size_t sa = 0; sa <= a; ++sa)
        for (std::size_t sb = 0; sb <= b; ++sb) fn(FamilySpec::complete_bipartite(a, b, PartLoops{sa, sb}));

  std::mt19937_64 rng(7);
  for (std::size_t k = 2; k <= 4; ++k) {
    const std::size_t order = selfloop::family_order(FamilySpec::kneser(k));
    for (std::size_t s = 0; s <= order; s += (k == 2 ? 1 : 7)) fn(FamilySpec::kneser(k, ExplicitLoops{prefix(s)}));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Vertex> loops;
      for (Vertex v = 0; v < order; ++v)
        if (rng() & 1U) loops.push_back(v);
      fn(FamilySpec::kneser(k, ExplicitLoops{loops}));
    }
  }
  for (std::uint64_t mask = 0; mask < (1ULL << 10); ++mask) fn(FamilySpec::petersen(ExplicitLoops{subset(10, mask)}));
}

}  // namespace sweeps
