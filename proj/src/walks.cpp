#include "selfloop/walks.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "selfloop/checked.hpp"
#include "selfloop/error.hpp"

namespace selfloop {

namespace {

using i64 = std::int64_t;

i64 as_int(std::size_t x) { return static_cast<i64>(x); }

[[noreturn]] void unsupported(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorCode::UnsupportedFamily, spec.describe() + ": " + why);
}

[[noreturn]] void bad_placement(const FamilySpec& spec, const std::string& why) {
  throw Error(ErrorCode::InvalidLoopPlacement, spec.describe() + ": " + why);
}

// Loop counts in each part of a bipartite layout (A = 0..a-1).
std::pair<i64, i64> part_sigmas(const std::vector<Vertex>& loops, std::size_t a) {
  i64 in_a = std::count_if(loops.begin(), loops.end(), [a](Vertex v) { return v < a; });
  return {in_a, as_int(loops.size()) - in_a};
}

PathLoopProfile sequence_profile(const FamilySpec& spec, const std::vector<Vertex>& loops) {
  std::vector<bool> looped(spec.n, false);
  for (Vertex v : loops) looped[v] = true;
  return loop_profile(looped, spec.family == Family::cycle);
}

}  // namespace

i64 WalkCounts::operator[](int k) const {
  switch (k) {
    case 1: return w1;
    case 2: return w2;
    case 3: return w3;
    case 4: return w4;
  }
  throw Error(ErrorCode::IndexOutOfRange, "walk counts cover k = 1..4");
}

i64 w1_formula(const SelfLoopGraph& g) { return as_int(g.sigma()); }

i64 w2_formula(const SelfLoopGraph& g) {
  return checked_add(checked_mul(2, as_int(g.size())), as_int(g.sigma()));
}

i64 w3_formula(const SelfLoopGraph& g) {
  SubgraphCensus c;
  c.degree_sum_S = degree_sum_over_loops(g);
  c.triangles = triangle_census(g);
  return w3_formula(g, c);
}

i64 w3_formula(const SelfLoopGraph& g, const SubgraphCensus& c) {
  i64 w = checked_mul(3, c.degree_sum_S);
  w = checked_add(w, checked_mul(6, c.triangles_total()));
  return checked_add(w, as_int(g.sigma()));
}

i64 w4_formula(const SelfLoopGraph& g) { return w4_formula(g, census(g)); }

i64 w4_formula(const SelfLoopGraph& g, const SubgraphCensus& c) {
  i64 w = as_int(g.sigma());
  w = checked_add(w, checked_mul(2, checked_sub(c.zagreb1, as_int(g.size()))));
  w = checked_add(w, checked_mul(6, c.degree_sum_S));
  w = checked_sub(w, checked_mul(2, c.boundary.n1_sum_S));
  i64 local = c.tri_loops(1);
  local = checked_add(local, checked_mul(2, c.tri_loops(2)));
  local = checked_add(local, checked_mul(3, c.tri_loops(3)));
  local = checked_add(local, c.c4_not_k4());
  local = checked_add(local, checked_mul(3, c.k4_count()));
  return checked_add(w, checked_mul(8, local));
}

WalkCounts walk_counts(const SelfLoopGraph& g) {
  const SubgraphCensus c = census(g);
  return {w1_formula(g), w2_formula(g), w3_formula(g, c), w4_formula(g, c)};
}

PathLoopProfile loop_profile(const std::vector<bool>& looped, bool cyclic) {
  const std::size_t n = looped.size();
  PathLoopProfile p;
  for (std::size_t i = 0; i < n; ++i) {
    if (!looped[i]) continue;
    bool endpoint = !cyclic && (i == 0 || i + 1 == n);
    (endpoint ? p.sigma_e : p.sigma_ne) += 1;
  }

  // Lengths of maximal blocks of consecutive looped vertices.
  std::vector<std::size_t> blocks;
  if (cyclic && n > 0 && std::all_of(looped.begin(), looped.end(), [](bool b) { return b; })) {
    blocks.push_back(n);
  } else {
    std::size_t start = 0;
    if (cyclic)
      while (looped[start]) ++start;  // begin just after an unlooped vertex
    std::size_t current = 0;
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t i = cyclic ? (start + step) % n : step;
      if (looped[i]) {
        ++current;
      } else if (current > 0) {
        blocks.push_back(current);
        current = 0;
      }
    }
    if (current > 0) blocks.push_back(current);
  }
  for (std::size_t len : blocks) (len >= 2 ? p.run_count : p.sigma_na) += 1;
  return p;
}

PathLoopProfile path_loop_profile(const SelfLoopGraph& g) {
  const std::size_t n = g.order();
  const bool connected = is_connected(g);
  bool max_deg_two = true;
  for (Vertex v = 0; v < n; ++v) max_deg_two = max_deg_two && g.degree(v) <= 2;

  const bool is_path = connected && max_deg_two && g.size() + 1 == n;
  const bool is_cycle = connected && max_deg_two && n >= 3 && g.size() == n;
  if (!is_path && !is_cycle)
    throw Error(ErrorCode::NotAPathOrCycle, "graph is neither a path nor a cycle");

  // Walk the sequence from an endpoint (path) or from vertex 0 (cycle).
  Vertex start = 0;
  if (is_path)
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) <= 1) {
        start = v;
        break;
      }
  std::vector<bool> flags(n);
  Vertex prev = n, cur = start;
  for (std::size_t i = 0; i < n; ++i) {
    flags[i] = g.has_loop(cur);
    Vertex next = n;
    for (Vertex w : g.neighbors(cur))
      if (w != prev) {
        next = w;
        break;
      }
    prev = cur;
    cur = next;
  }
  return loop_profile(flags, is_cycle);
}

i64 closed_form_w3(const FamilySpec& spec) {
  const std::vector<Vertex> loops = loop_vertices(spec);
  const i64 sigma = as_int(loops.size());

  switch (spec.family) {
    case Family::complete: {
      if (spec.n < 3) unsupported(spec, "closed form stated for n >= 3");
      i64 n = as_int(spec.n);
      return checked_add(checked_mul(sigma, 3 * n - 2), checked_mul(checked_mul(n, n - 1), n - 2));
    }
    case Family::complete_bipartite: {
      auto [sa, sb] = part_sigmas(loops, spec.a);
      i64 a = as_int(spec.a), b = as_int(spec.b);
      return checked_add(checked_mul(3, checked_add(checked_mul(b, sa), checked_mul(a, sb))), sigma);
    }
    case Family::kneser:
    case Family::petersen: {
      i64 k = spec.family == Family::petersen ? 2 : as_int(spec.k);
      return checked_mul(sigma, 3 * k + 4);
    }
    case Family::cycle:
      return checked_add(checked_mul(7, sigma), spec.n == 3 ? 6 : 0);
    case Family::wheel: {
      // W_4 is K_4, which has four triangles rather than n - 1.
      if (spec.n < 5) unsupported(spec, "closed form stated for n >= 5");
      i64 n = as_int(spec.n);
      const bool center_looped = !loops.empty() && loops.front() == 0;
      return center_looped ? checked_add(checked_mul(10, sigma), checked_mul(9, n - 2))
                           : checked_add(checked_mul(10, sigma), checked_mul(6, n - 1));
    }
    case Family::path:
    case Family::star:
      break;
  }
  unsupported(spec, "no closed form for closed 3-walks");
}

i64 closed_form_w4(const FamilySpec& spec) {
  const std::vector<Vertex> loops = loop_vertices(spec);
  const i64 sigma = as_int(loops.size());

  switch (spec.family) {
    case Family::complete: {
      if (spec.n < 4) unsupported(spec, "closed form stated for n >= 4");
      if (sigma != 0) bad_placement(spec, "closed form covers the loopless complete graph only");
      i64 n = as_int(spec.n);
      // 2n(n-1)(n - 3/2) + n!/(n-4)!
      i64 degree_part = checked_mul(checked_mul(n, n - 1), 2 * n - 3);
      i64 falling = checked_mul(checked_mul(checked_mul(n, n - 1), n - 2), n - 3);
      return checked_add(degree_part, falling);
    }
    case Family::complete_bipartite: {
      auto [sa, sb] = part_sigmas(loops, spec.a);
      i64 a = as_int(spec.a), b = as_int(spec.b);
      i64 w = checked_mul(sa, 4 * b + 1);
      w = checked_add(w, checked_mul(sb, 4 * a + 1));
      w = checked_add(w, checked_mul(4, checked_mul(sa, sb)));
      return checked_add(w, checked_mul(2, checked_mul(checked_mul(a, a), checked_mul(b, b))));
    }
    case Family::star: {
      auto [sa, sb] = part_sigmas(loops, 1);
      i64 n = as_int(spec.n);
      i64 base = checked_mul(2, checked_mul(n - 1, n - 1));
      if (sa == 0) return checked_add(base, checked_mul(5, sb));
      return checked_add(checked_add(base, checked_mul(9, sb)), 4 * n - 3);
    }
    case Family::path: {
      if (spec.n < 2) unsupported(spec, "closed form stated for n >= 2");
      const PathLoopProfile p = sequence_profile(spec, loops);
      i64 base = checked_mul(2, 3 * as_int(spec.n) - 5);
      if (p.run_count == 0)
        return checked_add(checked_add(base, sigma), checked_mul(4, 2 * p.sigma_ne + p.sigma_e));
      if (p.sigma_e != 0)
        bad_placement(spec, "adjacent loops together with a looped endpoint are not covered");
      return checked_sub(checked_add(base, checked_mul(13, sigma)), checked_mul(4, p.run_count + p.sigma_na));
    }
    case Family::cycle: {
      const i64 n = as_int(spec.n);
      if (n == 3) {
        constexpr i64 triangle[] = {18, 35, 56, 81};
        return triangle[sigma];
      }
      const PathLoopProfile p = sequence_profile(spec, loops);
      // A fully looped cycle has no unlooped boundary to subtract.
      const i64 arcs = sigma == n ? 0 : p.run_count + p.sigma_na;
      const i64 base = n == 4 ? 32 : checked_mul(6, n);
      return checked_sub(checked_add(base, checked_mul(13, sigma)), checked_mul(4, arcs));
    }
    case Family::wheel:
    case Family::kneser:
    case Family::petersen:
      break;
  }
  unsupported(spec, "no closed form for closed 4-walks");
}

}  // namespace selfloop
