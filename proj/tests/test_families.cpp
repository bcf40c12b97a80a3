#include <doctest.h>

#include <functional>
#include <set>
#include <vector>

#include "selfloop/census.hpp"
#include "selfloop/error.hpp"
#include "selfloop/families.hpp"
#include "selfloop/graph_file.hpp"

using namespace selfloop;

namespace {

bool regular(const SelfLoopGraph& g, std::size_t d) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

// Backtracking search for an automorphism sending `from` to `to`.
bool has_automorphism(const SelfLoopGraph& g, Vertex from, Vertex to) {
  const std::size_t n = g.order();
  std::vector<Vertex> image(n, n);
  std::vector<bool> used(n, false);
  image[from] = to;
  used[to] = true;
  std::vector<Vertex> order{from};
  for (Vertex v = 0; v < n; ++v)
    if (v != from) order.push_back(v);

  std::function<bool(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == n) return true;
    const Vertex v = order[pos];
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || g.degree(c) != g.degree(v) || g.has_loop(c) != g.has_loop(v)) continue;
      bool fits = true;
      for (std::size_t i = 0; i < pos && fits; ++i) {
        const Vertex u = order[i];
        fits = g.adjacent(u, v) == g.adjacent(image[u], c);
      }
      if (!fits) continue;
      image[v] = c;
      used[c] = true;
      if (extend(pos + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return extend(1);
}

ErrorCode error_of(const FamilySpec& spec) {
  try {
    generate(spec);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected generate to throw");
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST_CASE("Petersen graph") {
  const auto g = generate(FamilySpec::petersen());
  CHECK(g.order() == 10);
  CHECK(g.size() == 15);
  CHECK(regular(g, 3));
  const auto n0 = g.neighbors(0);
  CHECK(std::vector<Vertex>(n0.begin(), n0.end()) == std::vector<Vertex>{7, 8, 9});
  CHECK(census(g).triangles_total() == 0);
  for (Vertex t = 0; t < 10; ++t) CHECK(has_automorphism(g, 0, t));
  CHECK(g == generate(FamilySpec::kneser(2)));
}

TEST_CASE("Kneser graphs are (k+1)-regular") {
  const std::size_t orders[] = {0, 0, 10, 35, 126, 462};
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto g = generate(FamilySpec::kneser(k));
    CHECK(g.order() == orders[k]);
    CHECK(regular(g, k + 1));
  }
}

TEST_CASE("wheels, stars, paths and cycles") {
  for (std::size_t n = 4; n <= 12; ++n) {
    const auto w = generate(FamilySpec::wheel(n));
    CHECK(w.size() == 2 * (n - 1));
    if (n >= 5) CHECK(census(w).triangles_total() == static_cast<std::int64_t>(n - 1));
    CHECK(w.degree(0) == n - 1);
  }
  CHECK(census(generate(FamilySpec::wheel(4))).triangles_total() == 4);

  const auto s = generate(FamilySpec::star(6, PartLoops{1, 2}));
  CHECK(s.degree(0) == 5);
  CHECK(s.loops().size() == 3);
  CHECK(s.has_loop(0));
  CHECK(s.has_loop(1));
  CHECK(s.has_loop(2));

  CHECK(generate(FamilySpec::path(1)).size() == 0);
  CHECK(generate(FamilySpec::path(7)).size() == 6);
  CHECK(generate(FamilySpec::cycle(7)).size() == 7);
  CHECK(regular(generate(FamilySpec::cycle(7)), 2));
}

TEST_CASE("complete bipartite graphs") {
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = 1; b <= 4; ++b) {
      const auto g = generate(FamilySpec::complete_bipartite(a, b, PartLoops{a, 0}));
      CHECK(g.size() == a * b);
      CHECK(g.sigma() == a);
      CHECK(census(g).triangles_total() == 0);
      for (Vertex u = 0; u < a; ++u) CHECK(g.has_loop(u));
    }
}

TEST_CASE("wheel loop placement") {
  const auto g = generate(FamilySpec::wheel(6, WheelLoops{true, 2}));
  CHECK(g.loops().size() == 3);
  CHECK(g.has_loop(0));
  CHECK(g.has_loop(1));
  CHECK(g.has_loop(2));
}

TEST_CASE("invalid specs") {
  CHECK(error_of(FamilySpec::cycle(2)) == ErrorCode::InvalidSpec);
  CHECK(error_of(FamilySpec::wheel(3)) == ErrorCode::InvalidSpec);
  CHECK(error_of(FamilySpec::kneser(1)) == ErrorCode::InvalidSpec);
  CHECK(error_of(FamilySpec::complete(0)) == ErrorCode::InvalidSpec);
  CHECK(error_of(FamilySpec::complete(3, ExplicitLoops{{3}})) == ErrorCode::InvalidSpec);
  CHECK(error_of(FamilySpec::complete_bipartite(2, 2, PartLoops{3, 0})) == ErrorCode::InvalidSpec);
  CHECK(error_of(FamilySpec::path(4, PartLoops{1, 0})) == ErrorCode::InvalidSpec);
  CHECK(error_of(FamilySpec::wheel(5, WheelLoops{false, 5})) == ErrorCode::InvalidSpec);
  CHECK_THROWS_AS(parse_family("dodecahedron"), Error);
  CHECK(parse_family("petersen") == Family::petersen);
}

TEST_CASE("exhaustive enumeration") {
  CHECK(graph_count(1) == 2);
  CHECK(graph_count(2) == 8);
  CHECK(graph_count(3) == 64);
  CHECK(graph_count(5) == 32768);
  CHECK_THROWS_AS(graph_count(6), Error);

  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < graph_count(4); ++i) seen.insert(serialize_graph(graph_at(4, i)));
  CHECK(seen.size() == graph_count(4));

  // Index 0 is edgeless and loopless; the last index is the fully looped K_n.
  const auto last = graph_at(4, graph_count(4) - 1);
  CHECK(last.size() == 6);
  CHECK(last.sigma() == 4);
  CHECK(graph_at(4, 0).size() == 0);

  // Connected graphs on three vertices: 4 labeled connected graphs times 8 loop sets.
  CHECK(enumerate_all_graphs(3, true).size() == 32);
  CHECK(enumerate_all_graphs(3, false).size() == 64);
}

TEST_CASE("generated graphs survive a file round trip") {
  for (const auto& spec : {FamilySpec::petersen(ExplicitLoops{{1}}), FamilySpec::wheel(7, WheelLoops{true, 3}),
                           FamilySpec::complete_bipartite(3, 2, PartLoops{1, 2})}) {
    const auto g = generate(spec);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}
