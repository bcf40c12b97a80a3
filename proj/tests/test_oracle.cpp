#include <doctest.h>

#include "selfloop/error.hpp"
#include "selfloop/families.hpp"
#include "selfloop/oracle.hpp"

using namespace selfloop;

TEST_CASE("closed 3-walks on the Petersen graph with one loop") {
  const auto g = generate(FamilySpec::petersen(ExplicitLoops{{1}}));
  const auto walks = enumerate_closed_walks(g, 3);
  CHECK(walks.total == 10);
  CHECK(walks.per_vertex[1] == 7);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == 1) continue;
    CHECK(walks.per_vertex[v] == (g.adjacent(v, 1) ? 1 : 0));
  }
}

TEST_CASE("enumeration basics") {
  std::vector<Vertex> loop{0};
  const auto single = SelfLoopGraph::build(1, {}, loop);
  CHECK(enumerate_closed_walks(single, 4).total == 1);
  CHECK(enumerate_closed_walks(SelfLoopGraph::build(1, {}, {}), 4).total == 0);

  const auto k4 = generate(FamilySpec::complete(4, ExplicitLoops{{0, 1, 3}}));
  CHECK(enumerate_closed_walks(k4, 4).total == 207);
  CHECK(trace_power(k4, 4) == 207);
  CHECK(trace_power(k4, 0) == 4);
}

TEST_CASE("per-vertex counts are the diagonal of the matrix power") {
  for (std::uint64_t i = 0; i < graph_count(4); i += 13) {
    const auto g = graph_at(4, i);
    for (int k = 1; k <= 6; ++k) {
      const auto walks = enumerate_closed_walks(g, k);
      const auto p = matrix_power(g, k);
      for (Vertex v = 0; v < g.order(); ++v) CHECK(walks.per_vertex[v] == p(v, v));
      CHECK(walks.total == p.trace());
    }
  }
}

TEST_CASE("size limits and overflow") {
  const auto big = generate(FamilySpec::complete(13));
  CHECK_THROWS_AS(enumerate_closed_walks(big, 2), Error);
  const auto small = generate(FamilySpec::complete(3));
  CHECK_THROWS_AS(enumerate_closed_walks(small, 9), Error);

  // The fully looped K12 is the all-ones matrix J, and Tr J^k = 12^k.
  std::vector<Vertex> all(12);
  for (Vertex v = 0; v < 12; ++v) all[v] = v;
  const auto j12 = generate(FamilySpec::complete(12, ExplicitLoops{all}));
  std::int64_t expected = 1;
  for (int i = 0; i < 17; ++i) expected *= 12;
  CHECK(trace_power(j12, 17) == expected);
  try {
    trace_power(j12, 18);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("trace of the square counts edges twice plus loops") {
  for (std::uint64_t i = 0; i < graph_count(5); i += 7) {
    const auto g = graph_at(5, i);
    CHECK(trace_power(g, 2) == static_cast<std::int64_t>(2 * g.size() + g.sigma()));
  }
}
