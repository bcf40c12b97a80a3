#include <doctest.h>

#include "selfloop/census.hpp"
#include "selfloop/error.hpp"
#include "selfloop/families.hpp"
#include "selfloop/oracle.hpp"
#include "selfloop/walks.hpp"
#include "sweeps.hpp"

using namespace selfloop;

namespace {

SelfLoopGraph k4_three_loops() { return generate(FamilySpec::complete(4, ExplicitLoops{{0, 1, 3}})); }

FamilySpec q1() { return FamilySpec::path(8, ExplicitLoops{{1, 2, 4, 6}}); }
FamilySpec q2() { return FamilySpec::path(8, ExplicitLoops{{1, 2, 4, 5, 6}}); }

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidSpec;
}

}  // namespace

TEST_CASE("walk formulas on the looped K4") {
  const auto g = k4_three_loops();
  CHECK(w1_formula(g) == 3);
  CHECK(w2_formula(g) == 15);
  CHECK(w3_formula(g) == 54);
  CHECK(w4_formula(g) == 207);
  const auto w = walk_counts(g);
  CHECK(w[1] == 3);
  CHECK(w[4] == 207);
}

TEST_CASE("walk formulas on small named graphs") {
  CHECK(w2_formula(generate(FamilySpec::complete(2))) == 2);
  CHECK(w3_formula(generate(FamilySpec::petersen(ExplicitLoops{{1}}))) == 10);
  CHECK(w3_formula(generate(FamilySpec::cycle(3, ExplicitLoops{{0, 2}}))) == 20);
  CHECK(w4_formula(generate(FamilySpec::complete_bipartite(2, 3))) == 72);
  CHECK(w4_formula(generate(FamilySpec::complete(5))) == 260);
  const std::int64_t c3[] = {18, 35, 56, 81};
  for (std::size_t s = 0; s <= 3; ++s)
    CHECK(w4_formula(generate(FamilySpec::cycle(3, ExplicitLoops{sweeps::prefix(s)}))) == c3[s]);
  for (std::size_t n = 3; n <= 7; ++n)
    for (std::size_t s = 0; s <= n; ++s) {
      const auto nn = static_cast<std::int64_t>(n), ss = static_cast<std::int64_t>(s);
      CHECK(w3_formula(generate(FamilySpec::complete(n, ExplicitLoops{sweeps::prefix(s)}))) ==
            ss * (3 * nn - 2) + nn * (nn - 1) * (nn - 2));
    }
}

TEST_CASE("loopless reductions") {
  for (std::uint64_t i = 0; i < graph_count(5); i += 32) {  // loop mask 0
    const auto g = graph_at(5, i);
    REQUIRE(g.sigma() == 0);
    const auto c = census(g);
    CHECK(w3_formula(g) == 6 * c.triangles_total());
    CHECK(w4_formula(g) == 2 * (c.zagreb1 - static_cast<std::int64_t>(g.size())) + 8 * (c.c4_not_k4() + 3 * c.k4_count()));
  }
}

TEST_CASE("formula, trace and enumeration agree on every graph up to five vertices") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t i = 0; i < graph_count(n); ++i) {
      const auto g = graph_at(n, i);
      const auto w = walk_counts(g);
      for (int k = 1; k <= 4; ++k) {
        const auto t = trace_power(g, k);
        REQUIRE(w[k] == t);
        REQUIRE(enumerate_closed_walks(g, k).total == t);
      }
    }
}

TEST_CASE("triangle-free graphs with loops still have closed 3-walks") {
  for (std::uint64_t i = 0; i < graph_count(5); ++i) {
    const auto g = graph_at(5, i);
    const auto c = census(g);
    if (c.triangles_total() != 0 || g.sigma() == 0) continue;
    CHECK(w3_formula(g) == 3 * c.degree_sum_S + static_cast<std::int64_t>(g.sigma()));
    CHECK(w3_formula(g) > 0);
  }
}

TEST_CASE("closed 3-walks on looped balanced complete bipartite graphs") {
  for (std::size_t n = 2; n <= 12; n += 2) {
    const auto h = n / 2;
    const auto g = generate(FamilySpec::complete_bipartite(h, h, PartLoops{h, h}));
    const auto nn = static_cast<std::int64_t>(n);
    CHECK(w3_formula(g) == 3 * nn * nn / 2 + nn);
  }
}

TEST_CASE("loop profiles") {
  CHECK(path_loop_profile(generate(q1())) == PathLoopProfile{0, 4, 1, 2});
  CHECK(path_loop_profile(generate(q2())) == PathLoopProfile{0, 5, 2, 0});
  CHECK(path_loop_profile(generate(FamilySpec::path(6))) == PathLoopProfile{0, 0, 0, 0});
  CHECK(path_loop_profile(generate(FamilySpec::path(4, ExplicitLoops{{0, 3}}))) == PathLoopProfile{2, 0, 0, 2});
  // A run that wraps around the cycle is a single run.
  CHECK(path_loop_profile(generate(FamilySpec::cycle(6, ExplicitLoops{{0, 1, 5}}))) == PathLoopProfile{0, 3, 1, 0});
  CHECK(path_loop_profile(generate(FamilySpec::cycle(5, ExplicitLoops{{0, 1, 2, 3, 4}}))).run_count == 1);

  CHECK(error_of([] { path_loop_profile(generate(FamilySpec::star(4))); }) == ErrorCode::NotAPathOrCycle);
  CHECK(error_of([] { path_loop_profile(generate(FamilySpec::complete(4))); }) == ErrorCode::NotAPathOrCycle);
}

TEST_CASE("family closed forms") {
  CHECK(closed_form_w3(FamilySpec::complete_bipartite(2, 3, PartLoops{1, 2})) == 24);
  CHECK(closed_form_w3(FamilySpec::kneser(2, ExplicitLoops{{0}})) == 10);
  CHECK(closed_form_w3(FamilySpec::petersen(ExplicitLoops{{1}})) == 10);
  CHECK(closed_form_w3(FamilySpec::wheel(5, WheelLoops{true, 1})) == 47);
  CHECK(closed_form_w3(FamilySpec::complete(4, ExplicitLoops{{0, 1, 3}})) == 54);

  CHECK(closed_form_w4(q1()) == 78);
  CHECK(closed_form_w4(q2()) == 95);
  CHECK(closed_form_w4(FamilySpec::complete(5)) == 260);
  CHECK(closed_form_w4(FamilySpec::complete_bipartite(2, 3)) == 72);
  CHECK(closed_form_w4(FamilySpec::cycle(3, ExplicitLoops{{0}})) == 35);
  CHECK(closed_form_w4(FamilySpec::cycle(3, ExplicitLoops{{0, 1}})) == 56);
  CHECK(closed_form_w4(FamilySpec::cycle(3, ExplicitLoops{{0, 1, 2}})) == 81);
  for (std::size_t n = 2; n <= 9; ++n)
    for (std::size_t sb = 0; sb < n; ++sb) {
      const auto nn = static_cast<std::int64_t>(n), b = static_cast<std::int64_t>(sb);
      CHECK(closed_form_w4(FamilySpec::star(n, PartLoops{1, sb})) == 2 * (nn - 1) * (nn - 1) + 9 * b + 4 * nn - 3);
    }
}

TEST_CASE("closed forms reject what they do not cover") {
  CHECK(error_of([] { closed_form_w3(FamilySpec::path(5)); }) == ErrorCode::UnsupportedFamily);
  CHECK(error_of([] { closed_form_w4(FamilySpec::wheel(6)); }) == ErrorCode::UnsupportedFamily);
  CHECK(error_of([] { closed_form_w4(FamilySpec::complete(5, ExplicitLoops{{0}})); }) == ErrorCode::InvalidLoopPlacement);
  CHECK(error_of([] { closed_form_w4(FamilySpec::path(6, ExplicitLoops{{0, 2, 3}})); }) ==
        ErrorCode::InvalidLoopPlacement);
  CHECK(error_of([] { closed_form_w3(FamilySpec::complete(3, ExplicitLoops{{7}})); }) == ErrorCode::InvalidSpec);
}

TEST_CASE("closed forms agree with the general formulas across the family sweep") {
  std::size_t w3_checked = 0, w4_checked = 0;
  sweeps::for_each_family_spec([&](const FamilySpec& spec) {
    const auto g = generate(spec);
    const auto c = census(g);
    try {
      const auto expected = closed_form_w3(spec);
      INFO(spec.describe());
      REQUIRE(expected == w3_formula(g, c));
      ++w3_checked;
    } catch (const Error& e) {
      REQUIRE((e.code() == ErrorCode::UnsupportedFamily || e.code() == ErrorCode::InvalidLoopPlacement));
    }
    try {
      const auto expected = closed_form_w4(spec);
      INFO(spec.describe());
      REQUIRE(expected == w4_formula(g, c));
      ++w4_checked;
    } catch (const Error& e) {
      REQUIRE((e.code() == ErrorCode::UnsupportedFamily || e.code() == ErrorCode::InvalidLoopPlacement));
    }
  });
  CHECK(w3_checked > 1000);
  CHECK(w4_checked > 1000);
}
