#include "selfloop/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "selfloop/error.hpp"

namespace selfloop {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::cycle, "cycle"},
    {Family::path, "path"},
    {Family::wheel, "wheel"},
    {Family::star, "star"},
    {Family::kneser, "kneser"},
    {Family::petersen, "petersen"},
}};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidSpec, what); }

std::size_t binomial(std::size_t n, std::size_t r) {
  std::size_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::size_t kneser_k(const FamilySpec& spec) { return spec.family == Family::petersen ? 2 : spec.k; }

// Part sizes for the families that carry a bipartition.
std::pair<std::size_t, std::size_t> parts(const FamilySpec& spec) {
  if (spec.family == Family::star) return {1, spec.n - 1};
  return {spec.a, spec.b};
}

void check_parameters(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::complete:
    case Family::path:
      if (spec.n < 1) invalid(std::string(to_string(spec.family)) + " needs n >= 1");
      break;
    case Family::cycle:
      if (spec.n < 3) invalid("cycle needs n >= 3");
      break;
    case Family::wheel:
      if (spec.n < 4) invalid("wheel needs n >= 4");
      break;
    case Family::star:
      if (spec.n < 2) invalid("star needs n >= 2");
      break;
    case Family::complete_bipartite:
      if (spec.a < 1 || spec.b < 1) invalid("complete_bipartite needs a, b >= 1");
      break;
    case Family::kneser:
      if (spec.k < 2) invalid("kneser needs k >= 2");
      if (spec.k > 10) invalid("kneser k > 10 is too large to generate");
      break;
    case Family::petersen:
      break;
  }
}

}  // namespace

std::string_view to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames)
    if (family == f) return name;
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, known] : kFamilyNames)
    if (known == name) return family;
  invalid("unknown family '" + std::string(name) + "'");
}

FamilySpec FamilySpec::complete(std::size_t n, LoopPlacement loops) {
  return {Family::complete, n, 0, 0, 0, std::move(loops)};
}
FamilySpec FamilySpec::complete_bipartite(std::size_t a, std::size_t b, LoopPlacement loops) {
  return {Family::complete_bipartite, 0, a, b, 0, std::move(loops)};
}
FamilySpec FamilySpec::cycle(std::size_t n, LoopPlacement loops) {
  return {Family::cycle, n, 0, 0, 0, std::move(loops)};
}
FamilySpec FamilySpec::path(std::size_t n, LoopPlacement loops) {
  return {Family::path, n, 0, 0, 0, std::move(loops)};
}
FamilySpec FamilySpec::wheel(std::size_t n, LoopPlacement loops) {
  return {Family::wheel, n, 0, 0, 0, std::move(loops)};
}
FamilySpec FamilySpec::star(std::size_t n, LoopPlacement loops) {
  return {Family::star, n, 0, 0, 0, std::move(loops)};
}
FamilySpec FamilySpec::kneser(std::size_t k, LoopPlacement loops) {
  return {Family::kneser, 0, 0, 0, k, std::move(loops)};
}
FamilySpec FamilySpec::petersen(LoopPlacement loops) {
  return {Family::petersen, 0, 0, 0, 2, std::move(loops)};
}

std::string FamilySpec::describe() const {
  std::string out(to_string(family));
  switch (family) {
    case Family::complete_bipartite:
      out += " a=" + std::to_string(a) + " b=" + std::to_string(b);
      break;
    case Family::kneser:
      out += " k=" + std::to_string(k);
      break;
    case Family::petersen:
      break;
    default:
      out += " n=" + std::to_string(n);
  }
  return out;
}

std::size_t family_order(const FamilySpec& spec) {
  check_parameters(spec);
  switch (spec.family) {
    case Family::complete_bipartite:
      return spec.a + spec.b;
    case Family::kneser:
    case Family::petersen: {
      std::size_t k = kneser_k(spec);
      return binomial(2 * k + 1, k);
    }
    default:
      return spec.n;
  }
}

void validate(const FamilySpec& spec) { (void)loop_vertices(spec); }

std::vector<Vertex> loop_vertices(const FamilySpec& spec) {
  const std::size_t order = family_order(spec);
  std::vector<Vertex> out;

  if (const auto* list = std::get_if<ExplicitLoops>(&spec.loops)) {
    out = list->vertices;
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) invalid("loop vertex listed twice");
    if (!out.empty() && out.back() >= order)
      invalid("loop vertex " + std::to_string(out.back()) + " out of range for order " + std::to_string(order));
  } else if (const auto* part = std::get_if<PartLoops>(&spec.loops)) {
    if (spec.family != Family::complete_bipartite && spec.family != Family::star)
      invalid("part loop placement only applies to complete_bipartite and star");
    auto [a, b] = parts(spec);
    if (part->sigma_a > a || part->sigma_b > b) invalid("part loop counts exceed part sizes");
    for (std::size_t i = 0; i < part->sigma_a; ++i) out.push_back(i);
    for (std::size_t i = 0; i < part->sigma_b; ++i) out.push_back(a + i);
  } else {
    const auto& wheel = std::get<WheelLoops>(spec.loops);
    if (spec.family != Family::wheel) invalid("centre/rim loop placement only applies to wheel");
    if (wheel.rim > order - 1) invalid("more rim loops than rim vertices");
    if (wheel.center) out.push_back(0);
    for (std::size_t i = 1; i <= wheel.rim; ++i) out.push_back(i);
  }
  return out;
}

SelfLoopGraph generate(const FamilySpec& spec) {
  const std::vector<Vertex> loops = loop_vertices(spec);
  const std::size_t order = family_order(spec);
  std::vector<Edge> edges;

  switch (spec.family) {
    case Family::complete:
      for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) edges.push_back({u, v});
      break;
    case Family::complete_bipartite:
    case Family::star: {
      auto [a, b] = parts(spec);
      for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) edges.push_back({u, v});
      break;
    }
    case Family::path:
      for (Vertex v = 0; v + 1 < order; ++v) edges.push_back({v, v + 1});
      break;
    case Family::cycle:
      for (Vertex v = 0; v < order; ++v) edges.push_back({v, (v + 1) % order});
      break;
    case Family::wheel: {
      const std::size_t rim = order - 1;
      for (Vertex i = 0; i < rim; ++i) {
        edges.push_back({0, i + 1});
        edges.push_back({i + 1, (i + 1) % rim + 1});
      }
      break;
    }
    case Family::kneser:
    case Family::petersen: {
      const std::size_t k = kneser_k(spec);
      const unsigned ground = static_cast<unsigned>(2 * k + 1);
      // Bit i stands for element i+1; reversing the bit order makes numeric
      // order of masks agree with lexicographic order of sorted subsets.
      std::vector<std::uint32_t> subsets;
      for (std::uint32_t mask = 0; mask < (1u << ground); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == k) subsets.push_back(mask);
      auto lex_key = [ground](std::uint32_t mask) {
        std::uint32_t key = 0;
        for (unsigned i = 0; i < ground; ++i)
          if (mask & (1u << i)) key |= 1u << (ground - 1 - i);
        return key;
      };
      std::sort(subsets.begin(), subsets.end(),
                [&](std::uint32_t x, std::uint32_t y) { return lex_key(x) > lex_key(y); });
      for (Vertex u = 0; u < subsets.size(); ++u)
        for (Vertex v = u + 1; v < subsets.size(); ++v)
          if ((subsets[u] & subsets[v]) == 0) edges.push_back({u, v});
      break;
    }
  }
  return SelfLoopGraph::build(order, edges, loops);
}

std::uint64_t graph_count(std::size_t n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw Error(ErrorCode::SizeLimitExceeded, "exhaustive enumeration supports 1 <= n <= 5");
  return std::uint64_t{1} << (n * (n - 1) / 2 + n);
}

SelfLoopGraph graph_at(std::size_t n, std::uint64_t index) {
  if (index >= graph_count(n)) throw Error(ErrorCode::IndexOutOfRange, "graph index beyond enumeration");
  const std::uint64_t loop_mask = index & ((std::uint64_t{1} << n) - 1);
  const std::uint64_t edge_mask = index >> n;
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (edge_mask & (std::uint64_t{1} << bit)) edges.push_back({u, v});
  std::vector<Vertex> loops;
  for (Vertex v = 0; v < n; ++v)
    if (loop_mask & (std::uint64_t{1} << v)) loops.push_back(v);
  return SelfLoopGraph::build(n, edges, loops);
}

std::vector<SelfLoopGraph> enumerate_all_graphs(std::size_t n, bool connected_only) {
  const std::uint64_t count = graph_count(n);
  std::vector<SelfLoopGraph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) {
    SelfLoopGraph g = graph_at(n, i);
    if (connected_only && !is_connected(g)) continue;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace selfloop
