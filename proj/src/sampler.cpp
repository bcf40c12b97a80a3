#include "selfloop/sampler.hpp"

#include "selfloop/error.hpp"

namespace selfloop {

GraphSampler::GraphSampler(const SamplerConfig& config) : config_(config), rng_(config.seed) {
  const std::size_t floor = config.connected_only ? 2 : 1;
  if (config.n_min < floor || config.n_min > config.n_max)
    throw Error(ErrorCode::InvalidSpec, "sampler needs " + std::to_string(floor) + " <= n_min <= n_max");
  auto valid = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!valid(config.edge_probability) || !valid(config.loop_probability))
    throw Error(ErrorCode::InvalidSpec, "sampler probabilities must lie in [0, 1]");
}

double GraphSampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

SelfLoopGraph GraphSampler::next() {
  constexpr int kMaxAttempts = 100000;
  const std::uint64_t span = config_.n_max - config_.n_min + 1;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::size_t n = config_.n_min + static_cast<std::size_t>(rng_() % span);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (uniform() < config_.edge_probability) edges.push_back({u, v});
    std::vector<Vertex> loops;
    for (Vertex v = 0; v < n; ++v)
      if (uniform() < config_.loop_probability) loops.push_back(v);
    SelfLoopGraph g = SelfLoopGraph::build(n, edges, loops);
    if (!config_.connected_only || is_connected(g)) return g;
  }
  throw Error(ErrorCode::InvalidSpec, "sampler could not draw a connected graph; raise the edge probability");
}

std::vector<SelfLoopGraph> sample_graphs(const SamplerConfig& config) {
  GraphSampler sampler(config);
  std::vector<SelfLoopGraph> out;
  out.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i) out.push_back(sampler.next());
  return out;
}

}  // namespace selfloop
