#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "selfloop/graph.hpp"

namespace selfloop {

struct SamplerConfig {
  std::size_t count = 1000;
  std::size_t n_min = 2;
  std::size_t n_max = 10;
  double edge_probability = 0.5;
  double loop_probability = 0.5;
  std::uint64_t seed = 42;
  bool connected_only = true;
};

// Reproducible G(n, p) sampler with independent loops. Draws come straight
// from mt19937_64 output, so a seed gives the same graphs on every platform.
// In connected mode disconnected draws are rejected and redrawn.
class GraphSampler {
 public:
  // Throws InvalidSpec for an empty order range, n_min < 1 (or < 2 when
  // connected), or probabilities outside [0, 1].
  explicit GraphSampler(const SamplerConfig& config);

  // Throws InvalidSpec if 100000 consecutive draws are all disconnected.
  SelfLoopGraph next();

 private:
  double uniform();

  SamplerConfig config_;
  std::mt19937_64 rng_;
};

std::vector<SelfLoopGraph> sample_graphs(const SamplerConfig& config);

}  // namespace selfloop
