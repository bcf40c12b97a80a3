#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "selfloop/families.hpp"
#include "selfloop/graph.hpp"
#include "selfloop/sampler.hpp"
#include "selfloop/spectral.hpp"

namespace selfloop {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

enum class Format { json, table };

// A command's output. The JSON body keeps keys sorted, so dumping the same
// body always yields the same bytes.
struct Report {
  nlohmann::json body;
  int exit_code = kExitOk;
};

// Rounds to 12 significant digits; every real in a report passes through here.
double report_real(double x);

nlohmann::json graph_summary(const SelfLoopGraph& g);
nlohmann::json to_json(const BoundRecord& b);

// kExitViolation if any record in the array fails, else kExitOk.
int bounds_exit_code(const nlohmann::json& bounds);

// w_1..w_kmax from the formulas (k <= 4) and from Tr(A^k); exit 1 on any
// disagreement.
Report cmd_walks(const SelfLoopGraph& g, int kmax);

// Spectrum, M_0..M_4, M_q per requested q, energy, and the closed forms for
// the third and fourth twisted moments checked against direct sums.
Report cmd_moments(const SelfLoopGraph& g, std::span<const double> qs);

Report cmd_census(const SelfLoopGraph& g);

struct VerifyOptions {
  int chain_depth = 8;
  int positivity_max = 10;
  std::vector<double> exponents{0.0, 0.5, 1.0, 1.5, 2.0, 3.0};
  std::vector<RstTriple> rst{{1.0, 0.0, 2.0}, {1.5, 2.0, 2.0}, {2.0, 3.0, 3.0}};
};

// Evaluates every inequality on one graph. Disconnected or edgeless graphs
// get a note and only the hypothesis-free bounds.
nlohmann::json verify_graph(const SelfLoopGraph& g, const VerifyOptions& options);

Report cmd_verify(const SelfLoopGraph& g, const VerifyOptions& options);
Report cmd_verify_sampled(const SamplerConfig& sampler, const VerifyOptions& options);

// Canonical graph file for a family, with a leading comment naming it.
std::string cmd_generate(const FamilySpec& spec);

std::string render(const Report& report, Format format);

}  // namespace selfloop
