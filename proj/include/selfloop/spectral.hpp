#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selfloop/graph.hpp"

namespace selfloop {

struct Spectrum {
  std::vector<double> values;  // non-increasing
  double residual = 0.0;       // largest off-diagonal magnitude left at convergence
  int sweeps_used = 0;
};

inline constexpr int kMaxJacobiSweeps = 100;
inline constexpr double kJacobiThreshold = 1e-12;

// Cyclic Jacobi on a dense symmetric row-major matrix. Converged once every
// off-diagonal magnitude is below 1e-12 * max(1, ||A||_F). Throws
// NoConvergence after 100 sweeps.
Spectrum symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

Spectrum eigenvalues(const SelfLoopGraph& g);

// Exact M_k = Tr(A^k) through integer matrix powers. Throws Overflow.
std::int64_t spectral_moment(const SelfLoopGraph& g, int k);

// Σ λ_i^k over the floating-point spectrum.
double power_sum(const Spectrum& s, int k);

// Σ |λ_i - center|^q with 0^0 = 1. Deviations within 1e-12 of zero, relative
// to the largest |λ_i|, count as exact zeros so solver noise does not leak
// through fractional exponents. Throws NegativeExponentUnsupported for q < 0.
inline constexpr double kDeviationFloor = 1e-12;
double twisted_moment(std::span<const double> values, double center, double q);

// Σ |λ_i - M_k/n|^q. k = 1 centres on σ/n, the case every bound below uses.
double twisted_moment(const SelfLoopGraph& g, const Spectrum& s, double q, int k = 1);

// Σ |λ_i - σ/n|
double energy(const SelfLoopGraph& g, const Spectrum& s);

// Number of eigenvalues at or above σ/n, ties within 1e-9 counted as above.
std::size_t upper_split(const SelfLoopGraph& g, const Spectrum& s);

// Third twisted moment rebuilt from the eigenvalues >= σ/n, the walk counts
// w2, w3 and the energy. `split` overrides the number of leading eigenvalues
// treated as >= σ/n.
double m3_closed_form(const SelfLoopGraph& g, const Spectrum& s, std::optional<std::size_t> split = {});

// w4 - (4σ/n) w3 + (6σ²/n²) w2 - 3σ⁴/n³ from the walk formulas.
double m4_closed_form(const SelfLoopGraph& g);

enum class Relation { at_most, at_least, greater_than };

std::string_view to_string(Relation r);

// One evaluated inequality `lhs <relation> rhs`. slack >= 0 means the
// inequality holds exactly; `holds` accepts slack down to -tolerance
// (strictly positive slack for greater_than).
struct BoundRecord {
  std::string name;
  Relation relation = Relation::at_most;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
};

inline constexpr double kBoundTolerance = 1e-9;
inline constexpr double kPositivityFloor = 1e-12;

BoundRecord make_bound(std::string name, double lhs, Relation relation, double rhs,
                       double tolerance = kBoundTolerance);

// M_q^2 <= M_{2q-2p} M_{2p} for 0 <= p <= q. Throws
// NegativeExponentUnsupported for p < 0 and ConstraintViolation for p > q.
BoundRecord verify_cauchy_schwarz(const SelfLoopGraph& g, const Spectrum& s, double p, double q);

// E <= sqrt(n (2m + σ - σ²/n))
BoundRecord mcclelland_bound(const SelfLoopGraph& g, const Spectrum& s);

// M_q^2 / n <= M_{2q} and M_q^4 / n^3 <= M_{4q}.
std::vector<BoundRecord> verify_moment_powers(const SelfLoopGraph& g, const Spectrum& s, double q);

// M_i > 1e-12 for i = 0..i_max. Throws DisconnectedInput unless G is
// connected with m >= 1.
std::vector<BoundRecord> verify_positivity(const SelfLoopGraph& g, const Spectrum& s, int i_max);

// Positivity of M_0..M_{q_max} and M_i/M_{i-1} <= M_{i+1}/M_i for
// i = 1..q_max-1, within relative tolerance 1e-9. Throws DisconnectedInput
// unless G is connected with m >= 1.
std::vector<BoundRecord> verify_ratio_chain(const SelfLoopGraph& g, const Spectrum& s, int q_max);

struct RstTriple {
  double r = 0.0;
  double s = 0.0;
  double t = 0.0;
};

// Energy lower bounds:
//   E >= sqrt(M2^3 / M4),  E >= 4m/n,  M3 >= 64 m^3 / n^5,  M4 >= 256 m^4 / n^7,
//   E >= M_r^2 / sqrt(M_s M_t) for each non-negative (r, s, t) with 4r = s + t + 2.
// Throws ConstraintViolation for a bad triple and DisconnectedInput unless G is
// connected with m >= 1.
std::vector<BoundRecord> energy_lower_bounds(const SelfLoopGraph& g, const Spectrum& s,
                                             std::span<const RstTriple> triples);

struct MomentReport {
  Spectrum spectrum;
  std::vector<std::int64_t> spectral_moments;  // M_0..M_K, exact
  std::map<double, double> twisted;             // q -> M_q
  double energy = 0.0;
  double m3_closed = 0.0;
  double m4_closed = 0.0;
  double m3_direct = 0.0;
  double m4_direct = 0.0;
  std::vector<BoundRecord> bounds;
};

// Moments only; bound records are left for the verifiers.
MomentReport moment_report(const SelfLoopGraph& g, int max_spectral_moment, std::span<const double> qs);

}  // namespace selfloop
