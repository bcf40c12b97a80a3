#include "selfloop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "selfloop/error.hpp"
#include "selfloop/oracle.hpp"
#include "selfloop/walks.hpp"

namespace selfloop {

namespace {

double max_off_diagonal(const std::vector<double>& a, std::size_t n) {
  double off = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p * n + q]));
  return off;
}

void rotate(std::vector<double>& a, std::size_t n, std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a[p * n + p] -= t * apq;
  a[q * n + q] += t * apq;
  a[p * n + q] = a[q * n + p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a[r * n + p];
    const double arq = a[r * n + q];
    a[r * n + p] = a[p * n + r] = c * arp - s * arq;
    a[r * n + q] = a[q * n + r] = s * arp + c * arq;
  }
}

std::string fmt_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

void require_connected_with_edges(const SelfLoopGraph& g, std::string_view what) {
  if (!is_connected(g) || g.size() == 0)
    throw Error(ErrorCode::DisconnectedInput,
                std::string(what) + " requires a connected graph with at least one edge");
}

double center(const SelfLoopGraph& g) {
  return static_cast<double>(g.sigma()) / static_cast<double>(g.order());
}

}  // namespace

Spectrum symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  double frobenius = 0.0;
  for (double x : a) frobenius += x * x;
  frobenius = std::sqrt(frobenius);
  const double threshold = kJacobiThreshold * std::max(1.0, frobenius);

  Spectrum out;
  double off = max_off_diagonal(a, n);
  while (off >= threshold) {
    if (out.sweeps_used == kMaxJacobiSweeps)
      throw Error(ErrorCode::NoConvergence, "Jacobi iteration did not converge in 100 sweeps");
    ++out.sweeps_used;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a[p * n + q] != 0.0) rotate(a, n, p, q);
    off = max_off_diagonal(a, n);
  }
  out.residual = off;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

Spectrum eigenvalues(const SelfLoopGraph& g) {
  const AdjacencyMatrix adj = adjacency(g);
  return symmetric_eigenvalues(std::vector<double>(adj.data().begin(), adj.data().end()), g.order());
}

std::int64_t spectral_moment(const SelfLoopGraph& g, int k) { return trace_power(g, k); }

double power_sum(const Spectrum& s, int k) {
  double total = 0.0;
  for (double x : s.values) total += std::pow(x, k);
  return total;
}

double twisted_moment(std::span<const double> values, double c, double q) {
  if (q < 0.0) throw Error(ErrorCode::NegativeExponentUnsupported, "twisted moments need q >= 0");
  double scale = std::max(1.0, std::abs(c));
  for (double x : values) scale = std::max(scale, std::abs(x));
  const double zero = kDeviationFloor * scale;
  double total = 0.0;
  for (double x : values) {
    const double d = std::abs(x - c);
    total += std::pow(d <= zero ? 0.0 : d, q);
  }
  return total;
}

double twisted_moment(const SelfLoopGraph& g, const Spectrum& s, double q, int k) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "twisting moment index k must be >= 1");
  const double mk = k == 1 ? static_cast<double>(g.sigma()) : static_cast<double>(spectral_moment(g, k));
  return twisted_moment(s.values, mk / static_cast<double>(g.order()), q);
}

double energy(const SelfLoopGraph& g, const Spectrum& s) { return twisted_moment(g, s, 1.0); }

std::size_t upper_split(const SelfLoopGraph& g, const Spectrum& s) {
  const double c = center(g);
  return static_cast<std::size_t>(
      std::count_if(s.values.begin(), s.values.end(), [c](double x) { return x >= c - 1e-9; }));
}

double m3_closed_form(const SelfLoopGraph& g, const Spectrum& s, std::optional<std::size_t> split) {
  const std::size_t j = split.value_or(upper_split(g, s));
  double s1 = 0.0, s2 = 0.0, s3 = 0.0;
  for (std::size_t i = 0; i < j && i < s.values.size(); ++i) {
    const double x = s.values[i];
    s1 += x;
    s2 += x * x;
    s3 += x * x * x;
  }
  const double n = static_cast<double>(g.order());
  const double sigma = static_cast<double>(g.sigma());
  const double c = sigma / n;
  const double w2 = static_cast<double>(w2_formula(g));
  const double w3 = static_cast<double>(w3_formula(g));
  return 2.0 * s3 - 6.0 * c * s2 + 4.0 * c * c * s1 - w3 + 3.0 * c * w2 - 2.0 * sigma * sigma * sigma / (n * n) +
         c * c * energy(g, s);
}

double m4_closed_form(const SelfLoopGraph& g) {
  const WalkCounts w = walk_counts(g);
  const double n = static_cast<double>(g.order());
  const double sigma = static_cast<double>(g.sigma());
  const double c = sigma / n;
  return static_cast<double>(w.w4) - 4.0 * c * static_cast<double>(w.w3) +
         6.0 * c * c * static_cast<double>(w.w2) - 3.0 * std::pow(sigma, 4) / (n * n * n);
}

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::at_most: return "<=";
    case Relation::at_least: return ">=";
    case Relation::greater_than: return ">";
  }
  return "?";
}

BoundRecord make_bound(std::string name, double lhs, Relation relation, double rhs, double tolerance) {
  BoundRecord b{std::move(name), relation, lhs, rhs, 0.0, false};
  b.slack = relation == Relation::at_most ? rhs - lhs : lhs - rhs;
  b.holds = relation == Relation::greater_than ? b.slack > 0.0 : b.slack >= -tolerance;
  return b;
}

BoundRecord verify_cauchy_schwarz(const SelfLoopGraph& g, const Spectrum& s, double p, double q) {
  if (p < 0.0 || q < 0.0)
    throw Error(ErrorCode::NegativeExponentUnsupported, "Cauchy-Schwarz check needs p, q >= 0");
  if (p > q) throw Error(ErrorCode::ConstraintViolation, "Cauchy-Schwarz check needs p <= q");
  const double mq = twisted_moment(g, s, q);
  const double rhs = twisted_moment(g, s, 2.0 * q - 2.0 * p) * twisted_moment(g, s, 2.0 * p);
  return make_bound("cauchy_schwarz p=" + fmt_real(p) + " q=" + fmt_real(q), mq * mq, Relation::at_most, rhs);
}

BoundRecord mcclelland_bound(const SelfLoopGraph& g, const Spectrum& s) {
  const double n = static_cast<double>(g.order());
  const double sigma = static_cast<double>(g.sigma());
  const double m = static_cast<double>(g.size());
  return make_bound("mcclelland", energy(g, s), Relation::at_most, std::sqrt(n * (2.0 * m + sigma - sigma * sigma / n)));
}

std::vector<BoundRecord> verify_moment_powers(const SelfLoopGraph& g, const Spectrum& s, double q) {
  const double n = static_cast<double>(g.order());
  const double mq = twisted_moment(g, s, q);
  return {
      make_bound("moment_square q=" + fmt_real(q), mq * mq / n, Relation::at_most, twisted_moment(g, s, 2.0 * q)),
      make_bound("moment_fourth q=" + fmt_real(q), std::pow(mq, 4) / (n * n * n), Relation::at_most,
                 twisted_moment(g, s, 4.0 * q)),
  };
}

std::vector<BoundRecord> verify_positivity(const SelfLoopGraph& g, const Spectrum& s, int i_max) {
  require_connected_with_edges(g, "positivity check");
  std::vector<BoundRecord> out;
  for (int i = 0; i <= i_max; ++i)
    out.push_back(make_bound("positivity i=" + std::to_string(i), twisted_moment(g, s, i), Relation::greater_than,
                             kPositivityFloor));
  return out;
}

std::vector<BoundRecord> verify_ratio_chain(const SelfLoopGraph& g, const Spectrum& s, int q_max) {
  require_connected_with_edges(g, "ratio chain");
  std::vector<BoundRecord> out = verify_positivity(g, s, q_max);
  std::vector<double> m;
  for (int i = 0; i <= q_max; ++i) m.push_back(twisted_moment(g, s, i));
  for (int i = 1; i + 1 <= q_max; ++i) {
    const std::size_t k = static_cast<std::size_t>(i);
    const double lower = m[k] / m[k - 1];
    const double upper = m[k + 1] / m[k];
    out.push_back(make_bound("ratio_chain i=" + std::to_string(i), lower, Relation::at_most, upper,
                             kBoundTolerance * std::max(1.0, std::abs(upper))));
  }
  return out;
}

std::vector<BoundRecord> energy_lower_bounds(const SelfLoopGraph& g, const Spectrum& s,
                                             std::span<const RstTriple> triples) {
  for (const RstTriple& x : triples) {
    if (x.r < 0.0 || x.s < 0.0 || x.t < 0.0)
      throw Error(ErrorCode::ConstraintViolation, "r, s, t must be non-negative");
    if (std::abs(4.0 * x.r - (x.s + x.t + 2.0)) > 1e-12)
      throw Error(ErrorCode::ConstraintViolation, "(r, s, t) must satisfy 4r = s + t + 2");
  }
  require_connected_with_edges(g, "energy lower bounds");

  const double n = static_cast<double>(g.order());
  const double m = static_cast<double>(g.size());
  const double e = energy(g, s);
  const double m2 = twisted_moment(g, s, 2.0);
  const double m3 = twisted_moment(g, s, 3.0);
  const double m4 = twisted_moment(g, s, 4.0);

  std::vector<BoundRecord> out{
      make_bound("energy_m2_m4", e, Relation::at_least, std::sqrt(m2 * m2 * m2 / m4)),
      make_bound("energy_size_order", e, Relation::at_least, 4.0 * m / n),
      make_bound("m3_size_order", m3, Relation::at_least, 64.0 * std::pow(m, 3) / std::pow(n, 5)),
      make_bound("m4_size_order", m4, Relation::at_least, 256.0 * std::pow(m, 4) / std::pow(n, 7)),
  };
  for (const RstTriple& x : triples) {
    const double mr = twisted_moment(g, s, x.r);
    const double rhs = mr * mr / std::sqrt(twisted_moment(g, s, x.s) * twisted_moment(g, s, x.t));
    out.push_back(make_bound("energy_rst r=" + fmt_real(x.r) + " s=" + fmt_real(x.s) + " t=" + fmt_real(x.t), e,
                             Relation::at_least, rhs));
  }
  return out;
}

MomentReport moment_report(const SelfLoopGraph& g, int max_spectral_moment, std::span<const double> qs) {
  MomentReport r;
  r.spectrum = eigenvalues(g);
  for (int k = 0; k <= max_spectral_moment; ++k) r.spectral_moments.push_back(spectral_moment(g, k));
  for (double q : qs) r.twisted[q] = twisted_moment(g, r.spectrum, q);
  r.energy = energy(g, r.spectrum);
  r.m3_closed = m3_closed_form(g, r.spectrum);
  r.m4_closed = m4_closed_form(g);
  r.m3_direct = twisted_moment(g, r.spectrum, 3.0);
  r.m4_direct = twisted_moment(g, r.spectrum, 4.0);
  return r;
}

}  // namespace selfloop
