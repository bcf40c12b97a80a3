#include "selfloop/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "selfloop/census.hpp"
#include "selfloop/graph_file.hpp"
#include "selfloop/oracle.hpp"
#include "selfloop/walks.hpp"

namespace selfloop {

using nlohmann::json;

namespace {

constexpr double kClosedFormTolerance = 1e-7;

std::string real_key(double q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", q);
  return buf;
}

json reals(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(report_real(x));
  return out;
}

}  // namespace

int bounds_exit_code(const json& bounds) {
  const bool ok =
      std::all_of(bounds.begin(), bounds.end(), [](const json& b) { return b.at("holds").get<bool>(); });
  return ok ? kExitOk : kExitViolation;
}

double report_real(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double rounded = std::strtod(buf, nullptr);
  return rounded == 0.0 ? 0.0 : rounded;  // no "-0.0"
}

json graph_summary(const SelfLoopGraph& g) {
  return {{"n", g.order()}, {"m", g.size()}, {"sigma", g.sigma()}, {"connected", is_connected(g)}};
}

json to_json(const BoundRecord& b) {
  return {{"name", b.name},
          {"relation", std::string(to_string(b.relation))},
          {"lhs", report_real(b.lhs)},
          {"rhs", report_real(b.rhs)},
          {"slack", report_real(b.slack)},
          {"holds", b.holds}};
}

Report cmd_walks(const SelfLoopGraph& g, int kmax) {
  Report r;
  json counts = json::array();
  const WalkCounts formula = walk_counts(g);
  for (int k = 1; k <= kmax; ++k) {
    json row{{"k", k}, {"trace", trace_power(g, k)}};
    if (k <= 4) {
      row["formula"] = formula[k];
      row["agree"] = formula[k] == row["trace"].get<std::int64_t>();
      if (!row["agree"].get<bool>()) r.exit_code = kExitViolation;
    }
    counts.push_back(std::move(row));
  }
  r.body = {{"graph", graph_summary(g)}, {"walks", {{"kmax", kmax}, {"counts", counts}}}};
  return r;
}

Report cmd_moments(const SelfLoopGraph& g, std::span<const double> qs) {
  Report r;
  const MomentReport m = moment_report(g, 4, qs);
  const double n = static_cast<double>(g.order());
  const double sigma = static_cast<double>(g.sigma());

  json twisted = json::object();
  for (const auto& [q, value] : m.twisted) twisted[real_key(q)] = report_real(value);

  const bool m3_ok = std::abs(m.m3_closed - m.m3_direct) <= kClosedFormTolerance;
  const bool m4_ok = std::abs(m.m4_closed - m.m4_direct) <= kClosedFormTolerance;
  if (!m3_ok || !m4_ok) r.exit_code = kExitViolation;

  json moments{
      {"spectrum",
       {{"eigenvalues", reals(m.spectrum.values)},
        {"residual", report_real(m.spectrum.residual)},
        {"sweeps", m.spectrum.sweeps_used}}},
      {"spectral_moments", m.spectral_moments},
      {"twisted", twisted},
      {"energy", report_real(m.energy)},
      {"m2_expected", report_real(2.0 * static_cast<double>(g.size()) + sigma - sigma * sigma / n)},
      {"closed_form",
       {{"m3", report_real(m.m3_closed)},
        {"m3_direct", report_real(m.m3_direct)},
        {"m3_agree", m3_ok},
        {"m4", report_real(m.m4_closed)},
        {"m4_direct", report_real(m.m4_direct)},
        {"m4_agree", m4_ok}}},
  };
  r.body = {{"graph", graph_summary(g)}, {"moments", moments}};
  if (!is_connected(g)) r.body["warnings"] = json::array({"graph is disconnected"});
  return r;
}

Report cmd_census(const SelfLoopGraph& g) {
  const SubgraphCensus c = census(g);
  json body{
      {"zagreb1", c.zagreb1},
      {"degree_sum_S", c.degree_sum_S},
      {"n1_per_vertex", c.boundary.n1},
      {"n2_per_vertex", c.boundary.n2},
      {"n1_sum_S", c.boundary.n1_sum_S},
      {"triangles_total", c.triangles_total()},
      {"tri_loops", {c.tri_loops(1), c.tri_loops(2), c.tri_loops(3)}},
      {"triangles_per_vertex", c.triangles.per_vertex},
      {"c4_not_k4", c.c4_not_k4()},
      {"k4_count", c.k4_count()},
      {"four_cycles_total", c.four_cycles.total_four_cycles()},
  };
  Report r;
  r.body = {{"graph", graph_summary(g)}, {"census", body}};
  return r;
}

json verify_graph(const SelfLoopGraph& g, const VerifyOptions& options) {
  const Spectrum s = eigenvalues(g);
  json bounds = json::array();
  json notes = json::array();

  for (std::size_t i = 0; i < options.exponents.size(); ++i)
    for (std::size_t j = 0; j < options.exponents.size(); ++j) {
      const double p = options.exponents[i], q = options.exponents[j];
      if (p <= q) bounds.push_back(to_json(verify_cauchy_schwarz(g, s, p, q)));
    }
  bounds.push_back(to_json(mcclelland_bound(g, s)));
  for (double q : options.exponents)
    for (const BoundRecord& b : verify_moment_powers(g, s, q)) bounds.push_back(to_json(b));

  if (is_connected(g) && g.size() > 0) {
    for (const BoundRecord& b : verify_positivity(g, s, std::max(options.positivity_max, options.chain_depth)))
      bounds.push_back(to_json(b));
    for (const BoundRecord& b : verify_ratio_chain(g, s, options.chain_depth))
      if (b.name.starts_with("ratio_chain")) bounds.push_back(to_json(b));
    for (const BoundRecord& b : energy_lower_bounds(g, s, options.rst)) bounds.push_back(to_json(b));
  } else {
    notes.push_back("DisconnectedInput: positivity, ratio chain and energy lower bounds need a connected graph "
                    "with at least one edge; skipped");
  }
  return {{"graph", graph_summary(g)}, {"bounds", bounds}, {"notes", notes}};
}

Report cmd_verify(const SelfLoopGraph& g, const VerifyOptions& options) {
  Report r;
  r.body = verify_graph(g, options);
  if (!r.body["notes"].empty()) r.body["warnings"] = json::array({"graph is disconnected or edgeless"});
  r.exit_code = bounds_exit_code(r.body["bounds"]);
  return r;
}

Report cmd_verify_sampled(const SamplerConfig& config, const VerifyOptions& options) {
  Report r;
  GraphSampler sampler(config);
  json graphs = json::array();
  std::size_t records = 0, violations = 0;
  for (std::size_t i = 0; i < config.count; ++i) {
    const SelfLoopGraph g = sampler.next();
    json entry = verify_graph(g, options);
    entry["index"] = i;
    entry["file"] = serialize_graph(g);
    std::size_t failed = 0;
    for (const json& b : entry["bounds"]) {
      ++records;
      if (!b["holds"].get<bool>()) ++failed;
    }
    entry["violations"] = failed;
    violations += failed;
    graphs.push_back(std::move(entry));
  }
  r.body = {
      {"sampler",
       {{"seed", config.seed},
        {"count", config.count},
        {"n_min", config.n_min},
        {"n_max", config.n_max},
        {"edge_probability", report_real(config.edge_probability)},
        {"loop_probability", report_real(config.loop_probability)}}},
      {"graphs", graphs},
      {"summary", {{"graphs", config.count}, {"records", records}, {"violations", violations}}},
  };
  r.exit_code = violations == 0 ? kExitOk : kExitViolation;
  return r;
}

std::string cmd_generate(const FamilySpec& spec) {
  return "# " + spec.describe() + "\n" + serialize_graph(generate(spec));
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_table(const json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); });
}

void render_table(std::ostringstream& out, const std::string& title, const json& rows) {
  std::vector<std::string> columns;
  for (const json& row : rows)
    for (const auto& item : row.items())
      if (!item.value().is_structured() &&
          !(item.value().is_string() && item.value().get<std::string>().find('\n') != std::string::npos) &&
          std::find(columns.begin(), columns.end(), item.key()) == columns.end())
        columns.push_back(item.key());
  if (auto it = std::find(columns.begin(), columns.end(), "name"); it != columns.end())
    std::rotate(columns.begin(), it, it + 1);

  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const json& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::string cell = row.contains(columns[i]) ? scalar_text(row[columns[i]]) : "";
      width[i] = std::max(width[i], cell.size());
      line.push_back(std::move(cell));
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    out << "  ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << "\n";
  };
  out << title << ":\n";
  emit(columns);
  for (const auto& line : cells) emit(line);
}

void render_object(std::ostringstream& out, const std::string& prefix, const json& obj) {
  std::size_t key_width = 0;
  for (const auto& item : obj.items())
    if (!item.value().is_object() && !is_table(item.value()))
      key_width = std::max(key_width, prefix.size() + item.key().size());
  for (const auto& item : obj.items()) {
    const std::string key = prefix + item.key();
    if (item.value().is_object()) {
      render_object(out, key + ".", item.value());
    } else if (is_table(item.value())) {
      render_table(out, key, item.value());
    } else {
      std::string text = item.value().is_array() ? item.value().dump() : scalar_text(item.value());
      out << key << std::string(key_width - key.size() + 2, ' ') << text << "\n";
    }
  }
}

}  // namespace

std::string render(const Report& report, Format format) {
  if (format == Format::json) return report.body.dump(2) + "\n";
  std::ostringstream out;
  render_object(out, "", report.body);
  return out.str();
}

}  // namespace selfloop
