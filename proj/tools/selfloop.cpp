// selfloop: closed walks, twisted moments and energy bounds of self-loop graphs.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "selfloop/commands.hpp"
#include "selfloop/error.hpp"
#include "selfloop/families.hpp"
#include "selfloop/graph_file.hpp"

namespace {

using namespace selfloop;

RstTriple parse_rst(const std::string& text) {
  std::vector<double> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "--rst expects r,s,t; got '" + text + "'");
    }
  }
  if (parts.size() != 3) throw Error(ErrorCode::ParseError, "--rst expects r,s,t; got '" + text + "'");
  return {parts[0], parts[1], parts[2]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed walks, twisted moments and energy bounds of self-loop graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();

  std::string file;
  int kmax = 4;
  auto* walks = app.add_subcommand("walks", "Closed k-walk counts by formula and by matrix trace");
  walks->add_option("file", file, "Graph file")->required();
  walks->add_option("--kmax", kmax, "Largest walk length")->check(CLI::Range(1, 64))->capture_default_str();

  std::vector<double> qs{0, 1, 2, 3, 4};
  auto* moments = app.add_subcommand("moments", "Spectrum, spectral and twisted moments, energy");
  moments->add_option("file", file, "Graph file")->required();
  moments->add_option("--q", qs, "Twisted moment exponents (comma separated)")->delimiter(',');

  auto* census_cmd = app.add_subcommand("census", "Degree, loop-boundary, triangle and 4-cycle counts");
  census_cmd->add_option("file", file, "Graph file")->required();

  VerifyOptions verify_options;
  SamplerConfig sampler;
  std::vector<std::string> rst_args;
  auto* verify = app.add_subcommand("verify", "Evaluate the moment and energy inequalities");
  verify->add_option("file", file, "Graph file; omit to use the random sampler");
  verify->add_option("--chain-depth", verify_options.chain_depth, "Ratio chain depth")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  verify->add_option("--rst", rst_args, "Triple r,s,t with 4r = s + t + 2 (repeatable)");
  verify->add_option("--count", sampler.count, "Sampler: number of graphs")->capture_default_str();
  verify->add_option("--n-min", sampler.n_min, "Sampler: smallest order")->capture_default_str();
  verify->add_option("--n-max", sampler.n_max, "Sampler: largest order")->capture_default_str();
  verify->add_option("--edge-prob", sampler.edge_probability, "Sampler: edge probability")->capture_default_str();
  verify->add_option("--loop-prob", sampler.loop_probability, "Sampler: loop probability")->capture_default_str();
  verify->add_option("--seed", sampler.seed, "Sampler: seed")->capture_default_str();

  std::string family_name, output;
  FamilySpec spec;
  std::vector<std::size_t> loops;
  std::size_t sigma_a = 0, sigma_b = 0, rim_loops = 0;
  bool center_loop = false;
  auto* gen = app.add_subcommand("generate", "Write the graph file of a named family");
  gen->add_option("--family", family_name, "complete, complete_bipartite, cycle, path, wheel, star, kneser, petersen")
      ->required();
  gen->add_option("--n", spec.n, "Order (complete, cycle, path, wheel, star)");
  gen->add_option("--a", spec.a, "First part size (complete_bipartite)");
  gen->add_option("--b", spec.b, "Second part size (complete_bipartite)");
  gen->add_option("--k", spec.k, "Kneser parameter: K(2k+1, k)");
  auto* loops_opt = gen->add_option("--loops", loops, "Looped vertices (comma separated)")->delimiter(',');
  auto* sa_opt = gen->add_option("--sigma-a", sigma_a, "Loops on the first vertices of part A");
  auto* sb_opt = gen->add_option("--sigma-b", sigma_b, "Loops on the first vertices of part B");
  auto* center_opt = gen->add_flag("--center-loop", center_loop, "Wheel: loop the centre");
  auto* rim_opt = gen->add_option("--rim-loops", rim_loops, "Wheel: loop rim vertices 1..r");
  sa_opt->excludes(loops_opt);
  sb_opt->excludes(loops_opt);
  center_opt->excludes(loops_opt);
  rim_opt->excludes(loops_opt);
  gen->add_option("-o,--output", output, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const Format format = format_name == "table" ? Format::table : Format::json;
  try {
    Report report;
    if (*walks) {
      report = cmd_walks(read_graph_file(file), kmax);
    } else if (*moments) {
      report = cmd_moments(read_graph_file(file), qs);
    } else if (*census_cmd) {
      report = cmd_census(read_graph_file(file));
    } else if (*verify) {
      if (!rst_args.empty()) {
        verify_options.rst.clear();
        for (const auto& text : rst_args) verify_options.rst.push_back(parse_rst(text));
      }
      report = file.empty() ? cmd_verify_sampled(sampler, verify_options)
                            : cmd_verify(read_graph_file(file), verify_options);
    } else {
      spec.family = parse_family(family_name);
      if (*sa_opt || *sb_opt)
        spec.loops = PartLoops{sigma_a, sigma_b};
      else if (*center_opt || *rim_opt)
        spec.loops = WheelLoops{center_loop, rim_loops};
      else
        spec.loops = ExplicitLoops{loops};
      const std::string text = cmd_generate(spec);
      if (output.empty())
        std::cout << text;
      else
        write_graph_file(output, text);
      return kExitOk;
    }

    std::cout << render(report, format);
    if (report.body.contains("warnings"))
      for (const auto& w : report.body["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
    return report.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
