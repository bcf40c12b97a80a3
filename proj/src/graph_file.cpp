#include "selfloop/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "selfloop/error.hpp"

namespace selfloop {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    parse_error(line, "expected a non-negative decimal integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

SelfLoopGraph parse_graph(std::istream& in) {
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::vector<Vertex> loops;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    const std::string& tag = tokens[0];
    auto expect_arity = [&](std::size_t count) {
      if (tokens.size() != count + 1)
        parse_error(line, "'" + tag + "' takes " + std::to_string(count) + " argument(s)");
    };
    auto vertex = [&](const std::string& token) {
      std::size_t v = parse_index(token, line);
      if (v >= *order) parse_error(line, "vertex " + token + " out of range for order " + std::to_string(*order));
      return v;
    };

    if (tag == "n") {
      if (order) parse_error(line, "duplicate 'n' record");
      expect_arity(1);
      order = parse_index(tokens[1], line);
      if (*order == 0) parse_error(line, "order must be positive");
      continue;
    }
    if (!order) parse_error(line, "'n' record must come first");
    if (tag == "e") {
      expect_arity(2);
      edges.push_back({vertex(tokens[1]), vertex(tokens[2])});
    } else if (tag == "l") {
      expect_arity(1);
      loops.push_back(vertex(tokens[1]));
    } else {
      parse_error(line, "unknown record '" + tag + "'");
    }
  }
  if (!order) throw Error(ErrorCode::ParseError, "missing 'n' record");

  try {
    return SelfLoopGraph::build(*order, edges, loops);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid graph: ") + e.what());
  }
}

SelfLoopGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

SelfLoopGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return parse_graph(in);
}

std::string serialize_graph(const SelfLoopGraph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  for (Vertex v : g.loops()) out += "l " + std::to_string(v) + "\n";
  return out;
}

void write_graph_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << contents;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace selfloop
