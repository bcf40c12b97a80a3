#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "selfloop/graph.hpp"

namespace selfloop {

// Plain-text graph format, one record per line:
//
//   # comment (anything after '#' is ignored)
//   n <order>        exactly once, before any other record
//   e <u> <v>        proper edge, 0-based
//   l <v>            loop at v
//
// Parse failures, including invalid graphs, throw ParseError naming the line.
SelfLoopGraph parse_graph(std::istream& in);
SelfLoopGraph parse_graph(std::string_view text);

// Throws IoError when the file cannot be opened.
SelfLoopGraph read_graph_file(const std::filesystem::path& path);

// Canonical form: `n` line, edges sorted with u < v, then loops ascending.
std::string serialize_graph(const SelfLoopGraph& g);

void write_graph_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace selfloop
