#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rigclique/graph.hpp"
#include "rigclique/labels.hpp"

namespace rigclique {

// Text formats (ASCII, LF line endings, single-space separators; lines
// starting with '#' and blank lines are skipped on input):
//
//   graph file   "n e" header, then e lines "u v"
//   label file   "n m" header, then n lines "v: i1 i2 ..." with v = 0..n-1
//
// Encoders emit the canonical form: edges as u < v in ascending order, label
// lists ascending, and "v:" for a vertex without labels.

Graph decode_graph(std::string_view text);
std::string encode_graph(const Graph& g);

LabelRepresentation decode_labels(std::string_view text);
std::string encode_labels(const LabelRepresentation& rep);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace rigclique
