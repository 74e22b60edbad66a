#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "hedetniemi/graph.hpp"

namespace hedetniemi {

/// Parses DIMACS .col text ("p edge n m", "e u v", 1-based, 'c' comments).
/// Throws ParseError on malformed lines or out-of-range endpoints. The
/// header's m is informational; duplicate edge lines are collapsed.
Graph parse_dimacs(std::string_view text);

/// Canonical emission: header, then one "e u v" line per edge with u <= v,
/// sorted lexicographically. No comments.
std::string emit_dimacs(const Graph& g);

Graph read_dimacs_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

std::string sha256_hex(std::string_view data);

/// SHA-256 of the canonical DIMACS emission, lowercase hex.
std::string graph_hash(const Graph& g);

/// Graphviz rendering, optional per-vertex labels.
std::string emit_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace hedetniemi
