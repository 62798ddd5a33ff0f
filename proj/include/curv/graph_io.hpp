#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "curv/graph.hpp"

namespace curv {

enum class GraphFormat { Graph6, Json };

GraphFormat parse_graph_format(std::string_view name);

// graph6 without the optional ">>graph6<<" header; the reader tolerates it.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// {"n": int, "edges": [[u,v],...]} with u < v and edges sorted.
std::string to_json(const Graph& g);
Graph from_json(std::string_view text);

// Format is sniffed from content: a leading '{' means JSON.
Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format);

}  // namespace curv
