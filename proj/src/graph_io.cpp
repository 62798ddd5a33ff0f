#include "curv/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "curv/error.hpp"

namespace curv {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "json") return GraphFormat::Json;
  throw Error(ErrorKind::ParseError, "unknown graph format '" + std::string(name) + "'");
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int bits = 0;
  int acc = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw Error(ErrorKind::ParseError, "graph6 data truncated");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw Error(ErrorKind::ParseError, "invalid graph6 byte " + std::to_string(c));
    return c - 63;
  };
  std::size_t n = 0;
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty graph6 string");
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = static_cast<std::size_t>(next());
  } else {
    ++pos;
    int groups = 3;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126) {
      ++pos;
      groups = 6;
    }
    for (int k = 0; k < groups; ++k) n = (n << 6) | static_cast<std::size_t>(next());
  }
  const std::size_t pairs = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t expected = pos + (pairs + 5) / 6;
  if (text.size() != expected) {
    throw Error(ErrorKind::ParseError, "graph6 length " + std::to_string(text.size()) + " but expected " +
                                           std::to_string(expected) + " for n=" + std::to_string(n));
  }
  std::vector<Edge> edges;
  std::size_t bit_index = 0;
  int chunk = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      if (bit_index % 6 == 0) chunk = next();
      const int bit = (chunk >> (5 - bit_index % 6)) & 1;
      if (bit) edges.emplace_back(i, j);
      ++bit_index;
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_json(const Graph& g) {
  std::ostringstream os;
  os << "{\"n\": " << g.order() << ", \"edges\": [";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : ", ") << "[" << u << ", " << v << "]";
    first = false;
  }
  os << "]}";
  return os.str();
}

Graph from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc["n"].is_number_unsigned() ||
      !doc["edges"].is_array()) {
    throw Error(ErrorKind::ParseError, "graph JSON must be {\"n\": int, \"edges\": [[u,v],...]}");
  }
  const auto n = doc["n"].get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw Error(ErrorKind::ParseError, "graph JSON edge must be a pair of vertex indices");
    }
    edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
  }
  return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return from_graph6(text.substr(first == std::string::npos ? 0 : first));
}

void write_graph_file(const std::filesystem::path& path, const Graph& g, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << (format == GraphFormat::Json ? to_json(g) : to_graph6(g)) << '\n';
}

}  // namespace curv
