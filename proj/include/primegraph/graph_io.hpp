#ifndef PRIMEGRAPH_GRAPH_IO_HPP
#define PRIMEGRAPH_GRAPH_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

// graph6 (McKay). Accepts an optional ">>graph6<<" prefix and a trailing newline.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Plain adjacency list: "p <order> <edges>" then one 0-indexed "u v" per line.
// Blank lines and lines starting with '#' or 'c ' are ignored.
Graph parse_adjacency_list(std::string_view text);
std::string emit_adjacency_list(const Graph& g);

std::string emit_dot(const Graph& g, const std::string& name = "G");

// One graph per record: either a file of graph6 lines or a single adjacency list.
struct GraphRecord {
    std::size_t line = 0;  // 1-based source line
    Graph graph;
    std::string error;     // non-empty when the record failed to parse
};
std::vector<GraphRecord> read_graph_records(std::string_view text);

// First graph of a file; throws on any parse error.
Graph read_graph_text(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string slurp_file(const std::string& path);

}  // namespace primegraph

#endif  // PRIMEGRAPH_GRAPH_IO_HPP
