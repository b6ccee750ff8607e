#ifndef PRIMEGRAPH_GRAPH_HPP
#define PRIMEGRAPH_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/bitset.hpp"

namespace primegraph {

using Vertex = int;
// Vertex indices of some host graph; order is preserved where it carries meaning (roles, sequences).
using VertexSet = std::vector<Vertex>;
// Pattern index -> host index, injective.
using VertexMap = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/**
 * Simple undirected graph on vertices 0..order-1, stored as a packed symmetric
 * bit relation with O(1) adjacency tests. Immutable once built; use GraphBuilder
 * or the constructors below to make one.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);  // edgeless

    static Graph from_edges(int order, std::span<const Edge> edges);

    int order() const { return static_cast<int>(rows_.size()); }
    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    const Bitset& neighbors(Vertex v) const { return rows_[v]; }
    // Vertices other than v that are not adjacent to v.
    Bitset non_neighbors(Vertex v) const;
    int degree(Vertex v) const { return rows_[v].count(); }
    std::size_t edge_count() const;
    std::vector<Edge> edges() const;  // u < v, lexicographic
    Bitset all_vertices() const { return Bitset::full(order()); }

    bool contains(Vertex v) const { return v >= 0 && v < order(); }

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    friend class GraphBuilder;
    std::vector<Bitset> rows_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int order);
    explicit GraphBuilder(const Graph& g) : g_(g) {}

    int order() const { return g_.order(); }
    GraphBuilder& add_edge(Vertex u, Vertex v);
    GraphBuilder& remove_edge(Vertex u, Vertex v);
    GraphBuilder& set_edge(Vertex u, Vertex v, bool present) {
        return present ? add_edge(u, v) : remove_edge(u, v);
    }
    bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
    Graph build() const { return g_; }

private:
    void check(Vertex u, Vertex v) const;
    Graph g_;
};

struct InducedSubgraph {
    Graph graph;
    VertexMap map;  // new index -> host index
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_complete(const Graph& g, const VertexSet& s);
// v adjacent to some member of s and non-adjacent to another. Requires v not in s.
bool is_mixed(const Graph& g, Vertex v, const VertexSet& s);

Graph line_graph(const Graph& g);
// Each edge uv becomes an induced path u, w_1..w_m, v; new vertices are appended in edge order.
Graph subdivision(const Graph& g, int m);

// Probability carried as an exact fraction so sampling is reproducible bit for bit.
struct Probability {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    static Probability parse(const std::string& text);  // "0.25", "1/4", "1"
};

// Each unordered pair {u<v} sampled independently, in lexicographic order, from mt19937_64(seed).
Graph random_graph(int order, Probability p, std::uint64_t seed);

Graph empty_graph(int order);
Graph complete_graph(int order);
Graph path_graph(int order);
Graph cycle_graph(int order);
Graph complete_bipartite(int left, int right);
Graph star_graph(int leaves);  // K_{1,leaves}, centre 0

// Throws InputError unless every member is a vertex of g and members are distinct.
void validate_vertex_set(const Graph& g, const VertexSet& s);
Bitset to_bitset(const Graph& g, const VertexSet& s);

}  // namespace primegraph

#endif  // PRIMEGRAPH_GRAPH_HPP
