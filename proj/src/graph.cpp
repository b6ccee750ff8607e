#include "primegraph/graph.hpp"

#include <random>
#include <stdexcept>

#include "primegraph/errors.hpp"

namespace primegraph {

Graph::Graph(int order) {
    if (order < 0) throw InputError("graph order must be non-negative");
    rows_.assign(order, Bitset(order));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
    GraphBuilder b(order);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Bitset Graph::non_neighbors(Vertex v) const {
    Bitset b = rows_[v];
    b.flip();
    b.reset(v);
    return b;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u) {
        for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1)) out.emplace_back(u, v);
    }
    return out;
}

GraphBuilder::GraphBuilder(int order) : g_(order) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
    if (!g_.contains(u) || !g_.contains(v))
        throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
    check(u, v);
    g_.rows_[u].set(v);
    g_.rows_[v].set(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
    check(u, v);
    g_.rows_[u].reset(v);
    g_.rows_[v].reset(u);
    return *this;
}

Graph complement(const Graph& g) {
    GraphBuilder b(g.order());
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

void validate_vertex_set(const Graph& g, const VertexSet& s) {
    Bitset seen(g.order());
    for (Vertex v : s) {
        if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
        if (seen.test(v)) throw InputError("vertex " + std::to_string(v) + " listed twice");
        seen.set(v);
    }
}

Bitset to_bitset(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s);
    Bitset b(g.order());
    for (Vertex v : s) b.set(v);
    return b;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s);
    GraphBuilder b(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {b.build(), s};
}

bool is_independent(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_complete(const Graph& g, const VertexSet& s) {
    validate_vertex_set(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_mixed(const Graph& g, Vertex v, const VertexSet& s) {
    validate_vertex_set(g, s);
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    bool sees = false, misses = false;
    for (Vertex x : s) {
        if (x == v) throw InputError("is_mixed: vertex " + std::to_string(v) + " belongs to the set");
        (g.adjacent(v, x) ? sees : misses) = true;
    }
    return sees && misses;
}

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    GraphBuilder b(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, c] = es[i];
            auto [d, e] = es[j];
            if (a == d || a == e || c == d || c == e) b.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return b.build();
}

Graph subdivision(const Graph& g, int m) {
    if (m < 0) throw InputError("subdivision parameter must be non-negative");
    if (m == 0) return g;
    auto es = g.edges();
    const int n = g.order();
    GraphBuilder b(n + static_cast<int>(es.size()) * m);
    int next = n;
    for (auto [u, v] : es) {
        Vertex prev = u;
        for (int k = 0; k < m; ++k) {
            b.add_edge(prev, next);
            prev = next++;
        }
        b.add_edge(prev, v);
    }
    return b.build();
}

Probability Probability::parse(const std::string& text) {
    auto fail = [&] { return InputError("invalid probability '" + text + "'"); };
    Probability p;
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            std::size_t used = 0;
            p.num = std::stoull(text.substr(0, slash), &used);
            if (used != slash) throw fail();
            auto rest = text.substr(slash + 1);
            p.den = std::stoull(rest, &used);
            if (used != rest.size()) throw fail();
        } else {
            auto dot = text.find('.');
            std::string whole = text.substr(0, dot);
            std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
            if (frac.size() > 18 || (whole.empty() && frac.empty())) throw fail();
            for (char c : whole + frac)
                if (c < '0' || c > '9') throw fail();
            p.den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) p.den *= 10;
            p.num = (whole.empty() ? 0 : std::stoull(whole)) * p.den + (frac.empty() ? 0 : std::stoull(frac));
        }
    } catch (const std::logic_error&) {
        throw fail();
    }
    if (p.den == 0 || p.num > p.den) throw fail();
    return p;
}

Graph random_graph(int order, Probability p, std::uint64_t seed) {
    if (p.den == 0 || p.num > p.den) throw InputError("probability outside [0,1]");
    std::mt19937_64 rng(seed);
    // edge iff draw < p * 2^64
    const bool always = p.num == p.den;
    const auto threshold =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(p.num) << 64) / p.den);
    GraphBuilder b(order);
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v) {
            std::uint64_t draw = rng();
            if (always || draw < threshold) b.add_edge(u, v);
        }
    return b.build();
}

Graph empty_graph(int order) { return Graph(order); }

Graph complete_graph(int order) { return complement(Graph(order)); }

Graph path_graph(int order) {
    GraphBuilder b(order);
    for (Vertex v = 0; v + 1 < order; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph cycle_graph(int order) {
    if (order < 3) throw InputError("cycle needs at least 3 vertices");
    GraphBuilder b(order);
    for (Vertex v = 0; v < order; ++v) b.add_edge(v, (v + 1) % order);
    return b.build();
}

Graph complete_bipartite(int left, int right) {
    GraphBuilder b(left + right);
    for (Vertex u = 0; u < left; ++u)
        for (Vertex v = 0; v < right; ++v) b.add_edge(u, left + v);
    return b.build();
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

}  // namespace primegraph
