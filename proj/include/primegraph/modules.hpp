#ifndef PRIMEGRAPH_MODULES_HPP
#define PRIMEGRAPH_MODULES_HPP

#include <optional>
#include <vector>

#include "primegraph/errors.hpp"
#include "primegraph/graph.hpp"

namespace primegraph {

// Chain v_0..v_m from base {v_0, v_1}: each v_i (i >= 2) sees v_{i-1} as its unique neighbour
// or unique non-neighbour among v_0..v_{i-1}. Length is m.
struct Chain {
    VertexSet vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    VertexSet base() const { return {vertices.at(0), vertices.at(1)}; }
    friend bool operator==(const Chain&, const Chain&) = default;
};

struct PrimalityReport {
    bool prime = true;
    std::optional<VertexSet> counterexample;  // a module with 2 <= |X| < order
};

bool is_module(const Graph& g, const VertexSet& s);
Bitset module_closure(const Graph& g, const Bitset& s);
// Smallest module containing s (|s| >= 2). Grows s by the lowest-index mixed vertex until none is left.
VertexSet module_closure(const Graph& g, const VertexSet& s);

// Graphs of order <= 2 count as prime (no subset is a non-trivial module).
PrimalityReport is_prime(const Graph& g);

bool is_chain(const Graph& g, const VertexSet& seq, const VertexSet& base);

// Shortest chain from base (|base| == 2) ending at target with length <= max_len, or nullopt.
// max_len < 0 means unbounded. Ties go to the lowest-index extension.
std::optional<Chain> find_chain(const Graph& g, const VertexSet& base, Vertex target, int max_len = -1);

// Shortest chain length from every ordered base to every target, computed by one sweep per pair.
// Entry [x][y][z] is -1 when no chain exists (or z in {x,y}).
struct ChainDistances {
    int order = 0;
    std::vector<int> dist;  // order^3, index (x*order + y)*order + z, symmetric in x,y
    int at(Vertex x, Vertex y, Vertex z) const { return dist[(static_cast<std::size_t>(x) * order + y) * order + z]; }
};
ChainDistances chain_distances(const Graph& g, Budget* budget = nullptr);

// Smallest n such that every triple of distinct vertices has a chain of length <= n, or nullopt
// when some triple has none (then g is not prime).
std::optional<int> chain_radius(const Graph& g);

// Searches for a chain of exactly `length` from any base pair. Unknown when the budget runs out.
struct ChainSearchResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<Chain> chain;
};
ChainSearchResult find_chain_of_length(const Graph& g, int length, Budget budget = Budget::unlimited());

// Given a chain of length t > 3, a chain of length t-1 inside its vertex set that induces a prime graph.
Chain shrink_to_prime_chain(const Graph& g, const Chain& c);

}  // namespace primegraph

#endif  // PRIMEGRAPH_MODULES_HPP
