#ifndef PRIMEGRAPH_ORACLES_HPP
#define PRIMEGRAPH_ORACLES_HPP

// Brute-force reference implementations. Deliberately naive and independent of the
// search code they check; all refuse graphs above kOracleMaxOrder.

#include <optional>

#include "primegraph/configs.hpp"
#include "primegraph/graph.hpp"

namespace primegraph::oracle {

inline constexpr int kOracleMaxOrder = 8;

// Smallest module containing s, found by scanning every superset of s.
VertexSet minimal_module(const Graph& g, const VertexSet& s);
// Prime iff no subset X with 2 <= |X| < order is a module.
bool is_prime(const Graph& g);
// Every triple (pair, target) admits a chain, checked by enumerating vertex sequences.
bool all_triples_have_chain(const Graph& g);
// Some sequence starting from the base pair (either order) is a chain ending at target.
bool chain_exists(const Graph& g, Vertex x, Vertex y, Vertex target);

// Enumerates every injective role assignment and checks the configuration's adjacency rules directly.
std::optional<VertexSet> find_config(const Graph& g, ConfigKind kind, int n);

// Largest t such that some subset arranges as a full binary type tree of height t.
int tree_rank(const Graph& g);

}  // namespace primegraph::oracle

#endif  // PRIMEGRAPH_ORACLES_HPP
