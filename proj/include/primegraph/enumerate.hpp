#ifndef PRIMEGRAPH_ENUMERATE_HPP
#define PRIMEGRAPH_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "primegraph/graph.hpp"

namespace primegraph {

// Small-graph toolkit backing the exhaustive test corpora. Orders above kMaxCanonicalOrder are refused.
inline constexpr int kMaxCanonicalOrder = 10;

// Canonical relabelling code: equal iff isomorphic.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

// One representative per isomorphism class, in canonical form, sorted by code.
std::vector<Graph> all_graphs(int order);
std::vector<Graph> all_graphs_up_to(int max_order);

}  // namespace primegraph

#endif  // PRIMEGRAPH_ENUMERATE_HPP
