#ifndef PRIMEGRAPH_TYPE_TREE_HPP
#define PRIMEGRAPH_TYPE_TREE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primegraph/configs.hpp"
#include "primegraph/errors.hpp"
#include "primegraph/graph.hpp"

namespace primegraph {

// Binary address: a string over {'0','1'}; the root is "".
using NodeAddr = std::string;

inline NodeAddr child(const NodeAddr& a, int bit) { return a + (bit ? '1' : '0'); }
inline bool is_prefix(const NodeAddr& p, const NodeAddr& a) {
    return p.size() <= a.size() && a.compare(0, p.size(), p) == 0;
}

/**
 * Injective assignment of binary addresses to host vertices.
 * Invariants (see check_type_tree): prefix-closed domain, injective, and path
 * consistency: for an ancestor eta of sigma reached through child bit i,
 * vertex(sigma) is adjacent to vertex(eta) iff i == 1.
 * Immutable once built.
 */
class TypeTree {
public:
    TypeTree() = default;
    TypeTree(Graph host, std::map<NodeAddr, Vertex> nodes);

    const Graph& host() const { return host_; }
    const std::map<NodeAddr, Vertex>& nodes() const { return nodes_; }  // lexicographic = preorder
    int size() const { return static_cast<int>(nodes_.size()); }
    bool contains(const NodeAddr& a) const { return nodes_.count(a) > 0; }
    Vertex at(const NodeAddr& a) const;  // throws InputError when absent
    std::optional<NodeAddr> address_of(Vertex v) const;
    bool is_total() const { return size() == host_.order(); }

private:
    Graph host_;
    std::map<NodeAddr, Vertex> nodes_;
    std::map<Vertex, NodeAddr> addr_;
};

// Human-readable violations; empty when every invariant holds.
std::vector<std::string> check_type_tree(const TypeTree& t);
inline bool is_valid_type_tree(const TypeTree& t) { return check_type_tree(t).empty(); }

enum class SelectionPolicy { MinIndex, SeededRandom };

// Stage-wise construction: a child slot eta^1 draws from N(a_eta) within X_eta, eta^0 from the rest.
TypeTree arrange_full(const Graph& g, SelectionPolicy policy = SelectionPolicy::MinIndex, std::uint64_t seed = 0);

// Longest root-to-leaf path; ties go to the lexicographically least address sequence.
std::vector<NodeAddr> longest_branch(const TypeTree& t);
// Largest k such that the full tree of height k order-embeds below addr.
int element_rank(const TypeTree& t, const NodeAddr& addr);
int max_element_rank(const TypeTree& t);

struct TreeRankResult {
    int rank = 0;
    std::optional<TypeTree> witness;  // domain exactly the addresses of length < rank
    bool exact = true;                // false: budget ran out, rank is a lower bound
};
TreeRankResult tree_rank_witness(const Graph& g, int cap, Budget budget = Budget::unlimited());

inline constexpr int kExactHeightMaxOrder = 8;
// Minimum over all total arrangements of the longest branch. Refuses above kExactHeightMaxOrder.
int tree_height_exact(const Graph& g);

struct RankHeightReport {
    int n = 0;
    int t = 0;  // max element rank
    int h = 0;  // longest branch
    bool inequality_holds = true;  // n <= t (2h)^(t+1)
};
RankHeightReport verify_rank_height(const Graph& g, const TypeTree& tree);

struct HomogeneousResult {
    VertexSet set;
    bool complete = false;  // otherwise independent
    RankHeightReport report;
};
HomogeneousResult extract_homogeneous(const Graph& g, SelectionPolicy policy = SelectionPolicy::MinIndex,
                                      std::uint64_t seed = 0);

// x_i = a_{0^(i-1)}, y_i = a_{0^(i-1)1}.
struct SpinePairs {
    VertexSet x;
    VertexSet y;
    int size() const { return static_cast<int>(x.size()); }
};
// With t set, exactly t pairs are required (InputError otherwise); without, the maximal run present.
SpinePairs spine_pairs(const TypeTree& t, std::optional<int> count = std::nullopt);

struct CombResult {
    TypeTree tree;  // domain {0^i, 0^i 1 : i < pairs}
    int pairs = 0;
    bool exact = true;
};
// Longest comb of spine pairs realizable in g, up to cap pairs.
CombResult find_comb(const Graph& g, int cap, Budget budget = Budget::unlimited());

enum class ExtractMode {
    Strict,         // requires pairs >= the Ramsey bound for (n1, n, n, n2)
    Opportunistic,  // searches whatever pairs are present
};
// Colours pair i<j by (a, b): a = [x_j ~ y_i], b = [y_i ~ y_j]; colour 2a + b picks
// InducedMatching(n1) / ThinSpider(n) / BipartiteHalfGraph(n) / HalfSplitGraph(n2).
Witness extract_config_from_tree(const TypeTree& tree, int n, int n1, int n2,
                                 ExtractMode mode = ExtractMode::Strict);

struct TreeGraph {
    Graph graph;
    TypeTree tree;
};
using SpineColoring = std::function<std::pair<int, int>(int, int)>;  // (i, j), i < j, 0-based
// Full binary tree on the addresses of length < t plus 0^(t-1)1, so that t spine pairs exist.
TreeGraph build_tree_graph(int t, const SpineColoring& coloring);

std::string tree_to_dot(const TypeTree& t);

}  // namespace primegraph

#endif  // PRIMEGRAPH_TYPE_TREE_HPP
