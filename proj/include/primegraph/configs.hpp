#ifndef PRIMEGRAPH_CONFIGS_HPP
#define PRIMEGRAPH_CONFIGS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/errors.hpp"
#include "primegraph/graph.hpp"

namespace primegraph {

/**
 * Named configurations. Role layout for height n (vertex i of build_config plays role i):
 *   BipartiteHalfGraph  a1..an b1..bn         a,b independent; a_i~b_j iff i<=j
 *   HalfSplitGraph      a1..an b1..bn         a independent, b complete; a_i~b_j iff i<=j
 *   HalfGraphPattern    a1..an b1..bn         only a_i~b_j iff i<=j is constrained
 *   HPrimeNI            half split + c        c adjacent to a1..an only
 *   HStarN              half split + c        c adjacent to a1 only
 *   ThinSpider          a1..an b1..bn         a independent, b complete; a_i~b_j iff i==j
 *   ThickSpider         a1..an b1..bn         a independent, b complete; a_i~b_j iff i!=j
 *   InducedMatching     a1..an b1..bn         n disjoint edges a_i b_i
 *   LineK2n             a1..an b1..bn         L(K_{2,n}): a,b complete; a_i~b_j iff i==j
 *   StarSubdivision     c m1..mn l1..ln       K_{1,n} with each edge c-l_i subdivided by m_i
 *   PrimeChain          v0..vn                a chain of length n inducing a prime subgraph
 */
enum class ConfigKind {
    BipartiteHalfGraph,
    HalfSplitGraph,
    HalfGraphPattern,
    HPrimeNI,
    HStarN,
    ThinSpider,
    ThickSpider,
    InducedMatching,
    LineK2n,
    StarSubdivision,
    PrimeChain,
};

inline constexpr std::array<ConfigKind, 11> kAllKinds = {
    ConfigKind::BipartiteHalfGraph, ConfigKind::HalfSplitGraph, ConfigKind::HalfGraphPattern,
    ConfigKind::HPrimeNI,           ConfigKind::HStarN,         ConfigKind::ThinSpider,
    ConfigKind::ThickSpider,        ConfigKind::InducedMatching, ConfigKind::LineK2n,
    ConfigKind::StarSubdivision,    ConfigKind::PrimeChain,
};

// The seven families of the prime-graph theorem, each searched before its complement, cheapest first.
inline constexpr std::array<ConfigKind, 7> kTheoremFamilies = {
    ConfigKind::ThinSpider,      ConfigKind::BipartiteHalfGraph, ConfigKind::StarSubdivision,
    ConfigKind::LineK2n,         ConfigKind::HPrimeNI,           ConfigKind::HStarN,
    ConfigKind::PrimeChain,
};

std::string to_string(ConfigKind k);
ConfigKind kind_from_string(const std::string& s);  // throws InputError
int min_height(ConfigKind k);
int role_count(ConfigKind k, int n);
std::vector<std::string> role_names(ConfigKind k, int n);

struct Witness {
    ConfigKind kind = ConfigKind::InducedMatching;
    int height = 1;
    VertexSet roles;  // host vertex per role, in role_names order
    bool complemented = false;

    friend bool operator==(const Witness&, const Witness&) = default;
};

Graph build_config(ConfigKind kind, int n);
bool verify_witness(const Graph& g, const Witness& w);

struct DetectResult {
    SearchStatus status = SearchStatus::Absent;
    std::optional<Witness> witness;
    std::uint64_t nodes = 0;
};

// Exhaustive backtracking over role assignments; Unknown only when the budget runs out.
DetectResult find_induced(const Graph& g, ConfigKind kind, int n, Budget budget = Budget::unlimited());
// Same search run in complement(g); a hit is reported with complemented = true.
DetectResult find_induced_complement(const Graph& g, ConfigKind kind, int n,
                                     Budget budget = Budget::unlimited());

struct HeightResult {
    int value = 0;
    bool exact = true;  // false: value is only a lower bound (budget ran out above it)
};

HeightResult max_height(const Graph& g, ConfigKind kind, int cap, Budget budget = Budget::unlimited());
// Largest k <= cap with a half-graph pattern of height k.
HeightResult ladder_index(const Graph& g, int cap, Budget budget = Budget::unlimited());
inline bool is_edge_stable(const Graph& g, int k) { return ladder_index(g, k).value < k; }

// First verified witness among kTheoremFamilies and their complements at height n.
DetectResult detect_any(const Graph& g, int n, Budget budget = Budget::unlimited());
// Same scan restricted to the given kinds (order preserved).
DetectResult detect_any_of(const Graph& g, int n, const std::vector<ConfigKind>& kinds,
                           Budget budget = Budget::unlimited());

}  // namespace primegraph

#endif  // PRIMEGRAPH_CONFIGS_HPP
