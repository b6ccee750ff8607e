#include "primegraph/oracles.hpp"

#include <bit>
#include <functional>

#include "primegraph/errors.hpp"

namespace primegraph::oracle {

namespace {

void check_order(const Graph& g) {
    if (g.order() > kOracleMaxOrder)
        throw Refusal("brute-force oracles are limited to order " + std::to_string(kOracleMaxOrder));
}

unsigned mask_of(const Graph& g, Vertex v) {
    unsigned m = 0;
    for (int u = 0; u < g.order(); ++u)
        if (g.adjacent(v, u)) m |= 1u << u;
    return m;
}

bool is_module_mask(const Graph& g, unsigned x) {
    for (int v = 0; v < g.order(); ++v) {
        if ((x >> v) & 1u) continue;
        unsigned seen = mask_of(g, v) & x;
        if (seen != 0 && seen != x) return false;
    }
    return true;
}

// Required adjacency between roles i and j (i != j): 1, 0, or -1 for unconstrained.
int rule(ConfigKind kind, int n, int i, int j) {
    auto side = [n](int r) { return r < n ? 0 : (r < 2 * n ? 1 : 2); };
    auto idx = [n](int r) { return r < n ? r + 1 : r - n + 1; };
    if (kind == ConfigKind::StarSubdivision) {
        // c = 0, m_i = i, l_i = n + i
        if (i > j) std::swap(i, j);
        if (i == 0) return (j >= 1 && j <= n) ? 1 : 0;
        if (i <= n && j == i + n) return 1;
        return 0;
    }
    int si = side(i), sj = side(j);
    if (si > sj || (si == sj && i > j)) {
        std::swap(i, j);
        std::swap(si, sj);
    }
    if (sj == 2) {  // apex
        if (si == 1) return 0;
        if (kind == ConfigKind::HPrimeNI) return 1;
        return idx(i) == 1 ? 1 : 0;  // HStarN
    }
    int a = idx(i), b = idx(j);
    if (si == 0 && sj == 0) {
        switch (kind) {
            case ConfigKind::HalfGraphPattern: return -1;
            case ConfigKind::LineK2n: return 1;
            default: return 0;
        }
    }
    if (si == 1 && sj == 1) {
        switch (kind) {
            case ConfigKind::HalfGraphPattern: return -1;
            case ConfigKind::BipartiteHalfGraph:
            case ConfigKind::InducedMatching: return 0;
            default: return 1;
        }
    }
    switch (kind) {  // a_a against b_b
        case ConfigKind::BipartiteHalfGraph:
        case ConfigKind::HalfSplitGraph:
        case ConfigKind::HalfGraphPattern:
        case ConfigKind::HPrimeNI:
        case ConfigKind::HStarN: return a <= b ? 1 : 0;
        case ConfigKind::ThickSpider: return a != b ? 1 : 0;
        default: return a == b ? 1 : 0;
    }
}

bool chain_prefix_ok(const Graph& g, const VertexSet& seq) {
    const std::size_t i = seq.size() - 1;
    if (i < 2) return true;
    int nbrs = 0;
    for (std::size_t k = 0; k < i; ++k) nbrs += g.adjacent(seq[i], seq[k]) ? 1 : 0;
    bool unique_nb = g.adjacent(seq[i], seq[i - 1]) && nbrs == 1;
    bool unique_non = !g.adjacent(seq[i], seq[i - 1]) && nbrs == static_cast<int>(i) - 1;
    return unique_nb || unique_non;
}

}  // namespace

VertexSet minimal_module(const Graph& g, const VertexSet& s) {
    check_order(g);
    unsigned base = 0;
    for (Vertex v : s) base |= 1u << v;
    const unsigned full = (1u << g.order()) - 1;
    unsigned best = full;
    for (unsigned x = 0; x <= full; ++x) {
        if ((x & base) != base) continue;
        if (std::popcount(x) < std::popcount(best) && is_module_mask(g, x)) best = x;
    }
    VertexSet out;
    for (int v = 0; v < g.order(); ++v)
        if ((best >> v) & 1u) out.push_back(v);
    return out;
}

bool is_prime(const Graph& g) {
    check_order(g);
    const int n = g.order();
    for (unsigned x = 0; x < (1u << n); ++x) {
        int c = std::popcount(x);
        if (c >= 2 && c < n && is_module_mask(g, x)) return false;
    }
    return true;
}

bool chain_exists(const Graph& g, Vertex x, Vertex y, Vertex target) {
    check_order(g);
    std::function<bool(VertexSet&)> dfs = [&](VertexSet& seq) -> bool {
        for (Vertex v = 0; v < g.order(); ++v) {
            bool used = false;
            for (Vertex u : seq) used = used || u == v;
            if (used) continue;
            seq.push_back(v);
            bool ok = chain_prefix_ok(g, seq) && (v == target || dfs(seq));
            seq.pop_back();
            if (ok) return true;
        }
        return false;
    };
    VertexSet a{x, y}, b{y, x};
    return dfs(a) || dfs(b);
}

bool all_triples_have_chain(const Graph& g) {
    check_order(g);
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y)
            for (Vertex z = 0; z < g.order(); ++z)
                if (z != x && z != y && !chain_exists(g, x, y, z)) return false;
    return true;
}

std::optional<VertexSet> find_config(const Graph& g, ConfigKind kind, int n) {
    check_order(g);
    const int k = role_count(kind, n);
    VertexSet roles;
    std::vector<char> used(g.order(), 0);
    std::function<bool()> dfs = [&]() -> bool {
        const int r = static_cast<int>(roles.size());
        if (r == k) {
            if (kind != ConfigKind::PrimeChain) return true;
            return is_prime(induced_subgraph(g, roles).graph);
        }
        for (Vertex v = 0; v < g.order(); ++v) {
            if (used[v]) continue;
            roles.push_back(v);
            bool ok = true;
            if (kind == ConfigKind::PrimeChain) {
                ok = chain_prefix_ok(g, roles);
            } else {
                for (int q = 0; q < r && ok; ++q) {
                    int want = rule(kind, n, q, r);
                    ok = want < 0 || (g.adjacent(roles[q], v) ? 1 : 0) == want;
                }
            }
            used[v] = 1;
            if (ok && dfs()) return true;
            used[v] = 0;
            roles.pop_back();
        }
        return false;
    };
    if (dfs()) return roles;
    return std::nullopt;
}

int tree_rank(const Graph& g) {
    check_order(g);
    const int n = g.order();
    std::vector<unsigned> nb(n);
    for (int v = 0; v < n; ++v) nb[v] = mask_of(g, v);
    std::vector<int> memo(1u << n, -1);
    std::function<int(unsigned)> rank = [&](unsigned x) -> int {
        if (x == 0) return 0;
        if (memo[x] >= 0) return memo[x];
        int best = 0;
        for (int r = 0; r < n; ++r)
            if ((x >> r) & 1u)
                best = std::max(best, 1 + std::min(rank(x & nb[r]), rank(x & ~nb[r] & ~(1u << r))));
        return memo[x] = best;
    };
    return rank((1u << n) - 1);
}

}  // namespace primegraph::oracle
