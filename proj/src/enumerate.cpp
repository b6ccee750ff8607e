#include "primegraph/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "primegraph/errors.hpp"

namespace primegraph {

namespace {

// Upper-triangle bits in graph6 order (column j, rows i<j), most significant first.
std::uint64_t code_under(const Graph& g, const std::vector<int>& perm) {
    // perm[position] = original vertex
    const int n = g.order();
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
    return code;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::vector<int>> classes;  // vertices grouped by invariant, in position order
    std::vector<int> perm;
    std::vector<char> used;
    std::uint64_t best = 0;
    std::vector<int> best_perm;
    bool have = false;

    void run(std::size_t cls, std::size_t idx) {
        if (cls == classes.size()) {
            auto c = code_under(g, perm);
            if (!have || c > best) {
                best = c;
                best_perm = perm;
                have = true;
            }
            return;
        }
        if (idx == classes[cls].size()) {
            run(cls + 1, 0);
            return;
        }
        for (int v : classes[cls]) {
            if (used[v]) continue;
            used[v] = 1;
            perm.push_back(v);
            run(cls, idx + 1);
            perm.pop_back();
            used[v] = 0;
        }
    }
};

std::vector<int> canonical_perm(const Graph& g) {
    const int n = g.order();
    if (n > kMaxCanonicalOrder) throw Refusal("canonical form limited to order " + std::to_string(kMaxCanonicalOrder));
    // invariant: (degree, sorted neighbour degrees)
    std::vector<std::pair<std::vector<int>, int>> inv(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> key{g.degree(v)};
        std::vector<int> nd;
        g.neighbors(v).for_each([&](int u) { nd.push_back(g.degree(u)); });
        std::sort(nd.begin(), nd.end());
        key.insert(key.end(), nd.begin(), nd.end());
        inv[v] = {std::move(key), v};
    }
    std::sort(inv.begin(), inv.end());
    CanonSearch s{g, {}, {}, std::vector<char>(n, 0), 0, {}, false};
    for (int i = 0; i < n; ++i) {
        if (i == 0 || inv[i].first != inv[i - 1].first) s.classes.emplace_back();
        s.classes.back().push_back(inv[i].second);
    }
    s.run(0, 0);
    return s.best_perm;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    auto perm = canonical_perm(g);
    return code_under(g, perm);
}

Graph canonical_form(const Graph& g) {
    auto perm = canonical_perm(g);
    GraphBuilder b(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(perm[i], perm[j])) b.add_edge(i, j);
    return b.build();
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    Bitset seen(g.order()), frontier(g.order());
    seen.set(0);
    frontier.set(0);
    while (frontier.any()) {
        Bitset next(g.order());
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next.and_not(seen);
        seen |= next;
        frontier = next;
    }
    return seen.count() == g.order();
}

std::vector<Graph> all_graphs(int order) {
    if (order < 0) throw InputError("order must be non-negative");
    if (order > 8) throw Refusal("exhaustive enumeration limited to order 8");
    if (order == 0) return {Graph(0)};
    // extend every class of order-1 by one vertex with every neighbourhood
    std::map<std::uint64_t, Graph> seen;
    for (const Graph& base : all_graphs(order - 1)) {
        const int m = base.order();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            GraphBuilder b(order);
            for (auto [u, v] : base.edges()) b.add_edge(u, v);
            for (int u = 0; u < m; ++u)
                if ((mask >> u) & 1) b.add_edge(u, m);
            Graph g = b.build();
            auto code = canonical_code(g);
            if (!seen.count(code)) seen.emplace(code, canonical_form(g));
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [code, g] : seen) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_graphs_up_to(int max_order) {
    std::vector<Graph> out;
    for (int n = 0; n <= max_order; ++n) {
        auto level = all_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace primegraph
