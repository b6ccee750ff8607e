#include "primegraph/type_tree.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "primegraph/ramsey.hpp"

namespace primegraph {

TypeTree::TypeTree(Graph host, std::map<NodeAddr, Vertex> nodes) : host_(std::move(host)), nodes_(std::move(nodes)) {
    for (const auto& [a, v] : nodes_) addr_.emplace(v, a);
}

Vertex TypeTree::at(const NodeAddr& a) const {
    auto it = nodes_.find(a);
    if (it == nodes_.end()) throw InputError("address '" + a + "' is not in the tree");
    return it->second;
}

std::optional<NodeAddr> TypeTree::address_of(Vertex v) const {
    auto it = addr_.find(v);
    if (it == addr_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> check_type_tree(const TypeTree& t) {
    std::vector<std::string> bad;
    const Graph& g = t.host();
    std::unordered_set<Vertex> seen;
    for (const auto& [a, v] : t.nodes()) {
        const std::string where = "node '" + a + "'";
        if (a.find_first_not_of("01") != std::string::npos) {
            bad.push_back(where + ": address has characters other than 0/1");
            continue;
        }
        if (static_cast<int>(a.size()) >= std::max(g.order(), 1)) bad.push_back(where + ": address length >= host order");
        if (!g.contains(v)) {
            bad.push_back(where + ": vertex " + std::to_string(v) + " out of range");
            continue;
        }
        if (!seen.insert(v).second) bad.push_back(where + ": vertex " + std::to_string(v) + " assigned twice");
        if (!a.empty() && !t.contains(a.substr(0, a.size() - 1))) bad.push_back(where + ": parent missing");
        for (std::size_t k = 0; k < a.size(); ++k) {
            auto it = t.nodes().find(a.substr(0, k));
            if (it == t.nodes().end() || !g.contains(it->second)) continue;
            bool want = a[k] == '1';
            if (g.adjacent(v, it->second) != want) {
                bad.push_back(where + ": " + (want ? "not adjacent" : "adjacent") + " to ancestor '" + it->first +
                              "' (" + (k + 1 == a.size() ? "child condition" : "path consistency") + ")");
            }
        }
    }
    return bad;
}

TypeTree arrange_full(const Graph& g, SelectionPolicy policy, std::uint64_t seed) {
    if (g.order() < 1) throw InputError("arrange_full needs at least one vertex");
    std::mt19937_64 rng(seed);
    auto choose = [&](const Bitset& x) -> Vertex {
        if (policy == SelectionPolicy::MinIndex) return x.first();
        auto members = x.to_vector();
        return members[rng() % members.size()];
    };
    std::map<NodeAddr, Vertex> nodes;
    std::vector<std::pair<NodeAddr, Bitset>> stage{{"", g.all_vertices()}};
    while (!stage.empty()) {
        std::vector<std::pair<NodeAddr, Bitset>> next;
        for (auto& [addr, x] : stage) {
            Vertex a = choose(x);
            nodes.emplace(addr, a);
            Bitset in = x & g.neighbors(a);
            Bitset out = x;
            out.and_not(g.neighbors(a));
            out.reset(a);
            if (out.any()) next.emplace_back(child(addr, 0), std::move(out));
            if (in.any()) next.emplace_back(child(addr, 1), std::move(in));
        }
        stage = std::move(next);
    }
    return TypeTree(g, std::move(nodes));
}

namespace {

int deepest(const TypeTree& t, const NodeAddr& a, std::map<NodeAddr, int>& memo) {
    if (!t.contains(a)) return 0;
    auto it = memo.find(a);
    if (it != memo.end()) return it->second;
    int d = 1 + std::max(deepest(t, child(a, 0), memo), deepest(t, child(a, 1), memo));
    memo.emplace(a, d);
    return d;
}

struct RankTables {
    std::map<NodeAddr, int> r, m;
};

int rank_below(const TypeTree& t, const NodeAddr& a, RankTables& tab) {
    if (!t.contains(a)) return 0;
    auto it = tab.m.find(a);
    if (it != tab.m.end()) return it->second;
    int m0 = rank_below(t, child(a, 0), tab), m1 = rank_below(t, child(a, 1), tab);
    int r = (t.contains(child(a, 0)) && t.contains(child(a, 1))) ? 1 + std::min(m0, m1) : 1;
    int m = std::max({r, m0, m1});
    tab.r[a] = r;
    tab.m[a] = m;
    return m;
}

}  // namespace

std::vector<NodeAddr> longest_branch(const TypeTree& t) {
    if (!t.contains("")) throw InputError("longest_branch needs a nonempty tree");
    std::map<NodeAddr, int> memo;
    std::vector<NodeAddr> out;
    NodeAddr a;
    while (true) {
        out.push_back(a);
        int d0 = deepest(t, child(a, 0), memo), d1 = deepest(t, child(a, 1), memo);
        if (d0 == 0 && d1 == 0) break;
        a = child(a, d0 >= d1 ? 0 : 1);
    }
    return out;
}

int element_rank(const TypeTree& t, const NodeAddr& addr) {
    if (!t.contains(addr)) throw InputError("address '" + addr + "' is not in the tree");
    RankTables tab;
    return rank_below(t, addr, tab);
}

int max_element_rank(const TypeTree& t) {
    if (!t.contains("")) return 0;
    RankTables tab;
    return rank_below(t, "", tab);
}

// ---------------------------------------------------------------------------

namespace {

struct RegionKey {
    Bitset region;
    int height;
    friend bool operator==(const RegionKey&, const RegionKey&) = default;
};
struct RegionKeyHash {
    std::size_t operator()(const RegionKey& k) const { return k.region.hash() * 131 + static_cast<std::size_t>(k.height); }
};

// Full binary type tree of the given height inside `region`. Sibling subtrees live in
// N(a) and its complement, so injectivity comes for free.
class FullTreeSearch {
public:
    FullTreeSearch(const Graph& g, Budget& budget) : g_(g), budget_(budget) {}

    // Found / Absent / Unknown(budget); on Found the assignment is in `out`.
    SearchStatus find(const Bitset& region, int height, const NodeAddr& at, std::map<NodeAddr, Vertex>& out) {
        if (height == 0) return SearchStatus::Found;
        if (region.count() < (1 << height) - 1) return SearchStatus::Absent;
        RegionKey key{region, height};
        if (dead_.count(key)) return SearchStatus::Absent;
        bool unknown = false;
        for (int r = region.first(); r >= 0; r = region.next(r + 1)) {
            if (!budget_.spend()) return SearchStatus::Unknown;
            Bitset in = region & g_.neighbors(r);
            Bitset outside = region & g_.non_neighbors(r);
            std::map<NodeAddr, Vertex> trial{{at, r}};
            SearchStatus s1 = find(in, height - 1, child(at, 1), trial);
            if (s1 == SearchStatus::Unknown) unknown = true;
            if (s1 != SearchStatus::Found) continue;
            SearchStatus s0 = find(outside, height - 1, child(at, 0), trial);
            if (s0 == SearchStatus::Unknown) unknown = true;
            if (s0 != SearchStatus::Found) continue;
            out.insert(trial.begin(), trial.end());
            return SearchStatus::Found;
        }
        if (unknown) return SearchStatus::Unknown;
        dead_.insert(std::move(key));
        return SearchStatus::Absent;
    }

private:
    const Graph& g_;
    Budget& budget_;
    std::unordered_set<RegionKey, RegionKeyHash> dead_;
};

}  // namespace

TreeRankResult tree_rank_witness(const Graph& g, int cap, Budget budget) {
    if (cap < 1) throw InputError("cap must be >= 1");
    TreeRankResult res;
    if (g.order() == 0) return res;
    FullTreeSearch search(g, budget);
    for (int t = 1; t <= cap; ++t) {
        if (t >= 31) break;
        std::map<NodeAddr, Vertex> nodes;
        SearchStatus s = search.find(g.all_vertices(), t, "", nodes);
        if (s == SearchStatus::Found) {
            res.rank = t;
            res.witness = TypeTree(g, std::move(nodes));
            continue;
        }
        res.exact = s == SearchStatus::Absent;
        break;
    }
    return res;
}

int tree_height_exact(const Graph& g) {
    const int n = g.order();
    if (n > kExactHeightMaxOrder)
        throw Refusal("tree_height_exact is limited to order " + std::to_string(kExactHeightMaxOrder));
    std::vector<unsigned> nb(n, 0);
    for (int v = 0; v < n; ++v) g.neighbors(v).for_each([&](int u) { nb[v] |= 1u << u; });
    std::vector<int> memo(1u << n, -1);
    memo[0] = 0;
    std::function<int(unsigned)> height = [&](unsigned x) -> int {
        if (memo[x] >= 0) return memo[x];
        int best = n + 1;
        for (int r = 0; r < n; ++r) {
            if (!((x >> r) & 1u)) continue;
            unsigned in = x & nb[r];
            unsigned out = x & ~nb[r] & ~(1u << r);
            best = std::min(best, 1 + std::max(height(in), height(out)));
        }
        return memo[x] = best;
    };
    return height((1u << n) - 1);
}

RankHeightReport verify_rank_height(const Graph& g, const TypeTree& tree) {
    if (!(tree.host() == g)) throw InputError("tree is not built over this graph");
    if (!tree.is_total()) throw InputError("verify_rank_height needs a full arrangement");
    auto bad = check_type_tree(tree);
    if (!bad.empty()) throw InvariantViolation("invalid type tree: " + bad.front());
    RankHeightReport r;
    r.n = g.order();
    r.t = max_element_rank(tree);
    r.h = static_cast<int>(longest_branch(tree).size());
    BigInt rhs = BigInt(r.t) * boost::multiprecision::pow(BigInt(2 * r.h), static_cast<unsigned>(r.t + 1));
    r.inequality_holds = BigInt(r.n) <= rhs;
    if (!r.inequality_holds)
        throw InvariantViolation("rank-height inequality fails: n=" + std::to_string(r.n) + " t=" + std::to_string(r.t) +
                                 " h=" + std::to_string(r.h));
    return r;
}

HomogeneousResult extract_homogeneous(const Graph& g, SelectionPolicy policy, std::uint64_t seed) {
    TypeTree tree = arrange_full(g, policy, seed);
    HomogeneousResult res;
    res.report = verify_rank_height(g, tree);
    const int t = res.report.t;

    RankTables tab;
    rank_below(tree, "", tab);
    // spine of an embedded full tree of height t: each next element sits in the 0-side below the last
    VertexSet spine;
    NodeAddr cur;
    for (const auto& [a, r] : tab.r)
        if (r >= t) {
            cur = a;
            break;
        }
    spine.push_back(tree.at(cur));
    for (int need = t - 1; need >= 1; --need) {
        NodeAddr below = child(cur, 0);
        auto it = tab.r.lower_bound(below);
        while (it != tab.r.end() && is_prefix(below, it->first) && it->second < need) ++it;
        if (it == tab.r.end() || !is_prefix(below, it->first))
            throw InvariantViolation("element rank bookkeeping lost the spine");
        cur = it->first;
        spine.push_back(tree.at(cur));
    }

    // longest branch split by the last element's neighbourhood
    auto branch = longest_branch(tree);
    Vertex last = tree.at(branch.back());
    VertexSet with_last, without_last;
    for (std::size_t i = 0; i + 1 < branch.size(); ++i) {
        Vertex v = tree.at(branch[i]);
        (g.adjacent(v, last) ? with_last : without_last).push_back(v);
    }
    with_last.push_back(last);
    without_last.push_back(last);
    bool nb_side = 2 * (with_last.size() - 1) >= branch.size();
    VertexSet& second = nb_side ? with_last : without_last;

    if (second.size() > spine.size()) {
        res.set = second;
        res.complete = nb_side;
    } else {
        res.set = spine;
        res.complete = false;
    }
    std::sort(res.set.begin(), res.set.end());
    bool ok = res.complete ? is_complete(g, res.set) : is_independent(g, res.set);
    if (!ok) throw InvariantViolation("extracted set is not homogeneous");
    int need = std::max(t, (res.report.h + 1) / 2);
    if (static_cast<int>(res.set.size()) < need) throw InvariantViolation("extracted homogeneous set is too small");
    return res;
}

SpinePairs spine_pairs(const TypeTree& t, std::optional<int> count) {
    SpinePairs p;
    NodeAddr spine;
    for (int i = 0; !count || i < *count; ++i, spine += '0') {
        bool present = t.contains(spine) && t.contains(child(spine, 1));
        if (!present) {
            if (count) throw InputError("tree lacks spine pair " + std::to_string(i + 1));
            break;
        }
        p.x.push_back(t.at(spine));
        p.y.push_back(t.at(child(spine, 1)));
    }
    const Graph& g = t.host();
    for (int i = 0; i < p.size(); ++i) {
        if (!g.adjacent(p.x[i], p.y[i])) throw InvariantViolation("spine pair x_i y_i is not an edge");
        for (int j = i + 1; j < p.size(); ++j) {
            if (g.adjacent(p.x[i], p.x[j])) throw InvariantViolation("spine is not independent");
            if (g.adjacent(p.x[i], p.y[j])) throw InvariantViolation("x_i is adjacent to y_j for i < j");
        }
    }
    return p;
}

CombResult find_comb(const Graph& g, int cap, Budget budget) {
    if (cap < 0) throw InputError("cap must be >= 0");
    std::unordered_map<Bitset, int, BitsetHash> memo;
    bool unknown = false;
    // longest comb inside region, capped at `room`
    std::function<int(const Bitset&, int)> longest = [&](const Bitset& region, int room) -> int {
        if (room == 0 || region.count() < 2) return 0;
        auto it = memo.find(region);
        if (it != memo.end()) return std::min(it->second, room);
        int best = 0;
        bool complete_search = true;
        for (int x = region.first(); x >= 0 && best < room; x = region.next(x + 1)) {
            if (!(region & g.neighbors(x)).any()) continue;
            if (!budget.spend()) {
                unknown = true;
                complete_search = false;
                break;
            }
            best = std::max(best, 1 + longest(region & g.non_neighbors(x), room - 1));
        }
        if (complete_search && best < room) memo.emplace(region, best);
        return best;
    };
    CombResult res;
    const int target = longest(g.all_vertices(), cap);
    // replay with lowest-index choices achieving the optimum
    std::map<NodeAddr, Vertex> nodes;
    Bitset region = g.all_vertices();
    NodeAddr spine;
    for (int k = target; k > 0; --k, spine += '0') {
        bool placed = false;
        for (int x = region.first(); x >= 0 && !placed; x = region.next(x + 1)) {
            Bitset ys = region & g.neighbors(x);
            if (!ys.any()) continue;
            Bitset rest = region & g.non_neighbors(x);
            if (1 + longest(rest, k - 1) < k) continue;
            nodes.emplace(spine, x);
            nodes.emplace(child(spine, 1), ys.first());
            region = rest;
            placed = true;
        }
        if (!placed) break;
    }
    res.pairs = static_cast<int>(nodes.size()) / 2;
    res.exact = !unknown;
    res.tree = TypeTree(g, std::move(nodes));
    return res;
}

Witness extract_config_from_tree(const TypeTree& tree, int n, int n1, int n2, ExtractMode mode) {
    if (n < 1 || n1 < 1 || n2 < 1) throw InputError("extract_config_from_tree needs n, n1, n2 >= 1");
    SpinePairs p = spine_pairs(tree);
    const int t = p.size();
    const Graph& g = tree.host();
    ColorSizes sizes{n1, n, n, n2};
    if (mode == ExtractMode::Strict) {
        BigBound threshold = ramsey_upper(sizes);
        if (!threshold.value) throw Refusal("Ramsey threshold for the extraction is not representable");
        if (BigInt(t) < *threshold.value)
            throw InputError("tree has " + std::to_string(t) + " spine pairs, extraction needs " + threshold.value->str());
    }
    auto coloring = [&](int i, int j) {
        int a = g.adjacent(p.x[j], p.y[i]) ? 1 : 0;
        int b = g.adjacent(p.y[i], p.y[j]) ? 1 : 0;
        return 2 * a + b;
    };
    auto mono = find_mono_clique(t, coloring, sizes);
    if (!mono) {
        if (mode == ExtractMode::Strict) throw InvariantViolation("no monochromatic set despite the Ramsey threshold");
        throw Refusal("no monochromatic spine subset of the required size");
    }
    const auto& idx = mono->indices;
    const int k = static_cast<int>(idx.size());
    Witness w;
    w.height = k;
    VertexSet a(k), b(k);
    for (int i = 0; i < k; ++i) {
        switch (mono->color) {
            case 0:  // no x_j y_i, no y_i y_j: matching x_i y_i
                w.kind = ConfigKind::InducedMatching;
                a[i] = p.x[idx[i]];
                b[i] = p.y[idx[i]];
                break;
            case 1:  // y complete, x_i ~ y_j only for i == j
                w.kind = ConfigKind::ThinSpider;
                a[i] = p.x[idx[i]];
                b[i] = p.y[idx[i]];
                break;
            case 2:  // x_j ~ y_i iff i <= j, both sides independent
                w.kind = ConfigKind::BipartiteHalfGraph;
                a[i] = p.y[idx[i]];
                b[i] = p.x[idx[i]];
                break;
            default:  // y complete; reversed so that a_i ~ b_j iff i <= j
                w.kind = ConfigKind::HalfSplitGraph;
                a[i] = p.x[idx[k - 1 - i]];
                b[i] = p.y[idx[k - 1 - i]];
                break;
        }
    }
    w.roles = a;
    w.roles.insert(w.roles.end(), b.begin(), b.end());
    if (!verify_witness(g, w)) throw InvariantViolation("extracted configuration failed verification");
    return w;
}

TreeGraph build_tree_graph(int t, const SpineColoring& coloring) {
    if (t < 1) throw InputError("build_tree_graph needs t >= 1");
    if (t > 20) throw Refusal("build_tree_graph limited to t <= 20");
    std::vector<NodeAddr> addrs;
    for (int len = 0; len < t; ++len)
        for (int code = 0; code < (1 << len); ++code) {
            NodeAddr a;
            for (int b = len - 1; b >= 0; --b) a += ((code >> b) & 1) ? '1' : '0';
            addrs.push_back(a);
        }
    addrs.push_back(std::string(t - 1, '0') + '1');
    std::map<NodeAddr, Vertex> id;
    for (std::size_t i = 0; i < addrs.size(); ++i) id.emplace(addrs[i], static_cast<Vertex>(i));

    GraphBuilder gb(static_cast<int>(addrs.size()));
    for (const auto& a : addrs)
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] == '1') gb.add_edge(id.at(a.substr(0, k)), id.at(a));
    for (int j = 0; j < t; ++j)
        for (int i = 0; i < j; ++i) {
            auto [ab, bb] = coloring(i, j);
            Vertex xj = id.at(std::string(j, '0'));
            Vertex yi = id.at(std::string(i, '0') + '1');
            Vertex yj = id.at(std::string(j, '0') + '1');
            if (ab) gb.add_edge(xj, yi);
            if (bb) gb.add_edge(yi, yj);
        }
    Graph g = gb.build();
    return {g, TypeTree(g, std::move(id))};
}

std::string tree_to_dot(const TypeTree& t) {
    std::ostringstream os;
    os << "digraph typetree {\n";
    auto name = [](const NodeAddr& a) { return "\"n" + a + "\""; };
    for (const auto& [a, v] : t.nodes())
        os << "  " << name(a) << " [label=\"" << (a.empty() ? "<>" : a) << " : " << v << "\"];\n";
    for (const auto& [a, v] : t.nodes())
        if (!a.empty())
            os << "  " << name(a.substr(0, a.size() - 1)) << " -> " << name(a) << " [style=solid, label=\"" << a.back()
               << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace primegraph
