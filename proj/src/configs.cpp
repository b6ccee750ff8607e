#include "primegraph/configs.hpp"

#include <stdexcept>

#include "primegraph/modules.hpp"

namespace primegraph {

namespace {

// Pairwise role constraints of a configuration.
struct Pattern {
    enum Rel : signed char { Free = 0, Adj = 1, NonAdj = -1 };

    int k = 0;
    std::vector<signed char> rel;                  // k*k
    std::vector<int> order;                        // search order of roles
    std::vector<std::pair<int, int>> less;         // host(first) < host(second)

    explicit Pattern(int roles) : k(roles), rel(static_cast<std::size_t>(roles) * roles, NonAdj) {
        for (int i = 0; i < k; ++i) rel[i * k + i] = Free;
    }
    void set(int u, int v, signed char r) {
        rel[u * k + v] = r;
        rel[v * k + u] = r;
    }
    signed char at(int u, int v) const { return rel[u * k + v]; }
};

// Two-sided layouts: a_i = i-1, b_j = n+j-1 (1-based i, j).
Pattern two_sided(int n, signed char aa, signed char bb, auto cross, int extra = 0) {
    Pattern p(2 * n + extra);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < j) {
                p.set(i, j, aa);
                p.set(n + i, n + j, bb);
            }
            p.set(i, n + j, cross(i + 1, j + 1) ? Pattern::Adj : Pattern::NonAdj);
        }
    if (extra) p.order.push_back(2 * n);
    for (int i = 0; i < n; ++i) {
        p.order.push_back(i);
        p.order.push_back(n + i);
    }
    return p;
}

void legs_increasing(Pattern& p, int n) {
    for (int i = 0; i + 1 < n; ++i) p.less.emplace_back(i, i + 1);
}

Pattern make_pattern(ConfigKind kind, int n) {
    using R = Pattern;
    auto le = [](int i, int j) { return i <= j; };
    auto eq = [](int i, int j) { return i == j; };
    auto ne = [](int i, int j) { return i != j; };
    switch (kind) {
        case ConfigKind::BipartiteHalfGraph: return two_sided(n, R::NonAdj, R::NonAdj, le);
        case ConfigKind::HalfSplitGraph: return two_sided(n, R::NonAdj, R::Adj, le);
        case ConfigKind::HalfGraphPattern: return two_sided(n, R::Free, R::Free, le);
        case ConfigKind::HPrimeNI:
        case ConfigKind::HStarN: {
            auto p = two_sided(n, R::NonAdj, R::Adj, le, 1);
            const int c = 2 * n;
            for (int i = 0; i < n; ++i) {
                bool on = kind == ConfigKind::HPrimeNI || i == 0;
                p.set(c, i, on ? R::Adj : R::NonAdj);
            }
            return p;
        }
        case ConfigKind::ThinSpider: {
            auto p = two_sided(n, R::NonAdj, R::Adj, eq);
            legs_increasing(p, n);
            return p;
        }
        case ConfigKind::ThickSpider: {
            auto p = two_sided(n, R::NonAdj, R::Adj, ne);
            legs_increasing(p, n);
            return p;
        }
        case ConfigKind::InducedMatching: {
            auto p = two_sided(n, R::NonAdj, R::NonAdj, eq);
            legs_increasing(p, n);
            for (int i = 0; i < n; ++i) p.less.emplace_back(i, n + i);
            return p;
        }
        case ConfigKind::LineK2n: {
            auto p = two_sided(n, R::Adj, R::Adj, eq);
            legs_increasing(p, n);
            return p;
        }
        case ConfigKind::StarSubdivision: {
            // c = 0, m_i = i, l_i = n+i
            Pattern p(2 * n + 1);
            for (int i = 1; i <= n; ++i) {
                p.set(0, i, R::Adj);
                p.set(i, n + i, R::Adj);
            }
            p.order.push_back(0);
            for (int i = 1; i <= n; ++i) {
                p.order.push_back(i);
                p.order.push_back(n + i);
            }
            for (int i = 1; i < n; ++i) p.less.emplace_back(i, i + 1);
            return p;
        }
        case ConfigKind::PrimeChain: break;
    }
    throw std::logic_error("make_pattern: PrimeChain has no fixed pattern");
}

void check_height(ConfigKind kind, int n) {
    if (n < min_height(kind))
        throw InputError(to_string(kind) + " needs height >= " + std::to_string(min_height(kind)) + ", got " +
                         std::to_string(n));
}

// Adjacency in g, or in its complement.
struct HostView {
    const Graph& g;
    bool complemented;
    bool adjacent(Vertex u, Vertex v) const { return g.adjacent(u, v) != complemented; }
};

class PatternSearch {
public:
    PatternSearch(const Graph& host, const Pattern& p, Budget& budget)
        : host_(host), p_(p), budget_(budget), assigned_(p.k, -1), used_(host.order()) {}

    SearchStatus run() {
        if (p_.k > host_.order()) return SearchStatus::Absent;
        if (extend(0)) return SearchStatus::Found;
        return budget_.exhausted() ? SearchStatus::Unknown : SearchStatus::Absent;
    }
    const VertexSet& roles() const { return assigned_; }

private:
    bool extend(int depth) {
        if (depth == p_.k) return true;
        const int role = p_.order[depth];
        Bitset cand = used_;
        cand.flip();
        for (int d = 0; d < depth; ++d) {
            int q = p_.order[d];
            auto r = p_.at(role, q);
            if (r == Pattern::Adj)
                cand &= host_.neighbors(assigned_[q]);
            else if (r == Pattern::NonAdj)
                cand.and_not(host_.neighbors(assigned_[q]));
        }
        for (auto [lo, hi] : p_.less) {
            if (hi == role && assigned_[lo] >= 0) cand.clear_through(assigned_[lo]);
            if (lo == role && assigned_[hi] >= 0) cand.clear_from(assigned_[hi]);
        }
        for (int v = cand.first(); v >= 0; v = cand.next(v + 1)) {
            if (!budget_.spend()) return false;
            assigned_[role] = v;
            used_.set(v);
            if (extend(depth + 1)) return true;
            used_.reset(v);
            assigned_[role] = -1;
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    const Graph& host_;
    const Pattern& p_;
    Budget& budget_;
    VertexSet assigned_;
    Bitset used_;
};

// Chains of length exactly n whose vertex set induces a prime subgraph.
class PrimeChainSearch {
public:
    PrimeChainSearch(const Graph& g, int n, Budget& budget)
        : g_(g), n_(n), budget_(budget), in_seq_(g.order()) {}

    SearchStatus run() {
        if (n_ + 1 > g_.order()) return SearchStatus::Absent;
        for (Vertex a = 0; a < g_.order(); ++a)
            for (Vertex b = 0; b < g_.order(); ++b) {
                if (a == b) continue;
                if (!budget_.spend()) return SearchStatus::Unknown;
                seq_ = {a, b};
                in_seq_ = Bitset(g_.order());
                in_seq_.set(a);
                in_seq_.set(b);
                if (extend()) return SearchStatus::Found;
                if (budget_.exhausted()) return SearchStatus::Unknown;
            }
        return SearchStatus::Absent;
    }
    const VertexSet& roles() const { return seq_; }

private:
    bool extend() {
        if (static_cast<int>(seq_.size()) == n_ + 1) return is_prime(induced_subgraph(g_, seq_).graph).prime;
        const Vertex last = seq_.back();
        const int s = static_cast<int>(seq_.size());
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (in_seq_.test(v)) continue;
            int seen = (g_.neighbors(v) & in_seq_).count();
            bool ok = g_.adjacent(v, last) ? seen == 1 : seen == s - 1;
            if (!ok) continue;
            if (!budget_.spend()) return false;
            seq_.push_back(v);
            in_seq_.set(v);
            if (extend()) return true;
            in_seq_.reset(v);
            seq_.pop_back();
            if (budget_.exhausted()) return false;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    Budget& budget_;
    VertexSet seq_;
    Bitset in_seq_;
};

DetectResult search(const Graph& host, ConfigKind kind, int n, bool complemented, Budget& budget) {
    check_height(kind, n);
    DetectResult out;
    const auto before = budget.used();
    if (kind == ConfigKind::PrimeChain) {
        PrimeChainSearch s(host, n, budget);
        out.status = s.run();
        if (out.status == SearchStatus::Found) out.witness = Witness{kind, n, s.roles(), complemented};
    } else {
        auto p = make_pattern(kind, n);
        PatternSearch s(host, p, budget);
        out.status = s.run();
        if (out.status == SearchStatus::Found) out.witness = Witness{kind, n, s.roles(), complemented};
    }
    out.nodes = budget.used() - before;
    return out;
}

}  // namespace

std::string to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::BipartiteHalfGraph: return "BipartiteHalfGraph";
        case ConfigKind::HalfSplitGraph: return "HalfSplitGraph";
        case ConfigKind::HalfGraphPattern: return "HalfGraphPattern";
        case ConfigKind::HPrimeNI: return "HPrimeNI";
        case ConfigKind::HStarN: return "HStarN";
        case ConfigKind::ThinSpider: return "ThinSpider";
        case ConfigKind::ThickSpider: return "ThickSpider";
        case ConfigKind::InducedMatching: return "InducedMatching";
        case ConfigKind::LineK2n: return "LineK2n";
        case ConfigKind::StarSubdivision: return "StarSubdivision";
        case ConfigKind::PrimeChain: return "PrimeChain";
    }
    return "?";
}

ConfigKind kind_from_string(const std::string& s) {
    for (auto k : kAllKinds)
        if (to_string(k) == s) return k;
    throw InputError("unknown configuration kind '" + s + "'");
}

int min_height(ConfigKind k) { return k == ConfigKind::PrimeChain ? 2 : 1; }

int role_count(ConfigKind k, int n) {
    switch (k) {
        case ConfigKind::HPrimeNI:
        case ConfigKind::HStarN:
        case ConfigKind::StarSubdivision: return 2 * n + 1;
        case ConfigKind::PrimeChain: return n + 1;
        default: return 2 * n;
    }
}

std::vector<std::string> role_names(ConfigKind k, int n) {
    std::vector<std::string> out;
    if (k == ConfigKind::PrimeChain) {
        for (int i = 0; i <= n; ++i) out.push_back("v" + std::to_string(i));
        return out;
    }
    if (k == ConfigKind::StarSubdivision) {
        out.push_back("c");
        for (int i = 1; i <= n; ++i) out.push_back("m" + std::to_string(i));
        for (int i = 1; i <= n; ++i) out.push_back("l" + std::to_string(i));
        return out;
    }
    for (int i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i));
    for (int i = 1; i <= n; ++i) out.push_back("b" + std::to_string(i));
    if (k == ConfigKind::HPrimeNI || k == ConfigKind::HStarN) out.push_back("c");
    return out;
}

Graph build_config(ConfigKind kind, int n) {
    check_height(kind, n);
    if (kind == ConfigKind::PrimeChain) {
        if (n < 3) throw InputError("no prime graph on 3 vertices, so PrimeChain needs height >= 3 to be built");
        return path_graph(n + 1);
    }
    auto p = make_pattern(kind, n);
    GraphBuilder b(p.k);
    for (int u = 0; u < p.k; ++u)
        for (int v = u + 1; v < p.k; ++v)
            if (p.at(u, v) == Pattern::Adj) b.add_edge(u, v);
    return b.build();
}

bool verify_witness(const Graph& g, const Witness& w) {
    if (w.height < min_height(w.kind)) return false;
    if (static_cast<int>(w.roles.size()) != role_count(w.kind, w.height)) return false;
    Bitset seen(g.order());
    for (Vertex v : w.roles) {
        if (!g.contains(v) || seen.test(v)) return false;
        seen.set(v);
    }
    if (w.kind == ConfigKind::PrimeChain) {
        // chains and primality are both invariant under complementation
        VertexSet base{w.roles[0], w.roles[1]};
        return is_chain(g, w.roles, base) && is_prime(induced_subgraph(g, w.roles).graph).prime;
    }
    HostView host{g, w.complemented};
    auto p = make_pattern(w.kind, w.height);
    for (int u = 0; u < p.k; ++u)
        for (int v = u + 1; v < p.k; ++v) {
            auto r = p.at(u, v);
            if (r == Pattern::Free) continue;
            if (host.adjacent(w.roles[u], w.roles[v]) != (r == Pattern::Adj)) return false;
        }
    return true;
}

DetectResult find_induced(const Graph& g, ConfigKind kind, int n, Budget budget) {
    return search(g, kind, n, false, budget);
}

DetectResult find_induced_complement(const Graph& g, ConfigKind kind, int n, Budget budget) {
    return search(complement(g), kind, n, true, budget);
}

HeightResult max_height(const Graph& g, ConfigKind kind, int cap, Budget budget) {
    if (cap < 1) throw InputError("max_height: cap must be >= 1");
    HeightResult out;
    if (kind == ConfigKind::PrimeChain) {
        // not monotone in n, scan downward
        bool clean = true;
        for (int n = cap; n >= min_height(kind); --n) {
            auto r = search(g, kind, n, false, budget);
            if (r.status == SearchStatus::Found) {
                out.value = n;
                out.exact = clean;
                return out;
            }
            if (r.status == SearchStatus::Unknown) clean = false;
        }
        out.exact = clean;
        return out;
    }
    // an occurrence of height n contains one of height n-1
    for (int n = 1; n <= cap; ++n) {
        auto r = search(g, kind, n, false, budget);
        if (r.status == SearchStatus::Found) {
            out.value = n;
            continue;
        }
        out.exact = r.status == SearchStatus::Absent;
        break;
    }
    return out;
}

HeightResult ladder_index(const Graph& g, int cap, Budget budget) {
    return max_height(g, ConfigKind::HalfGraphPattern, cap, budget);
}

DetectResult detect_any_of(const Graph& g, int n, const std::vector<ConfigKind>& kinds, Budget budget) {
    if (n < 2) throw InputError("detect_any: n must be >= 2");
    DetectResult out;
    out.status = SearchStatus::Absent;
    const Graph comp = complement(g);
    for (auto kind : kinds) {
        for (bool complemented : {false, true}) {
            if (complemented && kind == ConfigKind::PrimeChain) continue;  // self-dual
            Budget local = budget;  // each orientation gets the full allowance
            auto r = search(complemented ? comp : g, kind, n, complemented, local);
            out.nodes += r.nodes;
            if (r.status == SearchStatus::Found) {
                if (!verify_witness(g, *r.witness))
                    throw InvariantViolation("detector produced an unverifiable " + to_string(kind) + " witness");
                out.status = SearchStatus::Found;
                out.witness = r.witness;
                return out;
            }
            if (r.status == SearchStatus::Unknown) out.status = SearchStatus::Unknown;
        }
    }
    return out;
}

DetectResult detect_any(const Graph& g, int n, Budget budget) {
    return detect_any_of(g, n, {kTheoremFamilies.begin(), kTheoremFamilies.end()}, budget);
}

}  // namespace primegraph
