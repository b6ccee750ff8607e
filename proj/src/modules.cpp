#include "primegraph/modules.hpp"

#include <deque>
#include <functional>
#include <unordered_set>

namespace primegraph {

namespace {

struct ChainState {
    Bitset set;
    Vertex last;
    friend bool operator==(const ChainState&, const ChainState&) = default;
};

struct ChainStateHash {
    std::size_t operator()(const ChainState& s) const { return s.set.hash() * 31 + static_cast<std::size_t>(s.last); }
};

// v may follow a chain whose vertex set is s and whose last vertex is `last`.
bool extends(const Graph& g, const Bitset& s, int s_size, Vertex last, Vertex v) {
    int seen = (g.neighbors(v) & s).count();
    return g.adjacent(v, last) ? seen == 1 : seen == s_size - 1;
}

// Lowest vertex outside x that is mixed on x, or -1.
Vertex first_mixed(const Graph& g, const Bitset& x, int x_size) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (x.test(v)) continue;
        int seen = (g.neighbors(v) & x).count();
        if (seen > 0 && seen < x_size) return v;
    }
    return -1;
}

}  // namespace

bool is_module(const Graph& g, const VertexSet& s) {
    Bitset x = to_bitset(g, s);
    return first_mixed(g, x, static_cast<int>(s.size())) < 0;
}

Bitset module_closure(const Graph& g, const Bitset& s) {
    Bitset x = s;
    int size = x.count();
    if (size < 2) throw InputError("module_closure needs at least two vertices");
    for (Vertex v = first_mixed(g, x, size); v >= 0; v = first_mixed(g, x, size)) {
        x.set(v);
        ++size;
    }
    return x;
}

VertexSet module_closure(const Graph& g, const VertexSet& s) {
    if (s.size() < 2) throw InputError("module_closure needs at least two vertices");
    return module_closure(g, to_bitset(g, s)).to_vector();
}

PrimalityReport is_prime(const Graph& g) {
    PrimalityReport r;
    const int n = g.order();
    if (n <= 2) return r;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            Bitset pair(n);
            pair.set(x);
            pair.set(y);
            Bitset c = module_closure(g, pair);
            if (c.count() < n) {
                r.prime = false;
                r.counterexample = c.to_vector();
                return r;
            }
        }
    return r;
}

bool is_chain(const Graph& g, const VertexSet& seq, const VertexSet& base) {
    if (seq.size() < 3) return false;
    Bitset in_base(g.order());
    for (Vertex v : base) {
        if (!g.contains(v)) return false;
        in_base.set(v);
    }
    Bitset prefix(g.order());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        Vertex v = seq[i];
        if (!g.contains(v) || prefix.test(v)) return false;
        if ((i < 2) != in_base.test(v)) return false;
        if (i >= 2 && !extends(g, prefix, static_cast<int>(i), seq[i - 1], v)) return false;
        prefix.set(v);
    }
    return true;
}

namespace {

void check_base(const Graph& g, const VertexSet& base, Vertex target) {
    if (base.size() != 2) throw InputError("chain base must have exactly two vertices");
    validate_vertex_set(g, base);
    if (!g.contains(target)) throw InputError("target out of range");
    if (target == base[0] || target == base[1]) throw InputError("target lies in the base");
}

struct BfsNode {
    ChainState state;
    int parent;  // index into the node list, -1 for starts
};

VertexSet unwind(const std::vector<BfsNode>& nodes, int idx, Vertex first) {
    VertexSet seq;
    for (int i = idx; i >= 0; i = nodes[i].parent) seq.push_back(nodes[i].state.last);
    seq.push_back(first);
    return {seq.rbegin(), seq.rend()};
}

}  // namespace

std::optional<Chain> find_chain(const Graph& g, const VertexSet& base, Vertex target, int max_len) {
    check_base(g, base, target);
    const int n = g.order();
    if (max_len < 0) max_len = n;  // a chain never repeats a vertex
    if (max_len < 2) return std::nullopt;

    // BFS over (vertex set, last vertex); earlier discovery is never longer.
    std::vector<BfsNode> nodes;
    std::vector<Vertex> firsts;  // v_0 for each start tree
    std::vector<int> root_of;
    std::unordered_set<ChainState, ChainStateHash> seen;
    std::deque<int> queue;
    Bitset s(n);
    s.set(base[0]);
    s.set(base[1]);
    for (int k = 0; k < 2; ++k) {
        ChainState st{s, base[1 - k]};
        if (seen.insert(st).second) {
            nodes.push_back({st, -1});
            root_of.push_back(static_cast<int>(nodes.size()) - 1);
            firsts.push_back(base[k]);
            queue.push_back(static_cast<int>(nodes.size()) - 1);
        }
    }
    auto first_of = [&](int idx) {
        while (nodes[idx].parent >= 0) idx = nodes[idx].parent;
        return idx == root_of[0] ? firsts[0] : firsts[1];
    };
    while (!queue.empty()) {
        int idx = queue.front();
        queue.pop_front();
        const ChainState st = nodes[idx].state;
        const int size = st.set.count();
        const int len_after = size;  // |S|+1 vertices -> length |S|
        if (len_after > max_len) continue;
        for (Vertex v = 0; v < n; ++v) {
            if (st.set.test(v) || !extends(g, st.set, size, st.last, v)) continue;
            if (v == target) {
                VertexSet seq = unwind(nodes, idx, first_of(idx));
                seq.push_back(v);
                return Chain{seq};
            }
            ChainState next{st.set, v};
            next.set.set(v);
            if (len_after < max_len && seen.insert(next).second) {
                nodes.push_back({next, idx});
                queue.push_back(static_cast<int>(nodes.size()) - 1);
            }
        }
    }
    return std::nullopt;
}

ChainDistances chain_distances(const Graph& g, Budget* budget) {
    const int n = g.order();
    ChainDistances out;
    out.order = n;
    out.dist.assign(static_cast<std::size_t>(n) * n * n, -1);
    for (Vertex x = 0; x < n; ++x)
        for (Vertex y = x + 1; y < n; ++y) {
            std::unordered_set<ChainState, ChainStateHash> seen;
            std::vector<ChainState> layer;
            Bitset s(n);
            s.set(x);
            s.set(y);
            layer.push_back({s, y});
            layer.push_back({s, x});
            seen.insert(layer[0]);
            seen.insert(layer[1]);
            std::vector<int> best(n, -1);
            for (int len = 2; !layer.empty() && len <= n; ++len) {
                std::vector<ChainState> next_layer;
                for (const auto& st : layer) {
                    const int size = st.set.count();
                    for (Vertex v = 0; v < n; ++v) {
                        if (st.set.test(v) || !extends(g, st.set, size, st.last, v)) continue;
                        if (budget && !budget->spend()) throw Refusal("chain_distances: budget exhausted");
                        if (best[v] < 0) best[v] = len;
                        ChainState nx{st.set, v};
                        nx.set.set(v);
                        if (seen.insert(nx).second) next_layer.push_back(std::move(nx));
                    }
                }
                layer = std::move(next_layer);
            }
            for (Vertex z = 0; z < n; ++z) {
                out.dist[(static_cast<std::size_t>(x) * n + y) * n + z] = best[z];
                out.dist[(static_cast<std::size_t>(y) * n + x) * n + z] = best[z];
            }
        }
    return out;
}

std::optional<int> chain_radius(const Graph& g) {
    if (g.order() < 3) throw InputError("chain_radius needs at least three vertices");
    auto d = chain_distances(g);
    int worst = 0;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y)
            for (Vertex z = 0; z < g.order(); ++z) {
                if (z == x || z == y) continue;
                int v = d.at(x, y, z);
                if (v < 0) return std::nullopt;
                worst = std::max(worst, v);
            }
    return worst;
}

namespace {

class FixedLengthChainSearch {
public:
    FixedLengthChainSearch(const Graph& g, int length, Budget& budget, const Bitset* allowed = nullptr)
        : g_(g), length_(length), budget_(budget), allowed_(allowed) {}

    // Tries every ordered base pair inside `allowed` (all vertices when null).
    SearchStatus run() {
        const int n = g_.order();
        if (length_ + 1 > n) return SearchStatus::Absent;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b) {
                if (a == b || !ok(a) || !ok(b)) continue;
                if (!budget_.spend()) return SearchStatus::Unknown;
                seq_ = {a, b};
                Bitset s(n);
                s.set(a);
                s.set(b);
                if (extend(s)) return SearchStatus::Found;
                if (budget_.exhausted()) return SearchStatus::Unknown;
            }
        return SearchStatus::Absent;
    }
    const VertexSet& sequence() const { return seq_; }

    // Optional acceptance test applied to complete chains.
    std::function<bool(const VertexSet&)> accept;

private:
    bool ok(Vertex v) const { return !allowed_ || allowed_->test(v); }

    bool extend(Bitset& s) {
        const int size = static_cast<int>(seq_.size());
        if (size == length_ + 1) return !accept || accept(seq_);
        ChainState key{s, seq_.back()};
        if (!accept && dead_.count(key)) return false;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (s.test(v) || !ok(v) || !extends(g_, s, size, seq_.back(), v)) continue;
            if (!budget_.spend()) return false;
            seq_.push_back(v);
            s.set(v);
            bool found = extend(s);
            if (found) return true;
            s.reset(v);
            seq_.pop_back();
            if (budget_.exhausted()) return false;
        }
        // a dead end depends only on (set, last) once the target length is fixed
        if (!accept) dead_.insert(std::move(key));
        return false;
    }

    const Graph& g_;
    int length_;
    Budget& budget_;
    const Bitset* allowed_;
    VertexSet seq_;
    std::unordered_set<ChainState, ChainStateHash> dead_;
};

}  // namespace

ChainSearchResult find_chain_of_length(const Graph& g, int length, Budget budget) {
    if (length < 2) throw InputError("chain length must be >= 2");
    FixedLengthChainSearch s(g, length, budget);
    ChainSearchResult out;
    out.status = s.run();
    if (out.status == SearchStatus::Found) out.chain = Chain{s.sequence()};
    return out;
}

Chain shrink_to_prime_chain(const Graph& g, const Chain& c) {
    const int t = c.length();
    if (t <= 3) throw InputError("shrink_to_prime_chain needs a chain of length > 3");
    if (!is_chain(g, c.vertices, c.base())) throw InputError("shrink_to_prime_chain: input is not a chain");
    auto prime_on = [&](const VertexSet& seq) { return is_prime(induced_subgraph(g, seq).graph).prime; };

    // drop one vertex, keep the order
    for (int drop = 0; drop <= t; ++drop) {
        VertexSet seq;
        for (int i = 0; i <= t; ++i)
            if (i != drop) seq.push_back(c.vertices[i]);
        if (is_chain(g, seq, {seq[0], seq[1]}) && prime_on(seq)) return Chain{seq};
    }
    // any chain of length t-1 on the same vertex set, in any order
    Bitset allowed = to_bitset(g, c.vertices);
    Budget unlimited = Budget::unlimited();
    FixedLengthChainSearch s(g, t - 1, unlimited, &allowed);
    s.accept = prime_on;
    if (s.run() == SearchStatus::Found) return Chain{s.sequence()};
    throw InvariantViolation("no prime-inducing sub-chain of length " + std::to_string(t - 1) + " found");
}

}  // namespace primegraph
