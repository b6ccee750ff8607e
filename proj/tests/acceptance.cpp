// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "primegraph/configs.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/graph_io.hpp"
#include "primegraph/modules.hpp"
#include "primegraph/oracles.hpp"
#include "primegraph/pipeline.hpp"
#include "primegraph/ramsey.hpp"
#include "primegraph/type_tree.hpp"

#ifndef PRIMEGRAPH_TEST_DATA
#define PRIMEGRAPH_TEST_DATA "tests/data"
#endif

using namespace primegraph;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first few failures and counts the rest.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (examples_.size() < 3) examples_.push_back(what);
    }
    Outcome outcome(const std::string& summary) const {
        std::ostringstream os;
        os << summary << "; " << checks_ << " checks, " << failures_ << " failures";
        for (const auto& e : examples_) os << " | " << e;
        return {failures_ == 0 && checks_ > 0, os.str()};
    }

private:
    std::size_t checks_ = 0, failures_ = 0;
    std::vector<std::string> examples_;
};

const std::vector<Graph>& corpus() {
    static const std::vector<Graph> graphs = all_graphs_up_to(7);
    return graphs;
}

std::string name(const Graph& g) { return emit_graph6(g); }

bool contains(const VertexSet& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

Outcome module_chain_duality() {
    Tally t;
    std::size_t triples = 0;
    for (const Graph& g : corpus())
        for (Vertex x = 0; x < g.order(); ++x)
            for (Vertex y = x + 1; y < g.order(); ++y) {
                VertexSet closure = module_closure(g, VertexSet{x, y});
                t.check(closure == oracle::minimal_module(g, {x, y}), name(g) + " closure differs from brute force");
                for (Vertex z = 0; z < g.order(); ++z) {
                    if (z == x || z == y) continue;
                    ++triples;
                    bool chain = find_chain(g, {x, y}, z).has_value();
                    t.check(chain == contains(closure, z), name(g) + " triple (" + std::to_string(x) + "," +
                                                               std::to_string(y) + ")->" + std::to_string(z));
                }
            }
    return t.outcome(std::to_string(corpus().size()) + " graphs, " + std::to_string(triples) + " triples");
}

Outcome primality_equivalence() {
    Tally t;
    int primes = 0;
    for (const Graph& g : corpus()) {
        bool brute = oracle::is_prime(g);
        bool chains = true;
        for (Vertex x = 0; x < g.order() && chains; ++x)
            for (Vertex y = x + 1; y < g.order() && chains; ++y)
                for (Vertex z = 0; z < g.order() && chains; ++z)
                    if (z != x && z != y && !find_chain(g, {x, y}, z)) chains = false;
        primes += brute ? 1 : 0;
        t.check(brute == chains, name(g) + " brute force vs chain criterion");
        t.check(brute == is_prime(g).prime, name(g) + " brute force vs is_prime");
    }
    return t.outcome(std::to_string(primes) + " prime graphs among " + std::to_string(corpus().size()));
}

// Trees for criteria 3 and 4: the exhaustive corpus under both policies plus 200 random graphs.
struct TreeCase {
    Graph graph;
    TypeTree tree;
    std::string label;
};

const std::vector<TreeCase>& tree_cases() {
    static const std::vector<TreeCase> cases = [] {
        std::vector<TreeCase> out;
        for (const Graph& g : corpus()) {
            if (g.order() == 0) continue;
            out.push_back({g, arrange_full(g), name(g) + " min-index"});
            out.push_back({g, arrange_full(g, SelectionPolicy::SeededRandom, 7), name(g) + " seed 7"});
        }
        const std::vector<Probability> ps = {{1, 4}, {1, 2}, {3, 4}, {1, 10}, {9, 10}};
        for (std::uint64_t seed = 1; seed <= 200; ++seed) {
            int order = 1 + static_cast<int>((seed * 37) % 64);
            Graph g = random_graph(order, ps[seed % ps.size()], seed);
            out.push_back({g, arrange_full(g, SelectionPolicy::SeededRandom, seed),
                           "random order " + std::to_string(order) + " seed " + std::to_string(seed)});
        }
        return out;
    }();
    return cases;
}

Outcome tree_invariants() {
    Tally t;
    for (const auto& c : tree_cases()) {
        auto violations = check_type_tree(c.tree);
        t.check(violations.empty(), c.label + (violations.empty() ? "" : ": " + violations.front()));
        t.check(c.tree.is_total() && c.tree.size() == c.graph.order(), c.label + " tree not total");
    }
    return t.outcome(std::to_string(tree_cases().size()) + " trees");
}

Outcome rank_height() {
    Tally t;
    int max_t = 0, max_h = 0;
    for (const auto& c : tree_cases()) {
        try {
            auto r = verify_rank_height(c.graph, c.tree);
            t.check(r.inequality_holds, c.label);
            max_t = std::max(max_t, r.t);
            max_h = std::max(max_h, r.h);
        } catch (const InvariantViolation& e) {
            t.check(false, c.label + ": " + e.what());
        }
    }
    return t.outcome("n <= t(2h)^(t+1) on " + std::to_string(tree_cases().size()) + " trees, max t " +
                     std::to_string(max_t) + ", max h " + std::to_string(max_h));
}

Outcome homogeneous_extraction() {
    Tally t;
    for (const Graph& g : corpus()) {
        if (g.order() == 0) continue;
        auto h = extract_homogeneous(g);
        const int size = static_cast<int>(h.set.size());
        const auto& r = h.report;
        t.check(h.complete ? is_complete(g, h.set) : is_independent(g, h.set), name(g) + " not homogeneous");
        t.check(size >= std::max(r.t, (r.h + 1) / 2), name(g) + " below max(t, ceil(h/2))");
        t.check(size >= std::pow(static_cast<double>(r.n) / r.t, 1.0 / (r.t + 1)) / 4.0,
                name(g) + " below ((n/t)^(1/(t+1)))/4");
    }
    return t.outcome(std::to_string(corpus().size() - 1) + " graphs");
}

Outcome spine_extraction() {
    Tally t;
    const std::map<std::pair<int, int>, ConfigKind> expected = {
        {{0, 0}, ConfigKind::InducedMatching},
        {{0, 1}, ConfigKind::ThinSpider},
        {{1, 0}, ConfigKind::BipartiteHalfGraph},
        {{1, 1}, ConfigKind::HalfSplitGraph},
    };
    for (const auto& [colour, kind] : expected) {
        const auto col = colour;
        TreeGraph tg = build_tree_graph(6, [col](int, int) { return col; });
        std::string label = "constant (" + std::to_string(col.first) + "," + std::to_string(col.second) + ")";
        try {
            Witness w = extract_config_from_tree(tg.tree, 6, 6, 6, ExtractMode::Opportunistic);
            t.check(w.kind == kind, label + " gave " + to_string(w.kind));
            t.check(w.height == 6, label + " height " + std::to_string(w.height));
            t.check(verify_witness(tg.graph, w), label + " witness fails verification");
        } catch (const std::exception& e) {
            t.check(false, label + ": " + e.what());
        }
    }
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<int, int>> colours(36);
        for (auto& c : colours) c = {static_cast<int>(rng() & 1u), static_cast<int>(rng() & 1u)};
        TreeGraph tg = build_tree_graph(6, [&colours](int i, int j) { return colours[i * 6 + j]; });
        std::string label = "random colouring " + std::to_string(trial);
        try {
            Witness w = extract_config_from_tree(tg.tree, 2, 2, 2, ExtractMode::Strict);
            t.check(verify_witness(tg.graph, w), label + " witness fails verification");
        } catch (const std::exception& e) {
            t.check(false, label + ": " + e.what());
        }
    }
    return t.outcome("t = 6: four constant colourings, 100 random colourings at sizes (2,2,2,2)");
}

Outcome ramsey_exactness() {
    Tally t;
    t.check(brute_force_ramsey_holds({2, 2}, 2), "R(2,2) <= 2 not certified");
    t.check(!brute_force_ramsey_holds({2, 2}, 1), "K_1 should admit a good colouring for (2,2)");
    t.check(brute_force_ramsey_holds({3, 3}, 6), "R(3,3) <= 6 not certified");
    t.check(!brute_force_ramsey_holds({3, 3}, 5), "K_5 should admit a good colouring for (3,3)");
    auto r22 = ramsey_upper(ColorSizes{2, 2});
    auto r33 = ramsey_upper(ColorSizes{3, 3});
    t.check(r22.value && *r22.value >= 2, "ramsey_upper(2,2) below 2");
    t.check(r33.value && *r33.value >= 6, "ramsey_upper(3,3) below 6");
    t.check(r22.exact() && *r22.value == 2 && r33.exact() && *r33.value == 6, "exact values not reported");
    return t.outcome("R(2,2) = 2 and R(3,3) = 6 by exhaustive colouring");
}

Outcome bound_formulas() {
    Tally t;
    const std::vector<std::pair<int, int>> g_expected = {{2, 4}, {3, 19}, {4, 85}};
    for (auto [n, value] : g_expected) {
        auto g = g_fn(n);
        t.check(g.exact() && g.value && *g.value == value, "g(" + std::to_string(n) + ") = " + g.value_string());
    }
    const std::vector<std::pair<int, int>> grid = {{1, 1}, {2, 4}, {3, 19}, {5, 7}, {8, 2}};
    for (auto [n, np] : grid) {
        auto h = h_fn(n, np, 2);
        t.check(h.exact() && h.value && *h.value == n,
                "h(" + std::to_string(n) + "," + std::to_string(np) + ",2) = " + h.value_string());
    }
    struct FCase {
        int n, n1, n2;
        bool exact;
    };
    for (FCase c : {FCase{1, 1, 1, true}, FCase{1, 2, 1, true}, FCase{2, 1, 1, false}, FCase{2, 2, 4, false}}) {
        auto f = f_fn(c.n, c.n1, c.n2);
        auto M = f_exponent(BigBound::integer(c.n), BigBound::integer(c.n1), BigBound::integer(c.n2));
        auto direct = exp2(M + BigBound::integer(1));
        std::string label = "f(" + std::to_string(c.n) + "," + std::to_string(c.n1) + "," + std::to_string(c.n2) + ")";
        t.check(f.exact() == c.exact && M.exact() == c.exact, label + " exactness flag");
        t.check(f.polarity == direct.polarity && f.value == direct.value &&
                    f.value_string() == direct.value_string(),
                label + " differs from 2^(M+1)");
    }
    auto small = f_fn(1, 1, 1);
    t.check(small.value && *small.value == 4, "f(1,1,1) should be 2^(1+1) = 4");
    return t.outcome("g, h and f evaluated in exact arithmetic");
}

Outcome asymptotic_comparison() {
    Tally t;
    for (int n = 2; n <= 20; ++n) {
        auto c = compare_bounds(n);
        t.check(c.x_le_log2_m, "n=" + std::to_string(n) + " x <= log2 m");
        t.check(c.chain_middle, "n=" + std::to_string(n) + " middle link");
        t.check(c.new_below_ckos, "n=" + std::to_string(n) + " N(n) below (sqrt 2)^m");
    }
    return t.outcome("n = 2..20, three certified links each");
}

Outcome planted_recovery() {
    Tally t;
    std::map<std::string, int> routes;
    int planted_kind = 0, chain_kind = 0;
    for (ConfigKind kind : kTheoremFamilies)
        for (int h = 3; h <= 6; ++h)
            for (bool comp : {false, true}) {
                Graph g = build_config(kind, h);
                if (comp) g = complement(g);
                std::string label = std::string(comp ? "co-" : "") + to_string(kind) + ":" + std::to_string(h);
                RunConfig cfg;
                cfg.n = h;
                try {
                    auto r = find_witness(g, cfg);
                    if (!r.witness) {
                        t.check(false, label + " no witness (" + to_string(r.route) + ")");
                        continue;
                    }
                    const Witness& w = *r.witness;
                    ++routes[to_string(r.route)];
                    bool exact_kind = w.kind == kind && w.height == h &&
                                      (kind == ConfigKind::PrimeChain || w.complemented == comp);
                    bool chain = w.kind == ConfigKind::PrimeChain && w.height == h && r.route == Route::ChainRoute;
                    planted_kind += exact_kind ? 1 : 0;
                    chain_kind += (!exact_kind && chain) ? 1 : 0;
                    t.check(verify_witness(g, w), label + " witness fails verification");
                    t.check(exact_kind || chain, label + " returned " + to_string(w.kind));
                    if (!exact_kind) {
                        auto direct = comp ? find_induced_complement(g, kind, h) : find_induced(g, kind, h);
                        t.check(direct.witness && verify_witness(g, *direct.witness),
                                label + " planted kind not detected directly");
                    }
                } catch (const std::exception& e) {
                    t.check(false, label + ": " + e.what());
                }
            }
    std::string breakdown = std::to_string(planted_kind) + " planted kind, " + std::to_string(chain_kind) +
                            " prime chain via chain route; routes:";
    for (const auto& [route, count] : routes) breakdown += " " + route + "=" + std::to_string(count);
    return t.outcome(breakdown);
}

Outcome detector_soundness() {
    Tally t;
    for (const Graph& g : corpus())
        for (ConfigKind kind : kAllKinds)
            for (int n = min_height(kind); n <= 3; ++n) {
                auto got = find_induced(g, kind, n);
                bool expect = oracle::find_config(g, kind, n).has_value();
                std::string label = name(g) + " " + to_string(kind) + " n=" + std::to_string(n);
                t.check((got.status == SearchStatus::Found) == expect && got.status != SearchStatus::Unknown,
                        label + " detector " + to_string(got.status));
                if (got.witness) t.check(verify_witness(g, *got.witness), label + " witness fails verification");
            }
    return t.outcome("every kind at n <= 3 on " + std::to_string(corpus().size()) + " graphs");
}

Outcome graph6_round_trip() {
    Tally t;
    std::ifstream in(std::string(PRIMEGRAPH_TEST_DATA) + "/atlas_upto7.g6");
    t.check(static_cast<bool>(in), "atlas file missing");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) lines.push_back(line);
    std::vector<std::size_t> reference_counts(8, 0), enumerated_counts(8, 0);
    for (const auto& line : lines) {
        Graph g = parse_graph6(line);
        t.check(emit_graph6(g) == line, "atlas line " + line + " does not round-trip");
        ++reference_counts.at(g.order());
    }
    for (const Graph& g : corpus()) {
        t.check(parse_graph6(emit_graph6(g)) == g, "enumerated graph does not round-trip");
        ++enumerated_counts.at(g.order());
    }
    t.check(reference_counts == enumerated_counts, "enumerator class counts differ from the reference atlas");
    return t.outcome(std::to_string(lines.size()) + " reference graphs, " + std::to_string(corpus().size()) +
                     " enumerated graphs");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"module/chain duality, order <= 7", module_chain_duality},
        {"primality equivalence, order <= 7", primality_equivalence},
        {"type-tree invariants", tree_invariants},
        {"rank-height inequality", rank_height},
        {"homogeneous extraction bounds", homogeneous_extraction},
        {"spine extraction at t = 6", spine_extraction},
        {"Ramsey exactness", ramsey_exactness},
        {"bound formulas g, h, f", bound_formulas},
        {"asymptotic comparison, n = 2..20", asymptotic_comparison},
        {"planted recovery, heights 3..6", planted_recovery},
        {"detector soundness, n <= 3, order <= 7", detector_soundness},
        {"graph6 round-trip, order <= 7", graph6_round_trip},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << " -- " << o.detail
                  << " (" << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
