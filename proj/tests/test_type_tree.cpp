#include <doctest.h>

#include <random>

#include "primegraph/configs.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/errors.hpp"
#include "primegraph/oracles.hpp"
#include "primegraph/type_tree.hpp"

using namespace primegraph;

namespace {

Graph matching_2k2() { return build_config(ConfigKind::InducedMatching, 2); }  // edges a1b1, a2b2

VertexSet spine_of(const TypeTree& t, char bit, int length) {
    VertexSet out;
    NodeAddr a;
    for (int i = 0; i < length && t.contains(a); ++i, a += bit) out.push_back(t.at(a));
    return out;
}

}  // namespace

TEST_CASE("arrangements of edgeless and complete graphs are single branches") {
    TypeTree e = arrange_full(empty_graph(3));
    CHECK(e.contains(""));
    CHECK(e.contains("00"));
    CHECK(longest_branch(e).size() == 3);
    TypeTree k = arrange_full(complete_graph(3));
    CHECK(k.contains("11"));
    CHECK(longest_branch(k).size() == 3);
    CHECK(max_element_rank(k) == 1);
}

TEST_CASE("arrangement of an induced matching branches at the root") {
    TypeTree t = arrange_full(matching_2k2());
    CHECK(t.at("") == 0);
    CHECK(t.at("1") == 2);  // partner of a1
    CHECK(t.contains("0"));
    CHECK(is_valid_type_tree(t));
    CHECK(element_rank(t, "") == 2);
}

TEST_CASE("branch and rank statistics") {
    TypeTree one = arrange_full(Graph(1));
    CHECK(longest_branch(one).size() == 1);
    CHECK(element_rank(one, "") == 1);
    TypeTree path = arrange_full(empty_graph(6));
    CHECK(element_rank(path, "") == 1);
    TreeGraph full = build_tree_graph(4, [](int, int) { return std::pair{0, 0}; });
    CHECK(max_element_rank(full.tree) >= 4);
    CHECK_THROWS_AS(arrange_full(Graph(0)), InputError);
    CHECK_THROWS_AS(one.at("1"), InputError);
}

TEST_CASE("invariant checker catches a broken tree") {
    Graph p3 = path_graph(3);  // 0-1-2
    TypeTree bad(p3, {{"", 0}, {"1", 2}});
    CHECK_FALSE(is_valid_type_tree(bad));
    TypeTree gap(p3, {{"", 0}, {"01", 1}});
    CHECK_FALSE(is_valid_type_tree(gap));
    TypeTree good(p3, {{"", 0}, {"0", 2}, {"1", 1}});
    CHECK(is_valid_type_tree(good));
}

TEST_CASE("arrangements satisfy every invariant on small graphs and random graphs") {
    int violations = 0;
    for (const Graph& g : all_graphs_up_to(6)) {
        if (g.order() == 0) continue;
        for (std::uint64_t seed : {0, 3}) {
            TypeTree t = arrange_full(g, seed ? SelectionPolicy::SeededRandom : SelectionPolicy::MinIndex, seed);
            violations += static_cast<int>(check_type_tree(t).size());
            if (!t.is_total()) ++violations;
            if (!verify_rank_height(g, t).inequality_holds) ++violations;
        }
    }
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = random_graph(static_cast<int>(10 + seed), Probability{1, 3}, seed);
        TypeTree t = arrange_full(g, SelectionPolicy::SeededRandom, seed);
        violations += static_cast<int>(check_type_tree(t).size());
    }
    CHECK(violations == 0);
}

TEST_CASE("rank-height reports") {
    auto k5 = verify_rank_height(complete_graph(5), arrange_full(complete_graph(5)));
    CHECK(k5.n == 5);
    CHECK(k5.t == 1);
    CHECK(k5.h == 5);
    CHECK(k5.inequality_holds);
    auto single = verify_rank_height(Graph(1), arrange_full(Graph(1)));
    CHECK(single.t == 1);
    CHECK(single.h == 1);
    CHECK_THROWS_AS(verify_rank_height(complete_graph(4), arrange_full(complete_graph(5))), InputError);
}

TEST_CASE("tree rank witnesses") {
    CHECK(tree_rank_witness(empty_graph(5), 6).rank == 1);
    auto m = tree_rank_witness(matching_2k2(), 6);
    CHECK(m.rank == 2);
    REQUIRE(m.witness);
    CHECK(is_valid_type_tree(*m.witness));
    for (int t = 1; t <= 4; ++t) {
        TreeGraph tg = build_tree_graph(t, [](int i, int j) { return std::pair{(i + j) % 2, i % 2}; });
        CHECK(tree_rank_witness(tg.graph, 6).rank >= t);
    }
}

TEST_CASE("rank witnesses agree with brute force and have independent 0-spines and complete 1-spines") {
    int mismatches = 0;
    for (const Graph& g : all_graphs_up_to(6)) {
        if (g.order() == 0) continue;
        auto r = tree_rank_witness(g, 8);
        if (r.rank != oracle::tree_rank(g)) ++mismatches;
        REQUIRE(r.witness);
        if (!is_valid_type_tree(*r.witness)) ++mismatches;
        if (!is_independent(g, spine_of(*r.witness, '0', r.rank))) ++mismatches;
        if (!is_complete(g, spine_of(*r.witness, '1', r.rank))) ++mismatches;
        if (static_cast<int>(spine_of(*r.witness, '0', r.rank).size()) != r.rank) ++mismatches;
    }
    CHECK(mismatches == 0);
}

TEST_CASE("exact tree height") {
    for (int k = 1; k <= 5; ++k) {
        CHECK(tree_height_exact(complete_graph(k)) == k);
        CHECK(tree_height_exact(empty_graph(k)) == k);
    }
    CHECK(tree_height_exact(matching_2k2()) == 3);  // four nodes never fit in height 2
    CHECK_THROWS_AS(tree_height_exact(empty_graph(9)), Refusal);
}

TEST_CASE("homogeneous sets") {
    auto k6 = extract_homogeneous(complete_graph(6));
    CHECK(k6.complete);
    CHECK(k6.set.size() >= 3);
    CHECK(is_complete(complete_graph(6), k6.set));
    auto e6 = extract_homogeneous(empty_graph(6));
    CHECK_FALSE(e6.complete);
    CHECK(e6.set.size() >= 3);
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = random_graph(40, Probability{1, 2}, seed);
        auto h = extract_homogeneous(g, SelectionPolicy::SeededRandom, seed);
        CHECK((h.complete ? is_complete(g, h.set) : is_independent(g, h.set)));
        CHECK(static_cast<int>(h.set.size()) >= std::max(h.report.t, (h.report.h + 1) / 2));
    }
}

TEST_CASE("spine pairs of the induced matching") {
    TypeTree t = arrange_full(matching_2k2());
    auto sp = spine_pairs(t);
    REQUIRE(sp.size() == 2);
    CHECK(sp.x == VertexSet{t.at(""), t.at("0")});
    CHECK(sp.y == VertexSet{t.at("1"), t.at("01")});
    CHECK(matching_2k2().adjacent(sp.x[0], sp.y[0]));
    CHECK(matching_2k2().adjacent(sp.x[1], sp.y[1]));
    CHECK_THROWS_AS(spine_pairs(t, 3), InputError);
}

TEST_CASE("synthetic tree graphs") {
    TreeGraph one = build_tree_graph(1, [](int, int) { return std::pair{0, 0}; });
    CHECK(one.graph.order() == 2);
    CHECK(spine_pairs(one.tree).size() == 1);
    std::mt19937_64 rng(3);
    for (int t = 1; t <= 7; ++t) {
        std::vector<std::pair<int, int>> col(64);
        for (auto& c : col) c = {static_cast<int>(rng() & 1u), static_cast<int>(rng() & 1u)};
        TreeGraph tg = build_tree_graph(t, [&](int i, int j) { return col[i * 8 + j]; });
        CHECK(tg.graph.order() == (1 << t));
        CHECK(is_valid_type_tree(tg.tree));
        CHECK(spine_pairs(tg.tree, t).size() == t);
    }
    CHECK_THROWS_AS(build_tree_graph(21, [](int, int) { return std::pair{0, 0}; }), Refusal);
}

TEST_CASE("spine colourings map to the four outcome kinds") {
    auto run = [](std::pair<int, int> colour, int t, int n) {
        TreeGraph tg = build_tree_graph(t, [colour](int, int) { return colour; });
        Witness w = extract_config_from_tree(tg.tree, n, n, n, ExtractMode::Opportunistic);
        CHECK(verify_witness(tg.graph, w));
        return w;
    };
    CHECK(run({0, 0}, 3, 3).kind == ConfigKind::InducedMatching);
    CHECK(run({0, 1}, 6, 6).kind == ConfigKind::ThinSpider);
    CHECK(run({1, 0}, 6, 6).kind == ConfigKind::BipartiteHalfGraph);
    Witness split = run({1, 1}, 6, 6);
    CHECK(split.kind == ConfigKind::HalfSplitGraph);
    CHECK(split.height == 6);
}

TEST_CASE("strict extraction at n = n1 = n2 = 2 from two pairs") {
    TreeGraph tg = build_tree_graph(2, [](int, int) { return std::pair{0, 1}; });
    Witness w = extract_config_from_tree(tg.tree, 2, 2, 2, ExtractMode::Strict);
    CHECK(w.kind == ConfigKind::ThinSpider);
    CHECK(w.height == 2);
    CHECK(verify_witness(tg.graph, w));
    TreeGraph one = build_tree_graph(1, [](int, int) { return std::pair{0, 1}; });
    CHECK_THROWS_AS(extract_config_from_tree(one.tree, 2, 2, 2, ExtractMode::Strict), InputError);
}

TEST_CASE("combs found in graphs yield verified configurations") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_graph(24, Probability{1, 2}, seed);
        CombResult c = find_comb(g, 4);
        CHECK(is_valid_type_tree(c.tree));
        CHECK(spine_pairs(c.tree).size() == c.pairs);
        if (c.pairs >= 2) {
            Witness w = extract_config_from_tree(c.tree, 2, 2, 2, ExtractMode::Strict);
            CHECK(verify_witness(g, w));
        }
    }
}

TEST_CASE("dot export of a tree") {
    std::string dot = tree_to_dot(arrange_full(path_graph(3)));
    CHECK(dot.find("digraph") != std::string::npos);
}
