#include <doctest.h>

#include <sstream>

#include "primegraph/configs.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/json_io.hpp"
#include "primegraph/modules.hpp"
#include "primegraph/oracles.hpp"
#include "primegraph/pipeline.hpp"

using namespace primegraph;

namespace {

RunConfig at(int n) {
    RunConfig cfg;
    cfg.n = n;
    return cfg;
}

}  // namespace

TEST_CASE("planted bipartite half-graph is recovered") {
    Graph g = build_config(ConfigKind::BipartiteHalfGraph, 6);
    auto r = find_witness(g, at(6));
    REQUIRE(r.witness);
    CHECK(r.witness->kind == ConfigKind::BipartiteHalfGraph);
    CHECK(verify_witness(g, *r.witness));
}

TEST_CASE("long paths take the chain route") {
    Graph p = path_graph(20);
    auto r = find_witness(p, at(3));
    CHECK(r.route == Route::ChainRoute);
    REQUIRE(r.witness);
    CHECK(r.witness->kind == ConfigKind::PrimeChain);
    CHECK(r.witness->roles.size() == 4);
    CHECK(is_chain(p, r.witness->roles, {r.witness->roles[0], r.witness->roles[1]}));
    CHECK(oracle::is_prime(induced_subgraph(p, r.witness->roles).graph));
}

TEST_CASE("thick spiders are reported as complemented thin spiders") {
    Graph g = complement(build_config(ConfigKind::ThinSpider, 7));
    auto r = find_witness(g, at(7));
    REQUIRE(r.witness);
    CHECK(r.witness->kind == ConfigKind::ThinSpider);
    CHECK(r.witness->complemented);
    CHECK(verify_witness(g, *r.witness));
}

TEST_CASE("non-prime inputs are processed with the module reported") {
    auto r = find_witness(cycle_graph(4), at(2));
    CHECK_FALSE(r.prime);
    REQUIRE(r.module_counterexample);
    CHECK(r.trace.front().detail.find("not prime") != std::string::npos);
}

TEST_CASE("the tree route runs when its threshold fits") {
    Graph g = random_graph(24, Probability{1, 2}, 5);
    auto r = find_witness(g, at(2));
    bool tree_step = false;
    for (const auto& t : r.trace) tree_step = tree_step || (t.step == "tree" && t.detail.find("comb") != std::string::npos);
    CHECK(tree_step);
    REQUIRE(r.witness);
    CHECK(verify_witness(g, *r.witness));
}

TEST_CASE("thresholds beyond reach are recorded, not skipped silently") {
    auto r = find_witness(build_config(ConfigKind::LineK2n, 4), at(4));
    bool recorded = false;
    for (const auto& t : r.trace) recorded = recorded || (t.step == "tree" && t.detail.find("skipped") != std::string::npos);
    CHECK(recorded);
}

TEST_CASE("empty result when nothing can be found") {
    auto r = find_witness(empty_graph(3), at(3));
    CHECK(r.route == Route::NoneFound);
    CHECK_FALSE(r.witness);
    CHECK_FALSE(r.trace.empty());
    CHECK_THROWS_AS(find_witness(empty_graph(3), at(1)), InputError);
}

TEST_CASE("tiny budgets surface as exhaustion") {
    RunConfig cfg = at(5);
    cfg.chain_budget = cfg.tree_budget = cfg.detector_budget = 10;
    auto r = find_witness(random_graph(30, Probability{1, 2}, 1), cfg);
    if (!r.witness) CHECK(r.budget_exhausted);
}

TEST_CASE("traces are replayable byte for byte") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_graph(14, Probability{1, 2}, seed);
        RunConfig cfg = at(3);
        cfg.seed = seed;
        auto a = find_witness(g, cfg), b = find_witness(g, cfg);
        CHECK(a.trace == b.trace);
        CHECK(to_json(a).dump() == to_json(b).dump());
    }
}

TEST_CASE("every returned witness verifies on random graphs") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Graph g = random_graph(static_cast<int>(6 + seed % 10), Probability{1, 2}, seed);
        for (int n = 2; n <= 4; ++n) {
            RunConfig cfg = at(n);
            cfg.oracle_mode = true;
            auto r = find_witness(g, cfg);
            if (r.witness) CHECK(verify_witness(g, *r.witness));
        }
    }
}

TEST_CASE("prime planted configurations two heights up yield witnesses") {
    int runs = 0;
    for (ConfigKind kind : kTheoremFamilies)
        for (int n = 2; n <= 4; ++n) {
            Graph g = build_config(kind, n + 2);
            if (g.order() <= oracle::kOracleMaxOrder ? !oracle::is_prime(g) : !is_prime(g).prime) continue;
            auto r = find_witness(g, at(n));
            CHECK(r.witness.has_value());
            ++runs;
        }
    CHECK(runs > 10);
}

TEST_CASE("oracle check passes on all graphs up to order 6") {
    int failures = 0;
    for (const Graph& g : all_graphs_up_to(6)) failures += oracle_check(g).all_passed() ? 0 : 1;
    CHECK(failures == 0);
}

TEST_CASE("oracle check flags a corrupted detector") {
    Detector broken = [](const Graph& g, ConfigKind kind, int n) {
        auto r = find_induced(g, kind, n);
        if (kind == ConfigKind::ThinSpider && n == 2) r = DetectResult{};
        return r;
    };
    auto rep = oracle_check(build_config(ConfigKind::ThinSpider, 3), broken);
    CHECK_FALSE(rep.all_passed());
    bool flagged = false;
    for (const auto& c : rep.checks) flagged = flagged || (c.name == "detector" && !c.passed);
    CHECK(flagged);
}

TEST_CASE("oracle check refuses order 9") { CHECK_THROWS_AS(oracle_check(empty_graph(9)), Refusal); }

TEST_CASE("corpus specs") {
    CHECK(load_corpus("connected:5").size() == 21);
    CHECK(load_corpus("upto:4").size() == 1 + 1 + 2 + 4 + 11);
    CHECK(load_corpus("random:10:1/2:7:3").size() == 7);
    auto planted = load_corpus("planted:3-4");
    CHECK(planted.size() == 7 * 2 * 2);
    CHECK(planted[1].label == "co-ThinSpider:3");
    CHECK_THROWS_AS(load_corpus("random:10:x:7"), InputError);
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.g6"), InputError);
}

TEST_CASE("corpus of connected order-5 graphs satisfies the inequality everywhere") {
    CorpusOptions opt;
    opt.max_n = 3;
    opt.threads = 4;
    auto rows = run_corpus(load_corpus("connected:5"), opt);
    REQUIRE(rows.size() == 21);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].index == i);
        CHECK(rows[i].inequality);
        CHECK(rows[i].error.empty());
    }
}

TEST_CASE("corpus output is deterministic across thread counts") {
    auto entries = load_corpus("random:12:1/2:16:4");
    CorpusOptions one, many;
    one.threads = 1;
    many.threads = 6;
    one.max_n = many.max_n = 4;
    CHECK(corpus_csv(run_corpus(entries, one)) == corpus_csv(run_corpus(entries, many)));
}

TEST_CASE("planted corpus recovers a witness in every row") {
    CorpusOptions opt;
    auto rows = run_corpus(load_corpus("planted:3-6"), opt);
    for (const auto& r : rows) {
        CHECK(r.error.empty());
        CHECK(r.witness_n >= 3);
    }
}

TEST_CASE("empty corpus and unreadable lines") {
    CHECK(run_corpus({}, CorpusOptions{}).empty());
    CHECK(corpus_csv({}).rfind("index,", 0) == 0);
    std::vector<CorpusEntry> entries = {{"bad", std::nullopt, "graph6: empty input"},
                                        {"good", path_graph(4), ""}};
    auto rows = run_corpus(entries, CorpusOptions{});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].error == "graph6: empty input");
    CHECK(rows[1].error.empty());
    CHECK(rows[1].prime);
    CHECK(rows[1].chain_radius == "3");
}

TEST_CASE("witness JSON round-trips") {
    Witness w{ConfigKind::HStarN, 3, {0, 1, 2, 3, 4, 5, 6}, true};
    Json j = to_json(w);
    CHECK(j["roles"][6]["role"] == "c");
    CHECK(witness_from_json(j) == w);
    CHECK_THROWS_AS(witness_from_json(Json{{"kind", "HStarN"}}), InputError);
    Chain c{{0, 1, 2, 3}};
    CHECK(to_json(c)["length"] == 3);
    CHECK(to_json(c)["base"] == Json::array({0, 1}));
}
