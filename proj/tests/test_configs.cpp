#include <doctest.h>

#include "primegraph/configs.hpp"
#include "primegraph/enumerate.hpp"
#include "primegraph/oracles.hpp"

using namespace primegraph;

namespace {

const std::vector<Graph>& small_corpus() {
    static const std::vector<Graph> graphs = all_graphs_up_to(7);
    return graphs;
}

Witness identity(ConfigKind kind, int n) {
    Witness w{kind, n, {}, false};
    for (int i = 0; i < role_count(kind, n); ++i) w.roles.push_back(i);
    return w;
}

}  // namespace

TEST_CASE("bipartite half-graph of height 2") {
    Graph g = build_config(ConfigKind::BipartiteHalfGraph, 2);
    CHECK(g.order() == 4);
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});
    CHECK(build_config(ConfigKind::InducedMatching, 1) == complete_graph(2));
}

TEST_CASE("kind names round-trip") {
    for (auto k : kAllKinds) CHECK(kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(kind_from_string("Octopus"), InputError);
    CHECK_THROWS_AS(build_config(ConfigKind::PrimeChain, 1), InputError);
    CHECK_THROWS_AS(build_config(ConfigKind::PrimeChain, 2), InputError);
}

TEST_CASE("every built configuration verifies under the identity embedding") {
    for (auto k : kAllKinds)
        for (int n = k == ConfigKind::PrimeChain ? 3 : min_height(k); n <= 6; ++n) {
            Graph g = build_config(k, n);
            CHECK(g.order() == role_count(k, n));
            CHECK(role_names(k, n).size() == static_cast<std::size_t>(role_count(k, n)));
            CHECK(verify_witness(g, identity(k, n)));
        }
}

TEST_CASE("deleting a role edge breaks verification") {
    for (auto k : {ConfigKind::BipartiteHalfGraph, ConfigKind::ThinSpider, ConfigKind::HStarN,
                   ConfigKind::StarSubdivision, ConfigKind::LineK2n}) {
        Graph g = build_config(k, 4);
        auto [u, v] = g.edges().front();
        Graph cut = GraphBuilder(g).remove_edge(u, v).build();
        CHECK_FALSE(verify_witness(cut, identity(k, 4)));
    }
}

TEST_CASE("complemented witnesses are checked in the complement") {
    Graph thick = build_config(ConfigKind::ThickSpider, 4);
    for (int n = 2; n <= 4; ++n) {
        auto hit = find_induced_complement(thick, ConfigKind::ThinSpider, n);
        REQUIRE(hit.witness);
        CHECK(hit.witness->complemented);
        CHECK(verify_witness(thick, *hit.witness));
    }
    for (const Graph& g : all_graphs(6)) {
        bool thin_in_complement = find_induced_complement(g, ConfigKind::ThinSpider, 3).status == SearchStatus::Found;
        bool thick_present = find_induced(g, ConfigKind::ThickSpider, 3).status == SearchStatus::Found;
        CHECK(thin_in_complement == thick_present);
    }
}

TEST_CASE("planted detection and simple absences") {
    CHECK(find_induced(build_config(ConfigKind::HPrimeNI, 3), ConfigKind::HPrimeNI, 3).status == SearchStatus::Found);
    CHECK(find_induced(empty_graph(10), ConfigKind::ThinSpider, 2).status == SearchStatus::Absent);
    Graph p6 = path_graph(6);
    CHECK(find_induced(p6, ConfigKind::BipartiteHalfGraph, 2).witness.has_value() ==
          oracle::find_config(p6, ConfigKind::BipartiteHalfGraph, 2).has_value());
}

TEST_CASE("detector agrees with tuple enumeration for every kind up to height 4") {
    int disagreements = 0;
    for (const Graph& g : small_corpus())
        for (auto k : kAllKinds)
            for (int n = min_height(k); n <= 4; ++n) {
                auto got = find_induced(g, k, n);
                bool expect = oracle::find_config(g, k, n).has_value();
                if ((got.status == SearchStatus::Found) != expect) ++disagreements;
                if (got.witness && !verify_witness(g, *got.witness)) ++disagreements;
            }
    CHECK(disagreements == 0);
}

TEST_CASE("complement duality of detectors") {
    int mismatches = 0;
    for (const Graph& g : small_corpus()) {
        Graph c = complement(g);
        for (int n = 1; n <= 3; ++n) {
            auto found = [](const DetectResult& r) { return r.status == SearchStatus::Found; };
            if (found(find_induced(g, ConfigKind::ThinSpider, n)) != found(find_induced(c, ConfigKind::ThickSpider, n)))
                ++mismatches;
            if (found(find_induced(g, ConfigKind::LineK2n, n)) !=
                found(find_induced_complement(c, ConfigKind::LineK2n, n)))
                ++mismatches;
            if (found(find_induced(g, ConfigKind::HStarN, n)) !=
                found(find_induced_complement(c, ConfigKind::HStarN, n)))
                ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("max height examples") {
    CHECK(max_height(build_config(ConfigKind::BipartiteHalfGraph, 5), ConfigKind::BipartiteHalfGraph, 8).value == 5);
    CHECK(max_height(complete_graph(3), ConfigKind::InducedMatching, 3).value == 1);
    for (auto k : {ConfigKind::InducedMatching, ConfigKind::ThinSpider, ConfigKind::BipartiteHalfGraph})
        CHECK(max_height(empty_graph(8), k, 4).value == 0);
}

TEST_CASE("max height does not grow under vertex deletion") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_graph(8, Probability{1, 2}, seed);
        for (auto k : {ConfigKind::InducedMatching, ConfigKind::BipartiteHalfGraph, ConfigKind::ThinSpider}) {
            int whole = max_height(g, k, 4).value;
            for (Vertex drop = 0; drop < g.order(); ++drop) {
                VertexSet keep;
                for (Vertex v = 0; v < g.order(); ++v)
                    if (v != drop) keep.push_back(v);
                CHECK(max_height(induced_subgraph(g, keep).graph, k, 4).value <= whole);
            }
        }
    }
}

TEST_CASE("ladder index matches brute force and shifts by at most one under complement") {
    int k6 = 0;
    for (int k = 1; k <= 3; ++k)
        if (oracle::find_config(complete_graph(6), ConfigKind::HalfGraphPattern, k)) k6 = k;
    CHECK(ladder_index(complete_graph(6), 3).value == k6);
    for (const Graph& g : small_corpus()) {
        int brute = 0;
        for (int k = 1; k <= 3; ++k)
            if (oracle::find_config(g, ConfigKind::HalfGraphPattern, k)) brute = k;
        auto fast = ladder_index(g, 3);
        CHECK(fast.exact);
        CHECK(fast.value == brute);
        CHECK(ladder_index(complement(g), 3).value >= fast.value - 1);
    }
    CHECK(ladder_index(complete_graph(2), 3).value == 1);
    CHECK(ladder_index(empty_graph(2), 3).value == 0);
}

TEST_CASE("detect_any covers the theorem families and their complements") {
    auto spider = detect_any(build_config(ConfigKind::ThinSpider, 5), 5);
    REQUIRE(spider.witness);
    CHECK(spider.witness->kind == ConfigKind::ThinSpider);
    auto hstar = detect_any(complement(build_config(ConfigKind::HStarN, 4)), 4);
    REQUIRE(hstar.witness);
    CHECK(hstar.witness->kind == ConfigKind::HStarN);
    CHECK(hstar.witness->complemented);
    CHECK(detect_any(complete_graph(2), 2).status == SearchStatus::Absent);
}

TEST_CASE("budget exhaustion is reported as unknown") {
    Graph g = random_graph(40, Probability{1, 2}, 9);
    auto r = find_induced(g, ConfigKind::InducedMatching, 12, Budget(50));
    CHECK(r.status == SearchStatus::Unknown);
    CHECK_FALSE(r.witness);
}
