#ifndef PRIMEGRAPH_PIPELINE_HPP
#define PRIMEGRAPH_PIPELINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "primegraph/configs.hpp"
#include "primegraph/graph.hpp"
#include "primegraph/type_tree.hpp"

namespace primegraph {

enum class Route { ChainRoute, TreeExtractionRoute, HomogeneousSetRoute, DetectorFallback, NoneFound };
const char* to_string(Route r);

struct TraceRecord {
    std::string step;    // chain / tree / homogeneous / detector / primality
    std::string detail;
    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct RunConfig {
    int n = 3;
    std::uint64_t chain_budget = 2'000'000;
    std::uint64_t tree_budget = 2'000'000;
    std::uint64_t detector_budget = 50'000'000;
    std::uint64_t seed = 0;   // 0 selects the min-index arrangement policy
    bool oracle_mode = false; // cross-check the returned witness with brute force (order <= 8)
};

struct PipelineResult {
    std::optional<Witness> witness;
    Route route = Route::NoneFound;
    std::vector<TraceRecord> trace;
    bool prime = true;
    std::optional<VertexSet> module_counterexample;
    std::optional<HomogeneousResult> homogeneous;
    bool budget_exhausted = false;
};

// Chain route, tree extraction, homogeneous set, detector fallback, in that order.
// A returned witness always passes verify_witness; InvariantViolation otherwise.
PipelineResult find_witness(const Graph& g, const RunConfig& cfg);

// --- oracle cross-checks -------------------------------------------------------

using Detector = std::function<DetectResult(const Graph&, ConfigKind, int)>;

struct OracleCheck {
    std::string name;
    bool passed = true;
    std::string detail;  // first disagreement, if any
};
struct OracleReport {
    std::vector<OracleCheck> checks;
    bool all_passed() const;
};
// Every brute-force cross-check on one graph; refuses order > 8. The detector is injectable
// so the harness itself can be tested against a deliberately broken one.
OracleReport oracle_check(const Graph& g, const Detector& detector = {});

// --- corpora --------------------------------------------------------------------

struct CorpusEntry {
    std::string label;
    std::optional<Graph> graph;
    std::string error;  // set when the entry could not be read
};
// "all:K", "upto:K", "connected:K", "random:ORDER:P:COUNT[:SEED]", "planted:LO-HI", or a file path.
std::vector<CorpusEntry> load_corpus(const std::string& source);

struct CorpusRow {
    std::size_t index = 0;
    std::string label;
    std::string error;
    int order = 0;
    bool prime = false;
    std::string chain_radius;   // number, "none", or "skipped"
    std::string ladder_index;   // number, with "+" when only a lower bound
    int tree_t = 0;
    int tree_h = 0;
    bool inequality = false;
    int witness_n = 0;          // largest n with a witness, 0 when none
    std::string witness_kind;
    std::string route;
};

struct CorpusOptions {
    RunConfig run;
    int max_n = 6;
    int threads = 0;  // 0: hardware concurrency
};
std::vector<CorpusRow> run_corpus(const std::vector<CorpusEntry>& entries, const CorpusOptions& opt);
std::string corpus_csv(const std::vector<CorpusRow>& rows);

}  // namespace primegraph

#endif  // PRIMEGRAPH_PIPELINE_HPP
