#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "primegraph/configs.hpp"
#include "primegraph/errors.hpp"
#include "primegraph/graph_io.hpp"
#include "primegraph/json_io.hpp"
#include "primegraph/modules.hpp"
#include "primegraph/pipeline.hpp"
#include "primegraph/ramsey.hpp"
#include "primegraph/type_tree.hpp"

using namespace primegraph;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kBudget = 3, kInvariant = 4 };

Graph load(const std::string& path) {
    if (path == "-") {
        std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
        return read_graph_text(text);
    }
    return read_graph_file(path);
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

int cmd_is_prime(const std::string& file) {
    Graph g = load(file);
    auto r = is_prime(g);
    Json j{{"order", g.order()}, {"prime", r.prime}};
    if (r.counterexample) j["module"] = *r.counterexample;
    print(j);
    return r.prime ? kOk : kNegative;
}

int cmd_chain_radius(const std::string& file) {
    Graph g = load(file);
    auto r = chain_radius(g);
    print(Json{{"order", g.order()}, {"chain_radius", r ? Json(*r) : Json(nullptr)}});
    return r ? kOk : kNegative;
}

int cmd_type_tree(const std::string& file, std::uint64_t seed, const std::string& dot) {
    Graph g = load(file);
    TypeTree tree = arrange_full(g, seed == 0 ? SelectionPolicy::MinIndex : SelectionPolicy::SeededRandom, seed);
    auto rep = verify_rank_height(g, tree);
    Json j = to_json(tree);
    j["violations"] = check_type_tree(tree);
    j["t"] = rep.t;
    j["h"] = rep.h;
    j["inequality_holds"] = rep.inequality_holds;
    print(j);
    if (!dot.empty()) write_file(dot, tree_to_dot(tree));
    return kOk;
}

int cmd_ladder(const std::string& file, int cap, std::uint64_t budget) {
    Graph g = load(file);
    auto r = ladder_index(g, cap, budget ? Budget(budget) : Budget::unlimited());
    print(Json{{"ladder_index", r.value}, {"exact", r.exact}, {"cap", cap}});
    return r.exact ? kOk : kBudget;
}

int cmd_find_witness(const std::string& file, int n, std::uint64_t budget, std::uint64_t seed, bool json) {
    Graph g = load(file);
    RunConfig cfg;
    cfg.n = n;
    cfg.seed = seed;
    if (budget) cfg.chain_budget = cfg.tree_budget = cfg.detector_budget = budget;
    auto r = find_witness(g, cfg);
    if (json) {
        print(to_json(r));
    } else {
        for (const auto& t : r.trace) std::cout << "[" << t.step << "] " << t.detail << '\n';
        std::cout << "route: " << to_string(r.route) << '\n';
        if (r.witness) std::cout << "witness: " << to_json(*r.witness).dump() << '\n';
    }
    if (r.witness) return kOk;
    return r.budget_exhausted ? kBudget : kNegative;
}

int cmd_bounds(int n) {
    print(to_json(bound_report(n)));
    return kOk;
}

int cmd_compare(int n) {
    auto c = compare_bounds(n);
    print(to_json(c));
    return c.all() ? kOk : kNegative;
}

int cmd_oracle(const std::string& file) {
    auto rep = oracle_check(load(file));
    print(to_json(rep));
    return rep.all_passed() ? kOk : kInvariant;
}

int cmd_corpus(const std::string& source, const std::string& out, int max_n, int threads, std::uint64_t seed) {
    CorpusOptions opt;
    opt.max_n = max_n;
    opt.threads = threads;
    opt.run.seed = seed;
    auto rows = run_corpus(load_corpus(source), opt);
    std::string csv = corpus_csv(rows);
    if (out.empty())
        std::cout << csv;
    else
        write_file(out, csv);
    return kOk;
}

int cmd_generate(const std::string& kind, int n, bool complemented, bool graph6) {
    Graph g = build_config(kind_from_string(kind), n);
    if (complemented) g = complement(g);
    std::cout << (graph6 ? emit_graph6(g) + "\n" : emit_adjacency_list(g));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime graph toolkit: modules and chains, type trees, configurations and Ramsey-type bounds"};
    app.require_subcommand(1);

    std::string file, dot, source, out, kind;
    int n = 3, cap = 8, max_n = 6, threads = 0;
    std::uint64_t seed = 0, budget = 0;
    bool json = false, graph6 = false, complemented = false;

    auto* is_prime_cmd = app.add_subcommand("is-prime", "Primality test; prints a nontrivial module when not prime");
    is_prime_cmd->add_option("file", file, "graph6 or adjacency-list file ('-' for stdin)")->required();

    auto* radius_cmd = app.add_subcommand("chain-radius", "Maximum over triples of the shortest chain length");
    radius_cmd->add_option("file", file)->required();

    auto* tree_cmd = app.add_subcommand("type-tree", "Arrange the graph into a full type tree");
    tree_cmd->add_option("file", file)->required();
    tree_cmd->add_option("--seed", seed, "0 picks the minimum index at each step, otherwise seeded random");
    tree_cmd->add_option("--dot", dot, "write the tree in DOT format to this path");

    auto* ladder_cmd = app.add_subcommand("ladder-index", "Largest half-graph pattern height");
    ladder_cmd->add_option("file", file)->required();
    ladder_cmd->add_option("--cap", cap, "largest height tried")->capture_default_str();
    ladder_cmd->add_option("--budget", budget, "search node budget (0 = unlimited)");

    auto* witness_cmd = app.add_subcommand("find-witness", "Search for an unavoidable prime configuration");
    witness_cmd->add_option("file", file)->required();
    witness_cmd->add_option("--n", n, "target height")->required();
    witness_cmd->add_option("--budget", budget, "node budget for each phase (0 = defaults)");
    witness_cmd->add_option("--seed", seed, "tree arrangement seed");
    witness_cmd->add_flag("--json", json, "print the full result as JSON");

    auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the explicit bound chain for n");
    bounds_cmd->add_option("--n", n)->required();

    auto* compare_cmd = app.add_subcommand("compare-bounds", "Certify each comparison link for n");
    compare_cmd->add_option("--n", n)->required();

    auto* oracle_cmd = app.add_subcommand("oracle-check", "Cross-check every search against brute force (order <= 8)");
    oracle_cmd->add_option("file", file)->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "Tabulate statistics over a corpus");
    corpus_cmd->add_option("source", source,
                           "all:K | upto:K | connected:K | random:ORDER:P:COUNT[:SEED] | planted:LO-HI | file")
        ->required();
    corpus_cmd->add_option("--out", out, "CSV output path (stdout when omitted)");
    corpus_cmd->add_option("--max-n", max_n, "largest witness height tried")->capture_default_str();
    corpus_cmd->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");
    corpus_cmd->add_option("--seed", seed, "tree arrangement seed");

    auto* gen_cmd = app.add_subcommand("generate", "Emit a named configuration");
    gen_cmd->add_option("--kind", kind, "configuration kind, e.g. ThinSpider")->required();
    gen_cmd->add_option("--n", n, "height")->required();
    gen_cmd->add_flag("--complement", complemented, "emit the complement");
    gen_cmd->add_flag("--graph6", graph6, "graph6 instead of adjacency list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*is_prime_cmd) return cmd_is_prime(file);
        if (*radius_cmd) return cmd_chain_radius(file);
        if (*tree_cmd) return cmd_type_tree(file, seed, dot);
        if (*ladder_cmd) return cmd_ladder(file, cap, budget);
        if (*witness_cmd) return cmd_find_witness(file, n, budget, seed, json);
        if (*bounds_cmd) return cmd_bounds(n);
        if (*compare_cmd) return cmd_compare(n);
        if (*oracle_cmd) return cmd_oracle(file);
        if (*corpus_cmd) return cmd_corpus(source, out, max_n, threads, seed);
        if (*gen_cmd) return cmd_generate(kind, n, complemented, graph6);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const Refusal& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kBudget;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kInvariant;
    }
    return kInputError;
}
