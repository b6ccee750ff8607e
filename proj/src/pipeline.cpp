#include "primegraph/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "primegraph/enumerate.hpp"
#include "primegraph/graph_io.hpp"
#include "primegraph/modules.hpp"
#include "primegraph/oracles.hpp"
#include "primegraph/ramsey.hpp"

namespace primegraph {

const char* to_string(Route r) {
    switch (r) {
        case Route::ChainRoute: return "ChainRoute";
        case Route::TreeExtractionRoute: return "TreeExtractionRoute";
        case Route::HomogeneousSetRoute: return "HomogeneousSetRoute";
        case Route::DetectorFallback: return "DetectorFallback";
        case Route::NoneFound: return "NoneFound";
    }
    return "?";
}

namespace {

std::string join(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

std::string describe(const Witness& w) {
    return (w.complemented ? "complement of " : "") + to_string(w.kind) + " height " + std::to_string(w.height) +
           " on " + join(w.roles);
}

// Families that finish the argument once the spine colouring lands on a matching or a half split graph.
const std::vector<ConfigKind> kTerminalFamilies = {ConfigKind::HPrimeNI, ConfigKind::HStarN,
                                                    ConfigKind::StarSubdivision, ConfigKind::LineK2n,
                                                    ConfigKind::ThinSpider};

class Run {
public:
    Run(const Graph& g, const RunConfig& cfg) : g_(g), cfg_(cfg) {}

    PipelineResult go() {
        if (cfg_.n < 2) throw InputError("find_witness needs n >= 2");
        primality();
        if (chain_route()) return finish(Route::ChainRoute);
        if (tree_route()) return finish(Route::TreeExtractionRoute);
        homogeneous_route();
        return detector_route();
    }

private:
    void note(const std::string& step, const std::string& detail) { res_.trace.push_back({step, detail}); }

    void primality() {
        auto p = is_prime(g_);
        res_.prime = p.prime;
        res_.module_counterexample = p.counterexample;
        if (p.prime)
            note("primality", "graph is prime");
        else
            note("primality", "warning: graph is not prime; nontrivial module " + join(*p.counterexample));
    }

    bool chain_route() {
        const int n = cfg_.n;
        if (n < 3) {
            note("chain", "skipped: a prime chain of length 2 would be a prime graph on 3 vertices, and none exists");
            chain_status_ = SearchStatus::Absent;
            return false;
        }
        auto r = find_chain_of_length(g_, n + 1, Budget(cfg_.chain_budget));
        chain_status_ = r.status;
        if (r.status == SearchStatus::Unknown) {
            res_.budget_exhausted = true;
            note("chain", "budget exhausted searching for a chain of length " + std::to_string(n + 1));
            return false;
        }
        if (r.status == SearchStatus::Absent) {
            note("chain", "no chain of length " + std::to_string(n + 1));
            return false;
        }
        note("chain", "chain of length " + std::to_string(n + 1) + ": " + join(r.chain->vertices));
        Chain c = shrink_to_prime_chain(g_, *r.chain);
        note("chain", "shrunk to prime-inducing chain of length " + std::to_string(c.length()) + ": " + join(c.vertices));
        res_.witness = Witness{ConfigKind::PrimeChain, n, c.vertices, false};
        return true;
    }

    bool tree_route() {
        const int n = cfg_.n;
        BigBound gn = g_fn(n);
        BigBound hn = h_fn(n, gn, n);
        BigBound bn = BigBound::integer(n);
        BigBound threshold = ramsey_upper(std::vector<BigBound>{hn, bn, bn, gn});
        const int available = g_.order() / 2;
        std::string label = "R(h(n,g(n),n), n, n, g(n)) = " + threshold.value_string() + " (" +
                            to_string(threshold.polarity) + ")";
        if (!threshold.value || *threshold.value > available) {
            note("tree", "skipped: spine-pair threshold " + label + " exceeds the " + std::to_string(available) +
                             " pairs a graph of this order can hold");
            return false;
        }
        const int need = threshold.value->convert_to<int>();
        const int n1 = hn.value->convert_to<int>(), n2 = gn.value->convert_to<int>();
        const Graph comp = complement(g_);
        for (bool complemented : {false, true}) {
            const Graph& host = complemented ? comp : g_;
            const std::string side = complemented ? "complement" : "graph";
            CombResult comb = find_comb(host, need, Budget(cfg_.tree_budget));
            if (!comb.exact) res_.budget_exhausted = true;
            note("tree", side + ": longest spine comb has " + std::to_string(comb.pairs) + " pairs" +
                             (comb.exact ? "" : " (budget exhausted)") + ", threshold " + label);
            if (comb.pairs < need) continue;
            Witness w = extract_config_from_tree(comb.tree, n, n1, n2, ExtractMode::Strict);
            w.complemented = complemented;
            note("tree", "spine colouring gives " + describe(w));
            if (w.kind == ConfigKind::ThinSpider || w.kind == ConfigKind::BipartiteHalfGraph) {
                res_.witness = w;
                return true;
            }
            auto d = detect_any_of(g_, n, kTerminalFamilies, Budget(cfg_.detector_budget));
            if (d.status == SearchStatus::Unknown) res_.budget_exhausted = true;
            if (d.witness) {
                note("tree", "terminal family search found " + describe(*d.witness));
                res_.witness = d.witness;
                return true;
            }
            note("tree", std::string("terminal family search: ") + to_string(d.status));
        }
        return false;
    }

    void homogeneous_route() {
        if (g_.order() < 1) return;
        auto policy = cfg_.seed == 0 ? SelectionPolicy::MinIndex : SelectionPolicy::SeededRandom;
        res_.homogeneous = extract_homogeneous(g_, policy, cfg_.seed);
        const auto& h = *res_.homogeneous;
        note("homogeneous", std::string(h.complete ? "complete" : "independent") + " set of size " +
                                std::to_string(h.set.size()) + " " + join(h.set) + "; tree n=" +
                                std::to_string(h.report.n) + " t=" + std::to_string(h.report.t) +
                                " h=" + std::to_string(h.report.h));
    }

    PipelineResult detector_route() {
        auto d = detect_any(g_, cfg_.n, Budget(cfg_.detector_budget));
        if (d.status == SearchStatus::Unknown) res_.budget_exhausted = true;
        if (d.witness) {
            res_.witness = d.witness;
            bool reduction = chain_status_ == SearchStatus::Absent && cfg_.n >= 3;
            note("detector", "found " + describe(*d.witness) +
                                 (reduction ? " (no long chain: homogeneous-set reduction applies)" : ""));
            return finish(reduction ? Route::HomogeneousSetRoute : Route::DetectorFallback);
        }
        note("detector", std::string("no configuration of height ") + std::to_string(cfg_.n) + ": " + to_string(d.status));
        return finish(Route::NoneFound);
    }

    PipelineResult finish(Route route) {
        res_.route = route;
        if (res_.witness) {
            if (!verify_witness(g_, *res_.witness))
                throw InvariantViolation("pipeline produced an unverifiable witness: " + describe(*res_.witness));
            if (cfg_.oracle_mode && g_.order() <= oracle::kOracleMaxOrder) {
                const Graph host = res_.witness->complemented ? complement(g_) : g_;
                bool ok = oracle::find_config(host, res_.witness->kind, res_.witness->height).has_value();
                if (!ok) throw InvariantViolation("oracle finds no " + to_string(res_.witness->kind));
                note("oracle", "brute force confirms the witness kind");
            }
        }
        return std::move(res_);
    }

    const Graph& g_;
    RunConfig cfg_;
    PipelineResult res_;
    SearchStatus chain_status_ = SearchStatus::Unknown;
};

}  // namespace

PipelineResult find_witness(const Graph& g, const RunConfig& cfg) { return Run(g, cfg).go(); }

// ---------------------------------------------------------------------------

bool OracleReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });
}

namespace {

template <typename F>
OracleCheck run_check(const std::string& name, F&& body) {
    OracleCheck c{name, true, ""};
    try {
        body(c);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

void fail(OracleCheck& c, const std::string& why) {
    if (c.passed) c.detail = why;
    c.passed = false;
}

}  // namespace

OracleReport oracle_check(const Graph& g, const Detector& detector_in) {
    if (g.order() > oracle::kOracleMaxOrder)
        throw Refusal("oracle_check is limited to order " + std::to_string(oracle::kOracleMaxOrder) + ", got " +
                      std::to_string(g.order()));
    Detector detector = detector_in ? detector_in : [](const Graph& h, ConfigKind k, int n) {
        return find_induced(h, k, n);
    };
    OracleReport rep;
    const int n = g.order();

    rep.checks.push_back(run_check("primality", [&](OracleCheck& c) {
        bool brute = oracle::is_prime(g);
        bool fast = is_prime(g).prime;
        bool chains = n < 3 || oracle::all_triples_have_chain(g);
        if (brute != fast) fail(c, "subset brute force and closure test disagree");
        if (brute != chains) fail(c, "subset brute force and the all-triples chain criterion disagree");
    }));

    rep.checks.push_back(run_check("chain-closure", [&](OracleCheck& c) {
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = x + 1; y < n; ++y) {
                VertexSet module = oracle::minimal_module(g, {x, y});
                if (module_closure(g, VertexSet{x, y}) != module)
                    fail(c, "closure of {" + std::to_string(x) + "," + std::to_string(y) + "} differs from brute force");
                for (Vertex z = 0; z < n; ++z) {
                    if (z == x || z == y) continue;
                    bool inside = std::find(module.begin(), module.end(), z) != module.end();
                    bool chain = find_chain(g, {x, y}, z).has_value();
                    if (inside != chain || oracle::chain_exists(g, x, y, z) != chain)
                        fail(c, "chain/closure mismatch at (" + std::to_string(x) + "," + std::to_string(y) + ") -> " +
                                    std::to_string(z));
                }
            }
    }));

    rep.checks.push_back(run_check("detector", [&](OracleCheck& c) {
        for (auto kind : kAllKinds)
            for (int h = min_height(kind); h <= 3; ++h) {
                auto got = detector(g, kind, h);
                bool expect = oracle::find_config(g, kind, h).has_value();
                bool found = got.status == SearchStatus::Found;
                if (found != expect)
                    fail(c, to_string(kind) + " height " + std::to_string(h) + ": detector says " +
                                to_string(got.status) + ", brute force says " + (expect ? "present" : "absent"));
                if (found && (!got.witness || !verify_witness(g, *got.witness)))
                    fail(c, to_string(kind) + " height " + std::to_string(h) + ": witness fails verification");
            }
    }));

    if (n >= 1) {
        rep.checks.push_back(run_check("homogeneous", [&](OracleCheck& c) {
            auto h = extract_homogeneous(g);
            const auto& r = h.report;
            const int size = static_cast<int>(h.set.size());
            bool homogeneous = h.complete ? is_complete(g, h.set) : is_independent(g, h.set);
            if (!homogeneous) fail(c, "set is not homogeneous");
            if (size < std::max(r.t, (r.h + 1) / 2)) fail(c, "set smaller than max(t, h/2)");
            double bound = std::pow(static_cast<double>(r.n) / r.t, 1.0 / (r.t + 1)) / 4.0;
            if (size < bound) fail(c, "set smaller than (n/t)^(1/(t+1))/4");
        }));
        rep.checks.push_back(run_check("tree-rank", [&](OracleCheck& c) {
            auto w = tree_rank_witness(g, 8);
            int brute = oracle::tree_rank(g);
            if (w.rank != brute)
                fail(c, "search rank " + std::to_string(w.rank) + " vs brute force " + std::to_string(brute));
            if (w.witness && !is_valid_type_tree(*w.witness)) fail(c, "rank witness violates the tree invariants");
        }));
    }
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InputError("corpus source: bad " + what + " '" + s + "'");
    }
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::string& source) {
    std::vector<CorpusEntry> out;
    auto parts = split(source, ':');
    const std::string head = parts.empty() ? "" : parts[0];
    auto add_all = [&](const std::vector<Graph>& gs, const std::string& prefix, bool connected_only) {
        for (std::size_t i = 0; i < gs.size(); ++i)
            if (!connected_only || is_connected(gs[i]))
                out.push_back({prefix + "#" + std::to_string(i), gs[i], ""});
    };
    if ((head == "all" || head == "connected" || head == "upto") && parts.size() == 2) {
        int k = to_int(parts[1], "order");
        if (head == "upto")
            add_all(all_graphs_up_to(k), "upto" + parts[1], false);
        else
            add_all(all_graphs(k), head + parts[1], head == "connected");
        return out;
    }
    if (head == "random" && (parts.size() == 4 || parts.size() == 5)) {
        int order = to_int(parts[1], "order");
        Probability p = Probability::parse(parts[2]);
        int count = to_int(parts[3], "count");
        std::uint64_t seed = parts.size() == 5 ? static_cast<std::uint64_t>(to_int(parts[4], "seed")) : 1;
        for (int i = 0; i < count; ++i)
            out.push_back({"random" + std::to_string(order) + "#" + std::to_string(i),
                           random_graph(order, p, seed + static_cast<std::uint64_t>(i)), ""});
        return out;
    }
    if (head == "planted" && parts.size() == 2) {
        auto range = split(parts[1], '-');
        if (range.size() != 2) throw InputError("corpus source: planted needs LO-HI");
        int lo = to_int(range[0], "height"), hi = to_int(range[1], "height");
        for (auto kind : kTheoremFamilies)
            for (int h = std::max(lo, min_height(kind)); h <= hi; ++h) {
                Graph g = build_config(kind, h);
                out.push_back({to_string(kind) + ":" + std::to_string(h), g, ""});
                out.push_back({"co-" + to_string(kind) + ":" + std::to_string(h), complement(g), ""});
            }
        return out;
    }
    for (const auto& rec : read_graph_records(slurp_file(source))) {
        std::string label = source + ":" + std::to_string(rec.line);
        if (rec.error.empty())
            out.push_back({label, rec.graph, ""});
        else
            out.push_back({label, std::nullopt, rec.error});
    }
    return out;
}

namespace {

CorpusRow corpus_row(std::size_t index, const CorpusEntry& e, const CorpusOptions& opt) {
    CorpusRow row;
    row.index = index;
    row.label = e.label;
    if (!e.graph) {
        row.error = e.error;
        return row;
    }
    const Graph& g = *e.graph;
    try {
        row.order = g.order();
        row.prime = is_prime(g).prime;
        if (g.order() < 3)
            row.chain_radius = "-";
        else if (g.order() > 24)
            row.chain_radius = "skipped";
        else {
            auto r = chain_radius(g);
            row.chain_radius = r ? std::to_string(*r) : "none";
        }
        auto ladder = ladder_index(g, 8, Budget(1'000'000));
        row.ladder_index = std::to_string(ladder.value) + (ladder.exact ? "" : "+");
        if (g.order() == 0) {
            row.inequality = true;
        } else {
            auto policy = opt.run.seed == 0 ? SelectionPolicy::MinIndex : SelectionPolicy::SeededRandom;
            TypeTree tree = arrange_full(g, policy, opt.run.seed);
            try {
                auto rep = verify_rank_height(g, tree);
                row.tree_t = rep.t;
                row.tree_h = rep.h;
                row.inequality = rep.inequality_holds;
            } catch (const InvariantViolation& ex) {
                row.inequality = false;
                row.error = ex.what();
            }
        }
        for (int n = std::min(opt.max_n, g.order()); n >= 2; --n) {
            RunConfig cfg = opt.run;
            cfg.n = n;
            auto r = find_witness(g, cfg);
            if (r.witness) {
                row.witness_n = n;
                row.witness_kind = (r.witness->complemented ? "co-" : "") + to_string(r.witness->kind);
                row.route = to_string(r.route);
                break;
            }
        }
    } catch (const std::exception& ex) {
        row.error = ex.what();
    }
    return row;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

std::vector<CorpusRow> run_corpus(const std::vector<CorpusEntry>& entries, const CorpusOptions& opt) {
    std::vector<CorpusRow> rows(entries.size());
    unsigned threads = opt.threads > 0 ? static_cast<unsigned>(opt.threads) : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(entries.size(), 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) rows[i] = corpus_row(i, entries[i], opt);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

std::string corpus_csv(const std::vector<CorpusRow>& rows) {
    std::ostringstream os;
    os << "index,label,order,prime,chain_radius,ladder_index,tree_t,tree_h,inequality,witness_n,witness_kind,route,error\n";
    for (const auto& r : rows) {
        os << r.index << ',' << csv_field(r.label) << ',' << r.order << ',' << (r.prime ? "true" : "false") << ','
           << r.chain_radius << ',' << r.ladder_index << ',' << r.tree_t << ',' << r.tree_h << ','
           << (r.inequality ? "true" : "false") << ',' << r.witness_n << ',' << r.witness_kind << ',' << r.route << ','
           << csv_field(r.error) << '\n';
    }
    return os.str();
}

}  // namespace primegraph
