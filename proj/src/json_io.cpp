#include "primegraph/json_io.hpp"

#include "primegraph/errors.hpp"

namespace primegraph {

Json to_json(const Witness& w) {
    Json roles = Json::array();
    auto names = role_names(w.kind, w.height);
    for (std::size_t i = 0; i < w.roles.size(); ++i)
        roles.push_back({{"role", i < names.size() ? names[i] : std::to_string(i)}, {"vertex", w.roles[i]}});
    return {{"kind", to_string(w.kind)}, {"height", w.height}, {"complemented", w.complemented}, {"roles", roles}};
}

Witness witness_from_json(const Json& j) {
    try {
        Witness w;
        w.kind = kind_from_string(j.at("kind").get<std::string>());
        w.height = j.at("height").get<int>();
        w.complemented = j.value("complemented", false);
        for (const auto& r : j.at("roles")) w.roles.push_back(r.at("vertex").get<Vertex>());
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed witness JSON: ") + e.what());
    }
}

Json to_json(const Chain& c) {
    return {{"base", c.base()}, {"vertices", c.vertices}, {"length", c.length()}};
}

Json to_json(const TypeTree& t) {
    Json nodes = Json::array();
    for (const auto& [addr, v] : t.nodes()) nodes.push_back({{"addr", addr}, {"vertex", v}});
    return {{"size", t.size()}, {"total", t.is_total()}, {"nodes", nodes}};
}

Json to_json(const BigBound& b) {
    Json j{{"exact", b.exact()}, {"polarity", to_string(b.polarity)}};
    if (b.value)
        j["value"] = b.value_string();
    else
        j["log2"] = b.log2().to_string();
    return j;
}

Json to_json(const BoundReport& r) {
    return {{"n", r.n},
            {"g_n", to_json(r.g_n)},
            {"h_n", to_json(r.h_n)},
            {"x", to_json(r.x)},
            {"M", to_json(r.M)},
            {"m", to_json(r.m)},
            {"log2_N_new", to_json(r.log2_N_new)},
            {"N_new", to_json(r.N_new)},
            {"log2_N_ckos", to_json(r.log2_N_ckos)},
            {"N_ckos_lower", to_json(r.N_ckos_lower)}};
}

Json to_json(const BoundComparison& c) {
    return {{"n", c.n},
            {"x_le_log2_m", c.x_le_log2_m},
            {"chain_middle", c.chain_middle},
            {"new_below_ckos", c.new_below_ckos},
            {"all", c.all()}};
}

Json to_json(const PipelineResult& r) {
    Json trace = Json::array();
    for (const auto& t : r.trace) trace.push_back({{"step", t.step}, {"detail", t.detail}});
    Json j{{"route", to_string(r.route)},
           {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
           {"prime", r.prime},
           {"budget_exhausted", r.budget_exhausted}};
    if (r.module_counterexample) j["module"] = *r.module_counterexample;
    if (r.homogeneous)
        j["homogeneous"] = {{"set", r.homogeneous->set}, {"complete", r.homogeneous->complete},
                            {"t", r.homogeneous->report.t}, {"h", r.homogeneous->report.h}};
    j["trace"] = trace;
    return j;
}

Json to_json(const OracleReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

}  // namespace primegraph
