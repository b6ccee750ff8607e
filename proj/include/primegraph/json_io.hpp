#ifndef PRIMEGRAPH_JSON_IO_HPP
#define PRIMEGRAPH_JSON_IO_HPP

#include <json.hpp>

#include "primegraph/configs.hpp"
#include "primegraph/modules.hpp"
#include "primegraph/pipeline.hpp"
#include "primegraph/ramsey.hpp"
#include "primegraph/type_tree.hpp"

namespace primegraph {

using Json = nlohmann::ordered_json;

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);  // InputError on malformed input
Json to_json(const Chain& c);
Json to_json(const TypeTree& t);
Json to_json(const BigBound& b);
Json to_json(const BoundReport& r);
Json to_json(const BoundComparison& c);
Json to_json(const PipelineResult& r);
Json to_json(const OracleReport& r);

}  // namespace primegraph

#endif  // PRIMEGRAPH_JSON_IO_HPP
