#pragma once

#include <vector>

#include <json.hpp>

#include "dthrot/characterization.hpp"
#include "dthrot/digraph.hpp"
#include "dthrot/forcing.hpp"
#include "dthrot/throttling.hpp"
#include "dthrot/verifier.hpp"

namespace dthrot {

using Json = nlohmann::json;

Json to_json(const Digraph& g);  // {"n", "arcs"} with arcs sorted
Json to_json(const UndirectedGraph& g);  // {"n", "edges"}
Digraph digraph_from_json(const Json& j);
UndirectedGraph graph_from_json(const Json& j);

Json to_json(const Timeline& tl);  // {"pt": int|null, "layers", "forces"}
Json to_json(const ThrottlingCertificate& cert);
Json to_json(const OTIReport& report);
OTIReport oti_from_json(const Json& j);
Json to_json(const CharacterizationWitness& w);
CharacterizationWitness witness_from_json(const Json& j);
Json to_json(const SuiteReport& report);
SuiteReport suite_from_json(const Json& j);
Json to_json(const CensusDistribution& dist);
CensusDistribution census_from_json(const Json& j);

/// Shard output of the conjecture sweep: {"kind": "conjecture_shard", "reports": [...]}.
Json conjecture_shard_json(const std::vector<OTIReport>& reports);

/// Merges shard documents of one kind: OTI reports, census distributions or
/// conjecture shards (the last yields the conjecture suite report).
Json merge_documents(const std::vector<Json>& docs);

}  // namespace dthrot
