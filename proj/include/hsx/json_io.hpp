#pragma once

#include <json.hpp>
#include <string>

#include "hsx/constructions.hpp"
#include "hsx/hypergraph.hpp"
#include "hsx/partition.hpp"
#include "hsx/spectra.hpp"
#include "hsx/walks.hpp"
#include "hsx/weighted_graph.hpp"

namespace hsx {

using json = nlohmann::json;

/// Parses the canonical input schema
///   {"k":3,"vertices":5,"edges":[[0,1,2],[0,3,4]],"weights":[0.5,0.5]}
/// ("weights" optional, uniform default). Throws InputError naming the
/// first violation.
Hypergraph parse_hypergraph(const std::string& text);

json hypergraph_to_json(const Hypergraph& h);

json spectral_report_to_json(const SpectralReport& r);
json walk_operator_to_json(const WalkOperator& op);     // {rows, cols, data}
json weighted_graph_to_json(const WeightedGraph& g);
json oracle_result_to_json(const OracleResult& r);
json sweep_result_to_json(const SweepResult& r);
json cut_certificate_to_json(const CutCertificate& c);
json bound_report_to_json(const BoundReport& r);
json splitting_tree_to_json(const SplittingTree& t);
json splittability_to_json(const SplittabilityResult& r);
json link_expansion_to_json(const LinkExpansionResult& r);
json claim_report_to_json(const ClaimReport& r);

/// Serializes with floating-point numbers at 17 significant digits and
/// alphabetical object keys, so reports are byte-stable.
std::string dump_json(const json& j, int indent = 2);

} // namespace hsx
