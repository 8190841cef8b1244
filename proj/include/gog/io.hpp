#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gog/agraph.hpp"
#include "gog/builders.hpp"
#include "gog/folding.hpp"
#include "gog/membership.hpp"

namespace gog::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kInstanceFormat = "gogfold-instance";
inline constexpr const char* kResultFormat = "gogfold-result";
inline constexpr const char* kGraphFormat = "gogfold-graph";
inline constexpr int kVersion = 1;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Instance {
    std::shared_ptr<const GraphOfGroups> A;
    int base = 0;
    std::vector<APath> generators;
    std::vector<APath> queries;
};

// Throws ParseError on malformed documents, unknown names and paths that do not type-check.
Instance parse_instance(const Json& j);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);
Json instance_to_json(const Instance& inst);

Json group_to_json(const Group& G);
GroupPtr group_from_json(const Json& j);

// Vertices with generator lists and edges with label triples.
Json agraph_to_json(const AGraph& B);
AGraph agraph_from_json(std::shared_ptr<const GraphOfGroups> A, const Json& j);

Json bpath_to_json(const AGraph& B, const BPath& q);
BPath bpath_from_json(const AGraph& B, const Json& j);
Json certificate_to_json(const AGraph& B, const MembershipCertificate& c);
MembershipCertificate certificate_from_json(const AGraph& B, const Json& j);

Json trace_to_json(const FoldTrace& t);
Json splitting_to_json(const AGraph& B, const InducedSplitting& s);

// Simple graphs for the RAAG and graph-product builders: named vertices and unordered edges.
SimpleGraph simple_graph_from_json(const Json& j);

// One node per vertex labelled "(B_u, v)" and one arrow per geometric edge labelled "(a,e,b)".
std::string emit_dot(const AGraph& B);

}  // namespace gog::io
