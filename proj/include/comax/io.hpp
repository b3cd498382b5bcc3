#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "comax/embedding.hpp"
#include "comax/hypergraph.hpp"
#include "comax/structure.hpp"

namespace comax {

// JSON forms. Schemas are stable and key order is deterministic (object keys
// serialize sorted). Infinite diameter/girth encode as the string "inf";
// "uniform" encodes as null when the hypergraph is not uniform.
nlohmann::json subgroup_to_json(const Subgroup& h);
Subgroup subgroup_from_json(const nlohmann::json& j);

nlohmann::json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

nlohmann::json structure_report_to_json(const StructureReport& r);
nlohmann::json planarity_verdict_to_json(const PlanarityVerdict& v);
nlohmann::json surface_class_to_json(const SurfaceClass& s);

nlohmann::json rotation_system_to_json(const RotationSystem& rot);
RotationSystem rotation_system_from_json(const nlohmann::json& j);

// DOT / GraphML exports. Incidence DOT draws vertex nodes as circles and
// hyperedge nodes as boxes. All outputs are byte-deterministic.
std::string comaximal_graph_to_dot(const CoMaximalGraph& g);
std::string incidence_graph_to_dot(const Hypergraph& h, const IncidenceGraph& g);
std::string comaximal_graph_to_graphml(const CoMaximalGraph& g);
std::string incidence_graph_to_graphml(const Hypergraph& h, const IncidenceGraph& g);

// Human-readable report rendering ("∞" for infinite values).
std::string structure_report_to_text(const StructureReport& r);
std::string surface_class_to_text(const SurfaceClass& s);

}  // namespace comax
