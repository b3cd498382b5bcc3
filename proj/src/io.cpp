#include "comax/io.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace comax {

using nlohmann::json;

json subgroup_to_json(const Subgroup& h) {
  if (h.is_rotation()) return json{{"type", "rotation"}, {"r", h.r}};
  return json{{"type", "dihedral"}, {"r", h.r}, {"i", h.i}};
}

Subgroup subgroup_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "rotation") return Subgroup::rotation(j.at("r").get<int>());
  if (type == "dihedral") {
    return Subgroup::dihedral(j.at("r").get<int>(), j.at("i").get<int>());
  }
  throw std::invalid_argument("unknown subgroup type: " + type);
}

json hypergraph_to_json(const Hypergraph& h) {
  json vertices = json::array();
  for (const Subgroup& v : h.vertices) vertices.push_back(subgroup_to_json(v));
  return json{{"n", h.n}, {"vertices", vertices}, {"hyperedges", h.hyperedges}};
}

Hypergraph hypergraph_from_json(const json& j) {
  Hypergraph h;
  h.n = j.at("n").get<int>();
  for (const json& v : j.at("vertices")) h.vertices.push_back(subgroup_from_json(v));
  h.hyperedges = j.at("hyperedges").get<std::vector<std::vector<int>>>();
  return h;
}

namespace {

json optional_or_inf(const std::optional<int>& value) {
  if (!value) return json("inf");
  return json(*value);
}

json optional_or_null(const std::optional<int>& value) {
  if (!value) return json(nullptr);
  return json(*value);
}

std::string render_optional(const std::optional<int>& value, const char* none) {
  return value ? std::to_string(*value) : std::string(none);
}

}  // namespace

json structure_report_to_json(const StructureReport& r) {
  json predictions{{"diameter", r.predictions.diameter},
                   {"girth", optional_or_inf(r.predictions.girth)},
                   {"chromatic", r.predictions.chromatic},
                   {"star", r.predictions.star},
                   {"hypertree", r.predictions.hypertree},
                   {"uniform", optional_or_null(r.predictions.uniform)}};
  return json{{"n", r.n},
              {"diameter", optional_or_inf(r.diameter)},
              {"girth", optional_or_inf(r.girth)},
              {"chromatic", r.chromatic},
              {"star", r.star_center.has_value()},
              {"helly", r.helly},
              {"hypertree", r.hypertree},
              {"uniform", optional_or_null(r.uniform)},
              {"predictions", predictions},
              {"agreement", r.agreement}};
}

json planarity_verdict_to_json(const PlanarityVerdict& v) {
  if (v.is_planar()) {
    const PlanarEmbedding& e = v.embedding();
    return json{{"kind", "embedding"},
                {"rotation", rotation_system_to_json(e.rotation)},
                {"faces", e.faces}};
  }
  const KuratowskiObstruction& o = v.obstruction();
  return json{{"kind", o.kind == KuratowskiObstruction::Kind::k5
                           ? "k5_subdivision"
                           : "k33_subdivision"},
              {"branch_vertices", o.branch_vertices},
              {"paths", o.paths}};
}

json surface_class_to_json(const SurfaceClass& s) {
  const char* kind = s.kind == SurfaceKind::planar ? "planar"
                     : s.kind == SurfaceKind::toroidal_and_projective
                         ? "toroidal_and_projective"
                         : "higher_genus";
  const char* basis = s.basis == CertificateBasis::theorem      ? "theorem"
                      : s.basis == CertificateBasis::certificate ? "certificate"
                                                                  : "both";
  json out{{"class", kind}, {"basis", basis},
           {"planarity", planarity_verdict_to_json(s.planarity)}};
  if (s.k37) {
    out["k37_triple"] = json{{"vertices", s.k37->vertices},
                             {"common_hyperedges", s.k37->common_hyperedges}};
  }
  if (s.euler_bounds) {
    out["euler_lower_bounds"] = json{{"orientable", s.euler_bounds->orientable},
                                     {"nonorientable", s.euler_bounds->nonorientable}};
  }
  return out;
}

json rotation_system_to_json(const RotationSystem& rot) {
  json out = json::object();
  for (std::size_t v = 0; v < rot.size(); ++v) out[std::to_string(v)] = rot[v];
  return out;
}

RotationSystem rotation_system_from_json(const json& j) {
  RotationSystem rot(j.size());
  for (const auto& [key, value] : j.items()) {
    const std::size_t node = std::stoul(key);
    if (node >= rot.size()) rot.resize(node + 1);
    rot[node] = value.get<std::vector<int>>();
  }
  return rot;
}

std::string comaximal_graph_to_dot(const CoMaximalGraph& g) {
  std::ostringstream out;
  out << "graph comaximal_n" << g.n << " {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"" << to_string(g.vertices[v]) << "\"];\n";
  }
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      if (g.adj[a][b]) out << "  v" << a << " -- v" << b << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string incidence_graph_to_dot(const Hypergraph& h, const IncidenceGraph& g) {
  std::ostringstream out;
  out << "graph incidence_n" << h.n << " {\n";
  for (int v = 0; v < g.num_vertices; ++v) {
    out << "  v" << v << " [shape=circle, label=\"" << to_string(h.vertices[v])
        << "\"];\n";
  }
  for (int e = 0; e < g.num_hyperedges; ++e) {
    out << "  e" << e << " [shape=box, label=\"e" << e << "\"];\n";
  }
  for (auto [v, e] : g.edges) out << "  v" << v << " -- e" << e << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

void open_graphml(std::ostringstream& out) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
      << "  <key id=\"side\" for=\"node\" attr.name=\"side\" attr.type=\"string\"/>\n";
}

}  // namespace

std::string comaximal_graph_to_graphml(const CoMaximalGraph& g) {
  std::ostringstream out;
  open_graphml(out);
  out << "  <graph id=\"comaximal_n" << g.n << "\" edgedefault=\"undirected\">\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out << "    <node id=\"v" << v << "\"><data key=\"label\">"
        << to_string(g.vertices[v]) << "</data></node>\n";
  }
  int edge_id = 0;
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < g.vertices.size(); ++b) {
      if (g.adj[a][b]) {
        out << "    <edge id=\"e" << edge_id++ << "\" source=\"v" << a
            << "\" target=\"v" << b << "\"/>\n";
      }
    }
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string incidence_graph_to_graphml(const Hypergraph& h, const IncidenceGraph& g) {
  std::ostringstream out;
  open_graphml(out);
  out << "  <graph id=\"incidence_n" << h.n << "\" edgedefault=\"undirected\">\n";
  for (int v = 0; v < g.num_vertices; ++v) {
    out << "    <node id=\"v" << v << "\"><data key=\"label\">"
        << to_string(h.vertices[v])
        << "</data><data key=\"side\">vertex</data></node>\n";
  }
  for (int e = 0; e < g.num_hyperedges; ++e) {
    out << "    <node id=\"e" << e << "\"><data key=\"label\">e" << e
        << "</data><data key=\"side\">hyperedge</data></node>\n";
  }
  int edge_id = 0;
  for (auto [v, e] : g.edges) {
    out << "    <edge id=\"i" << edge_id++ << "\" source=\"v" << v
        << "\" target=\"e" << e << "\"/>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string structure_report_to_text(const StructureReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << "\n"
      << "  diameter:  " << render_optional(r.diameter, "∞") << "\n"
      << "  girth:     " << render_optional(r.girth, "∞") << "\n"
      << "  chromatic: " << r.chromatic << "\n"
      << "  star:      " << (r.star_center ? "yes" : "no") << "\n"
      << "  helly:     " << (r.helly ? "yes" : "no") << "\n"
      << "  hypertree: " << (r.hypertree ? "yes" : "no") << "\n"
      << "  uniform:   " << render_optional(r.uniform, "-") << "\n"
      << "  agreement: " << (r.agreement ? "yes" : "NO") << "\n";
  return out.str();
}

std::string surface_class_to_text(const SurfaceClass& s) {
  std::ostringstream out;
  out << "  surface:   ";
  switch (s.kind) {
    case SurfaceKind::planar: out << "planar"; break;
    case SurfaceKind::toroidal_and_projective: out << "toroidal & projective"; break;
    case SurfaceKind::higher_genus: out << "genus >= 2"; break;
  }
  out << " (basis: ";
  switch (s.basis) {
    case CertificateBasis::theorem: out << "theorem only"; break;
    case CertificateBasis::certificate: out << "certificate"; break;
    case CertificateBasis::both: out << "theorem + certificate"; break;
  }
  out << ")\n";
  if (s.k37) {
    out << "  K_{3,7}:   vertices " << s.k37->vertices[0] << ", "
        << s.k37->vertices[1] << ", " << s.k37->vertices[2] << " in "
        << s.k37->common_hyperedges.size() << " common hyperedges\n";
  }
  if (s.euler_bounds) {
    out << "  euler lb:  genus >= " << s.euler_bounds->orientable
        << ", crosscap >= " << s.euler_bounds->nonorientable << "\n";
  }
  return out.str();
}

}  // namespace comax
