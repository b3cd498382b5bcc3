#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "comax/subgroup.hpp"

namespace comax {

// The co-maximal graph: vertices are the subgroups from vertex_set(n), two
// distinct vertices adjacent iff their set product is the whole group.
struct CoMaximalGraph {
  int n = 0;
  std::vector<Subgroup> vertices;
  std::vector<std::vector<bool>> adj;  // symmetric, no self-loops

  std::size_t edge_count() const;
};

// The co-maximal hypergraph: hyperedges are the maximal cliques of the
// co-maximal graph, stored as sorted vertex-index sets in lexicographic
// order. Every hyperedge has >= 2 vertices, no hyperedge contains another,
// and every vertex lies in at least one hyperedge.
struct Hypergraph {
  int n = 0;
  std::vector<Subgroup> vertices;
  std::vector<std::vector<int>> hyperedges;
};

// Bipartite incidence representation: left side = vertices, right side =
// hyperedges, (v, e) connected iff v is a member of e.
struct IncidenceGraph {
  int num_vertices = 0;
  int num_hyperedges = 0;
  std::vector<std::pair<int, int>> edges;  // (vertex index, hyperedge index)

  int num_nodes() const { return num_vertices + num_hyperedges; }
};

CoMaximalGraph build_comaximal_graph(int n);

// All inclusion-maximal cliques of size >= 2 over an adjacency matrix,
// as sorted index lists in lexicographic order (Bron–Kerbosch with pivoting,
// degeneracy-ordered outer loop).
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adj);

inline std::vector<std::vector<int>> maximal_cliques(const CoMaximalGraph& g) {
  return maximal_cliques(g.adj);
}

Hypergraph build_hypergraph(int n);

IncidenceGraph incidence_graph(const Hypergraph& h);

}  // namespace comax
