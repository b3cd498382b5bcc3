#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "comax/hypergraph.hpp"

namespace comax {

// Closed-form predictions computable from n alone. std::optional<int> plays
// the "infinite" role for girth (nullopt = no cycle) and the "none" role for
// uniform (nullopt = not uniform).
struct StructurePredictions {
  int diameter = 0;            // 1 if n = 2, 2 if n a prime power, else 3
  std::optional<int> girth;    // infinite if n = 2 or an odd prime power, else 2
  int chromatic = 2;
  bool star = false;           // iff n is a prime power
  bool hypertree = false;      // iff n is a prime power
  std::optional<int> uniform;  // 3 if n = 2^a, 2 if odd prime power, else none
};

struct StructureReport {
  int n = 0;
  std::optional<int> diameter;     // nullopt = disconnected
  std::optional<int> girth;        // nullopt = no Berge cycle
  int chromatic = 0;
  std::vector<int> coloring;       // witness, one color per vertex
  std::optional<int> star_center;  // vertex index in every hyperedge
  bool helly = false;
  bool hypertree = false;
  std::optional<int> uniform;
  StructurePredictions predictions;
  bool agreement = false;  // computed fields match predictions
};

// Berge distance: minimum number of hyperedges on a path between u and v,
// computed as shortest-path distance in the 2-section (vertices adjacent iff
// they share a hyperedge). nullopt when no path exists.
std::optional<int> distance(const Hypergraph& h, int u, int v);

// Max pairwise Berge distance; nullopt iff disconnected.
std::optional<int> diameter(const Hypergraph& h);

// Shortest Berge cycle length = (shortest cycle of the incidence graph) / 2;
// nullopt when the incidence graph is a forest.
std::optional<int> girth(const Hypergraph& h);

// True iff some pair of hyperedges shares >= 2 vertices. Equivalent to
// girth == 2; kept as an independent route for cross-checking.
bool has_two_edges_sharing_two_vertices(const Hypergraph& h);

struct ColoringResult {
  int chromatic = 0;
  std::vector<int> colors;  // witness: no hyperedge monochromatic
};

// Exact minimum number of colors such that no hyperedge is monochromatic,
// by incremental exact search k = 1, 2, ... with backtracking.
ColoringResult chromatic_number(const Hypergraph& h);

// A vertex belonging to all hyperedges, if one exists (smallest index).
std::optional<int> star_center(const Hypergraph& h);

// Helly property via the classical triple criterion: for every vertex
// triple, the hyperedges containing at least two of the three must have a
// common vertex. Cross-checked against exhaustive subfamily enumeration
// whenever |E| <= 16.
bool is_helly(const Hypergraph& h);

// Exhaustive route: every pairwise-intersecting subfamily of hyperedges has
// a common vertex. Exponential in |E|; callers guard the size.
bool is_helly_exhaustive(const Hypergraph& h);

// True iff some host tree exists in which every hyperedge induces a subtree.
// Decided via the classical characterization: Helly and chordal hyperedge
// intersection graph.
bool is_hypertree(const Hypergraph& h);

// Witness host tree for star instances: every vertex attached to the star
// center. nullopt when the hypergraph is not a star. Tree edges returned as
// vertex-index pairs.
std::optional<std::vector<std::pair<int, int>>> star_host_tree(const Hypergraph& h);

// True iff every hyperedge of the tree-on-the-vertex-set induces a connected
// subgraph (test-support validator for host trees).
bool edge_induces_subtree(const std::vector<std::pair<int, int>>& tree_edges,
                          int num_vertices, const std::vector<int>& hyperedge);

// k when all hyperedges have size k, else nullopt.
std::optional<int> uniform_k(const Hypergraph& h);

StructurePredictions predict(int n);

// All analyzers over build_hypergraph(n)'s output, plus the predictions and
// the agreement flag.
StructureReport analyze_structure(const Hypergraph& h);

}  // namespace comax
