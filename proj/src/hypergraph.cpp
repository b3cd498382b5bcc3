#include "comax/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "comax/lattice.hpp"

namespace comax {

std::size_t CoMaximalGraph::edge_count() const {
  std::size_t doubled = 0;
  for (const auto& row : adj) doubled += std::count(row.begin(), row.end(), true);
  return doubled / 2;
}

CoMaximalGraph build_comaximal_graph(int n) {
  CoMaximalGraph g;
  g.n = n;
  g.vertices = vertex_set(n);
  const int v = static_cast<int>(g.vertices.size());
  g.adj.assign(v, std::vector<bool>(v, false));
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (is_comaximal(g.vertices[a], g.vertices[b], n)) {
        g.adj[a][b] = g.adj[b][a] = true;
      }
    }
  }
  return g;
}

namespace {

using IndexSet = std::vector<int>;  // strictly increasing

IndexSet intersect_sorted(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

struct CliqueEnumerator {
  const std::vector<IndexSet>& neighbors;
  std::vector<std::vector<int>> cliques;

  // Bron–Kerbosch with pivoting. Reports maximal cliques of size >= 2 (the
  // size filter drops isolated vertices, which form singleton cliques).
  void expand(std::vector<int>& clique, IndexSet candidates, IndexSet excluded) {
    if (candidates.empty() && excluded.empty()) {
      if (clique.size() >= 2) cliques.push_back(clique);
      return;
    }
    // pivot: maximize the number of candidates it dominates
    int pivot = -1;
    std::size_t best = 0;
    for (const IndexSet* pool : {&candidates, &excluded}) {
      for (int u : *pool) {
        std::size_t covered = intersect_sorted(candidates, neighbors[u]).size();
        if (pivot == -1 || covered > best) {
          pivot = u;
          best = covered;
        }
      }
    }
    IndexSet branch;
    std::set_difference(candidates.begin(), candidates.end(),
                        neighbors[pivot].begin(), neighbors[pivot].end(),
                        std::back_inserter(branch));
    for (int v : branch) {
      clique.push_back(v);
      expand(clique, intersect_sorted(candidates, neighbors[v]),
             intersect_sorted(excluded, neighbors[v]));
      clique.pop_back();
      candidates.erase(std::find(candidates.begin(), candidates.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }
};

// Removal order of repeatedly extracting a minimum-degree vertex
// (ties broken by index), so the outer loop touches each vertex with only
// its not-yet-processed neighbors as candidates.
std::vector<int> degeneracy_order(const std::vector<IndexSet>& neighbors) {
  const int n = static_cast<int>(neighbors.size());
  std::vector<int> degree(n), order;
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(neighbors[v].size());
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (pick == -1 || degree[v] < degree[pick])) pick = v;
    }
    removed[pick] = true;
    order.push_back(pick);
    for (int u : neighbors[pick]) {
      if (!removed[u]) --degree[u];
    }
  }
  return order;
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<IndexSet> neighbors(n);
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(adj[v].size()) != n) {
      throw std::invalid_argument("adjacency matrix must be square");
    }
    if (adj[v][v]) throw std::invalid_argument("self-loops are not allowed");
    for (int u = 0; u < n; ++u) {
      if (adj[v][u] != adj[u][v]) {
        throw std::invalid_argument("adjacency matrix must be symmetric");
      }
      if (adj[v][u]) neighbors[v].push_back(u);
    }
  }

  CliqueEnumerator enumerator{neighbors, {}};
  const std::vector<int> order = degeneracy_order(neighbors);
  std::vector<int> position(n);
  for (int idx = 0; idx < n; ++idx) position[order[idx]] = idx;

  std::vector<int> clique;
  for (int v : order) {
    IndexSet candidates, excluded;
    for (int u : neighbors[v]) {
      (position[u] > position[v] ? candidates : excluded).push_back(u);
    }
    clique.assign(1, v);
    enumerator.expand(clique, std::move(candidates), std::move(excluded));
  }

  for (auto& c : enumerator.cliques) std::sort(c.begin(), c.end());
  std::sort(enumerator.cliques.begin(), enumerator.cliques.end());
  return enumerator.cliques;
}

Hypergraph build_hypergraph(int n) {
  const CoMaximalGraph g = build_comaximal_graph(n);
  Hypergraph h;
  h.n = n;
  h.vertices = g.vertices;
  h.hyperedges = maximal_cliques(g);

  // The vertex-set definition guarantees no isolated vertices; check rather
  // than assume, along with pairwise incomparability of the hyperedges.
  std::vector<bool> covered(h.vertices.size(), false);
  for (const auto& e : h.hyperedges) {
    for (int v : e) covered[v] = true;
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
    throw std::logic_error("hypergraph has an uncovered vertex");
  }
  for (std::size_t a = 0; a < h.hyperedges.size(); ++a) {
    for (std::size_t b = 0; b < h.hyperedges.size(); ++b) {
      if (a != b && std::includes(h.hyperedges[a].begin(), h.hyperedges[a].end(),
                                  h.hyperedges[b].begin(), h.hyperedges[b].end())) {
        throw std::logic_error("hyperedges must be pairwise incomparable");
      }
    }
  }
  return h;
}

IncidenceGraph incidence_graph(const Hypergraph& h) {
  IncidenceGraph g;
  g.num_vertices = static_cast<int>(h.vertices.size());
  g.num_hyperedges = static_cast<int>(h.hyperedges.size());
  for (int e = 0; e < g.num_hyperedges; ++e) {
    for (int v : h.hyperedges[e]) g.edges.emplace_back(v, e);
  }
  return g;
}

}  // namespace comax
