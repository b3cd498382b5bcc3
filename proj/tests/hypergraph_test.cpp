#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "comax/hypergraph.hpp"
#include "comax/lattice.hpp"
#include "comax/oracle.hpp"

using namespace comax;

namespace {

using VertexSet = std::vector<int>;

std::vector<std::vector<bool>> adjacency_from_edges(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
  return adj;
}

// reference clique enumerator: test every subset of <= max_size vertices
bool is_clique(const std::vector<std::vector<bool>>& adj, const VertexSet& c) {
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (!adj[c[a]][c[b]]) return false;
    }
  }
  return true;
}

std::vector<VertexSet> naive_maximal_cliques(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<VertexSet> cliques;
  for (int mask = 1; mask < (1 << n); ++mask) {
    VertexSet c;
    for (int v = 0; v < n; ++v) {
      if (mask & (1 << v)) c.push_back(v);
    }
    if (c.size() < 2 || !is_clique(adj, c)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (std::find(c.begin(), c.end(), v) != c.end()) continue;
      VertexSet grown = c;
      grown.push_back(v);
      std::sort(grown.begin(), grown.end());
      maximal = !is_clique(adj, grown);
    }
    if (maximal) cliques.push_back(c);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

// resolve canonical index of a subgroup within a hypergraph's vertex order
int index_of(const Hypergraph& h, const Subgroup& s) {
  const auto it = std::find(h.vertices.begin(), h.vertices.end(), s);
  REQUIRE(it != h.vertices.end());
  return static_cast<int>(it - h.vertices.begin());
}

VertexSet edge_of(const Hypergraph& h, std::initializer_list<Subgroup> members) {
  VertexSet out;
  for (const Subgroup& s : members) out.push_back(index_of(h, s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("co-maximal graph matches the drawn instances") {
  const CoMaximalGraph g4 = build_comaximal_graph(4);
  CHECK(g4.vertices.size() == 7);
  CHECK(g4.edge_count() == 11);

  const CoMaximalGraph g2 = build_comaximal_graph(2);
  CHECK(g2.vertices.size() == 3);
  CHECK(g2.edge_count() == 3);  // triangle

  // n = 6: adjacency equals oracle set-product adjacency
  const CoMaximalGraph g6 = build_comaximal_graph(6);
  CHECK(g6.vertices.size() == 14);
  for (std::size_t a = 0; a < g6.vertices.size(); ++a) {
    for (std::size_t b = 0; b < g6.vertices.size(); ++b) {
      if (a == b) {
        CHECK_FALSE(g6.adj[a][b]);
        continue;
      }
      const auto product = oracle::set_product(
          oracle::elements_of(g6.vertices[a], 6),
          oracle::elements_of(g6.vertices[b], 6), 6);
      CHECK(g6.adj[a][b] == (product.size() == 12));
    }
  }

  // no isolated vertices, by the vertex-set definition
  for (int n = 2; n <= 30; ++n) {
    const CoMaximalGraph g = build_comaximal_graph(n);
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      CHECK(std::count(g.adj[v].begin(), g.adj[v].end(), true) >= 1);
    }
  }
}

TEST_CASE("maximal cliques on toy graphs") {
  // triangle
  CHECK(maximal_cliques(adjacency_from_edges(3, {{0, 1}, {1, 2}, {0, 2}})) ==
        std::vector<VertexSet>{{0, 1, 2}});
  // path on 3 vertices
  CHECK(maximal_cliques(adjacency_from_edges(3, {{0, 1}, {1, 2}})) ==
        std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(maximal_cliques(build_comaximal_graph(4)).size() == 5);

  CHECK_THROWS_AS(maximal_cliques(adjacency_from_edges(2, {{0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("maximal cliques agree with subset enumeration on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 11)(rng);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (std::bernoulli_distribution(0.45)(rng)) edges.emplace_back(a, b);
      }
    }
    const auto adj = adjacency_from_edges(n, edges);
    CHECK(maximal_cliques(adj) == naive_maximal_cliques(adj));
  }
}

TEST_CASE("hypergraph fixtures") {
  const Hypergraph h2 = build_hypergraph(2);
  CHECK(h2.vertices.size() == 3);
  CHECK(h2.hyperedges == std::vector<VertexSet>{{0, 1, 2}});

  // the five hyperedges of Co_H(D_4)
  const Hypergraph h4 = build_hypergraph(4);
  std::vector<VertexSet> expected4 = {
      edge_of(h4, {Subgroup::dihedral(4, 0), Subgroup::rotation(1), Subgroup::dihedral(2, 1)}),
      edge_of(h4, {Subgroup::dihedral(4, 1), Subgroup::rotation(1), Subgroup::dihedral(2, 0)}),
      edge_of(h4, {Subgroup::dihedral(4, 2), Subgroup::rotation(1), Subgroup::dihedral(2, 1)}),
      edge_of(h4, {Subgroup::dihedral(4, 3), Subgroup::rotation(1), Subgroup::dihedral(2, 0)}),
      edge_of(h4, {Subgroup::rotation(1), Subgroup::dihedral(2, 1), Subgroup::dihedral(2, 0)})};
  std::sort(expected4.begin(), expected4.end());
  CHECK(h4.hyperedges == expected4);

  CHECK(build_hypergraph(6).hyperedges.size() == 13);
}

TEST_CASE("hyperedges equal naive subset enumeration for small n") {
  for (int n = 2; n <= 9; ++n) {
    const CoMaximalGraph g = build_comaximal_graph(n);
    CHECK(build_hypergraph(n).hyperedges == naive_maximal_cliques(g.adj));
  }
}

TEST_CASE("hyperedges are maximal cliques covering every co-maximal pair") {
  for (int n = 2; n <= 30; ++n) {
    const CoMaximalGraph g = build_comaximal_graph(n);
    const Hypergraph h = build_hypergraph(n);

    std::vector<std::vector<bool>> covered(
        h.vertices.size(), std::vector<bool>(h.vertices.size(), false));
    for (const auto& e : h.hyperedges) {
      CHECK(e.size() >= 2);
      for (std::size_t a = 0; a < e.size(); ++a) {
        for (std::size_t b = a + 1; b < e.size(); ++b) {
          CHECK(g.adj[e[a]][e[b]]);  // hyperedges are cliques
          covered[e[a]][e[b]] = covered[e[b]][e[a]] = true;
        }
      }
    }
    for (std::size_t a = 0; a < h.vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < h.vertices.size(); ++b) {
        if (g.adj[a][b]) CHECK(covered[a][b]);
      }
    }
    for (std::size_t a = 0; a < h.hyperedges.size(); ++a) {
      for (std::size_t b = 0; b < h.hyperedges.size(); ++b) {
        if (a == b) continue;
        CHECK_FALSE(std::includes(h.hyperedges[a].begin(), h.hyperedges[a].end(),
                                  h.hyperedges[b].begin(), h.hyperedges[b].end()));
      }
    }
  }
}

TEST_CASE("incidence graphs") {
  const IncidenceGraph inc2 = incidence_graph(build_hypergraph(2));
  CHECK(inc2.num_nodes() == 4);
  CHECK(inc2.edges.size() == 3);

  const IncidenceGraph inc4 = incidence_graph(build_hypergraph(4));
  CHECK(inc4.num_nodes() == 12);
  CHECK(inc4.edges.size() == 15);

  Hypergraph toy;
  toy.n = 2;
  toy.vertices = {Subgroup::rotation(1), Subgroup::dihedral(2, 0)};
  toy.hyperedges = {{0, 1}};
  const IncidenceGraph path = incidence_graph(toy);
  CHECK(path.num_nodes() == 3);
  CHECK(path.edges.size() == 2);

  for (int n = 2; n <= 30; ++n) {
    const Hypergraph h = build_hypergraph(n);
    const IncidenceGraph inc = incidence_graph(h);
    std::size_t total = 0;
    for (const auto& e : h.hyperedges) total += e.size();
    CHECK(inc.edges.size() == total);
  }
}
