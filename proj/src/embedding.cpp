#include "comax/embedding.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "comax/lattice.hpp"

namespace comax {

std::size_t SimpleGraph::num_edges() const {
  std::size_t doubled = 0;
  for (const auto& nbrs : adj) doubled += nbrs.size();
  return doubled / 2;
}

SimpleGraph to_graph(const IncidenceGraph& g) {
  SimpleGraph out;
  out.adj.resize(g.num_nodes());
  for (auto [v, e] : g.edges) {
    out.adj[v].push_back(g.num_vertices + e);
    out.adj[g.num_vertices + e].push_back(v);
  }
  for (auto& nbrs : out.adj) std::sort(nbrs.begin(), nbrs.end());
  return out;
}

SimpleGraph complete_bipartite(int m, int n) {
  SimpleGraph g;
  g.adj.resize(m + n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < n; ++b) {
      g.adj[a].push_back(m + b);
      g.adj[m + b].push_back(a);
    }
  }
  return g;
}

namespace {

std::vector<std::pair<int, int>> edge_list(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.num_nodes(); ++v) {
    for (int u : g.adj[v]) {
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return edges;
}

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph make_boost_graph(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
  BoostGraph g(num_nodes);
  int index = 0;
  for (auto [a, b] : edges) {
    boost::put(boost::edge_index, g, boost::add_edge(a, b, g).first, index++);
  }
  return g;
}

bool boost_is_planar(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
  BoostGraph g = make_boost_graph(num_nodes, edges);
  return boost::boyer_myrvold_planarity_test(g);
}

// Shrink a nonplanar edge set to an edge-minimal nonplanar subgraph: every
// remaining edge is critical, which forces a K5 or K3,3 subdivision.
std::vector<std::pair<int, int>> minimalize_nonplanar(
    int num_nodes, std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  for (std::size_t probe = 0; probe < edges.size();) {
    std::vector<std::pair<int, int>> without = edges;
    without.erase(without.begin() + static_cast<std::ptrdiff_t>(probe));
    if (!boost_is_planar(num_nodes, without)) {
      edges = std::move(without);
    } else {
      ++probe;
    }
  }
  return edges;
}

KuratowskiObstruction classify_subdivision(int num_nodes,
                                           const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(num_nodes);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());

  KuratowskiObstruction obstruction;
  for (int v = 0; v < num_nodes; ++v) {
    if (adj[v].size() >= 3) obstruction.branch_vertices.push_back(v);
  }
  const std::size_t branches = obstruction.branch_vertices.size();
  if (branches == 5) {
    obstruction.kind = KuratowskiObstruction::Kind::k5;
  } else if (branches == 6) {
    obstruction.kind = KuratowskiObstruction::Kind::k33;
  } else {
    throw std::logic_error("minimal nonplanar subgraph is not a Kuratowski subdivision");
  }

  std::vector<bool> is_branch(num_nodes, false);
  for (int b : obstruction.branch_vertices) is_branch[b] = true;

  std::set<std::pair<int, int>> used;
  for (int b : obstruction.branch_vertices) {
    for (int first : adj[b]) {
      if (used.count({b, first})) continue;
      std::vector<int> path{b};
      int prev = b, cur = first;
      used.insert({prev, cur});
      used.insert({cur, prev});
      while (!is_branch[cur]) {
        if (adj[cur].size() != 2) {
          throw std::logic_error("subdivision path runs through a node of degree != 2");
        }
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        path.push_back(cur);
        used.insert({cur, next});
        used.insert({next, cur});
        prev = std::exchange(cur, next);
      }
      path.push_back(cur);
      if (path.back() < path.front()) std::reverse(path.begin(), path.end());
      obstruction.paths.push_back(std::move(path));
    }
  }
  std::sort(obstruction.paths.begin(), obstruction.paths.end());
  return obstruction;
}

std::vector<std::vector<int>> components_of(const SimpleGraph& g) {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(g.num_nodes(), false);
  for (int s = 0; s < g.num_nodes(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int u : g.adj[v]) {
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
      }
    }
    components.push_back(std::move(comp));
  }
  return components;
}

}  // namespace

int rotation_genus(const SimpleGraph& g, const RotationSystem& rotation) {
  const int n = g.num_nodes();
  if (static_cast<int>(rotation.size()) != n) {
    throw std::invalid_argument("rotation system must cover every node");
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted_rotation = rotation[v];
    std::sort(sorted_rotation.begin(), sorted_rotation.end());
    if (sorted_rotation != g.adj[v]) {
      throw std::invalid_argument("rotation of node " + std::to_string(v) +
                                  " is not a permutation of its neighbors");
    }
  }

  // position of u within rotation[v], for the next-dart rule
  std::vector<std::vector<int>> position(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < rotation[v].size(); ++j) {
      position[v][rotation[v][j]] = static_cast<int>(j);
    }
  }

  // trace face orbits: dart (u -> v) continues with (v -> w), w the successor
  // of u in the cyclic order around v
  std::map<std::pair<int, int>, bool> visited;
  for (int v = 0; v < n; ++v) {
    for (int u : g.adj[v]) visited[{v, u}] = false;
  }
  std::vector<int> faces_at(n, 0);  // per start node, for component bookkeeping
  int total_faces = 0;
  for (auto& [dart, seen] : visited) {
    if (seen) continue;
    ++total_faces;
    ++faces_at[dart.first];
    std::pair<int, int> cur = dart;
    while (!visited[cur]) {
      visited[cur] = true;
      const auto [u, v] = cur;
      const int deg = static_cast<int>(rotation[v].size());
      const int w = rotation[v][(position[v][u] + 1) % deg];
      cur = {v, w};
    }
  }

  int genus = 0;
  for (const auto& comp : components_of(g)) {
    int edges = 0, faces = 0;
    for (int v : comp) {
      edges += static_cast<int>(g.adj[v].size());
      faces += faces_at[v];
    }
    edges /= 2;
    if (edges == 0) faces = 1;  // isolated vertex embeds with a single face
    const int euler = static_cast<int>(comp.size()) - edges + faces;
    if ((2 - euler) % 2 != 0 || euler > 2) {
      throw std::logic_error("face tracing produced an inconsistent Euler characteristic");
    }
    genus += (2 - euler) / 2;
  }
  return genus;
}

void verify_embedding(const SimpleGraph& g, const PlanarEmbedding& e) {
  if (rotation_genus(g, e.rotation) != 0) {
    throw std::logic_error("claimed planar embedding has positive genus");
  }
}

void verify_obstruction(const SimpleGraph& g, const KuratowskiObstruction& o) {
  const auto& branches = o.branch_vertices;
  const std::size_t expected_branches =
      o.kind == KuratowskiObstruction::Kind::k5 ? 5 : 6;
  const std::size_t expected_paths =
      o.kind == KuratowskiObstruction::Kind::k5 ? 10 : 9;
  if (branches.size() != expected_branches) {
    throw std::logic_error("wrong number of branch vertices");
  }
  if (std::set<int>(branches.begin(), branches.end()).size() != branches.size()) {
    throw std::logic_error("branch vertices must be distinct");
  }
  if (o.paths.size() != expected_paths) {
    throw std::logic_error("wrong number of subdivision paths");
  }

  std::set<int> branch_set(branches.begin(), branches.end());
  std::set<int> interior_seen;
  std::set<std::pair<int, int>> endpoint_pairs;
  for (const auto& path : o.paths) {
    if (path.size() < 2) throw std::logic_error("degenerate subdivision path");
    if (!branch_set.count(path.front()) || !branch_set.count(path.back())) {
      throw std::logic_error("path endpoints must be branch vertices");
    }
    for (std::size_t idx = 0; idx + 1 < path.size(); ++idx) {
      const auto& nbrs = g.adj[path[idx]];
      if (!std::binary_search(nbrs.begin(), nbrs.end(), path[idx + 1])) {
        throw std::logic_error("subdivision path uses a non-edge");
      }
    }
    for (std::size_t idx = 1; idx + 1 < path.size(); ++idx) {
      if (branch_set.count(path[idx])) {
        throw std::logic_error("path interior touches a branch vertex");
      }
      if (!interior_seen.insert(path[idx]).second) {
        throw std::logic_error("paths are not internally disjoint");
      }
    }
    auto pair = std::minmax(path.front(), path.back());
    if (!endpoint_pairs.insert({pair.first, pair.second}).second) {
      throw std::logic_error("two paths join the same branch pair");
    }
  }

  if (o.kind == KuratowskiObstruction::Kind::k5) {
    if (endpoint_pairs.size() != 10) {
      throw std::logic_error("K5 subdivision must join all ten branch pairs");
    }
    return;
  }

  // K3,3 pattern: branch-level graph is 3-regular bipartite with classes of 3
  std::map<int, std::vector<int>> branch_adj;
  for (auto [a, b] : endpoint_pairs) {
    branch_adj[a].push_back(b);
    branch_adj[b].push_back(a);
  }
  for (int b : branches) {
    if (branch_adj[b].size() != 3) {
      throw std::logic_error("K3,3 subdivision branch vertex of wrong degree");
    }
  }
  std::map<int, int> side;
  std::deque<int> queue{branches.front()};
  side[branches.front()] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : branch_adj[v]) {
      auto it = side.find(u);
      if (it == side.end()) {
        side[u] = 1 - side[v];
        queue.push_back(u);
      } else if (it->second == side[v]) {
        throw std::logic_error("K3,3 branch graph is not bipartite");
      }
    }
  }
  int zeros = 0;
  for (auto [v, s] : side) zeros += s == 0 ? 1 : 0;
  if (side.size() != 6 || zeros != 3) {
    throw std::logic_error("K3,3 branch classes must have size 3");
  }
}

PlanarityVerdict planarity(const SimpleGraph& g) {
  const auto edges = edge_list(g);
  if (edges.empty()) {
    PlanarityVerdict verdict;
    PlanarEmbedding embedding;
    embedding.rotation.assign(g.num_nodes(), {});
    embedding.faces = g.num_nodes();  // one face per isolated node
    verdict.result = std::move(embedding);
    verify_embedding(g, verdict.embedding());
    return verdict;
  }
  BoostGraph bg = make_boost_graph(g.num_nodes(), edges);
  std::vector<std::vector<BoostEdge>> storage(g.num_nodes());
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = storage.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph =
          std::back_inserter(kuratowski));

  PlanarityVerdict verdict;
  if (planar) {
    PlanarEmbedding embedding;
    embedding.rotation.resize(g.num_nodes());
    for (int v = 0; v < g.num_nodes(); ++v) {
      for (const BoostEdge& e : storage[v]) {
        const int a = static_cast<int>(boost::source(e, bg));
        const int b = static_cast<int>(boost::target(e, bg));
        embedding.rotation[v].push_back(a == v ? b : a);
      }
    }
    int edge_total = static_cast<int>(edges.size());
    const int components = static_cast<int>(components_of(g).size());
    embedding.faces = 2 * components - g.num_nodes() + edge_total;
    verdict.result = std::move(embedding);
    verify_embedding(g, verdict.embedding());
    return verdict;
  }

  std::vector<std::pair<int, int>> obstruction_edges;
  for (const BoostEdge& e : kuratowski) {
    const int a = static_cast<int>(boost::source(e, bg));
    const int b = static_cast<int>(boost::target(e, bg));
    obstruction_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  obstruction_edges = minimalize_nonplanar(g.num_nodes(), std::move(obstruction_edges));
  verdict.result = classify_subdivision(g.num_nodes(), obstruction_edges);
  verify_obstruction(g, verdict.obstruction());
  return verdict;
}

PlanarityVerdict planarity(const IncidenceGraph& g) { return planarity(to_graph(g)); }

std::optional<TripleCertificate> find_triple_certificate(const Hypergraph& h, int k) {
  if (k < 3) throw std::invalid_argument("triple certificates need k >= 3");
  const int n = static_cast<int>(h.vertices.size());
  const int m = static_cast<int>(h.hyperedges.size());
  if (m < k) return std::nullopt;

  const std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> member(n, std::vector<std::uint64_t>(words, 0));
  for (int e = 0; e < m; ++e) {
    for (int v : h.hyperedges[e]) member[v][e / 64] |= std::uint64_t{1} << (e % 64);
  }

  std::vector<std::uint64_t> xy(words), xyz(words);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      int common_xy = 0;
      for (std::size_t w = 0; w < words; ++w) {
        xy[w] = member[x][w] & member[y][w];
        common_xy += std::popcount(xy[w]);
      }
      if (common_xy < k) continue;
      for (int z = y + 1; z < n; ++z) {
        int common = 0;
        for (std::size_t w = 0; w < words; ++w) {
          xyz[w] = xy[w] & member[z][w];
          common += std::popcount(xyz[w]);
        }
        if (common < k) continue;
        TripleCertificate cert;
        cert.vertices = {x, y, z};
        for (int e = 0; e < m; ++e) {
          if (xyz[e / 64] & (std::uint64_t{1} << (e % 64))) {
            cert.common_hyperedges.push_back(e);
          }
        }
        return cert;
      }
    }
  }
  return std::nullopt;
}

KmnGenus kmn_genus(int m, int n) {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("complete bipartite genus formulas need m, n >= 2");
  }
  const int product = (m - 2) * (n - 2);
  return {(product + 3) / 4, (product + 1) / 2};
}

GenusBounds euler_genus_lower_bounds(const SimpleGraph& g) {
  GenusBounds bounds;
  for (const auto& comp : components_of(g)) {
    int edges = 0;
    for (int v : comp) edges += static_cast<int>(g.adj[v].size());
    edges /= 2;
    const int nodes = static_cast<int>(comp.size());
    if (edges < nodes) continue;  // acyclic component, embeds in the plane
    const int excess = edges - 2 * nodes + 4;
    bounds.orientable += std::max(0, (excess + 3) / 4);
    bounds.nonorientable += std::max(0, (excess + 1) / 2);
  }
  return bounds;
}

GenusBounds euler_genus_lower_bounds(const IncidenceGraph& g) {
  return euler_genus_lower_bounds(to_graph(g));
}

SurfaceClass classify_surface(int n) {
  require_group_param(n);
  const Hypergraph h = build_hypergraph(n);
  const IncidenceGraph inc = incidence_graph(h);

  SurfaceClass out;
  out.planarity = planarity(inc);

  if (is_prime_power(n)) {
    if (!out.planarity.is_planar()) {
      throw std::logic_error("prime-power incidence graph unexpectedly nonplanar");
    }
    out.kind = SurfaceKind::planar;
    out.basis = CertificateBasis::both;  // theorem plus a verified embedding
    return out;
  }
  if (out.planarity.is_planar()) {
    throw std::logic_error("non-prime-power incidence graph unexpectedly planar");
  }
  if (n == 6) {
    // torus- and projective-embeddable; the obstruction only certifies
    // non-planarity, the torus embedding itself is theorem-backed here
    out.kind = SurfaceKind::toroidal_and_projective;
    out.basis = CertificateBasis::theorem;
    return out;
  }

  out.kind = SurfaceKind::higher_genus;
  out.k37 = find_triple_certificate(h, 7);
  out.euler_bounds = euler_genus_lower_bounds(inc);
  const bool certified = out.k37.has_value() || out.euler_bounds->orientable >= 2;
  out.basis = certified ? CertificateBasis::both : CertificateBasis::theorem;
  return out;
}

}  // namespace comax
