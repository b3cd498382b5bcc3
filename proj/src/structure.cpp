#include "comax/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "comax/lattice.hpp"

namespace comax {

namespace {

int vertex_count(const Hypergraph& h) { return static_cast<int>(h.vertices.size()); }

// 2-section adjacency: vertices adjacent iff they share a hyperedge.
std::vector<std::vector<int>> two_section(const Hypergraph& h) {
  const int n = vertex_count(h);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : h.hyperedges) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        adj[e[a]][e[b]] = adj[e[b]][e[a]] = true;
      }
    }
  }
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (adj[v][u]) nbrs[v].push_back(u);
    }
  }
  return nbrs;
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& nbrs, int source) {
  std::vector<int> dist(nbrs.size(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : nbrs[v]) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  return dist;
}

// Word-packed vertex sets over the hypergraph's vertices.
using Bits = std::vector<std::uint64_t>;

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }

void set_bit(Bits& b, int i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

bool intersect_all_nonempty(const std::vector<Bits>& sets, const std::vector<int>& picks) {
  if (picks.empty()) return true;
  Bits acc = sets[picks[0]];
  for (std::size_t idx = 1; idx < picks.size(); ++idx) {
    bool any = false;
    for (std::size_t w = 0; w < acc.size(); ++w) {
      acc[w] &= sets[picks[idx]][w];
      any |= acc[w] != 0;
    }
    if (!any) return false;
  }
  return true;
}

std::vector<Bits> hyperedge_bitsets(const Hypergraph& h) {
  std::vector<Bits> bits(h.hyperedges.size(), make_bits(vertex_count(h)));
  for (std::size_t e = 0; e < h.hyperedges.size(); ++e) {
    for (int v : h.hyperedges[e]) set_bit(bits[e], v);
  }
  return bits;
}

}  // namespace

std::optional<int> distance(const Hypergraph& h, int u, int v) {
  const int n = vertex_count(h);
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::invalid_argument("vertex index out of range");
  }
  const int d = bfs_distances(two_section(h), u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> diameter(const Hypergraph& h) {
  const auto nbrs = two_section(h);
  int best = 0;
  for (int v = 0; v < vertex_count(h); ++v) {
    for (int d : bfs_distances(nbrs, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

// Exact girth of a simple undirected graph: BFS from every node, taking the
// best cycle closed by a non-tree edge. Returns nullopt for forests.
std::optional<int> graph_girth(const std::vector<std::vector<int>>& nbrs) {
  const int n = static_cast<int>(nbrs.size());
  std::optional<int> best;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : nbrs[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v] && v < u) {
          int cycle = dist[u] + dist[v] + 1;
          if (!best || cycle < *best) best = cycle;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::optional<int> girth(const Hypergraph& h) {
  const IncidenceGraph inc = incidence_graph(h);
  std::vector<std::vector<int>> nbrs(inc.num_nodes());
  for (auto [v, e] : inc.edges) {
    nbrs[v].push_back(inc.num_vertices + e);
    nbrs[inc.num_vertices + e].push_back(v);
  }
  const auto cycle = graph_girth(nbrs);
  if (!cycle) return std::nullopt;
  return *cycle / 2;  // incidence cycles alternate sides, so length is even
}

bool has_two_edges_sharing_two_vertices(const Hypergraph& h) {
  const auto bits = hyperedge_bitsets(h);
  for (std::size_t a = 0; a < bits.size(); ++a) {
    for (std::size_t b = a + 1; b < bits.size(); ++b) {
      int common = 0;
      for (std::size_t w = 0; w < bits[a].size(); ++w) {
        common += std::popcount(bits[a][w] & bits[b][w]);
        if (common >= 2) break;
      }
      if (common >= 2) return true;
    }
  }
  return false;
}

namespace {

struct ColoringSearch {
  const Hypergraph& h;
  int colors = 0;
  std::vector<int> order;            // vertices, most-constrained first
  std::vector<int> assignment;       // -1 = unassigned
  std::vector<int> edge_assigned;    // per edge: how many members colored
  std::vector<int> edge_first_color; // color of the first colored member
  std::vector<bool> edge_mixed;      // saw two distinct colors

  explicit ColoringSearch(const Hypergraph& hg) : h(hg) {
    const int n = static_cast<int>(h.vertices.size());
    std::vector<int> membership(n, 0);
    for (const auto& e : h.hyperedges) {
      for (int v : e) ++membership[v];
    }
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return membership[a] != membership[b] ? membership[a] > membership[b] : a < b;
    });
  }

  bool run(int k) {
    colors = k;
    assignment.assign(h.vertices.size(), -1);
    edge_assigned.assign(h.hyperedges.size(), 0);
    edge_first_color.assign(h.hyperedges.size(), -1);
    edge_mixed.assign(h.hyperedges.size(), false);
    return place(0);
  }

  bool place(std::size_t pos) {
    if (pos == order.size()) return true;
    const int v = order[pos];
    // the first vertex may take color 0 outright; colors are interchangeable
    const int limit = pos == 0 ? 1 : colors;
    for (int c = 0; c < limit; ++c) {
      if (assign(v, c)) {
        if (place(pos + 1)) return true;
      }
      unassign(v, c);
    }
    return false;
  }

  bool assign(int v, int c) {
    assignment[v] = c;
    bool ok = true;
    for (int e : incident[v]) {
      ++edge_assigned[e];
      if (edge_first_color[e] < 0) {
        edge_first_color[e] = c;
      } else if (edge_first_color[e] != c) {
        edge_mixed[e] = true;
      }
      if (edge_assigned[e] == static_cast<int>(h.hyperedges[e].size()) &&
          !edge_mixed[e]) {
        ok = false;  // completed the edge monochromatically
      }
    }
    return ok;
  }

  void unassign(int v, int c) {
    (void)c;
    assignment[v] = -1;
    for (int e : incident[v]) {
      --edge_assigned[e];
      if (edge_assigned[e] == 0) {
        edge_first_color[e] = -1;
        edge_mixed[e] = false;
      } else {
        recompute(e);
      }
    }
  }

  void recompute(int e) {
    edge_first_color[e] = -1;
    edge_mixed[e] = false;
    for (int v : h.hyperedges[e]) {
      if (assignment[v] < 0) continue;
      if (edge_first_color[e] < 0) {
        edge_first_color[e] = assignment[v];
      } else if (edge_first_color[e] != assignment[v]) {
        edge_mixed[e] = true;
      }
    }
  }

  std::vector<std::vector<int>> incident;
};

}  // namespace

ColoringResult chromatic_number(const Hypergraph& h) {
  const int n = static_cast<int>(h.vertices.size());
  if (n == 0) return {0, {}};
  if (h.hyperedges.empty()) return {1, std::vector<int>(n, 0)};
  for (const auto& e : h.hyperedges) {
    if (e.size() < 2) {
      throw std::invalid_argument("hyperedges of size < 2 cannot be properly colored");
    }
  }

  ColoringSearch search(h);
  search.incident.assign(n, {});
  for (std::size_t e = 0; e < h.hyperedges.size(); ++e) {
    for (int v : h.hyperedges[e]) search.incident[v].push_back(static_cast<int>(e));
  }
  for (int k = 1; ; ++k) {
    if (search.run(k)) return {k, search.assignment};
  }
}

std::optional<int> star_center(const Hypergraph& h) {
  if (h.hyperedges.empty()) return std::nullopt;
  std::vector<int> common = h.hyperedges.front();
  std::vector<int> next;
  for (const auto& e : h.hyperedges) {
    next.clear();
    std::set_intersection(common.begin(), common.end(), e.begin(), e.end(),
                          std::back_inserter(next));
    common.swap(next);
    if (common.empty()) return std::nullopt;
  }
  return common.front();
}

bool is_helly(const Hypergraph& h) {
  const int n = vertex_count(h);
  const int m = static_cast<int>(h.hyperedges.size());
  const auto edge_bits = hyperedge_bitsets(h);

  // edges containing both u and v, for each co-occurring pair
  std::vector<std::vector<std::vector<int>>> pair_edges(n);
  for (int u = 0; u < n; ++u) pair_edges[u].assign(n, {});
  for (int e = 0; e < m; ++e) {
    const auto& members = h.hyperedges[e];
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        pair_edges[members[a]][members[b]].push_back(e);
      }
    }
  }

  bool helly = true;
  std::vector<int> family;
  for (int x = 0; x < n && helly; ++x) {
    for (int y = x + 1; y < n && helly; ++y) {
      for (int z = y + 1; z < n && helly; ++z) {
        const auto& exy = pair_edges[x][y];
        const auto& exz = pair_edges[x][z];
        const auto& eyz = pair_edges[y][z];
        if ((exy.empty() ? 0 : 1) + (exz.empty() ? 0 : 1) + (eyz.empty() ? 0 : 1) < 2) {
          continue;  // at most one pair co-occurs; its edges share that pair
        }
        family.clear();
        family.insert(family.end(), exy.begin(), exy.end());
        family.insert(family.end(), exz.begin(), exz.end());
        family.insert(family.end(), eyz.begin(), eyz.end());
        std::sort(family.begin(), family.end());
        family.erase(std::unique(family.begin(), family.end()), family.end());
        if (family.size() < 2) continue;
        if (!intersect_all_nonempty(edge_bits, family)) helly = false;
      }
    }
  }

  if (m <= 16 && helly != is_helly_exhaustive(h)) {
    throw std::logic_error("Helly triple criterion disagrees with exhaustive check");
  }
  return helly;
}

bool is_helly_exhaustive(const Hypergraph& h) {
  const int m = static_cast<int>(h.hyperedges.size());
  if (m > 30) throw std::invalid_argument("exhaustive Helly check is limited to small edge counts");
  const auto edge_bits = hyperedge_bitsets(h);

  std::vector<std::vector<bool>> meets(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      meets[a][b] = meets[b][a] = intersects(edge_bits[a], edge_bits[b]);
    }
  }

  std::vector<int> picks;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) < 2) continue;
    picks.clear();
    bool pairwise = true;
    for (int e = 0; e < m && pairwise; ++e) {
      if (!(mask & (1u << e))) continue;
      for (int f : picks) pairwise &= meets[e][f];
      picks.push_back(e);
    }
    if (pairwise && !intersect_all_nonempty(edge_bits, picks)) return false;
  }
  return true;
}

namespace {

// Maximum-cardinality search + perfect-elimination-order verification.
bool is_chordal(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> weight(n, 0), selection;
  std::vector<bool> picked(n, false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!picked[v] && (best == -1 || weight[v] > weight[best])) best = v;
    }
    picked[best] = true;
    selection.push_back(best);
    for (int u = 0; u < n; ++u) {
      if (!picked[u] && adj[best][u]) ++weight[u];
    }
  }

  // elimination order is the reverse of the MCS selection
  std::vector<int> position(n);
  for (int idx = 0; idx < n; ++idx) position[selection[n - 1 - idx]] = idx;
  for (int v = 0; v < n; ++v) {
    int first = -1;
    for (int u = 0; u < n; ++u) {
      if (adj[v][u] && position[u] > position[v] &&
          (first == -1 || position[u] < position[first])) {
        first = u;
      }
    }
    if (first == -1) continue;
    for (int u = 0; u < n; ++u) {
      if (u != first && adj[v][u] && position[u] > position[v] && !adj[first][u]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_hypertree(const Hypergraph& h) {
  if (!is_helly(h)) return false;
  const int m = static_cast<int>(h.hyperedges.size());
  const auto edge_bits = hyperedge_bitsets(h);
  std::vector<std::vector<bool>> line(m, std::vector<bool>(m, false));
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      line[a][b] = line[b][a] = intersects(edge_bits[a], edge_bits[b]);
    }
  }
  return is_chordal(line);
}

std::optional<std::vector<std::pair<int, int>>> star_host_tree(const Hypergraph& h) {
  const auto center = star_center(h);
  if (!center) return std::nullopt;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < vertex_count(h); ++v) {
    if (v != *center) edges.emplace_back(*center, v);
  }
  return edges;
}

bool edge_induces_subtree(const std::vector<std::pair<int, int>>& tree_edges,
                          int num_vertices, const std::vector<int>& hyperedge) {
  if (hyperedge.empty()) return true;
  std::vector<std::vector<int>> nbrs(num_vertices);
  for (auto [a, b] : tree_edges) {
    nbrs[a].push_back(b);
    nbrs[b].push_back(a);
  }
  std::vector<bool> inside(num_vertices, false), seen(num_vertices, false);
  for (int v : hyperedge) inside[v] = true;

  // a connected induced subgraph of a tree is a subtree
  std::deque<int> queue{hyperedge.front()};
  seen[hyperedge.front()] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : nbrs[v]) {
      if (inside[u] && !seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
    }
  }
  return reached == hyperedge.size();
}

std::optional<int> uniform_k(const Hypergraph& h) {
  if (h.hyperedges.empty()) return std::nullopt;
  const std::size_t k = h.hyperedges.front().size();
  for (const auto& e : h.hyperedges) {
    if (e.size() != k) return std::nullopt;
  }
  return static_cast<int>(k);
}

StructurePredictions predict(int n) {
  require_group_param(n);
  StructurePredictions p;
  const bool prime_power = is_prime_power(n);
  const bool two_power = is_power_of_two(n);
  p.diameter = n == 2 ? 1 : prime_power ? 2 : 3;
  if (n == 2 || (prime_power && !two_power)) {
    p.girth = std::nullopt;
  } else {
    p.girth = 2;
  }
  p.chromatic = 2;
  p.star = prime_power;
  p.hypertree = prime_power;
  if (two_power) {
    p.uniform = 3;
  } else if (prime_power) {
    p.uniform = 2;
  } else {
    p.uniform = std::nullopt;
  }
  return p;
}

StructureReport analyze_structure(const Hypergraph& h) {
  StructureReport r;
  r.n = h.n;
  r.diameter = diameter(h);
  r.girth = girth(h);
  const ColoringResult coloring = chromatic_number(h);
  r.chromatic = coloring.chromatic;
  r.coloring = coloring.colors;
  r.star_center = star_center(h);
  r.helly = is_helly(h);
  r.hypertree = is_hypertree(h);
  r.uniform = uniform_k(h);
  r.predictions = predict(h.n);
  r.agreement = r.diameter == std::optional<int>(r.predictions.diameter) &&
                r.girth == r.predictions.girth &&
                r.chromatic == r.predictions.chromatic &&
                r.star_center.has_value() == r.predictions.star &&
                r.hypertree == r.predictions.hypertree &&
                r.uniform == r.predictions.uniform;
  return r;
}

}  // namespace comax
