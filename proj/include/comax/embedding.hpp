#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "comax/hypergraph.hpp"

namespace comax {

// Simple undirected graph as sorted adjacency lists; nodes 0..n-1.
struct SimpleGraph {
  std::vector<std::vector<int>> adj;

  int num_nodes() const { return static_cast<int>(adj.size()); }
  std::size_t num_edges() const;
};

// Incidence graph as one simple graph: vertex nodes 0..V-1, then hyperedge
// nodes V..V+E-1.
SimpleGraph to_graph(const IncidenceGraph& g);

// Complete bipartite K_{m,n} (left nodes first).
SimpleGraph complete_bipartite(int m, int n);

// For each node, the cyclic order of its neighbors in an embedding.
using RotationSystem = std::vector<std::vector<int>>;

struct PlanarEmbedding {
  RotationSystem rotation;
  int faces = 0;  // traced from the rotation system
};

struct KuratowskiObstruction {
  enum class Kind { k5, k33 };
  Kind kind = Kind::k33;
  std::vector<int> branch_vertices;     // 5 (K5) or 6 (K33) node ids
  std::vector<std::vector<int>> paths;  // internally disjoint branch-to-branch paths
};

// Exactly one alternative: a combinatorial embedding with Euler-consistent
// face count, or a validated Kuratowski subdivision. Both branches are
// re-verified before planarity() returns.
struct PlanarityVerdict {
  std::variant<PlanarEmbedding, KuratowskiObstruction> result;

  bool is_planar() const { return std::holds_alternative<PlanarEmbedding>(result); }
  const PlanarEmbedding& embedding() const { return std::get<PlanarEmbedding>(result); }
  const KuratowskiObstruction& obstruction() const {
    return std::get<KuratowskiObstruction>(result);
  }
};

PlanarityVerdict planarity(const SimpleGraph& g);
PlanarityVerdict planarity(const IncidenceGraph& g);

// Validators used by planarity() itself and exposed for tests. Throw
// std::logic_error with a description when the certificate is inconsistent.
void verify_embedding(const SimpleGraph& g, const PlanarEmbedding& e);
void verify_obstruction(const SimpleGraph& g, const KuratowskiObstruction& o);

// Genus of the orientable surface determined by a rotation system: faces are
// traced and (2 - V + E - F)/2 is summed per connected component. Throws
// std::invalid_argument when some node's rotation is not a permutation of
// its neighbor set.
int rotation_genus(const SimpleGraph& g, const RotationSystem& rotation);

// Three vertices contained together in >= k hyperedges, giving K_{3,k} in
// the incidence graph. Exhaustive over triples in canonical order; the list
// carries every common hyperedge (at least k of them).
struct TripleCertificate {
  std::array<int, 3> vertices{};
  std::vector<int> common_hyperedges;
};

std::optional<TripleCertificate> find_triple_certificate(const Hypergraph& h, int k);

// Orientable and non-orientable genus of K_{m,n}:
// ceil((m-2)(n-2)/4) and ceil((m-2)(n-2)/2). Requires m, n >= 2.
struct KmnGenus {
  int orientable = 0;
  int nonorientable = 0;
};

KmnGenus kmn_genus(int m, int n);

// Euler-formula lower bounds for a bipartite simple graph (faces have length
// >= 4): per component max(0, ceil((E - 2V + 4)/4)) orientable and
// max(0, ceil((E - 2V + 4)/2)) non-orientable, acyclic components contribute
// zero; components are summed.
struct GenusBounds {
  int orientable = 0;
  int nonorientable = 0;
};

GenusBounds euler_genus_lower_bounds(const SimpleGraph& g);
GenusBounds euler_genus_lower_bounds(const IncidenceGraph& g);

enum class SurfaceKind { planar, toroidal_and_projective, higher_genus };
enum class CertificateBasis { theorem, certificate, both };

// Surface classification of the incidence graph: planar iff n is a prime
// power, torus- and projective-embeddable iff n = 6, otherwise genus >= 2.
// The planarity verdict is always attached; for higher genus a K_{3,7}
// triple and/or an Euler bound >= 2 upgrades the basis to `both`.
struct SurfaceClass {
  SurfaceKind kind = SurfaceKind::planar;
  CertificateBasis basis = CertificateBasis::theorem;
  PlanarityVerdict planarity;
  std::optional<TripleCertificate> k37;
  std::optional<GenusBounds> euler_bounds;
};

SurfaceClass classify_surface(int n);

}  // namespace comax
