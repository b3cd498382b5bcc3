#include "comax/verify.hpp"

#include <algorithm>
#include <map>

#include "comax/hypergraph.hpp"
#include "comax/lattice.hpp"
#include "comax/oracle.hpp"

namespace comax {

OracleCheckResult verify_against_oracle(int n) {
  OracleCheckResult result;
  result.n = n;
  auto report = [&](const std::string& what) { result.mismatches.push_back(what); };

  // enumeration bijection: formula listing <-> oracle closure sweep minus
  // the trivial subgroup and the whole group
  const std::vector<Subgroup> listed = enumerate_subgroups(n);
  std::vector<oracle::ElementSet> formula_sets;
  for (const Subgroup& h : listed) formula_sets.push_back(oracle::elements_of(h, n));
  {
    std::vector<oracle::ElementSet> sorted_formula = formula_sets;
    std::sort(sorted_formula.begin(), sorted_formula.end());
    if (std::adjacent_find(sorted_formula.begin(), sorted_formula.end()) !=
        sorted_formula.end()) {
      report("n=" + std::to_string(n) + ": duplicate subgroup in the formula listing");
    }
    std::vector<oracle::ElementSet> proper;
    for (const auto& s : oracle::enumerate_subgroups(n)) {
      if (s.size() != 1 && s.size() != 2u * n) proper.push_back(s);
    }
    if (proper != sorted_formula) {
      report("n=" + std::to_string(n) +
             ": formula listing does not match the oracle subgroup sweep");
    }
  }

  for (std::size_t a = 0; a < listed.size(); ++a) {
    const int order = subgroup_order(listed[a], n);
    if (order != static_cast<int>(formula_sets[a].size())) {
      report("n=" + std::to_string(n) + ": order of " + to_string(listed[a]) +
             " disagrees with the element count");
    }
    if (oracle::closure(formula_sets[a], n) != formula_sets[a]) {
      report("n=" + std::to_string(n) + ": " + to_string(listed[a]) +
             " is not closed under products");
    }
  }

  for (std::size_t a = 0; a < listed.size(); ++a) {
    for (std::size_t b = 0; b < listed.size(); ++b) {
      if (a == b) continue;
      ++result.pairs_checked;
      const Subgroup &h = listed[a], &k = listed[b];

      const oracle::ElementSet product =
          oracle::set_product(formula_sets[a], formula_sets[b], n);
      if (product_size(h, k, n) != static_cast<long long>(product.size())) {
        report("n=" + std::to_string(n) + ": |" + to_string(h) + "·" + to_string(k) +
               "| disagrees with the oracle");
      }
      if (is_comaximal(h, k, n) != (product.size() == 2u * n)) {
        report("n=" + std::to_string(n) + ": co-maximality of " + to_string(h) +
               ", " + to_string(k) + " disagrees with the oracle");
      }
      const oracle::ElementSet meet =
          oracle::intersection(formula_sets[a], formula_sets[b]);
      if (oracle::elements_of(intersect(h, k, n), n) != meet) {
        report("n=" + std::to_string(n) + ": " + to_string(h) + " ∩ " + to_string(k) +
               " disagrees with the oracle");
      }
    }
  }

  // vertex set: a subgroup is a vertex iff the oracle finds some co-maximal
  // partner among the proper nontrivial subgroups
  const std::vector<Subgroup> vertices = vertex_set(n);
  for (std::size_t a = 0; a < listed.size(); ++a) {
    bool has_partner = false;
    for (std::size_t b = 0; b < listed.size() && !has_partner; ++b) {
      if (a != b) {
        has_partner = oracle::set_product(formula_sets[a], formula_sets[b], n).size() ==
                      2u * n;
      }
    }
    const bool is_vertex =
        std::find(vertices.begin(), vertices.end(), listed[a]) != vertices.end();
    if (has_partner != is_vertex) {
      report("n=" + std::to_string(n) + ": vertex-set membership of " +
             to_string(listed[a]) + " disagrees with the oracle");
    }
  }

  // hyperedges: recompute maximal cliques over oracle adjacency
  {
    std::map<Subgroup, std::size_t> listed_index;
    for (std::size_t a = 0; a < listed.size(); ++a) listed_index[listed[a]] = a;
    const int v = static_cast<int>(vertices.size());
    std::vector<std::vector<bool>> oracle_adj(v, std::vector<bool>(v, false));
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) {
        const auto& sa = formula_sets[listed_index.at(vertices[a])];
        const auto& sb = formula_sets[listed_index.at(vertices[b])];
        oracle_adj[a][b] = oracle_adj[b][a] =
            oracle::set_product(sa, sb, n).size() == 2u * n;
      }
    }
    if (maximal_cliques(oracle_adj) != build_hypergraph(n).hyperedges) {
      report("n=" + std::to_string(n) +
             ": hyperedge set disagrees with the oracle-adjacency cliques");
    }
  }

  return result;
}

}  // namespace comax
