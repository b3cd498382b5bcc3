#pragma once

#include <string>
#include <vector>

namespace comax {

// Exhaustive comparison of the closed-form subgroup arithmetic against the
// element-level oracle for one n: enumeration bijection, orders,
// intersections, co-maximality of every pair, and the full hyperedge set
// (maximal cliques recomputed on oracle adjacency).
struct OracleCheckResult {
  int n = 0;
  long long pairs_checked = 0;
  std::vector<std::string> mismatches;  // empty iff everything agrees

  bool ok() const { return mismatches.empty(); }
};

OracleCheckResult verify_against_oracle(int n);

}  // namespace comax
