#pragma once

#include <vector>

#include "comax/subgroup.hpp"

namespace comax {

// Divisor/prime helpers shared by the classification predicates.
std::vector<int> divisors(int n);                    // ascending, includes 1 and n
std::vector<long long> distinct_prime_divisors(long long n);
int num_distinct_prime_divisors(long long n);
bool is_prime_power(long long n);   // n = p^a with a >= 1
bool is_power_of_two(long long n);  // n = 2^a with a >= 1
bool is_square_free(long long n);

// Throws std::invalid_argument unless n >= 2.
void require_group_param(int n);

// Throws std::invalid_argument unless h is a valid subgroup descriptor for n
// (r | n, index ranges; the trivial Rotation{n} sentinel is accepted).
void validate_subgroup(const Subgroup& h, int n);

// All proper nontrivial subgroups, each exactly once, in canonical order:
// Rotation{r} for every divisor r < n, then Dihedral{r,i} for every divisor
// r >= 2 and 0 <= i < r. Count is d(n)-1 + sigma(n)-1.
std::vector<Subgroup> enumerate_subgroups(int n);

// |<a^r>| = n/r, |<a^r, a^i b>| = 2n/r.
int subgroup_order(const Subgroup& h, int n);

// Meet H ∩ K in canonical form; the trivial subgroup comes back as
// Rotation{n}. Dihedral/dihedral meets are dihedral exactly when
// r1*x + r2*y = i - j is solvable, i.e. gcd(r1,r2) | (i-j).
Subgroup intersect(const Subgroup& h, const Subgroup& k, int n);

// |HK| as a set product, via |H||K| / |H ∩ K|.
long long product_size(const Subgroup& h, const Subgroup& k, int n);

// True iff HK = D_n, i.e. product_size == 2n. Uses the closed form
// (rot/rot never; rot/dih iff gcd(r1,r2) = 1; dih/dih iff gcd = 1, or
// gcd = 2 with i-j odd); debug builds assert it against the definition.
// Throws std::invalid_argument when h == k.
bool is_comaximal(const Subgroup& h, const Subgroup& k, int n);

// Vertices of the co-maximal hypergraph: every dihedral subgroup, plus each
// rotation subgroup <a^r> for which some prime divisor of n does not divide
// r. Order inherited from enumerate_subgroups. Equals the full enumeration
// exactly when n is square-free.
std::vector<Subgroup> vertex_set(int n);

}  // namespace comax
