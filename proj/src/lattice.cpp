#include "comax/lattice.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace comax {

std::vector<int> divisors(int n) {
  std::vector<int> small, large;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<long long> distinct_prime_divisors(long long n) {
  std::vector<long long> primes;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

int num_distinct_prime_divisors(long long n) {
  return static_cast<int>(distinct_prime_divisors(n).size());
}

bool is_prime_power(long long n) {
  return n >= 2 && num_distinct_prime_divisors(n) == 1;
}

bool is_power_of_two(long long n) {
  return n >= 2 && (n & (n - 1)) == 0;
}

bool is_square_free(long long n) {
  if (n < 1) return false;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

void require_group_param(int n) {
  if (n < 2) {
    throw std::invalid_argument("dihedral parameter n must be >= 2, got " +
                                std::to_string(n));
  }
}

void validate_subgroup(const Subgroup& h, int n) {
  require_group_param(n);
  if (h.r < 1 || h.r > n || n % h.r != 0) {
    throw std::invalid_argument("subgroup " + to_string(h) +
                                ": r must divide n = " + std::to_string(n));
  }
  if (h.is_rotation()) {
    if (h.i != 0) throw std::invalid_argument("rotation subgroup carries no offset");
  } else {
    if (h.r < 2) {
      throw std::invalid_argument("dihedral subgroup with r = 1 is the whole group");
    }
    if (h.i < 0 || h.i >= h.r) {
      throw std::invalid_argument("subgroup " + to_string(h) +
                                  ": offset must satisfy 0 <= i < r");
    }
  }
}

std::vector<Subgroup> enumerate_subgroups(int n) {
  require_group_param(n);
  std::vector<Subgroup> out;
  const std::vector<int> divs = divisors(n);
  for (int r : divs) {
    if (r < n) out.push_back(Subgroup::rotation(r));
  }
  for (int r : divs) {
    if (r < 2) continue;
    for (int i = 0; i < r; ++i) out.push_back(Subgroup::dihedral(r, i));
  }
  return out;
}

int subgroup_order(const Subgroup& h, int n) {
  validate_subgroup(h, n);
  return h.is_rotation() ? n / h.r : 2 * n / h.r;
}

namespace {

// x0 with r1*x0 ≡ d (mod r2), given gcd(r1, r2) | d.
long long solve_congruence(long long r1, long long r2, long long d) {
  long long old_r = r1, rr = r2, old_s = 1, s = 0;
  while (rr != 0) {
    long long q = old_r / rr;
    old_r = std::exchange(rr, old_r - q * rr);
    old_s = std::exchange(s, old_s - q * s);
  }
  // old_r = gcd, old_s solves r1*old_s ≡ gcd (mod r2)
  return old_s * (d / old_r);
}

}  // namespace

Subgroup intersect(const Subgroup& h, const Subgroup& k, int n) {
  validate_subgroup(h, n);
  validate_subgroup(k, n);
  const int l = std::lcm(h.r, k.r);  // divides n
  if (h.is_rotation() || k.is_rotation()) return Subgroup::rotation(l);

  const int g = std::gcd(h.r, k.r);
  const int d = h.i - k.i;
  if (d % g != 0) return Subgroup::rotation(l);

  // Solvable case: the meet is dihedral with offset i - r1*x0 reduced mod lcm.
  const long long x0 = solve_congruence(h.r, k.r, d);
  long long off = (h.i - static_cast<long long>(h.r) * x0) % l;
  if (off < 0) off += l;
  return Subgroup::dihedral(l, static_cast<int>(off));
}

long long product_size(const Subgroup& h, const Subgroup& k, int n) {
  const long long oh = subgroup_order(h, n);
  const long long ok = subgroup_order(k, n);
  const long long om = subgroup_order(intersect(h, k, n), n);
  assert(oh * ok % om == 0);
  return oh * ok / om;
}

bool is_comaximal(const Subgroup& h, const Subgroup& k, int n) {
  validate_subgroup(h, n);
  validate_subgroup(k, n);
  if (h == k) {
    throw std::invalid_argument("co-maximality is defined for distinct subgroups");
  }

  bool result = false;
  if (h.is_rotation() && k.is_rotation()) {
    result = false;  // product of two rotation subgroups stays inside <a>
  } else if (h.is_rotation() || k.is_rotation()) {
    result = std::gcd(h.r, k.r) == 1;
  } else {
    const int g = std::gcd(h.r, k.r);
    result = g == 1 || (g == 2 && (h.i - k.i) % 2 != 0);
  }
  assert(result == (product_size(h, k, n) == 2LL * n));
  return result;
}

std::vector<Subgroup> vertex_set(int n) {
  const std::vector<long long> primes = distinct_prime_divisors(n);
  std::vector<Subgroup> out;
  for (const Subgroup& h : enumerate_subgroups(n)) {
    if (h.is_dihedral()) {
      out.push_back(h);
      continue;
    }
    // <a^r> has a co-maximal partner iff some prime divisor of n misses r.
    for (long long p : primes) {
      if (h.r % p != 0) {
        out.push_back(h);
        break;
      }
    }
  }
  return out;
}

}  // namespace comax
