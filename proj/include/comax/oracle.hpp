#pragma once

#include <string>
#include <vector>

#include "comax/subgroup.hpp"

// Brute-force element-level engine for the dihedral group of order 2n.
// Everything here works directly on group elements and serves as independent
// ground truth for the closed-form subgroup arithmetic in lattice.hpp.
namespace comax::oracle {

// a^rot * b^flip with 0 <= rot < n.
struct Element {
  int rot = 0;
  bool flip = false;

  friend auto operator<=>(const Element&, const Element&) = default;
};

inline Element identity() { return {0, false}; }

// (s,0)(t,f) = (s+t, f);  (s,1)(t,f) = (s-t, !f)   (mod n)
Element multiply(const Element& x, const Element& y, int n);

std::string to_string(const Element& x);  // "e", "a^2", "a^2·b"

// Canonical set form: strictly increasing list of codes rot + n*flip.
using ElementSet = std::vector<int>;

int encode(const Element& x, int n);
Element decode(int code, int n);

// Smallest subgroup containing the generators (fixed point of pairwise
// products). Generators must be non-empty.
ElementSet closure(const ElementSet& generators, int n);

// Element set of a canonical subgroup descriptor; size equals its order.
ElementSet elements_of(const Subgroup& h, int n);

// {xy : x in A, y in B}
ElementSet set_product(const ElementSet& a, const ElementSet& b, int n);

ElementSet intersection(const ElementSet& a, const ElementSet& b);

// All subgroups of the group, including the trivial one and the whole group,
// as closures of every one- and two-element generator set (sufficient since
// each subgroup is cyclic or dihedral). Sorted, deduplicated.
std::vector<ElementSet> enumerate_subgroups(int n);

// Default cap on n for exhaustive whole-group verification runs.
inline constexpr int default_cap = 64;

}  // namespace comax::oracle
