#pragma once

#include <compare>
#include <string>

namespace comax {

// A proper subgroup of the dihedral group of order 2n, in canonical form.
// Every subgroup is either a rotation subgroup <a^r> (order n/r) or a
// dihedral subgroup <a^r, a^i b> (order 2n/r), with r a divisor of n and
// 0 <= i < r. Each subgroup occurs exactly once in this parametrization.
//
// Rotation{r = n} is the trivial subgroup {e}; it is excluded from the
// proper-nontrivial enumeration but allowed as an intersection result.
struct Subgroup {
  enum class Kind { rotation, dihedral };

  Kind kind = Kind::rotation;
  int r = 1;
  int i = 0;  // reflection offset, meaningful for dihedral only

  static Subgroup rotation(int r) { return {Kind::rotation, r, 0}; }
  static Subgroup dihedral(int r, int i) { return {Kind::dihedral, r, i}; }

  bool is_rotation() const { return kind == Kind::rotation; }
  bool is_dihedral() const { return kind == Kind::dihedral; }

  // Canonical order: rotations by ascending r, then dihedrals by (r, i).
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

inline bool is_trivial(const Subgroup& h, int n) {
  return h.is_rotation() && h.r == n;
}

// Text form used in reports and exports: "R(2)", "D(4,1)".
std::string to_string(const Subgroup& h);

// Generator notation for diagnostics: "<a^2>", "<a^4, a b>", "<a>", "<b>".
std::string generator_text(const Subgroup& h);

}  // namespace comax
