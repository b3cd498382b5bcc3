#include "comax/subgroup.hpp"

namespace comax {

std::string to_string(const Subgroup& h) {
  if (h.is_rotation()) return "R(" + std::to_string(h.r) + ")";
  return "D(" + std::to_string(h.r) + "," + std::to_string(h.i) + ")";
}

namespace {

std::string power(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

std::string generator_text(const Subgroup& h) {
  if (h.is_rotation()) return "<" + power("a", h.r) + ">";
  std::string refl = h.i == 0 ? "b" : power("a", h.i) + " b";
  return "<" + power("a", h.r) + ", " + refl + ">";
}

}  // namespace comax
