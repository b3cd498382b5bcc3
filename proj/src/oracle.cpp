#include "comax/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "comax/lattice.hpp"

namespace comax::oracle {

Element multiply(const Element& x, const Element& y, int n) {
  int rot = x.flip ? x.rot - y.rot : x.rot + y.rot;
  rot %= n;
  if (rot < 0) rot += n;
  return {rot, x.flip != y.flip};
}

std::string to_string(const Element& x) {
  if (!x.flip && x.rot == 0) return "e";
  std::string rot = x.rot == 0   ? ""
                    : x.rot == 1 ? "a"
                                 : "a^" + std::to_string(x.rot);
  if (!x.flip) return rot;
  return rot.empty() ? "b" : rot + "·b";
}

int encode(const Element& x, int n) { return x.rot + (x.flip ? n : 0); }

Element decode(int code, int n) { return {code % n, code >= n}; }

ElementSet closure(const ElementSet& generators, int n) {
  if (generators.empty()) {
    throw std::invalid_argument("closure needs at least one generator");
  }
  std::vector<bool> in(2 * n, false);
  std::vector<int> frontier;
  auto add = [&](int code) {
    if (!in[code]) {
      in[code] = true;
      frontier.push_back(code);
    }
  };
  add(encode(identity(), n));
  for (int code : generators) add(code);

  std::vector<int> members = frontier;
  while (!frontier.empty()) {
    std::vector<int> fresh;
    for (int xc : frontier) {
      const Element x = decode(xc, n);
      for (int yc : members) {
        const Element y = decode(yc, n);
        for (const Element& p : {multiply(x, y, n), multiply(y, x, n)}) {
          int code = encode(p, n);
          if (!in[code]) {
            in[code] = true;
            fresh.push_back(code);
          }
        }
      }
    }
    for (int c : fresh) members.push_back(c);
    // products among the fresh elements are covered next round
    frontier = std::move(fresh);
  }
  std::sort(members.begin(), members.end());
  return members;
}

ElementSet elements_of(const Subgroup& h, int n) {
  validate_subgroup(h, n);
  ElementSet out;
  for (int k = 0; k * h.r < n; ++k) out.push_back(k * h.r);
  if (h.is_dihedral()) {
    for (int k = 0; k * h.r < n; ++k) out.push_back(n + (k * h.r + h.i) % n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ElementSet set_product(const ElementSet& a, const ElementSet& b, int n) {
  std::vector<bool> in(2 * n, false);
  for (int xc : a) {
    const Element x = decode(xc, n);
    for (int yc : b) {
      in[encode(multiply(x, decode(yc, n), n), n)] = true;
    }
  }
  ElementSet out;
  for (int c = 0; c < 2 * n; ++c) {
    if (in[c]) out.push_back(c);
  }
  return out;
}

ElementSet intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<ElementSet> enumerate_subgroups(int n) {
  require_group_param(n);
  std::set<ElementSet> found;
  for (int x = 0; x < 2 * n; ++x) {
    found.insert(closure({x}, n));
    for (int y = x + 1; y < 2 * n; ++y) found.insert(closure({x, y}, n));
  }
  return {found.begin(), found.end()};
}

}  // namespace comax::oracle
