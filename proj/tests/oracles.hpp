#pragma once

// Test-only oracles, independent of the library's own query paths.

#include <vector>

#include "coxeter/cosets.hpp"
#include "coxeter/group.hpp"

namespace coxeter::test {

// Bruhat order on one-line permutations via the dominance criterion:
// u <= w iff #{k <= i : u(k) >= j} <= #{k <= i : w(k) >= j} for all i, j.
inline bool ehresmann_leq(const std::vector<int>& u,
                          const std::vector<int>& w) {
  const int n = static_cast<int>(u.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int cu = 0, cw = 0;
      for (int k = 0; k < i; ++k) {
        if (u[static_cast<std::size_t>(k)] >= j) ++cu;
        if (w[static_cast<std::size_t>(k)] >= j) ++cw;
      }
      if (cu > cw) return false;
    }
  return true;
}

// Weak orders via length additivity of the quotient.
inline bool weak_leq_right(const Group& g, Element u, Element w) {
  return g.length(u) + g.length(g.multiply(g.inverse(u), w)) == g.length(w);
}
inline bool weak_leq_left(const Group& g, Element u, Element w) {
  return g.length(u) + g.length(g.multiply(w, g.inverse(u))) == g.length(w);
}

// Double coset by full product enumeration over W_I x W_J.
inline std::vector<Element> naive_double_coset(const Group& g, GenMask I,
                                               Element x, GenMask J) {
  std::vector<Element> out;
  for (const Element u : parabolic_subgroup(g, I))
    for (const Element v : parabolic_subgroup(g, J))
      out.push_back(g.multiply(g.multiply(u, x), v));
  std::sort(out.begin(), out.end(), [&](Element a, Element b) {
    if (g.length(a) != g.length(b)) return g.length(a) < g.length(b);
    return a.id < b.id;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Bruhat covers below w by brute force over all reflections.
inline std::vector<Element> brute_lower_covers(const Group& g, Element w) {
  std::vector<Element> out;
  for (const Element t : g.reflections()) {
    const Element u = g.multiply(t, w);
    if (g.length(u) + 1 == g.length(w)) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Element from_one_line(const Group& g, const std::string& s) {
  return g.parse(s);
}

}  // namespace coxeter::test
