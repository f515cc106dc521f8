#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace coxeter {

// Subset of the simple generators s1..sn as a bit mask (bit i-1 = si).
using GenMask = std::uint32_t;

inline bool gen_in(GenMask m, int s) { return (m >> s) & 1u; }
inline GenMask gen_bit(int s) { return GenMask{1} << s; }
inline int gen_count(GenMask m) { return std::popcount(m); }

inline GenMask full_gen_mask(int rank) {
  return rank == 0 ? 0 : (GenMask{1} << rank) - 1;
}

template <class F>
void for_each_gen(GenMask m, F f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> gen_list(GenMask m) {
  std::vector<int> out;
  for_each_gen(m, [&](int s) { out.push_back(s); });
  return out;
}

// Visit all subsets of `full` in a deterministic order (grouped by the index
// mask over full's members, ascending; starts at the empty set).
template <class F>
void for_each_subset(GenMask full, F f) {
  const auto members = gen_list(full);
  const std::uint32_t k = static_cast<std::uint32_t>(members.size());
  for (std::uint32_t idx = 0; idx < (1u << k); ++idx) {
    GenMask sub = 0;
    for (std::uint32_t j = 0; j < k; ++j)
      if ((idx >> j) & 1u) sub |= gen_bit(members[j]);
    f(sub);
  }
}

// "{}" or "{s1,s3}"
inline std::string gen_set_name(GenMask m) {
  std::string out = "{";
  bool first = true;
  for_each_gen(m, [&](int s) {
    if (!first) out += ",";
    first = false;
    out += "s" + std::to_string(s + 1);
  });
  out += "}";
  return out;
}

}  // namespace coxeter
