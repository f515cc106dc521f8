#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coxeter/bitset.hpp"
#include "coxeter/coxeter_matrix.hpp"
#include "coxeter/gens.hpp"

namespace coxeter {

// Opaque handle into a Group. Ids are dense and canonical: BFS order by
// length, ties broken by lex-smallest reduced word; id 0 is e.
struct Element {
  std::uint32_t id = 0;
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class Side { Left, Right };

// Descent/ascent sets of one element with the small/large split and the
// matched pairs (r, s) satisfying rw = ws.
struct DescentData {
  GenMask d_left = 0, d_right = 0, a_left = 0, a_right = 0;
  GenMask d_left_small = 0, d_left_large = 0;
  GenMask d_right_small = 0, d_right_large = 0;
  std::vector<std::pair<int, int>> two_sided_pairs;
  int d = 0;        // two-sided descent number
  int d_tilde = 0;  // total descent number |D_L| + |D_R|
};

struct BuildOptions {
  std::uint64_t element_cap = 1'000'000;
  unsigned jobs = 0;  // 0 = all hardware threads
};

// Immutable finite Coxeter group: element table, Cayley actions, lengths,
// reflections, longest element, plus the Bruhat reachability cache for
// |W| <= 2^16. All queries are read-only and safe for concurrent readers.
class Group {
 public:
  static Group build(const CoxeterMatrix& matrix, const BuildOptions& = {});
  static Group build(const std::string& type_label, const BuildOptions& = {});

  int rank() const { return rank_; }
  std::uint32_t order() const { return order_; }
  const FiniteType& type() const { return type_; }
  const CoxeterMatrix& matrix() const { return matrix_; }
  GenMask all_gens() const { return full_gen_mask(rank_); }

  Element identity() const { return Element{0}; }
  Element simple(int s) const { return Element{right_at(s, 0)}; }
  Element longest() const { return Element{longest_}; }

  std::uint32_t length(Element w) const { return length_[w.id]; }
  Element left_mul(int s, Element w) const { return Element{left_at(s, w.id)}; }
  Element right_mul(Element w, int s) const {
    return Element{right_at(s, w.id)};
  }
  Element multiply(Element x, Element y) const;
  Element inverse(Element x) const { return Element{inverse_[x.id]}; }

  // Unique maximal-length element of the standard parabolic subgroup W_I.
  Element longest_in(GenMask I) const;

  // Reflections T = { w s w^-1 }, sorted by id.
  const std::vector<Element>& reflections() const { return reflections_; }
  int num_reflections() const {
    return static_cast<int>(reflections_.size());
  }
  Element reflection(int t) const { return reflections_[t]; }
  int reflection_index(Element x) const { return refl_index_[x.id]; }
  bool is_reflection(Element x) const { return refl_index_[x.id] >= 0; }
  Element refl_left_mul(int t, Element w) const {
    return Element{refl_left_[static_cast<std::size_t>(t) * order_ + w.id]};
  }
  Element refl_right_mul(Element w, int t) const {
    return Element{refl_right_[static_cast<std::size_t>(t) * order_ + w.id]};
  }

  GenMask descents(Element w, Side side) const {
    return side == Side::Left ? dleft_[w.id] : dright_[w.id];
  }
  GenMask ascents(Element w, Side side) const {
    return all_gens() & ~descents(w, side);
  }
  DescentData descent_data(Element w) const;

  // Inversion sets as bitsets over reflection indices; |T_L(w)| = l(w).
  const Bitset& left_inversions(Element w) const { return invl_[w.id]; }
  Bitset right_inversions(Element w) const { return invl_[inverse_[w.id]]; }
  std::vector<Element> inversions(Element w, Side side) const;

  // Lex-smallest reduced word (greedy smallest-generator-first stripping).
  std::vector<int> reduced_word(Element w) const;

  bool has_bruhat_matrix() const { return !bruhat_down_.empty(); }
  bool bruhat_leq(Element u, Element w) const;
  // {v : v <= w} in Bruhat order, as a bitset over ids.
  Bitset bruhat_down_set(Element w) const;
  const std::vector<Element>& bruhat_lower_covers(Element w) const {
    return cover_down_[w.id];
  }
  const std::vector<Element>& bruhat_upper_covers(Element w) const {
    return cover_up_[w.id];
  }

  // One-line I/O is available for single-factor type A groups only.
  bool has_one_line() const { return !one_line_.empty(); }
  std::vector<int> one_line(Element w) const;
  std::string display(Element w) const;
  std::string word_name(Element w) const;
  Element parse(const std::string& text) const;

 private:
  Group() = default;

  std::uint32_t left_at(int s, std::uint32_t id) const {
    return left_[static_cast<std::size_t>(s) * order_ + id];
  }
  std::uint32_t right_at(int s, std::uint32_t id) const {
    return right_[static_cast<std::size_t>(s) * order_ + id];
  }

  CoxeterMatrix matrix_;
  FiniteType type_;
  int rank_ = 0;
  std::uint32_t order_ = 1;
  std::vector<std::uint32_t> left_, right_;     // [s * order + id]
  std::vector<std::uint32_t> length_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::pair<std::uint32_t, std::uint8_t>> parent_;
  std::vector<Element> reflections_;
  std::vector<std::int32_t> refl_index_;
  std::vector<std::uint32_t> refl_left_, refl_right_;  // [t * order + id]
  std::uint32_t longest_ = 0;
  std::vector<GenMask> dleft_, dright_;
  std::vector<Bitset> invl_;
  std::vector<std::vector<Element>> cover_down_, cover_up_;
  BitMatrix bruhat_down_;  // row w = {v : v <= w}; built when order <= 2^16
  std::vector<std::uint8_t> one_line_;  // order * (rank + 1), type A only
  std::vector<std::uint32_t> longest_in_;  // w0(I) per mask, rank <= 16
};

}  // namespace coxeter
