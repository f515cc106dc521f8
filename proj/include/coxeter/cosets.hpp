#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "coxeter/bitset.hpp"
#include "coxeter/group.hpp"
#include "coxeter/report.hpp"

namespace coxeter {

// Parabolic double coset W_I x W_J with its extremes and maximal presentation
// parts. Members are exactly the two-sided interval [min_rep, max_rep].
struct DoubleCoset {
  std::vector<Element> members;  // sorted by (length, id)
  Element min_rep, max_rep;      // x0, x1
  GenMask max_left = 0, max_right = 0;  // M_L(X), M_R(X)
  int length = 0;                       // l(x1) - l(x0)

  std::size_t size() const { return members.size(); }
  bool contains(Element v) const;
};

// The subgroup W_I, sorted by (length, id).
std::vector<Element> parabolic_subgroup(const Group& g, GenMask I);

DoubleCoset double_coset(const Group& g, GenMask I, Element x, GenMask J);

// (M_L, x1, M_R); with verify set, checks W_{M_L} x1 W_{M_R} reproduces X.
std::tuple<GenMask, Element, GenMask> maximal_presentation(
    const Group& g, const DoubleCoset& X, bool verify = false);

struct Presentation {
  GenMask left = 0, right = 0;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// All (I, J) with I ⊆ M_L, J ⊆ M_R and W_I x1 W_J = X, sorted by (I, J);
// optionally filtered to the componentwise-inclusion-minimal ones.
std::vector<Presentation> presentations(const Group& g, const DoubleCoset& X,
                                        bool minimal_only = false);

struct SystemOptions {
  std::uint64_t node_cap = 1'000'000;
  unsigned jobs = 0;
  bool covers = true;  // compute global Hasse covers
};

// Double coset system: all parabolic double cosets ordered by reverse
// containment. Nodes are deduplicated by (x0, x1) and sorted the same way.
struct DeltaSystem {
  std::vector<DoubleCoset> nodes;
  // w-components: component_nodes[w.id] lists node indices with max = w.
  std::vector<std::vector<std::uint32_t>> component_nodes;
  std::vector<std::vector<std::uint32_t>> upper, lower;  // Hasse covers

  std::uint32_t index_of(Element min_rep, Element max_rep) const;
  std::uint64_t delta_of(Element w) const {
    return component_nodes[w.id].size();
  }
};

// Marked coset system: triples (I, X, J). Each w-component is the boolean
// lattice on D_L(w) ⊎ D_R(w).
struct MarkedCoset {
  Element w;  // maximal representative of the coset
  GenMask left = 0, right = 0;
  std::uint32_t coset = 0;  // index into delta.nodes
};

struct XiSystem {
  DeltaSystem delta;
  std::vector<MarkedCoset> nodes;  // sorted by (w, left, right)
  std::vector<std::vector<std::uint32_t>> component_nodes;  // by w.id
  std::vector<std::vector<std::uint32_t>> upper, lower;     // Hasse covers
};

// One-sided coset system (minimal support): cosets x W_I keyed by their
// maximal representative; each w-component is boolean of rank |D_R(w)|.
struct SigmaSystem {
  struct Node {
    Element max, min;
    GenMask gens = 0;
    std::uint32_t size = 0;
  };
  std::vector<Node> nodes;  // sorted by (max, gens)
  std::vector<std::vector<std::uint32_t>> component_nodes;
};

DeltaSystem build_delta(const Group& g, const SystemOptions& = {});
XiSystem build_xi(const Group& g, const SystemOptions& = {});
SigmaSystem build_sigma(const Group& g, const SystemOptions& = {});

// 2^{d~(w)}; callers compare against delta_of(w).
std::uint64_t delta_upper_bound(const Group& g, Element w);

// Weak coatoms of X and the local dimension of X inside Δ(w).
// Throws MaxMismatchError unless max X = w.
struct CoatomData {
  std::vector<Element> coatoms;
  int d = 0;
  int d_tilde = 0;
  int local_dim = 0;
};
CoatomData coatom_data(const Group& g, const DoubleCoset& X, Element w);

// Fiber of the projection Ξ -> Δ over one coset, with the boolean-complex
// verdict and the cover laws checked on the pairs incident to this fiber.
struct FiberData {
  std::vector<MarkedCoset> fiber;  // sorted by (left, right)
  bool unique_min = false;         // (M_L, X, M_R) present and below the rest
  bool boolean_ok = false;         // all lower intervals inside the fiber
  bool projection_monotone = true;
  bool dim_drop_ok = true;
};
FiberData project_and_fiber(const Group& g, const XiSystem& xi,
                            std::uint32_t delta_node);

// Structure sweep over Δ(W): cover-by-two below maximal elements, adjacent
// component laws, per-component connectivity / unique minimum / local
// dimension range, and the maximal-elements-vs-W bijection.
CheckReport structural_checks(const Group& g, const DeltaSystem& delta);

}  // namespace coxeter
