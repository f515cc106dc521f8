#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coxeter/bigint.hpp"
#include "coxeter/cosets.hpp"
#include "coxeter/group.hpp"
#include "coxeter/report.hpp"

namespace coxeter {

// Directed Bruhat graph induced on a vertex set: u -> v when v = ut for a
// reflection t and l(u) < l(v). Short edges are the covers (l(u,v) = 1).
struct BruhatGraph {
  std::vector<Element> vertices;  // sorted by (length, id)

  struct Edge {
    std::uint32_t from = 0, to = 0;  // indices into vertices
    bool is_short = false;
  };
  std::vector<Edge> edges;  // sorted by (from, to)

  int vertex_index(Element v) const;  // -1 if absent
};

BruhatGraph bruhat_graph(const Group& g, std::span<const Element> vertices,
                         bool short_only = false);

struct DegreeProfile {
  std::vector<int> in, out;  // aligned with graph.vertices
  int degree(std::size_t i) const { return in[i] + out[i]; }
};

DegreeProfile degree_profile(const BruhatGraph& graph);

// Every vertex of the coset's Bruhat graph has degree l(X).
CheckReport verify_coset_regularity(const Group& g, const DoubleCoset& X);

// deg_w(rv) = deg_w(v) = deg_w(vs) for v <= w, r in D_L(w), s in D_R(w).
CheckReport verify_degree_invariance(const Group& g, Element w);

// D_L(w) ⊆ D_L(u) and D_R(w) ⊆ D_R(u); requires u <= w.
bool is_critical(const Group& g, Element u, Element w);

// Sum of (-1)^{out(v)} over the induced graph on [u, w]; requires u <= w.
long long out_eulerian_sum(const Group& g, Element u, Element w);

struct LambdaStatistic {
  std::uint32_t lambda = 0;  // reflections below w in Bruhat order
  bool combinatorially_smooth = false;
};
LambdaStatistic lambda_statistic(const Group& g, Element w);

// deg_w(v) >= l(w) for all v in [e, w].
CheckReport deodhar_check(const Group& g, Element w);

enum class EdgeParity { OutOdd, OutEven };

struct IrregularityStats {
  Rational vertex_ratio;  // |V_irr| / |V|
  Rational edge_ratio;    // |E_irr| / |E|
  std::uint64_t irregular_vertices = 0, irregular_edges = 0;
  std::uint64_t out_odd_edges = 0, out_even_edges = 0;
  std::vector<EdgeParity> edge_parity;  // aligned with graph.edges
  BruhatGraph graph;                    // the graph on [e, w]
};
// Throws EmptyGraphError for w = e.
IrregularityStats irregularity_stats(const Group& g, Element w);

std::string to_dot(const Group& g, const BruhatGraph& graph);

}  // namespace coxeter
