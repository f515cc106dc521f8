#include "coxeter/bruhat_graph.hpp"

#include <algorithm>
#include <chrono>

#include "coxeter/errors.hpp"
#include "coxeter/orders.hpp"

namespace coxeter {

namespace {

std::vector<Element> sorted_vertices(const Group& g,
                                     std::span<const Element> vs) {
  std::vector<Element> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end(), [&](Element a, Element b) {
    if (g.length(a) != g.length(b)) return g.length(a) < g.length(b);
    return a.id < b.id;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> interval_vertices(const Group& g, Element u, Element w) {
  if (!g.bruhat_leq(u, w))
    throw NotComparableError(g.display(u) + " is not below " + g.display(w) +
                             " in Bruhat order");
  std::vector<Element> out;
  const Bitset below = g.bruhat_down_set(w);
  below.for_each_set([&](std::size_t v) {
    const Element e{static_cast<std::uint32_t>(v)};
    if (g.bruhat_leq(u, e)) out.push_back(e);
  });
  return out;
}

std::vector<Element> lower_interval_vertices(const Group& g, Element w) {
  std::vector<Element> out;
  g.bruhat_down_set(w).for_each_set([&](std::size_t v) {
    out.push_back(Element{static_cast<std::uint32_t>(v)});
  });
  return out;
}

}  // namespace

int BruhatGraph::vertex_index(Element v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  return -1;
}

BruhatGraph bruhat_graph(const Group& g, std::span<const Element> vs,
                         bool short_only) {
  BruhatGraph graph;
  graph.vertices = sorted_vertices(g, vs);
  std::vector<std::int32_t> index(g.order(), -1);
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    index[graph.vertices[i].id] = static_cast<std::int32_t>(i);
  const int nt = g.num_reflections();
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const Element u = graph.vertices[i];
    for (int t = 0; t < nt; ++t) {
      const Element v = g.refl_right_mul(u, t);
      if (g.length(v) <= g.length(u)) continue;
      const std::int32_t j = index[v.id];
      if (j < 0) continue;
      const bool is_short = g.length(v) == g.length(u) + 1;
      if (short_only && !is_short) continue;
      graph.edges.push_back({static_cast<std::uint32_t>(i),
                             static_cast<std::uint32_t>(j), is_short});
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const BruhatGraph::Edge& a, const BruhatGraph::Edge& b) {
              if (a.from != b.from) return a.from < b.from;
              return a.to < b.to;
            });
  return graph;
}

DegreeProfile degree_profile(const BruhatGraph& graph) {
  DegreeProfile p;
  p.in.assign(graph.vertices.size(), 0);
  p.out.assign(graph.vertices.size(), 0);
  for (const auto& e : graph.edges) {
    ++p.out[e.from];
    ++p.in[e.to];
  }
  return p;
}

CheckReport verify_coset_regularity(const Group& g, const DoubleCoset& X) {
  CheckReport rep;
  rep.suite = "regularity";
  const auto graph = bruhat_graph(g, X.members);
  const auto prof = degree_profile(graph);
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    ++rep.checks;
    if (prof.degree(i) != X.length)
      rep.fail("coset " + g.display(X.min_rep) + ".." + g.display(X.max_rep) +
               ": deg(" + g.display(graph.vertices[i]) + ") = " +
               std::to_string(prof.degree(i)) + " != l(X) = " +
               std::to_string(X.length));
  }
  return rep;
}

CheckReport verify_degree_invariance(const Group& g, Element w) {
  CheckReport rep;
  rep.suite = "degree-invariance";
  const auto vertices = lower_interval_vertices(g, w);
  const auto graph = bruhat_graph(g, vertices);
  const auto prof = degree_profile(graph);
  std::vector<std::int32_t> index(g.order(), -1);
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    index[graph.vertices[i].id] = static_cast<std::int32_t>(i);
  auto deg = [&](Element v) {
    const std::int32_t i = index[v.id];
    return i < 0 ? 0 : prof.degree(static_cast<std::size_t>(i));
  };
  const GenMask dl = g.descents(w, Side::Left);
  const GenMask dr = g.descents(w, Side::Right);
  for (const Element v : graph.vertices) {
    for_each_gen(dl, [&](int r) {
      ++rep.checks;
      if (deg(g.left_mul(r, v)) != deg(v))
        rep.fail("w = " + g.display(w) + ": deg(s" + std::to_string(r + 1) +
                 "*" + g.display(v) + ") != deg(" + g.display(v) + ")");
    });
    for_each_gen(dr, [&](int s) {
      ++rep.checks;
      if (deg(g.right_mul(v, s)) != deg(v))
        rep.fail("w = " + g.display(w) + ": deg(" + g.display(v) + "*s" +
                 std::to_string(s + 1) + ") != deg(" + g.display(v) + ")");
    });
  }
  return rep;
}

bool is_critical(const Group& g, Element u, Element w) {
  if (!g.bruhat_leq(u, w))
    throw NotComparableError("criticality requires u <= w");
  const GenMask dlw = g.descents(w, Side::Left);
  const GenMask drw = g.descents(w, Side::Right);
  const GenMask dlu = g.descents(u, Side::Left);
  const GenMask dru = g.descents(u, Side::Right);
  return (dlw & ~dlu) == 0 && (drw & ~dru) == 0;
}

long long out_eulerian_sum(const Group& g, Element u, Element w) {
  const auto vertices = interval_vertices(g, u, w);
  const auto graph = bruhat_graph(g, vertices);
  const auto prof = degree_profile(graph);
  long long sum = 0;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    sum += prof.out[i] % 2 == 0 ? 1 : -1;
  return sum;
}

LambdaStatistic lambda_statistic(const Group& g, Element w) {
  LambdaStatistic out;
  for (const Element t : g.reflections())
    if (g.bruhat_leq(t, w)) ++out.lambda;
  out.combinatorially_smooth = out.lambda == g.length(w);
  return out;
}

CheckReport deodhar_check(const Group& g, Element w) {
  CheckReport rep;
  rep.suite = "deodhar";
  const auto graph = bruhat_graph(g, lower_interval_vertices(g, w));
  const auto prof = degree_profile(graph);
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    ++rep.checks;
    if (prof.degree(i) < static_cast<int>(g.length(w)))
      rep.fail("w = " + g.display(w) + ": deg(" +
               g.display(graph.vertices[i]) + ") = " +
               std::to_string(prof.degree(i)) + " < l(w) = " +
               std::to_string(g.length(w)));
  }
  return rep;
}

IrregularityStats irregularity_stats(const Group& g, Element w) {
  if (w == g.identity())
    throw EmptyGraphError("irregularity is undefined for w = e");
  IrregularityStats out;
  out.graph = bruhat_graph(g, lower_interval_vertices(g, w));
  const auto prof = degree_profile(out.graph);
  const int lw = static_cast<int>(g.length(w));
  std::vector<bool> irr(out.graph.vertices.size(), false);
  for (std::size_t i = 0; i < out.graph.vertices.size(); ++i)
    if (prof.degree(i) > lw) {
      irr[i] = true;
      ++out.irregular_vertices;
    }
  out.edge_parity.reserve(out.graph.edges.size());
  for (const auto& e : out.graph.edges) {
    if (irr[e.from] || irr[e.to]) ++out.irregular_edges;
    const int diff = prof.out[e.from] - prof.out[e.to];
    const bool odd = diff % 2 != 0;
    out.edge_parity.push_back(odd ? EdgeParity::OutOdd : EdgeParity::OutEven);
    if (odd)
      ++out.out_odd_edges;
    else
      ++out.out_even_edges;
  }
  out.vertex_ratio =
      Rational(static_cast<std::int64_t>(out.irregular_vertices),
               static_cast<std::int64_t>(out.graph.vertices.size()));
  out.edge_ratio =
      Rational(static_cast<std::int64_t>(out.irregular_edges),
               static_cast<std::int64_t>(out.graph.edges.size()));
  return out;
}

std::string to_dot(const Group& g, const BruhatGraph& graph) {
  std::string out = "digraph bruhat {\n  rankdir=BT;\n";
  for (const Element v : graph.vertices)
    out += "  \"" + g.display(v) + "\";\n";
  for (const auto& e : graph.edges) {
    out += "  \"" + g.display(graph.vertices[e.from]) + "\" -> \"" +
           g.display(graph.vertices[e.to]) + "\" [style=" +
           (e.is_short ? "solid" : "dashed") + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace coxeter
