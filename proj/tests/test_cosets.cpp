#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "coxeter/errors.hpp"
#include "coxeter/orders.hpp"
#include "oracles.hpp"

using namespace coxeter;

namespace {

Group& cached(const std::string& label) {
  static std::map<std::string, Group> cache;
  auto it = cache.find(label);
  if (it == cache.end()) it = cache.emplace(label, Group::build(label)).first;
  return it->second;
}

XiSystem& cached_xi(const std::string& label) {
  static std::map<std::string, XiSystem> cache;
  auto it = cache.find(label);
  if (it == cache.end())
    it = cache.emplace(label, build_xi(cached(label))).first;
  return it->second;
}

}  // namespace

TEST_CASE("parabolic subgroups") {
  const Group& a2 = cached("A2");
  CHECK(parabolic_subgroup(a2, 0) == std::vector<Element>{a2.identity()});
  const auto p1 = parabolic_subgroup(a2, gen_bit(0));
  CHECK(p1 == std::vector<Element>{a2.identity(), a2.simple(0)});
  const Group& a3 = cached("A3");
  CHECK(parabolic_subgroup(a3, gen_bit(0) | gen_bit(1)).size() == 6);
}

TEST_CASE("double cosets against the product-enumeration oracle") {
  const Group& g = cached("A3");
  for_each_subset(g.all_gens(), [&](GenMask I) {
    for_each_subset(g.all_gens(), [&](GenMask J) {
      for (std::uint32_t x = 0; x < g.order(); x += 5) {
        const auto X = double_coset(g, I, Element{x}, J);
        CHECK(X.members == test::naive_double_coset(g, I, Element{x}, J));
      }
    });
  });
}

TEST_CASE("double coset worked examples") {
  const Group& a1 = cached("A1");
  const auto X = double_coset(a1, gen_bit(0), a1.identity(), 0);
  CHECK(X.members.size() == 2);
  CHECK(X.min_rep == a1.identity());
  CHECK(X.max_rep == a1.simple(0));

  const Group& a2 = cached("A2");
  const auto W = double_coset(a2, a2.all_gens(), a2.identity(), a2.all_gens());
  CHECK(W.members.size() == 6);
  CHECK(W.max_rep == a2.longest());
  CHECK(W.length == 3);

  const auto single = double_coset(a2, 0, a2.simple(1), 0);
  CHECK(single.members == std::vector<Element>{a2.simple(1)});
}

TEST_CASE("members form the two-sided interval between the extremes") {
  const Group& g = cached("A3");
  for (std::uint32_t x = 0; x < g.order(); x += 3) {
    for_each_subset(g.all_gens(), [&](GenMask I) {
      const auto X = double_coset(g, I, Element{x}, gen_bit(1));
      const auto iv =
          interval(g, X.min_rep, X.max_rep, OrderKind::TwoSided);
      CHECK(X.members == iv.members);
      CHECK(X.length == static_cast<int>(g.length(X.max_rep)) -
                            static_cast<int>(g.length(X.min_rep)));
    });
  }
}

TEST_CASE("maximal presentations") {
  const Group& a2 = cached("A2");
  const auto W = double_coset(a2, a2.all_gens(), a2.identity(), a2.all_gens());
  const auto [ml, x1, mr] = maximal_presentation(a2, W, /*verify=*/true);
  CHECK(ml == a2.all_gens());
  CHECK(mr == a2.all_gens());
  CHECK(x1 == a2.longest());

  const auto single = double_coset(a2, 0, a2.simple(0), 0);
  const auto [sl, sx, sr] = maximal_presentation(a2, single, true);
  CHECK(sl == 0);
  CHECK(sr == 0);
  CHECK(sx == a2.simple(0));

  const Group& a1 = cached("A1");
  const auto X = double_coset(a1, gen_bit(0), a1.identity(), 0);
  const auto [ml1, x11, mr1] = maximal_presentation(a1, X, true);
  CHECK(ml1 == gen_bit(0));
  CHECK(mr1 == gen_bit(0));
  CHECK(x11 == a1.simple(0));

  // Verify against the definition on every coset of A3.
  const auto& xi = cached_xi("A3");
  for (const auto& node : xi.delta.nodes)
    CHECK_NOTHROW(maximal_presentation(cached("A3"), node, true));
}

TEST_CASE("presentation families") {
  const Group& a1 = cached("A1");
  const auto X = double_coset(a1, gen_bit(0), a1.identity(), 0);
  const auto all = presentations(a1, X);
  REQUIRE(all.size() == 3);
  CHECK(all[0] == Presentation{0, gen_bit(0)});
  CHECK(all[1] == Presentation{gen_bit(0), 0});
  CHECK(all[2] == Presentation{gen_bit(0), gen_bit(0)});
  const auto min = presentations(a1, X, /*minimal_only=*/true);
  REQUIRE(min.size() == 2);
  CHECK(min[0] == Presentation{0, gen_bit(0)});
  CHECK(min[1] == Presentation{gen_bit(0), 0});

  const Group& a2 = cached("A2");
  const auto single = double_coset(a2, 0, a2.simple(0), 0);
  CHECK(presentations(a2, single) ==
        std::vector<Presentation>{Presentation{0, 0}});

  const auto W = double_coset(a2, a2.all_gens(), a2.identity(), a2.all_gens());
  const auto wall = presentations(a2, W);
  CHECK(wall.size() == 7);  // I = S or J = S
  const auto has = [&](GenMask I, GenMask J) {
    return std::find(wall.begin(), wall.end(), Presentation{I, J}) !=
           wall.end();
  };
  CHECK(has(a2.all_gens(), a2.all_gens()));
  CHECK(has(a2.all_gens(), 0));
  CHECK(has(0, a2.all_gens()));
}

TEST_CASE("presentation family is independent of the chosen representative") {
  const Group& g = cached("A3");
  const auto& xi = cached_xi("A3");
  for (std::size_t i = 0; i < xi.delta.nodes.size(); i += 7) {
    const auto& X = xi.delta.nodes[i];
    const auto family = presentations(g, X);
    for (const auto& p : family)
      for (std::size_t k = 0; k < X.members.size();
           k += std::max<std::size_t>(1, X.members.size() / 3))
        CHECK(double_coset(g, p.left, X.members[k], p.right).members ==
              X.members);
  }
}

TEST_CASE("system counts for small symmetric groups") {
  const auto& a1 = cached_xi("A1");
  CHECK(a1.delta.nodes.size() == 3);
  CHECK(a1.nodes.size() == 5);
  const auto& a2 = cached_xi("A2");
  CHECK(a2.delta.nodes.size() == 19);
  CHECK(a2.nodes.size() == 33);
  const auto& a3 = cached_xi("A3");
  CHECK(a3.delta.nodes.size() == 167);
  CHECK(a3.nodes.size() == 281);
}

TEST_CASE("delta component table for A2") {
  const Group& g = cached("A2");
  const auto& xi = cached_xi("A2");
  const std::map<std::string, std::uint64_t> expected = {
      {"123", 1}, {"213", 2}, {"132", 2}, {"231", 4}, {"312", 4}, {"321", 6}};
  for (const auto& [ol, count] : expected)
    CHECK(xi.delta.delta_of(g.parse(ol)) == count);
}

TEST_CASE("component structure") {
  const Group& g = cached("A2");
  const auto& xi = cached_xi("A2");
  // Xi(w) is boolean of rank d~(w): exactly the pairs (I ⊆ D_L, J ⊆ D_R).
  for (std::uint32_t wid = 0; wid < g.order(); ++wid) {
    const Element w{wid};
    const auto& comp = xi.component_nodes[wid];
    const auto dd = g.descent_data(w);
    CHECK(comp.size() == (std::size_t{1} << dd.d_tilde));
    std::set<std::pair<GenMask, GenMask>> seen;
    for (const auto idx : comp) {
      const auto& node = xi.nodes[idx];
      CHECK((node.left & ~dd.d_left) == 0);
      CHECK((node.right & ~dd.d_right) == 0);
      seen.insert({node.left, node.right});
      CHECK(xi.delta.nodes[node.coset].max_rep == w);
    }
    CHECK(seen.size() == comp.size());
    // min and max of Delta(w).
    const auto& dcomp = xi.delta.component_nodes[wid];
    bool found_min = false, found_max = false;
    const auto big = double_coset(g, dd.d_left, w, dd.d_right);
    for (const auto idx : dcomp) {
      if (xi.delta.nodes[idx].members == big.members) found_min = true;
      if (xi.delta.nodes[idx].members == std::vector<Element>{w})
        found_max = true;
    }
    CHECK(found_min);
    CHECK(found_max);
  }
  CHECK(xi.component_nodes[g.parse("321").id].size() == 16);
}

TEST_CASE("one-sided system components are boolean of rank |D_R|") {
  const Group& g = cached("A2");
  const auto sigma = build_sigma(g);
  std::uint64_t expected_total = 0;
  for (std::uint32_t wid = 0; wid < g.order(); ++wid) {
    const Element w{wid};
    const int dr = gen_count(g.descents(w, Side::Right));
    CHECK(sigma.component_nodes[wid].size() == (std::size_t{1} << dr));
    expected_total += std::uint64_t{1} << dr;
    for (const auto idx : sigma.component_nodes[wid]) {
      const auto& node = sigma.nodes[idx];
      CHECK(node.max == w);
      CHECK(node.size == parabolic_subgroup(g, node.gens).size());
    }
  }
  CHECK(sigma.nodes.size() == expected_total);
}

TEST_CASE("delta upper bound") {
  const Group& a2 = cached("A2");
  CHECK(delta_upper_bound(a2, a2.identity()) == 1);
  CHECK(delta_upper_bound(a2, a2.parse("321")) == 16);
  const auto& xi2 = cached_xi("A2");
  CHECK(xi2.delta.delta_of(a2.parse("321")) == 6);  // 6 <= 16
  // d~(54312) = 6 gives the bound 2^6 = 64.
  const Group& a4 = cached("A4");
  CHECK(delta_upper_bound(a4, a4.parse("54312")) == 64);
  // The bound holds for every element of A3 and B3.
  for (const char* label : {"A3", "B3"}) {
    const auto& xi = cached_xi(label);
    const Group& g = cached(label);
    for (std::uint32_t wid = 0; wid < g.order(); ++wid)
      CHECK(xi.delta.delta_of(Element{wid}) <=
            delta_upper_bound(g, Element{wid}));
  }
}

TEST_CASE("total marked coset count equals the sum of component sizes") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3"}) {
    const Group& g = cached(label);
    const auto& xi = cached_xi(label);
    std::uint64_t sum = 0;
    for (std::uint32_t wid = 0; wid < g.order(); ++wid)
      sum += delta_upper_bound(g, Element{wid});
    CHECK(sum == xi.nodes.size());
    CHECK(xi.delta.nodes.size() <= xi.nodes.size());
  }
}

TEST_CASE("coatom data") {
  const Group& g = cached("A2");
  const Element w0 = g.parse("321");
  // Singleton: no coatoms, local dim d(w) - 1.
  const auto single = double_coset(g, 0, w0, 0);
  const auto cd = coatom_data(g, single, w0);
  CHECK(cd.coatoms.empty());
  CHECK(cd.d == 0);
  CHECK(cd.d_tilde == 0);
  CHECK(cd.local_dim == g.descent_data(w0).d - 1);
  // Minimum of the component: local dim -1.
  const auto big = double_coset(g, g.all_gens(), w0, g.all_gens());
  CHECK(coatom_data(g, big, w0).local_dim == -1);
  // Wrong component: MaxMismatch.
  CHECK_THROWS_AS(coatom_data(g, single, g.simple(0)), MaxMismatchError);

  // Local dimensions over Delta(321) form the multiset {1,0,0,-1,-1,-1}.
  const auto& xi = cached_xi("A2");
  std::multiset<int> dims;
  for (const auto idx : xi.delta.component_nodes[w0.id])
    dims.insert(coatom_data(g, xi.delta.nodes[idx], w0).local_dim);
  CHECK(dims == std::multiset<int>{-1, -1, -1, 0, 0, 1});
}

TEST_CASE("coatom invariants across A3") {
  const Group& g = cached("A3");
  const auto& xi = cached_xi("A3");
  const int n = g.rank();
  for (std::uint32_t wid = 0; wid < g.order(); ++wid) {
    const Element w{wid};
    const auto dw = g.descent_data(w);
    for (const auto idx : xi.delta.component_nodes[wid]) {
      const auto& X = xi.delta.nodes[idx];
      const auto cd = coatom_data(g, X, w);
      CHECK(cd.d >= 0);
      CHECK(cd.d <= 2 * n);
      CHECK(cd.d_tilde <= 2 * n);
      CHECK((cd.d == 0) == (cd.d_tilde == 0));
      CHECK(cd.d <= cd.d_tilde);
      CHECK(cd.d_tilde <= 2 * cd.d);
      CHECK(cd.d <= dw.d);
      CHECK(cd.d_tilde <= dw.d_tilde);
      for (const auto& p : presentations(g, X)) {
        const int size = gen_count(p.left) + gen_count(p.right);
        CHECK(cd.d <= size);
        CHECK(size <= cd.d_tilde);
      }
    }
  }
}

TEST_CASE("reduced factorization through the minimal representative") {
  const Group& g = cached("A3");
  const auto& xi = cached_xi("A3");
  for (const auto& X : xi.delta.nodes) {
    const auto wl = parabolic_subgroup(g, X.max_left);
    const auto wr = parabolic_subgroup(g, X.max_right);
    for (const Element x : X.members) {
      bool found = false;
      for (const Element u : wl) {
        if (found) break;
        for (const Element v : wr) {
          if (g.multiply(g.multiply(u, X.min_rep), v) == x &&
              g.length(u) + g.length(X.min_rep) + g.length(v) == g.length(x)) {
            found = true;
            break;
          }
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("fibers over the A2 longest-element component") {
  const Group& g = cached("A2");
  const auto& xi = cached_xi("A2");
  const Element w0 = g.parse("321");
  std::multiset<std::size_t> sizes;
  std::multiset<std::pair<std::size_t, int>> size_dim_pairs;
  std::size_t total = 0;
  for (const auto idx : xi.delta.component_nodes[w0.id]) {
    const auto fib = project_and_fiber(g, xi, idx);
    CHECK(fib.unique_min);
    CHECK(fib.boolean_ok);
    CHECK(fib.projection_monotone);
    CHECK(fib.dim_drop_ok);
    sizes.insert(fib.fiber.size());
    size_dim_pairs.insert(
        {fib.fiber.size(),
         coatom_data(g, xi.delta.nodes[idx], w0).local_dim});
    total += fib.fiber.size();
  }
  CHECK(total == 16);
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 3, 3, 7});
  // The size-7 fiber belongs to the whole-group coset of local dim -1 and
  // the size-1 fiber over {321} has local dim 1.
  CHECK(size_dim_pairs ==
        std::multiset<std::pair<std::size_t, int>>{
            {7, -1}, {1, 1}, {3, 0}, {3, 0}, {1, -1}, {1, -1}});
}

TEST_CASE("singleton fibers are trivial") {
  const Group& g = cached("A2");
  const auto& xi = cached_xi("A2");
  for (std::uint32_t i = 0; i < xi.delta.nodes.size(); ++i) {
    if (xi.delta.nodes[i].members.size() != 1) continue;
    const auto fib = project_and_fiber(g, xi, i);
    CHECK(fib.fiber.size() == 1);
    CHECK(fib.fiber[0].left == 0);
    CHECK(fib.fiber[0].right == 0);
  }
}

TEST_CASE("all fibers of A3 pass the boolean-complex verdict") {
  const Group& g = cached("A3");
  const auto& xi = cached_xi("A3");
  for (std::uint32_t i = 0; i < xi.delta.nodes.size(); ++i) {
    const auto fib = project_and_fiber(g, xi, i);
    CHECK(fib.unique_min);
    CHECK(fib.boolean_ok);
    CHECK(fib.projection_monotone);
    CHECK(fib.dim_drop_ok);
  }
}

TEST_CASE("structural checks pass on small groups") {
  for (const char* label : {"A1", "A2", "A3", "B2"}) {
    const Group& g = cached(label);
    const auto& xi = cached_xi(label);
    const auto rep = structural_checks(g, xi.delta);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.passed());
    CHECK(rep.checks > 0);
  }
}

TEST_CASE("adjacent components: total descent number grows by two") {
  for (const char* label : {"A2", "A3", "B2"}) {
    const Group& g = cached(label);
    for (std::uint32_t wid = 0; wid < g.order(); ++wid) {
      const Element w{wid};
      const int dtw = g.descent_data(w).d_tilde;
      for (const Element v : lower_covers_both_sides(g, w))
        CHECK(dtw == g.descent_data(v).d_tilde + 2);
    }
  }
  // The analogous jump for the two-sided descent number d does not hold:
  // 312 is below 321 on both sides yet d(312) = d(321) = 2.
  const Group& a2 = cached("A2");
  const Element v = a2.parse("312"), w = a2.parse("321");
  const auto both = lower_covers_both_sides(a2, w);
  CHECK(std::find(both.begin(), both.end(), v) != both.end());
  CHECK(a2.descent_data(v).d == 2);
  CHECK(a2.descent_data(w).d == 2);
}

TEST_CASE("cover-by-two at the top of the A1 system") {
  const Group& g = cached("A1");
  const auto& delta = cached_xi("A1").delta;
  // {e, s} is covered by exactly {e} and {s}.
  const auto idx = delta.index_of(g.identity(), g.simple(0));
  REQUIRE(delta.upper[idx].size() == 2);
  std::set<std::size_t> sizes;
  for (const auto up : delta.upper[idx])
    sizes.insert(delta.nodes[up].members.size());
  CHECK(sizes == std::set<std::size_t>{1});
  CHECK(delta.nodes[delta.upper[idx][0]].members.size() == 1);
}

TEST_CASE("isomorphic groups give identical system counts") {
  const Group b2 = Group::build("B2");
  const Group i4 = Group::build("I2(4)");
  const auto xb = build_xi(b2);
  const auto xi4 = build_xi(i4);
  CHECK(xb.nodes.size() == xi4.nodes.size());
  CHECK(xb.delta.nodes.size() == xi4.delta.nodes.size());
  for (std::uint32_t wid = 0; wid < b2.order(); ++wid)
    CHECK(xb.delta.delta_of(Element{wid}) == xi4.delta.delta_of(Element{wid}));
}

TEST_CASE("node cap is enforced") {
  const Group& g = cached("A3");
  SystemOptions opts;
  opts.node_cap = 10;
  CHECK_THROWS_AS(build_delta(g, opts), ResourceLimitError);
  CHECK_THROWS_AS(build_xi(g, opts), ResourceLimitError);
}
