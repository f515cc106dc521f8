#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "coxeter/errors.hpp"
#include "coxeter/group.hpp"
#include "oracles.hpp"

using namespace coxeter;

namespace {

Group& cached(const std::string& label) {
  static std::map<std::string, Group> cache;
  auto it = cache.find(label);
  if (it == cache.end())
    it = cache.emplace(label, Group::build(label)).first;
  return it->second;
}

}  // namespace

TEST_CASE("classification orders are reproduced by enumeration") {
  CHECK(cached("A1").order() == 2);
  CHECK(cached("A2").order() == 6);
  CHECK(cached("A3").order() == 24);
  CHECK(cached("B2").order() == 8);
  CHECK(cached("B3").order() == 48);
  CHECK(cached("H3").order() == 120);
  CHECK(cached("I2(7)").order() == 14);
  CHECK(cached("D4").order() == 192);
  CHECK(cached("F4").order() == 1152);
  CHECK(cached("A1xA2").order() == 12);
}

TEST_CASE("exact reflection representations at depth") {
  // H4 exercises the golden-ratio ring through length-60 products; a wrong
  // entry or an inexact model would break the enumerated order.
  const Group h4 = Group::build("H4");
  CHECK(h4.order() == 14400);
  CHECK(h4.num_reflections() == 60);
  CHECK(h4.length(h4.longest()) == 60);
}

TEST_CASE("A2 basics") {
  const Group& g = cached("A2");
  CHECK(g.num_reflections() == 3);
  CHECK(g.length(g.longest()) == 3);
  // Braid relation s1 s2 s1 = s2 s1 s2.
  const Element a = g.right_mul(g.right_mul(g.simple(0), 1), 0);
  const Element b = g.right_mul(g.right_mul(g.simple(1), 0), 1);
  CHECK(a == b);
  CHECK(a == g.longest());
  CHECK(g.display(g.longest()) == "321");
}

TEST_CASE("identity and multiplication convention") {
  const Group& g = cached("A3");
  for (std::uint32_t id = 0; id < g.order(); ++id) {
    const Element w{id};
    CHECK(g.multiply(g.identity(), w) == w);
    CHECK(g.multiply(w, g.identity()) == w);
  }
  // (xy)(k) = x(y(k)) makes s2*s1*s3 the one-line 3142.
  const Element w =
      g.multiply(g.multiply(g.simple(1), g.simple(0)), g.simple(2));
  CHECK(g.display(w) == "3142");
}

TEST_CASE("inverses") {
  const Group& g = cached("A3");
  CHECK(g.inverse(g.identity()) == g.identity());
  for (const Element t : g.reflections()) {
    CHECK(g.inverse(t) == t);                 // involutions
    CHECK(g.length(t) % 2 == 1);              // odd length
  }
  CHECK(g.inverse(g.parse("3142")) == g.parse("2413"));
  for (std::uint32_t id = 0; id < g.order(); ++id) {
    const Element w{id};
    CHECK(g.multiply(w, g.inverse(w)) == g.identity());
    CHECK(g.length(g.inverse(w)) == g.length(w));
  }
}

TEST_CASE("length steps by one under generators") {
  for (const char* label : {"A3", "B3", "I2(7)"}) {
    const Group& g = cached(label);
    for (std::uint32_t id = 0; id < g.order(); ++id) {
      const Element w{id};
      for (int s = 0; s < g.rank(); ++s) {
        const int dl = static_cast<int>(g.length(g.left_mul(s, w))) -
                       static_cast<int>(g.length(w));
        const int dr = static_cast<int>(g.length(g.right_mul(w, s))) -
                       static_cast<int>(g.length(w));
        CHECK((dl == 1 || dl == -1));
        CHECK((dr == 1 || dr == -1));
      }
    }
  }
}

TEST_CASE("longest element pairing and reflection count") {
  for (const char* label : {"A3", "B2", "B3", "H3"}) {
    const Group& g = cached(label);
    const Element w0 = g.longest();
    CHECK(g.length(w0) == static_cast<std::uint32_t>(g.num_reflections()));
    for (std::uint32_t id = 0; id < g.order(); ++id) {
      const Element w{id};
      CHECK(g.length(w) + g.length(g.multiply(w, w0)) == g.length(w0));
    }
  }
}

TEST_CASE("inversion sets") {
  const Group& g = cached("A2");
  CHECK(g.inversions(g.identity(), Side::Left).empty());
  CHECK(g.inversions(g.longest(), Side::Left).size() == 3);
  // T_L(s1 s2) = {s1, s1 s2 s1}: derived by testing all three reflections.
  const Element s1s2 = g.multiply(g.simple(0), g.simple(1));
  const auto tl = g.inversions(s1s2, Side::Left);
  REQUIRE(tl.size() == 2);
  CHECK(tl[0] == g.simple(0));
  CHECK(tl[1] == g.longest());  // s1 s2 s1 is the longest element of A2

  for (const char* label : {"A3", "B3", "H3"}) {
    const Group& h = cached(label);
    for (std::uint32_t id = 0; id < h.order(); ++id) {
      const Element w{id};
      CHECK(h.left_inversions(w).count() == h.length(w));
      CHECK(h.right_inversions(w).count() == h.length(w));
    }
  }
}

TEST_CASE("reduced words") {
  const Group& g = cached("A2");
  CHECK(g.reduced_word(g.identity()).empty());
  CHECK(g.reduced_word(g.longest()) == std::vector<int>{0, 1, 0});

  const Group& a4 = cached("A4");
  const Element w = a4.parse("45312");
  CHECK(a4.length(w) == 8);
  const auto word = a4.reduced_word(w);
  CHECK(word.size() == 8);
  Element check = a4.identity();
  for (const int s : word) check = a4.right_mul(check, s);
  CHECK(check == w);
}

TEST_CASE("longest element of a parabolic subgroup") {
  const Group& a2 = cached("A2");
  CHECK(a2.longest_in(0) == a2.identity());
  CHECK(a2.longest_in(a2.all_gens()) == a2.longest());
  const Group& a3 = cached("A3");
  const Element w = a3.longest_in(gen_bit(0) | gen_bit(2));  // {s1, s3}
  CHECK(w == a3.multiply(a3.simple(0), a3.simple(2)));
  CHECK(a3.length(w) == 2);
  for (const char* label : {"A3", "B3"}) {
    const Group& g = cached(label);
    for_each_subset(g.all_gens(), [&](GenMask I) {
      const Element w0i = g.longest_in(I);
      CHECK(g.multiply(w0i, w0i) == g.identity());
      CHECK(g.descents(w0i, Side::Left) == I);
      CHECK(g.descents(w0i, Side::Right) == I);
    });
  }
}

TEST_CASE("descent data on worked examples") {
  const Group& a3 = cached("A3");
  {
    const auto d = a3.descent_data(a3.parse("2143"));
    CHECK(d.d == 2);
    CHECK(d.d_tilde == 4);
  }
  {
    const auto d = a3.descent_data(a3.identity());
    CHECK(d.d_left == 0);
    CHECK(d.d_right == 0);
    CHECK(d.d == 0);
    CHECK(d.d_tilde == 0);
    CHECK(d.a_left == a3.all_gens());
  }
  const Group& a4 = cached("A4");
  {
    const auto d = a4.descent_data(a4.parse("54312"));
    CHECK(d.d_left_small == gen_bit(1));               // {s2}
    CHECK(d.d_left_large == (gen_bit(2) | gen_bit(3)));  // {s3, s4}
    CHECK(d.d_right_large == (gen_bit(0) | gen_bit(1)));  // {s1, s2}
    CHECK(d.d_right_small == gen_bit(2));              // {s3}
    CHECK(d.d_tilde == 6);
    CHECK(d.d == 4);
  }
}

TEST_CASE("descent data invariants hold everywhere") {
  for (const char* label : {"A3", "B3", "I2(7)", "A1xA2"}) {
    const Group& g = cached(label);
    for (std::uint32_t id = 0; id < g.order(); ++id) {
      const auto d = g.descent_data(Element{id});
      CHECK((d.d_left_small & d.d_left_large) == 0);
      CHECK((d.d_left_small | d.d_left_large) == d.d_left);
      CHECK((d.d_right_small & d.d_right_large) == 0);
      CHECK((d.d_right_small | d.d_right_large) == d.d_right);
      CHECK(d.a_left == (g.all_gens() & ~d.d_left));
      CHECK(d.a_right == (g.all_gens() & ~d.d_right));
      CHECK(gen_count(d.d_left_large) ==
            static_cast<int>(d.two_sided_pairs.size()));
      CHECK(gen_count(d.d_right_large) ==
            static_cast<int>(d.two_sided_pairs.size()));
      CHECK(d.d <= d.d_tilde);
      CHECK(d.d_tilde <= 2 * d.d);
      // rw = ws for each matched pair.
      for (const auto& [r, s] : d.two_sided_pairs)
        CHECK(g.left_mul(r, Element{id}) == g.right_mul(Element{id}, s));
    }
  }
}

TEST_CASE("descent statistics tables for A2 and A3") {
  // Per-element (d_L1, d_R1, d_2LR, d, d~) over A2.
  const Group& a2 = cached("A2");
  const std::map<std::string, std::array<int, 5>> a2_table = {
      {"123", {0, 0, 0, 0, 0}}, {"132", {0, 0, 1, 1, 2}},
      {"213", {0, 0, 1, 1, 2}}, {"231", {1, 1, 0, 2, 2}},
      {"312", {1, 1, 0, 2, 2}}, {"321", {0, 0, 2, 2, 4}}};
  for (const auto& [ol, row] : a2_table) {
    const auto d = a2.descent_data(a2.parse(ol));
    CHECK(gen_count(d.d_left_small) == row[0]);
    CHECK(gen_count(d.d_right_small) == row[1]);
    CHECK(static_cast<int>(d.two_sided_pairs.size()) == row[2]);
    CHECK(d.d == row[3]);
    CHECK(d.d_tilde == row[4]);
  }
}

TEST_CASE("ids are assigned by length with the identity first") {
  for (const char* label : {"A3", "B3"}) {
    const Group& g = cached(label);
    CHECK(g.length(g.identity()) == 0);
    CHECK(g.identity().id == 0);
    for (std::uint32_t id = 1; id < g.order(); ++id)
      CHECK(g.length(Element{id - 1}) <= g.length(Element{id}));
  }
}

TEST_CASE("ids break length ties by lex-smallest reduced word") {
  const Group& g = cached("B3");
  for (std::uint32_t id = 1; id < g.order(); ++id) {
    if (g.length(Element{id - 1}) != g.length(Element{id})) continue;
    CHECK(g.reduced_word(Element{id - 1}) < g.reduced_word(Element{id}));
  }
}

TEST_CASE("one-line display and parsing") {
  const Group& g = cached("A3");
  for (std::uint32_t id = 0; id < g.order(); ++id) {
    const Element w{id};
    CHECK(g.parse(g.display(w)) == w);
  }
  CHECK(g.parse("e") == g.identity());
  CHECK(g.parse("s1") == g.simple(0));
  CHECK(g.parse("s2.s1.s3") == g.parse("3142"));
  CHECK(g.parse("2.1.3") == g.parse("3142"));  // bare generator indices
  CHECK_THROWS_AS(g.parse("1234x"), UnknownElementError);
  CHECK_THROWS_AS(g.parse("1123"), UnknownElementError);
  CHECK_THROWS_AS(g.parse("s9"), UnknownElementError);
  const Group& b3 = cached("B3");
  CHECK_THROWS_AS(b3.parse("123"), UnknownElementError);
  CHECK(b3.parse("s2.s1") == b3.multiply(b3.simple(1), b3.simple(0)));
}

TEST_CASE("isomorphic constructions agree on invariants") {
  // B2 via signed permutations vs I2(4) via the dihedral model.
  const Group b2 = Group::build("B2");
  const Group i4 = Group::build("I2(4)");
  REQUIRE(b2.order() == i4.order());
  CHECK(b2.num_reflections() == i4.num_reflections());
  CHECK(b2.length(b2.longest()) == i4.length(i4.longest()));
  for (std::uint32_t id = 0; id < b2.order(); ++id)
    CHECK(b2.length(Element{id}) == i4.length(Element{id}));

  // A3 via a user matrix with the path through the nodes in scrambled
  // order: s2 - s3 - s1 (bonds m(s2,s3) = m(s3,s1) = 3).
  const CoxeterMatrix scrambled(3, {1, 2, 3, 2, 1, 3, 3, 3, 1});
  const Group a3 = Group::build(scrambled);
  CHECK(a3.type().name() == "A3");
  CHECK(a3.order() == 24);
  CHECK(a3.num_reflections() == 6);
  for (std::uint32_t id = 0; id < a3.order(); ++id)
    CHECK(a3.parse(a3.display(Element{id})) == Element{id});
}

TEST_CASE("element cap") {
  BuildOptions opts;
  opts.element_cap = 100;
  CHECK_THROWS_AS(Group::build("H3", opts), ResourceLimitError);
}

TEST_CASE("rank zero group") {
  const Group g = Group::build("A0");
  CHECK(g.order() == 1);
  CHECK(g.rank() == 0);
  CHECK(g.num_reflections() == 0);
  CHECK(g.longest() == g.identity());
  CHECK(g.display(g.identity()) == "e");
}

TEST_CASE("reflection tables agree with generic multiplication") {
  const Group& g = cached("B3");
  for (int t = 0; t < g.num_reflections(); ++t) {
    const Element te = g.reflection(t);
    for (std::uint32_t id = 0; id < g.order(); id += 7) {
      const Element w{id};
      CHECK(g.refl_right_mul(w, t) == g.multiply(w, te));
      CHECK(g.refl_left_mul(t, w) == g.multiply(te, w));
    }
  }
}

TEST_CASE("reflections are exactly the odd-length involutive conjugates") {
  const Group& g = cached("B3");
  std::set<std::uint32_t> conj;
  for (std::uint32_t id = 0; id < g.order(); ++id)
    for (int s = 0; s < g.rank(); ++s)
      conj.insert(
          g.multiply(g.multiply(Element{id}, g.simple(s)), g.inverse(Element{id}))
              .id);
  std::set<std::uint32_t> table;
  for (const Element t : g.reflections()) table.insert(t.id);
  CHECK(conj == table);
}
