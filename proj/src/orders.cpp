#include "coxeter/orders.hpp"

#include <algorithm>

#include "coxeter/errors.hpp"

namespace coxeter {

std::string order_name(OrderKind k) {
  switch (k) {
    case OrderKind::Bruhat:
      return "bruhat";
    case OrderKind::LeftWeak:
      return "left-weak";
    case OrderKind::RightWeak:
      return "right-weak";
    case OrderKind::TwoSided:
      return "two-sided";
  }
  return "?";
}

namespace {

void sort_by_length_then_id(const Group& g, std::vector<Element>& v) {
  std::sort(v.begin(), v.end(), [&](Element a, Element b) {
    if (g.length(a) != g.length(b)) return g.length(a) < g.length(b);
    return a.id < b.id;
  });
}

std::vector<Element> weak_neighbors(const Group& g, Element w, OrderKind k,
                                    bool down) {
  std::vector<Element> out;
  const GenMask gens = g.all_gens();
  for_each_gen(gens, [&](int s) {
    if (k != OrderKind::RightWeak) {
      const Element v = g.left_mul(s, w);
      const bool lower = g.length(v) < g.length(w);
      if (lower == down) out.push_back(v);
    }
    if (k != OrderKind::LeftWeak) {
      const Element v = g.right_mul(w, s);
      const bool lower = g.length(v) < g.length(w);
      if (lower == down) out.push_back(v);
    }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Up-set of u in two-sided order restricted to lengths <= max_len.
Bitset two_sided_up_set(const Group& g, Element u, std::uint32_t max_len) {
  Bitset seen(g.order());
  std::vector<Element> stack{u};
  seen.set(u.id);
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    if (g.length(x) >= max_len) continue;
    for (const Element v : weak_neighbors(g, x, OrderKind::TwoSided, false))
      if (!seen.test(v.id)) {
        seen.set(v.id);
        stack.push_back(v);
      }
  }
  return seen;
}

Bitset two_sided_down_set(const Group& g, Element w) {
  Bitset seen(g.order());
  std::vector<Element> stack{w};
  seen.set(w.id);
  while (!stack.empty()) {
    const Element x = stack.back();
    stack.pop_back();
    for (const Element v : weak_neighbors(g, x, OrderKind::TwoSided, true))
      if (!seen.test(v.id)) {
        seen.set(v.id);
        stack.push_back(v);
      }
  }
  return seen;
}

}  // namespace

std::vector<Element> lower_covers(const Group& g, Element w, OrderKind k) {
  if (k == OrderKind::Bruhat) return g.bruhat_lower_covers(w);
  return weak_neighbors(g, w, k, true);
}

std::vector<Element> upper_covers(const Group& g, Element w, OrderKind k) {
  if (k == OrderKind::Bruhat) return g.bruhat_upper_covers(w);
  return weak_neighbors(g, w, k, false);
}

std::vector<Element> lower_covers_both_sides(const Group& g, Element w) {
  const auto left = weak_neighbors(g, w, OrderKind::LeftWeak, true);
  const auto right = weak_neighbors(g, w, OrderKind::RightWeak, true);
  std::vector<Element> out;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::back_inserter(out));
  return out;
}

bool leq(const Group& g, Element u, Element w, OrderKind k) {
  if (u == w) return true;
  if (g.length(u) >= g.length(w)) return false;
  switch (k) {
    case OrderKind::Bruhat:
      return g.bruhat_leq(u, w);
    case OrderKind::RightWeak:
      return g.left_inversions(u).subset_of(g.left_inversions(w));
    case OrderKind::LeftWeak:
      return g.left_inversions(g.inverse(u))
          .subset_of(g.left_inversions(g.inverse(w)));
    case OrderKind::TwoSided: {
      return two_sided_up_set(g, u, g.length(w)).test(w.id);
    }
  }
  return false;
}

Interval interval(const Group& g, Element u, Element w, OrderKind k) {
  Interval out;
  out.bottom = u;
  out.top = w;
  out.order = k;
  if (!leq(g, u, w, k)) return out;
  switch (k) {
    case OrderKind::Bruhat: {
      const Bitset below = g.bruhat_down_set(w);
      below.for_each_set([&](std::size_t v) {
        const Element e{static_cast<std::uint32_t>(v)};
        if (leq(g, u, e, OrderKind::Bruhat)) out.members.push_back(e);
      });
      break;
    }
    case OrderKind::LeftWeak:
    case OrderKind::RightWeak: {
      for (std::uint32_t id = 0; id < g.order(); ++id) {
        const Element v{id};
        if (g.length(v) < g.length(u) || g.length(v) > g.length(w)) continue;
        if (leq(g, u, v, k) && leq(g, v, w, k)) out.members.push_back(v);
      }
      break;
    }
    case OrderKind::TwoSided: {
      Bitset up = two_sided_up_set(g, u, g.length(w));
      const Bitset down = two_sided_down_set(g, w);
      up &= down;
      up.for_each_set([&](std::size_t v) {
        out.members.push_back(Element{static_cast<std::uint32_t>(v)});
      });
      break;
    }
  }
  sort_by_length_then_id(g, out.members);
  return out;
}

bool lifting_check(const Group& g, Element u, Element w) {
  if (u == w || !leq(g, u, w, OrderKind::Bruhat))
    throw NotComparableError("lifting check requires u < w in Bruhat order");
  bool ok = true;
  const GenMask left = g.ascents(u, Side::Left) & g.descents(w, Side::Left);
  for_each_gen(left, [&](int s) {
    if (!g.bruhat_leq(g.left_mul(s, u), w)) ok = false;
    if (!g.bruhat_leq(u, g.left_mul(s, w))) ok = false;
  });
  const GenMask right = g.ascents(u, Side::Right) & g.descents(w, Side::Right);
  for_each_gen(right, [&](int s) {
    if (!g.bruhat_leq(g.right_mul(u, s), w)) ok = false;
    if (!g.bruhat_leq(u, g.right_mul(w, s))) ok = false;
  });
  return ok;
}

}  // namespace coxeter
