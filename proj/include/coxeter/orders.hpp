#pragma once

#include <string>
#include <vector>

#include "coxeter/group.hpp"

namespace coxeter {

enum class OrderKind { Bruhat, LeftWeak, RightWeak, TwoSided };

std::string order_name(OrderKind k);

// Elements u with u covered by w (lower) / covering w (upper) in the order.
std::vector<Element> lower_covers(const Group& g, Element w, OrderKind k);
std::vector<Element> upper_covers(const Group& g, Element w, OrderKind k);

// u covered by w in both left and right weak order simultaneously.
std::vector<Element> lower_covers_both_sides(const Group& g, Element w);

bool leq(const Group& g, Element u, Element w, OrderKind k);

struct Interval {
  Element bottom, top;
  OrderKind order = OrderKind::Bruhat;
  std::vector<Element> members;  // increasing length, then id; empty if u !<= w

  int length(const Group& g) const {
    return static_cast<int>(g.length(top)) - static_cast<int>(g.length(bottom));
  }
};

Interval interval(const Group& g, Element u, Element w, OrderKind k);

// Lifting Property oracle: requires u < w in Bruhat order (else
// NotComparableError). True iff su <= w and u <= sw for every left ascent s
// of u that is a left descent of w, together with the right-hand analogue.
bool lifting_check(const Group& g, Element u, Element w);

}  // namespace coxeter
