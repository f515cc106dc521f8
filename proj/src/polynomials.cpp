#include "coxeter/polynomials.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coxeter/bruhat_graph.hpp"
#include "coxeter/cosets.hpp"
#include "coxeter/errors.hpp"

namespace coxeter {

bool MultiPoly::GradedLex::operator()(const std::vector<int>& a,
                                      const std::vector<int>& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

void MultiPoly::add_term(std::vector<int> exps, const BigInt& coeff) {
  if (exps.size() != vars_.size())
    throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exps), coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

BigInt MultiPoly::coefficient(const std::vector<int>& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt{} : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

BigInt MultiPoly::eval(const std::vector<BigInt>& point) const {
  if (point.size() != vars_.size())
    throw std::invalid_argument("MultiPoly::eval: arity mismatch");
  BigInt total;
  for (const auto& [e, c] : terms_) {
    BigInt term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      term *= BigInt::pow(point[i], static_cast<unsigned>(e[i]));
    total += term;
  }
  return total;
}

BigInt MultiPoly::eval(std::initializer_list<std::int64_t> point) const {
  std::vector<BigInt> p;
  for (const auto v : point) p.emplace_back(v);
  return eval(p);
}

int MultiPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::palindromic() const {
  if (vars_.size() != 1)
    throw std::invalid_argument("palindromic: univariate polynomials only");
  const int d = degree();
  for (int k = 0; k <= d; ++k)
    if (coefficient({k}) != coefficient({d - k})) return false;
  return true;
}

Rational MultiPoly::average_at_one() const {
  if (vars_.size() != 1)
    throw std::invalid_argument("average_at_one: univariate polynomials only");
  BigInt value, derivative;
  for (const auto& [e, c] : terms_) {
    value += c;
    derivative += c * BigInt{e[0]};
  }
  return Rational(derivative.to_int64(), value.to_int64());
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const std::string cs = c.to_string();
    if (mono.empty())
      out += cs;
    else if (cs == "1")
      out += mono;
    else if (cs == "-1")
      out += "-" + mono;
    else
      out += cs + "*" + mono;
  }
  return out;
}

PoincareResult poincare(const Group& g, Element w) {
  PoincareResult r;
  r.poly = MultiPoly({"q"});
  g.bruhat_down_set(w).for_each_set([&](std::size_t v) {
    r.poly.add_term({static_cast<int>(g.length(Element{
                        static_cast<std::uint32_t>(v)}))},
                    BigInt{1});
  });
  r.average = r.poly.average_at_one();
  r.palindromic = r.poly.palindromic();
  return r;
}

MultiPoly eulerian4(const Group& g) {
  MultiPoly a({"t1", "t2", "t3", "t4"});
  for (std::uint32_t id = 0; id < g.order(); ++id) {
    const auto d = g.descent_data(Element{id});
    a.add_term({gen_count(d.d_left_small), gen_count(d.d_left_large),
                gen_count(d.d_right_large), gen_count(d.d_right_small)},
               BigInt{1});
  }
  return a;
}

namespace {

MultiPoly remap(const MultiPoly& a4, std::vector<std::string> vars,
                std::vector<int> (*f)(const std::vector<int>&)) {
  MultiPoly out(std::move(vars));
  for (const auto& [e, c] : a4.terms()) out.add_term(f(e), c);
  return out;
}

}  // namespace

MultiPoly classical_eulerian(const MultiPoly& a4) {
  return remap(a4, {"t"}, [](const std::vector<int>& e) {
    return std::vector<int>{e[0] + e[1]};
  });
}

MultiPoly two_sided_eulerian(const MultiPoly& a4) {
  return remap(a4, {"s", "t"}, [](const std::vector<int>& e) {
    return std::vector<int>{e[0] + e[1], e[2] + e[3]};
  });
}

MultiPoly descent_number_gf(const MultiPoly& a4) {
  return remap(a4, {"t"}, [](const std::vector<int>& e) {
    // e[1] = d_L2 and e[2] = d_R2 agree termwise, so the half-integer
    // substitution t2 = t3 = sqrt(t) lands on integer exponents.
    if ((e[1] + e[2]) % 2 != 0)
      throw std::logic_error("descent gf: odd large-descent exponent sum");
    return std::vector<int>{e[0] + e[3] + (e[1] + e[2]) / 2};
  });
}

MultiPoly total_descent_gf(const MultiPoly& a4) {
  return remap(a4, {"t"}, [](const std::vector<int>& e) {
    return std::vector<int>{e[0] + e[1] + e[2] + e[3]};
  });
}

ProjectionData projections(const Group& g, Element w) {
  ProjectionData p;
  const GenMask dl = g.descents(w, Side::Left);
  const GenMask dr = g.descents(w, Side::Right);
  p.left = g.longest_in(dl);
  p.right = g.longest_in(dr);
  p.coleft = g.multiply(g.inverse(p.left), w);
  p.coright = g.multiply(w, g.inverse(p.right));
  p.central = double_coset(g, dl, w, dr).min_rep;
  p.len_left = static_cast<int>(g.length(p.left));
  p.len_coleft = static_cast<int>(g.length(p.coleft));
  p.len_right = static_cast<int>(g.length(p.right));
  p.len_coright = static_cast<int>(g.length(p.coright));
  p.len_central = static_cast<int>(g.length(p.central));
  p.len_side = static_cast<int>(g.length(w)) - p.len_central;
  if (g.multiply(p.left, p.coleft) != w ||
      p.len_left + p.len_coleft != static_cast<int>(g.length(w)))
    throw Error("left projection factorization failed at " + g.display(w));
  if (g.multiply(p.coright, p.right) != w ||
      p.len_coright + p.len_right != static_cast<int>(g.length(w)))
    throw Error("right projection factorization failed at " + g.display(w));
  return p;
}

MultiPoly directional_poincare(const Group& g, Element w, DirectionalKind k) {
  MultiPoly out({"q1", "q2"});
  g.bruhat_down_set(w).for_each_set([&](std::size_t vid) {
    const Element v{static_cast<std::uint32_t>(vid)};
    const auto p = projections(g, v);
    switch (k) {
      case DirectionalKind::Left:
        out.add_term({p.len_left, p.len_coleft}, BigInt{1});
        break;
      case DirectionalKind::Right:
        out.add_term({p.len_coright, p.len_right}, BigInt{1});
        break;
      case DirectionalKind::Central:
        out.add_term({p.len_central, p.len_side}, BigInt{1});
        break;
    }
  });
  return out;
}

InOutResult inout_poincare(const Group& g, Element w) {
  InOutResult r;
  r.in_out = MultiPoly({"q1", "q2"});
  std::vector<Element> vertices;
  g.bruhat_down_set(w).for_each_set([&](std::size_t v) {
    vertices.push_back(Element{static_cast<std::uint32_t>(v)});
  });
  const auto graph = bruhat_graph(g, vertices);
  const auto prof = degree_profile(graph);
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    r.in_out.add_term({prof.in[i], prof.out[i]}, BigInt{1});
  r.out = MultiPoly({"q"});
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    r.out.add_term({prof.out[i]}, BigInt{1});
  r.out_at_minus_one = r.out.eval({std::int64_t{-1}});
  return r;
}

}  // namespace coxeter
