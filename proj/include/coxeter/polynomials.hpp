#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxeter/bigint.hpp"
#include "coxeter/group.hpp"

namespace coxeter {

// Multivariate polynomial with exact integer coefficients over named
// variables. Terms are kept in graded lex order on exponent vectors; zero
// coefficients are never stored.
class MultiPoly {
 public:
  struct GradedLex {
    bool operator()(const std::vector<int>& a,
                    const std::vector<int>& b) const;
  };
  using TermMap = std::map<std::vector<int>, BigInt, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<int> exps, const BigInt& coeff);
  BigInt coefficient(const std::vector<int>& exps) const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  BigInt eval(const std::vector<BigInt>& point) const;
  BigInt eval(std::initializer_list<std::int64_t> point) const;

  // Univariate helpers.
  int degree() const;
  bool palindromic() const;   // coeff(k) == coeff(deg - k) for all k
  Rational average_at_one() const;  // P'(1) / P(1)

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

struct PoincareResult {
  MultiPoly poly;  // in q
  Rational average;
  bool palindromic = false;
};

// Length generating function of [e, w].
PoincareResult poincare(const Group& g, Element w);

// Four-variable Eulerian polynomial in t1..t4 with exponents
// (d_L1, d_L2, d_R2, d_R1) per element.
MultiPoly eulerian4(const Group& g);

// Specializations by exponent arithmetic on the four-variable polynomial.
MultiPoly classical_eulerian(const MultiPoly& a4);    // t: (t,t,1,1)
MultiPoly two_sided_eulerian(const MultiPoly& a4);    // s,t: (s,s,t,t)
MultiPoly descent_number_gf(const MultiPoly& a4);     // t^{d(w)}
MultiPoly total_descent_gf(const MultiPoly& a4);      // t^{d~(w)}

// Left/coleft/right/coright/central projections of one element, with the
// associated lengths. Factorization identities are checked on construction.
struct ProjectionData {
  Element left, coleft, right, coright, central;
  int len_left = 0, len_coleft = 0;
  int len_right = 0, len_coright = 0;
  int len_central = 0, len_side = 0;
};
ProjectionData projections(const Group& g, Element w);

enum class DirectionalKind { Left, Right, Central };

// P^L, P^R, P^C in q1, q2 over the lower interval of w.
MultiPoly directional_poincare(const Group& g, Element w, DirectionalKind k);

struct InOutResult {
  MultiPoly in_out;  // q1^{in_w(v)} q2^{out_w(v)}
  MultiPoly out;     // out-specialization, in q
  BigInt out_at_minus_one;
};
InOutResult inout_poincare(const Group& g, Element w);

}  // namespace coxeter
