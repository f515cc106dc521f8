#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coxeter {

// Symmetric Coxeter matrix: m(s,s) = 1, m(s,t) >= 2 off-diagonal.
// Entries 0 or -1 encode m = infinity (always rejected as non-finite).
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  CoxeterMatrix(int rank, std::vector<int> entries);

  int rank() const { return rank_; }
  int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * rank_ + j]; }
  bool is_infinite_bond(int i, int j) const { return at(i, j) <= 0; }

  // Throws NonSymmetricError / BadDiagonalError on malformed input.
  void check_well_formed() const;

  static CoxeterMatrix from_json_text(const std::string& text);
  static CoxeterMatrix from_json_file(const std::string& path);
  std::string to_json_text() const;

 private:
  int rank_ = 0;
  std::vector<int> entries_;
};

// One irreducible component of a finite-type diagram. `nodes` lists global
// generator indices in the component's canonical diagram order.
struct IrreducibleFactor {
  char family = 'A';        // A, B, D, E, F, H, I
  int rank = 0;             // number of nodes
  int dihedral_m = 0;       // bond label for family I
  std::vector<int> nodes;

  std::uint64_t order() const;
  std::string name() const;
};

struct FiniteType {
  std::vector<IrreducibleFactor> factors;

  std::uint64_t order() const;
  std::string name() const;  // e.g. "A1xA2", "e" for the rank-0 group
};

// Recognizes the diagram or throws NotFiniteTypeError naming the violating
// sub-diagram. Also runs check_well_formed.
FiniteType classify(const CoxeterMatrix& m);

// "A3", "B2", "D4", "E6".."E8", "F4", "H3", "H4", "I2(7)", products joined
// with "x" (e.g. "A1xA2"). "A0" denotes the rank-0 group.
CoxeterMatrix matrix_from_type_label(const std::string& label);

}  // namespace coxeter
