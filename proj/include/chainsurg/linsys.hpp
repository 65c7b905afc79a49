#pragma once

#include "chainsurg/matrix.hpp"

#include <optional>
#include <vector>

namespace chainsurg {

// Sparse linear system over Z or Z[Z/k] with ring-element unknowns.
// Equations are accumulated as coefficient terms; solving restricts scalars
// (k integer unknowns per ring unknown, k integer equations per ring
// equation via the regular representation) and runs the Smith machinery.
class RingLinearSystem {
 public:
  explicit RingLinearSystem(const Ring& ring);

  int add_unknowns(int count);

  int new_equation(const RingElem& rhs);
  void add_term(int eq, int var, const RingElem& coeff);

  int unknown_count() const { return n_vars_; }
  int equation_count() const { return int(rhs_.size()); }

  // A particular solution, if any.
  std::optional<std::vector<RingElem>> solve() const;
  // Z-basis of the homogeneous solution lattice (each entry is a full
  // assignment of the unknowns).
  std::vector<std::vector<RingElem>> kernel_basis() const;

 private:
  IntMat assemble_matrix() const;
  Ring ring_;
  int n_vars_ = 0;
  struct Term {
    int eq, var;
    RingElem coeff;
  };
  std::vector<Term> terms_;
  std::vector<RingElem> rhs_;
};

}  // namespace chainsurg
