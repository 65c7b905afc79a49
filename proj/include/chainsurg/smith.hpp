#pragma once

#include "chainsurg/ring.hpp"

#include <optional>
#include <vector>

namespace chainsurg {

// Dense integer matrix used by the exact linear-algebra kernel.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  IntMat transpose() const;
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  IntMat cols_slice(const std::vector<int>& idx) const;
  IntMat rows_slice(const std::vector<int>& idx) const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// U * A * V = D with U, V unimodular and D diagonal with a divisibility
// chain d_0 | d_1 | ... (nonnegative, zeros trailing).
struct SmithForm {
  std::vector<Int> divisors;  // length min(rows, cols)
  int rank = 0;               // number of nonzero divisors
  IntMat U, Uinv, V, Vinv;
};

SmithForm smith_form(const IntMat& a);

// Solve A x = b over the integers (b may have several columns).
std::optional<IntMat> solve_integer(const IntMat& a, const IntMat& b);

// Columns form a basis of ker(A) as a direct summand of Z^cols.
IntMat integer_kernel(const IntMat& a);

// Rank over Q.
int rational_rank(const IntMat& a);

bool is_unimodular(const IntMat& a);

}  // namespace chainsurg
