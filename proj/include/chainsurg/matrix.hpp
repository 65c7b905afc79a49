#pragma once

#include "chainsurg/ring.hpp"
#include "chainsurg/smith.hpp"

#include <vector>

namespace chainsurg {

// Dense matrix over a ring with involution.  Matrices act on column vectors,
// so an (r x c) matrix is a map A^c -> A^r.  Zero-sized matrices are legal
// and arise constantly as empty blocks.
class Mat {
 public:
  Mat() : ring_(Ring::integers()), rows_(0), cols_(0) {}
  Mat(const Ring& ring, int rows, int cols)
      : ring_(ring), rows_(rows), cols_(cols),
        a_(size_t(rows) * size_t(cols), RingElem::zero(ring)) {}

  static Mat identity(const Ring& ring, int n);
  static Mat zero(const Ring& ring, int rows, int cols) { return Mat(ring, rows, cols); }
  // Assemble from a grid of blocks; every row of blocks must agree on
  // heights, every column on widths (zero-sized blocks are fine).
  static Mat from_blocks(const Ring& ring, const std::vector<std::vector<Mat>>& blocks);

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_empty() const { return rows_ == 0 || cols_ == 0; }

  RingElem& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const RingElem& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const RingElem& s) const;
  Mat scaled_sign(int sign) const { return sign >= 0 ? *this : -*this; }
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  // Conjugate transpose: (M*)_{pq} = involute(M_{qp}).
  Mat star() const;
  // Plain entrywise involution (no transpose).
  Mat involute_entries() const;

  Mat cols_slice(const std::vector<int>& idx) const;
  Mat rows_slice(const std::vector<int>& idx) const;

  // Z and Z[Z/k] matrices viewed as integer matrices via restriction of
  // scalars (the k x k regular representation blocks).
  IntMat restrict_to_integers() const;
  // Inverse of the above for matrices known to be equivariant.
  static Mat from_integer_blocks(const Ring& ring, const IntMat& m, int rows, int cols);

  // Invertibility over the ring itself.
  bool is_invertible() const;

  std::string str() const;

 private:
  void check_same_shape(const Mat& o) const;
  Ring ring_;
  int rows_, cols_;
  std::vector<RingElem> a_;
};

// Solve M x = b over the ring (exact; Z and Z[Z/k] via integer restriction).
std::optional<Mat> solve_over_ring(const Mat& m, const Mat& b);

}  // namespace chainsurg
