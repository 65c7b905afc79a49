#include "chainsurg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace chainsurg {

Mat Mat::identity(const Ring& ring, int n) {
  Mat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RingElem::one(ring);
  return m;
}

Mat Mat::from_blocks(const Ring& ring, const std::vector<std::vector<Mat>>& blocks) {
  const size_t brows = blocks.size();
  size_t bcols = brows ? blocks[0].size() : 0;
  std::vector<int> heights(brows, -1), widths(bcols, -1);
  for (size_t i = 0; i < brows; ++i) {
    if (blocks[i].size() != bcols) throw std::invalid_argument("ragged block grid");
    for (size_t j = 0; j < bcols; ++j) {
      const Mat& b = blocks[i][j];
      if (heights[i] < 0) heights[i] = b.rows();
      if (widths[j] < 0) widths[j] = b.cols();
      if (b.rows() != heights[i] || b.cols() != widths[j])
        throw std::invalid_argument("inconsistent block dimensions");
    }
  }
  int total_r = 0, total_c = 0;
  for (int h : heights) total_r += h;
  for (int w : widths) total_c += w;
  Mat out(ring, total_r, total_c);
  int roff = 0;
  for (size_t i = 0; i < brows; ++i) {
    int coff = 0;
    for (size_t j = 0; j < bcols; ++j) {
      const Mat& b = blocks[i][j];
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) out.at(roff + r, coff + c) = b.at(r, c);
      coff += widths[j];
    }
    roff += heights[i];
  }
  return out;
}

void Mat::check_same_shape(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_)
    throw std::invalid_argument("matrix shape/ring mismatch");
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_ || ring_ != o.ring_)
    throw std::invalid_argument("matrix product shape/ring mismatch");
  Mat r(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const RingElem& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const RingElem& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  check_same_shape(o);
  Mat r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_same_shape(o);
  Mat r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::operator-() const {
  Mat r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

Mat Mat::scaled(const RingElem& s) const {
  Mat r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_) return false;
  return a_ == o.a_;
}

bool Mat::is_zero() const {
  for (const RingElem& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

Mat Mat::star() const {
  Mat r(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).involute();
  return r;
}

Mat Mat::involute_entries() const {
  Mat r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].involute();
  return r;
}

Mat Mat::cols_slice(const std::vector<int>& idx) const {
  Mat r(ring_, rows_, int(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r.at(i, int(j)) = at(i, idx[j]);
  return r;
}

Mat Mat::rows_slice(const std::vector<int>& idx) const {
  Mat r(ring_, int(idx.size()), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.at(int(i), j) = at(idx[i], j);
  return r;
}

IntMat Mat::restrict_to_integers() const {
  if (ring_.is_rationals()) throw std::logic_error("integer restriction over Q");
  const int k = ring_.coeff_len();
  IntMat m(rows_ * k, cols_ * k);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const std::vector<Int>& c = at(i, j).coeffs();
      for (int p = 0; p < k; ++p)
        for (int t = 0; t < k; ++t) m.at(i * k + p, j * k + t) = c[size_t(((p - t) % k + k) % k)];
    }
  return m;
}

Mat Mat::from_integer_blocks(const Ring& ring, const IntMat& m, int rows, int cols) {
  const int k = ring.coeff_len();
  if (m.rows() != rows * k || m.cols() != cols * k)
    throw std::invalid_argument("integer block shape mismatch");
  Mat r(ring, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::vector<Int> c(static_cast<size_t>(k));
      for (int p = 0; p < k; ++p) c[size_t(p)] = m.at(i * k + p, j * k);
      r.at(i, j) = RingElem::from_coeffs(ring, std::move(c));
    }
  return r;
}

bool Mat::is_invertible() const {
  if (rows_ != cols_) return false;
  if (ring_.is_rationals()) {
    // exact Gaussian elimination
    Mat w = *this;
    for (int t = 0; t < rows_; ++t) {
      int p = -1;
      for (int i = t; i < rows_; ++i)
        if (!w.at(i, t).is_zero()) { p = i; break; }
      if (p < 0) return false;
      for (int j = 0; j < cols_; ++j) std::swap(w.at(t, j), w.at(p, j));
      RingElem inv = *w.at(t, t).inverse();
      for (int i = t + 1; i < rows_; ++i) {
        RingElem f = w.at(i, t) * inv;
        if (f.is_zero()) continue;
        for (int j = t; j < cols_; ++j) w.at(i, j) = w.at(i, j) - f * w.at(t, j);
      }
    }
    return true;
  }
  return is_unimodular(restrict_to_integers());
}

std::optional<Mat> solve_over_ring(const Mat& m, const Mat& b) {
  if (m.ring() != b.ring() || m.rows() != b.rows())
    throw std::invalid_argument("solve_over_ring shape mismatch");
  if (m.ring().is_rationals()) throw std::logic_error("solve_over_ring not implemented over Q");
  const int k = m.ring().coeff_len();
  // A ring vector is its integer coefficient vector, so M x = b restricts to
  // one integer system per ring column of b.
  IntMat rhs(b.rows() * k, b.cols());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      const std::vector<Int>& c = b.at(i, j).coeffs();
      for (int p = 0; p < k; ++p) rhs.at(i * k + p, j) = c[size_t(p)];
    }
  auto sol = solve_integer(m.restrict_to_integers(), rhs);
  if (!sol) return std::nullopt;
  Mat x(m.ring(), m.cols(), b.cols());
  for (int i = 0; i < m.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      std::vector<Int> c(static_cast<size_t>(k));
      for (int p = 0; p < k; ++p) c[size_t(p)] = sol->at(i * k + p, j);
      x.at(i, j) = RingElem::from_coeffs(m.ring(), std::move(c));
    }
  if (!(m * x == b)) throw std::logic_error("solve_over_ring internal inconsistency");
  return x;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

}  // namespace chainsurg
