#include "chainsurg/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace chainsurg {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMat::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMat product shape mismatch");
  IntMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Int& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat sum shape mismatch");
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMat diff shape mismatch");
  IntMat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMat IntMat::cols_slice(const std::vector<int>& idx) const {
  IntMat r(rows_, int(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r.at(i, int(j)) = at(i, idx[j]);
  return r;
}

IntMat IntMat::rows_slice(const std::vector<int>& idx) const {
  IntMat r(int(idx.size()), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.at(int(i), j) = at(idx[i], j);
  return r;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Elementary operations applied to the work matrix and the transforms.
// U tracks row ops (with Uinv receiving the inverse op on the other side),
// V tracks column ops.
struct SmithWork {
  IntMat a, u, uinv, v, vinv;

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < uinv.rows(); ++r) std::swap(uinv.at(r, i), uinv.at(r, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    for (int c = 0; c < vinv.cols(); ++c) std::swap(vinv.at(i, c), vinv.at(j, c));
  }
  // row i -= q * row j
  void add_row(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
    for (int r = 0; r < uinv.rows(); ++r) uinv.at(r, j) += q * uinv.at(r, i);
  }
  // col i -= q * col j
  void add_col(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
    for (int r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
    for (int c = 0; c < vinv.cols(); ++c) vinv.at(j, c) += q * vinv.at(i, c);
  }
  void negate_row(int i) {
    for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (int c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < uinv.rows(); ++r) uinv.at(r, i) = -uinv.at(r, i);
  }
};

}  // namespace

SmithForm smith_form(const IntMat& a0) {
  const int m = a0.rows(), n = a0.cols();
  SmithWork w{a0, IntMat::identity(m), IntMat::identity(m), IntMat::identity(n), IntMat::identity(n)};

  const int steps = std::min(m, n);
  int t = 0;
  for (; t < steps; ++t) {
    // full pivoting on the entry of least absolute value
    int pi = -1, pj = -1;
    Int best;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        const Int& x = w.a.at(i, j);
        if (x == 0) continue;
        Int ax = abs_int(x);
        if (pi < 0 || ax < best) {
          pi = i;
          pj = j;
          best = ax;
        }
      }
    if (pi < 0) break;  // submatrix is zero
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    bool again = true;
    while (again) {
      again = false;
      // clear column t below the pivot
      for (int i = t + 1; i < m; ++i) {
        if (w.a.at(i, t) == 0) continue;
        Int q = w.a.at(i, t) / w.a.at(t, t);
        w.add_row(i, t, q);
        if (w.a.at(i, t) != 0) {
          w.swap_rows(t, i);  // strictly smaller remainder becomes the pivot
          again = true;
        }
      }
      if (again) continue;
      // clear row t
      for (int j = t + 1; j < n; ++j) {
        if (w.a.at(t, j) == 0) continue;
        Int q = w.a.at(t, j) / w.a.at(t, t);
        w.add_col(j, t, q);
        if (w.a.at(t, j) != 0) {
          w.swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // enforce the divisibility chain
      for (int i = t + 1; i < m && !again; ++i)
        for (int j = t + 1; j < n && !again; ++j)
          if (w.a.at(i, j) % w.a.at(t, t) != 0) {
            w.add_row(t, i, Int(-1));  // row t += row i
            again = true;
          }
    }
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }

  SmithForm out;
  out.rank = t;
  out.divisors.assign(size_t(steps), Int(0));
  for (int i = 0; i < t; ++i) out.divisors[size_t(i)] = w.a.at(i, i);
  out.U = std::move(w.u);
  out.Uinv = std::move(w.uinv);
  out.V = std::move(w.v);
  out.Vinv = std::move(w.vinv);
  return out;
}

std::optional<IntMat> solve_integer(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_integer shape mismatch");
  SmithForm s = smith_form(a);
  IntMat ub = s.U * b;
  IntMat y(a.cols(), b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    for (int i = 0; i < a.rows(); ++i) {
      const Int& rhs = ub.at(i, c);
      if (i < s.rank) {
        if (rhs % s.divisors[size_t(i)] != 0) return std::nullopt;
        if (i < a.cols()) y.at(i, c) = rhs / s.divisors[size_t(i)];
      } else if (rhs != 0) {
        return std::nullopt;
      }
    }
  }
  return s.V * y;
}

IntMat integer_kernel(const IntMat& a) {
  SmithForm s = smith_form(a);
  std::vector<int> idx;
  for (int j = s.rank; j < a.cols(); ++j) idx.push_back(j);
  return s.V.cols_slice(idx);
}

int rational_rank(const IntMat& a) { return smith_form(a).rank; }

bool is_unimodular(const IntMat& a) {
  if (a.rows() != a.cols()) return false;
  SmithForm s = smith_form(a);
  if (s.rank != a.rows()) return false;
  for (int i = 0; i < s.rank; ++i)
    if (s.divisors[size_t(i)] != 1) return false;
  return true;
}

}  // namespace chainsurg
