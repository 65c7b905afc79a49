#include "chainsurg/complex.hpp"

#include <sstream>
#include <stdexcept>

namespace chainsurg {

int parity_sign(long long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

ChainComplex::ChainComplex(const Ring& ring, int lo, std::vector<int> ranks)
    : ring_(ring), lo_(lo), ranks_(std::move(ranks)) {
  for (int r : ranks_)
    if (r < 0) throw std::invalid_argument("negative rank");
  // trim zero ranks at both ends so windows are canonical
  while (!ranks_.empty() && ranks_.back() == 0) ranks_.pop_back();
  while (!ranks_.empty() && ranks_.front() == 0) {
    ranks_.erase(ranks_.begin());
    ++lo_;
  }
  if (ranks_.empty()) lo_ = 0;
}

ChainComplex ChainComplex::sphere_module(const Ring& ring, int degree, int rank) {
  return ChainComplex(ring, degree, {rank});
}

bool ChainComplex::is_zero_complex() const { return ranks_.empty(); }

int ChainComplex::rank(int r) const {
  if (r < lo_ || r > hi()) return 0;
  return ranks_[size_t(r - lo_)];
}

int ChainComplex::total_rank() const {
  int t = 0;
  for (int r : ranks_) t += r;
  return t;
}

const Mat& ChainComplex::diff(int r) const {
  auto it = d_.find(r);
  if (it != d_.end()) return it->second;
  auto z = dcache_.find(r);
  if (z != dcache_.end()) return z->second;
  return dcache_.emplace(r, Mat::zero(ring_, rank(r - 1), rank(r))).first->second;
}

void ChainComplex::set_diff(int r, Mat d) {
  if (d.rows() != rank(r - 1) || d.cols() != rank(r))
    throw std::invalid_argument("differential shape mismatch at degree " + std::to_string(r));
  if (d.ring() != ring_) throw std::invalid_argument("differential ring mismatch");
  if (d.is_empty() || d.is_zero()) {
    d_.erase(r);
    return;
  }
  d_[r] = std::move(d);
}

Report ChainComplex::validate() const {
  Report rep;
  for (const auto& [r, d] : d_) {
    if (d.rows() != rank(r - 1) || d.cols() != rank(r))
      rep.fail("differential shape mismatch at degree " + std::to_string(r));
  }
  for (int r = lo_; r <= hi() + 1; ++r) {
    if (rank(r) == 0 || rank(r - 2) == 0) continue;
    if (!(diff(r - 1) * diff(r)).is_zero())
      rep.fail("d*d != 0 at degree " + std::to_string(r));
  }
  return rep;
}

bool ChainComplex::operator==(const ChainComplex& o) const {
  if (ring_ != o.ring_ || lo_ != o.lo_ || ranks_ != o.ranks_) return false;
  for (int r = lo_; r <= hi() + 1; ++r)
    if (diff(r) != o.diff(r)) return false;
  return true;
}

std::string ChainComplex::summary() const {
  std::ostringstream os;
  os << ring_.name() << " complex, window [" << lo_ << ", " << hi() << "], ranks";
  for (int r : ranks_) os << " " << r;
  if (ranks_.empty()) os << " (zero)";
  return os.str();
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target)
    : source_(std::move(source)), target_(std::move(target)) {}

ChainMap ChainMap::identity(const ChainComplex& c) {
  ChainMap f(c, c);
  for (int r = c.lo(); r <= c.hi(); ++r)
    if (c.rank(r) > 0) f.set_comp(r, Mat::identity(c.ring(), c.rank(r)));
  return f;
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  return ChainMap(source, target);
}

const Mat& ChainMap::comp(int r) const {
  auto it = f_.find(r);
  if (it != f_.end()) return it->second;
  auto z = zcache_.find(r);
  if (z != zcache_.end()) return z->second;
  return zcache_.emplace(r, Mat::zero(source_.ring(), target_.rank(r), source_.rank(r))).first->second;
}

void ChainMap::set_comp(int r, Mat f) {
  if (f.rows() != target_.rank(r) || f.cols() != source_.rank(r))
    throw std::invalid_argument("chain map component shape mismatch at degree " + std::to_string(r));
  if (f.is_empty() || f.is_zero()) {
    f_.erase(r);
    return;
  }
  f_[r] = std::move(f);
}

bool ChainMap::is_chain_map() const { return validate().ok; }

Report ChainMap::validate() const {
  Report rep;
  int lo = std::min(source_.lo(), target_.lo());
  int hi = std::max(source_.hi(), target_.hi());
  for (int r = lo; r <= hi + 1; ++r) {
    Mat lhs = target_.diff(r) * comp(r);
    Mat rhs = comp(r - 1) * source_.diff(r);
    if (!(lhs == rhs)) rep.fail("not a chain map at degree " + std::to_string(r));
  }
  return rep;
}

ChainMap ChainMap::compose(const ChainMap& inner) const {
  if (!(inner.target_ == source_)) throw std::invalid_argument("composition mismatch");
  ChainMap out(inner.source_, target_);
  int lo = std::min(inner.source_.lo(), target_.lo());
  int hi = std::max(inner.source_.hi(), target_.hi());
  for (int r = lo; r <= hi; ++r)
    if (inner.source_.rank(r) > 0 && target_.rank(r) > 0)
      out.set_comp(r, comp(r) * inner.comp(r));
  return out;
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
  if (!(source_ == o.source_) || !(target_ == o.target_))
    throw std::invalid_argument("chain map sum mismatch");
  ChainMap out(source_, target_);
  for (int r = std::min(source_.lo(), target_.lo()); r <= std::max(source_.hi(), target_.hi()); ++r)
    if (source_.rank(r) > 0 && target_.rank(r) > 0) out.set_comp(r, comp(r) + o.comp(r));
  return out;
}

ChainMap ChainMap::operator-() const {
  ChainMap out(source_, target_);
  for (int r = std::min(source_.lo(), target_.lo()); r <= std::max(source_.hi(), target_.hi()); ++r)
    if (source_.rank(r) > 0 && target_.rank(r) > 0) out.set_comp(r, -comp(r));
  return out;
}

ChainHomotopy::ChainHomotopy(ChainComplex source, ChainComplex target)
    : source_(std::move(source)), target_(std::move(target)) {}

const Mat& ChainHomotopy::comp(int r) const {
  auto it = h_.find(r);
  if (it != h_.end()) return it->second;
  auto z = zcache_.find(r);
  if (z != zcache_.end()) return z->second;
  return zcache_.emplace(r, Mat::zero(source_.ring(), target_.rank(r + 1), source_.rank(r))).first->second;
}

void ChainHomotopy::set_comp(int r, Mat h) {
  if (h.rows() != target_.rank(r + 1) || h.cols() != source_.rank(r))
    throw std::invalid_argument("homotopy component shape mismatch at degree " + std::to_string(r));
  if (h.is_empty() || h.is_zero()) {
    h_.erase(r);
    return;
  }
  h_[r] = std::move(h);
}

bool ChainHomotopy::witnesses(const ChainMap& f, const ChainMap& g) const {
  int lo = std::min(source_.lo(), target_.lo());
  int hi = std::max(source_.hi(), target_.hi());
  for (int r = lo; r <= hi; ++r) {
    Mat lhs = target_.diff(r + 1) * comp(r) + comp(r - 1) * source_.diff(r);
    Mat rhs = f.comp(r) - g.comp(r);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ChainComplex dual_complex(const ChainComplex& c, int n) {
  int lo = n - c.hi(), hi_deg = n - c.lo();
  std::vector<int> ranks;
  for (int r = lo; r <= hi_deg; ++r) ranks.push_back(c.rank(n - r));
  ChainComplex out(c.ring(), lo, std::move(ranks));
  for (int r = out.lo(); r <= out.hi() + 1; ++r) {
    // (C^{n-*})_r = C^{n-r}, differential (-1)^r d^* : C^{n-r} -> C^{n-r+1}
    if (out.rank(r) == 0 || out.rank(r - 1) == 0) continue;
    Mat d = c.diff(n - r + 1).star().scaled_sign(parity_sign(r));
    out.set_diff(r, std::move(d));
  }
  return out;
}

ChainComplex mapping_cone_complex(const ChainMap& f) {
  const ChainComplex& c = f.source();
  const ChainComplex& d = f.target();
  int lo = std::min(d.lo(), c.lo() + 1);
  int hi = std::max(d.hi(), c.hi() + 1);
  std::vector<int> ranks;
  for (int r = lo; r <= hi; ++r) ranks.push_back(d.rank(r) + c.rank(r - 1));
  ChainComplex out(c.ring(), lo, std::move(ranks));
  for (int r = lo; r <= hi + 1; ++r) {
    if (out.rank(r) == 0 || out.rank(r - 1) == 0) continue;
    Mat block = Mat::from_blocks(
        c.ring(), {{d.diff(r), f.comp(r - 1).scaled_sign(parity_sign(r))},
                   {Mat::zero(c.ring(), c.rank(r - 2), d.rank(r)), c.diff(r - 1)}});
    out.set_diff(r, std::move(block));
  }
  return out;
}

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("direct sum ring mismatch");
  if (a.is_zero_complex()) return b;
  if (b.is_zero_complex()) return a;
  int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
  std::vector<int> ranks;
  for (int r = lo; r <= hi; ++r) ranks.push_back(a.rank(r) + b.rank(r));
  ChainComplex out(a.ring(), lo, std::move(ranks));
  for (int r = lo; r <= hi + 1; ++r) {
    if (out.rank(r) == 0 || out.rank(r - 1) == 0) continue;
    Mat block = Mat::from_blocks(
        a.ring(), {{a.diff(r), Mat::zero(a.ring(), a.rank(r - 1), b.rank(r))},
                   {Mat::zero(a.ring(), b.rank(r - 1), a.rank(r)), b.diff(r)}});
    out.set_diff(r, std::move(block));
  }
  return out;
}

ChainMap inclusion_left(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex s = direct_sum(a, b);
  ChainMap f(a, s);
  for (int r = a.lo(); r <= a.hi(); ++r) {
    if (a.rank(r) == 0) continue;
    Mat m = Mat::zero(a.ring(), s.rank(r), a.rank(r));
    for (int i = 0; i < a.rank(r); ++i) m.at(i, i) = RingElem::one(a.ring());
    f.set_comp(r, std::move(m));
  }
  return f;
}

ChainMap inclusion_right(const ChainComplex& a, const ChainComplex& b) {
  ChainComplex s = direct_sum(a, b);
  ChainMap f(b, s);
  for (int r = b.lo(); r <= b.hi(); ++r) {
    if (b.rank(r) == 0) continue;
    Mat m = Mat::zero(b.ring(), s.rank(r), b.rank(r));
    for (int i = 0; i < b.rank(r); ++i) m.at(a.rank(r) + i, i) = RingElem::one(b.ring());
    f.set_comp(r, std::move(m));
  }
  return f;
}

ChainComplex shift_complex(const ChainComplex& c, int shift) {
  std::vector<int> ranks;
  for (int r = c.lo(); r <= c.hi(); ++r) ranks.push_back(c.rank(r));
  ChainComplex out(c.ring(), c.lo() + shift, std::move(ranks));
  for (int r = c.lo(); r <= c.hi() + 1; ++r)
    if (c.rank(r) > 0 && c.rank(r - 1) > 0) out.set_diff(r + shift, c.diff(r));
  return out;
}

ChainComplex restrict_scalars(const ChainComplex& c) {
  if (!c.ring().is_group_ring()) return c;
  const int k = c.ring().order();
  Ring z = Ring::integers();
  std::vector<int> ranks;
  for (int r = c.lo(); r <= c.hi(); ++r) ranks.push_back(c.rank(r) * k);
  ChainComplex out(z, c.lo(), std::move(ranks));
  for (int r = c.lo(); r <= c.hi() + 1; ++r) {
    if (c.rank(r) == 0 || c.rank(r - 1) == 0) continue;
    IntMat m = c.diff(r).restrict_to_integers();
    Mat d(z, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != 0) d.at(i, j) = RingElem::from_int(z, m.at(i, j));
    out.set_diff(r, std::move(d));
  }
  return out;
}

}  // namespace chainsurg
