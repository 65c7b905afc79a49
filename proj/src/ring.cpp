#include "chainsurg/ring.hpp"
#include "chainsurg/smith.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace chainsurg {

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::GroupRing: return "Z[Z/" + std::to_string(order_) + "]";
  }
  return "?";
}

RingElem::RingElem(const Ring& ring) : ring_(ring) {
  if (!ring.is_rationals()) c_.assign(size_t(ring.coeff_len()), 0);
}

RingElem RingElem::one(const Ring& ring) {
  RingElem e(ring);
  if (ring.is_rationals())
    e.q_ = 1;
  else
    e.c_[0] = 1;
  return e;
}

RingElem RingElem::from_int(const Ring& ring, const Int& n) {
  RingElem e(ring);
  if (ring.is_rationals())
    e.q_ = Rat(n);
  else
    e.c_[0] = n;
  return e;
}

RingElem RingElem::rational(const Rat& q) {
  RingElem e(Ring::rationals());
  e.q_ = q;
  return e;
}

RingElem RingElem::group_elem(const Ring& ring, int power, const Int& coeff) {
  if (!ring.is_group_ring()) throw std::invalid_argument("group_elem needs a group ring");
  RingElem e(ring);
  int k = ring.order();
  e.c_[size_t(((power % k) + k) % k)] = coeff;
  return e;
}

RingElem RingElem::from_coeffs(const Ring& ring, std::vector<Int> coeffs) {
  if (ring.is_rationals()) throw std::invalid_argument("from_coeffs not valid over Q");
  if (int(coeffs.size()) != ring.coeff_len())
    throw std::invalid_argument("coefficient vector has wrong length");
  RingElem e(ring);
  e.c_ = std::move(coeffs);
  return e;
}

void RingElem::check_same_ring(const RingElem& o) const {
  if (ring_ != o.ring_) throw std::invalid_argument("ring mismatch");
}

bool RingElem::is_zero() const {
  if (ring_.is_rationals()) return q_ == 0;
  for (const Int& x : c_)
    if (x != 0) return false;
  return true;
}

bool RingElem::is_one() const {
  if (ring_.is_rationals()) return q_ == 1;
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

RingElem RingElem::operator+(const RingElem& o) const {
  check_same_ring(o);
  RingElem r(ring_);
  if (ring_.is_rationals()) {
    r.q_ = q_ + o.q_;
  } else {
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  }
  return r;
}

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator-() const {
  RingElem r(ring_);
  if (ring_.is_rationals()) {
    r.q_ = -q_;
  } else {
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  }
  return r;
}

RingElem RingElem::operator*(const RingElem& o) const {
  check_same_ring(o);
  RingElem r(ring_);
  if (ring_.is_rationals()) {
    r.q_ = q_ * o.q_;
  } else if (ring_.is_integers()) {
    r.c_[0] = c_[0] * o.c_[0];
  } else {
    const int k = ring_.order();
    for (int i = 0; i < k; ++i) {
      if (c_[size_t(i)] == 0) continue;
      for (int j = 0; j < k; ++j) {
        if (o.c_[size_t(j)] == 0) continue;
        r.c_[size_t((i + j) % k)] += c_[size_t(i)] * o.c_[size_t(j)];
      }
    }
  }
  return r;
}

bool RingElem::operator==(const RingElem& o) const {
  if (ring_ != o.ring_) return false;
  if (ring_.is_rationals()) return q_ == o.q_;
  return c_ == o.c_;
}

RingElem RingElem::involute() const {
  if (!ring_.is_group_ring()) return *this;
  RingElem r(ring_);
  const int k = ring_.order();
  for (int i = 0; i < k; ++i) r.c_[size_t((k - i) % k)] = c_[size_t(i)];
  return r;
}

namespace {

// k x k integer matrix of multiplication by x on Z[Z/k] in the group basis.
IntMat regular_rep(const RingElem& x) {
  const int k = x.ring().coeff_len();
  IntMat m(k, k);
  for (int p = 0; p < k; ++p)
    for (int t = 0; t < k; ++t) m.at(p, t) = x.coeffs()[size_t(((p - t) % k + k) % k)];
  return m;
}

}  // namespace

bool RingElem::is_unit() const {
  if (ring_.is_rationals()) return q_ != 0;
  if (ring_.is_integers()) return c_[0] == 1 || c_[0] == -1;
  return is_unimodular(regular_rep(*this));
}

std::optional<RingElem> RingElem::inverse() const {
  if (ring_.is_rationals()) {
    if (q_ == 0) return std::nullopt;
    RingElem r(ring_);
    r.q_ = 1 / q_;
    return r;
  }
  if (ring_.is_integers()) {
    if (c_[0] != 1 && c_[0] != -1) return std::nullopt;
    return *this;
  }
  const int k = ring_.order();
  IntMat m = regular_rep(*this);
  if (!is_unimodular(m)) return std::nullopt;
  IntMat e0(k, 1);
  e0.at(0, 0) = 1;
  auto sol = solve_integer(m, e0);
  if (!sol) return std::nullopt;
  std::vector<Int> coeffs(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) coeffs[size_t(i)] = sol->at(i, 0);
  return from_coeffs(ring_, std::move(coeffs));
}

const Int& RingElem::as_int() const {
  if (!ring_.is_integers()) throw std::logic_error("as_int on non-integer element");
  return c_[0];
}

const Rat& RingElem::as_rat() const {
  if (!ring_.is_rationals()) throw std::logic_error("as_rat on non-rational element");
  return q_;
}

std::string RingElem::str() const {
  std::ostringstream os;
  if (ring_.is_rationals()) {
    os << q_;
    return os.str();
  }
  if (ring_.is_integers()) {
    os << c_[0];
    return os.str();
  }
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? "+" : "");
    if (i == 0) {
      os << c_[i];
    } else {
      if (c_[i] == -1)
        os << "-";
      else if (c_[i] != 1)
        os << c_[i] << "*";
      os << "g";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Canonical representatives for A / {a - (-1)^i abar} over Z[Z/k]:
// reduce the coefficient vector modulo the subgroup lattice via its
// Smith form, computed once per (k, parity).
struct QuotientReducer {
  SmithForm s;
  int k = 0;

  std::vector<Int> reduce(const std::vector<Int>& x) const {
    IntMat xv(k, 1);
    for (int i = 0; i < k; ++i) xv.at(i, 0) = x[size_t(i)];
    IntMat y = s.U * xv;
    for (int i = 0; i < s.rank; ++i) {
      const Int& d = s.divisors[size_t(i)];
      Int r = y.at(i, 0) % d;
      if (r < 0) r += d;
      y.at(i, 0) = r;
    }
    IntMat rep = s.Uinv * y;
    std::vector<Int> out(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) out[size_t(i)] = rep.at(i, 0);
    return out;
  }
};

const QuotientReducer& reducer_for(int k, int parity) {
  static std::map<std::pair<int, int>, QuotientReducer> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, parity);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  // columns: e_j - (-1)^i e_{(k-j) mod k}
  IntMat b(k, k);
  for (int j = 0; j < k; ++j) {
    b.at(j, j) += 1;
    b.at((k - j) % k, j) += (parity == 0 ? -1 : 1);
  }
  QuotientReducer red;
  red.k = k;
  red.s = smith_form(b);
  return cache.emplace(key, std::move(red)).first->second;
}

}  // namespace

QuotientClass::QuotientClass(const RingElem& rep, int parity) : rep_(rep), parity_(parity % 2) {
  const Ring& ring = rep.ring();
  if (ring.is_integers()) {
    if (parity_ == 1) {
      // {a + abar} = 2Z, so the class lives in Z/2
      Int v = rep.as_int() % 2;
      if (v < 0) v += 2;
      rep_ = RingElem::from_int(ring, v);
    }
    return;
  }
  if (ring.is_rationals()) {
    if (parity_ == 1) rep_ = RingElem::zero(ring);  // 2 is invertible
    return;
  }
  rep_ = RingElem::from_coeffs(ring, reducer_for(ring.order(), parity_).reduce(rep.coeffs()));
}

QuotientClass QuotientClass::operator+(const QuotientClass& o) const {
  if (parity_ != o.parity_) throw std::invalid_argument("quotient parity mismatch");
  return QuotientClass(rep_ + o.rep_, parity_);
}

QuotientClass QuotientClass::operator-() const { return QuotientClass(-rep_, parity_); }

bool QuotientClass::operator==(const QuotientClass& o) const {
  return parity_ == o.parity_ && rep_ == o.rep_;
}

}  // namespace chainsurg
