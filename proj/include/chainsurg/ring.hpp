#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainsurg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coefficient rings: Z, Q, and the group ring Z[Z/k] with the inversion
// involution g -> g^{-1}. All three are commutative.
class Ring {
 public:
  enum class Kind { Integers, Rationals, GroupRing };

  Ring() : kind_(Kind::Integers), order_(1) {}

  static Ring integers() { return Ring(Kind::Integers, 1); }
  static Ring rationals() { return Ring(Kind::Rationals, 1); }
  static Ring cyclic(int k) {
    if (k < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    return Ring(Kind::GroupRing, k);
  }

  Kind kind() const { return kind_; }
  int order() const { return order_; }
  bool is_integers() const { return kind_ == Kind::Integers; }
  bool is_rationals() const { return kind_ == Kind::Rationals; }
  bool is_group_ring() const { return kind_ == Kind::GroupRing; }
  // Group-ring elements are stored as length-k coefficient vectors.
  int coeff_len() const { return kind_ == Kind::GroupRing ? order_ : 1; }

  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && order_ == o.order_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  std::string name() const;

 private:
  Ring(Kind k, int order) : kind_(k), order_(order) {}
  Kind kind_;
  int order_;
};

// An exact element of one of the supported rings.  Integers and group-ring
// coefficients are arbitrary-precision; rationals are kept reduced.
class RingElem {
 public:
  RingElem() : ring_(Ring::integers()), c_(1, 0) {}
  explicit RingElem(const Ring& ring);

  static RingElem zero(const Ring& ring) { return RingElem(ring); }
  static RingElem one(const Ring& ring);
  static RingElem from_int(const Ring& ring, const Int& n);
  static RingElem rational(const Rat& q);
  // g^power in Z[Z/k], scaled by coeff.
  static RingElem group_elem(const Ring& ring, int power, const Int& coeff = 1);
  static RingElem from_coeffs(const Ring& ring, std::vector<Int> coeffs);

  const Ring& ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const;
  std::optional<RingElem> inverse() const;

  RingElem operator+(const RingElem& o) const;
  RingElem operator-(const RingElem& o) const;
  RingElem operator-() const;
  RingElem operator*(const RingElem& o) const;
  RingElem& operator+=(const RingElem& o) { return *this = *this + o; }
  bool operator==(const RingElem& o) const;
  bool operator!=(const RingElem& o) const { return !(*this == o); }

  // a -> abar: identity on Z and Q, g -> g^{-1} coefficientwise on Z[Z/k].
  RingElem involute() const;

  // Accessors for the underlying exact data.
  const Int& as_int() const;                     // Z only
  const Rat& as_rat() const;                     // Q only
  const std::vector<Int>& coeffs() const { return c_; }  // Z and Z[Z/k]

  std::string str() const;

 private:
  void check_same_ring(const RingElem& o) const;
  Ring ring_;
  std::vector<Int> c_;  // Z: size 1; Z[Z/k]: size k; unused for Q
  Rat q_;               // Q only
};

// The class of a ring element in the quotient group A / {a - (-1)^i abar}.
// Representatives are canonicalized so equality is a plain comparison.
class QuotientClass {
 public:
  QuotientClass() : parity_(0) {}
  QuotientClass(const RingElem& rep, int parity);

  int parity() const { return parity_; }
  const RingElem& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  QuotientClass operator+(const QuotientClass& o) const;
  QuotientClass operator-() const;
  bool operator==(const QuotientClass& o) const;
  bool operator!=(const QuotientClass& o) const { return !(*this == o); }

  std::string str() const { return rep_.str(); }

 private:
  RingElem rep_;  // canonical representative
  int parity_;    // 0 or 1
};

inline QuotientClass quotient_reduce(const RingElem& a, int parity) {
  return QuotientClass(a, ((parity % 2) + 2) % 2);
}

}  // namespace chainsurg
