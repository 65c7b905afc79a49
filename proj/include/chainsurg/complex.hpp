#pragma once

#include "chainsurg/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace chainsurg {

struct Report {
  bool ok = true;
  std::vector<std::string> issues;
  void fail(const std::string& msg) {
    ok = false;
    issues.push_back(msg);
  }
  void merge(const Report& o) {
    if (!o.ok) ok = false;
    issues.insert(issues.end(), o.issues.begin(), o.issues.end());
  }
};

// Bounded complex of f.g. free modules.  rank(r) is zero outside the
// window; the differential d_r : C_r -> C_{r-1} is stored for every r with
// a nonzero source or target.
class ChainComplex {
 public:
  ChainComplex() : ring_(Ring::integers()), lo_(0) {}
  ChainComplex(const Ring& ring, int lo, std::vector<int> ranks);

  static ChainComplex zero(const Ring& ring) { return ChainComplex(ring, 0, {}); }
  // Rank one concentrated in a single degree.
  static ChainComplex sphere_module(const Ring& ring, int degree, int rank = 1);

  const Ring& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + int(ranks_.size()) - 1; }
  bool is_zero_complex() const;
  int rank(int r) const;
  int total_rank() const;

  const Mat& diff(int r) const;      // d_r: C_r -> C_{r-1} (zero-shaped if absent)
  void set_diff(int r, Mat d);

  Report validate() const;

  bool operator==(const ChainComplex& o) const;

  std::string summary() const;

 private:
  mutable std::map<int, Mat> dcache_;  // lazily built zero differentials
  Ring ring_;
  int lo_;
  std::vector<int> ranks_;
  std::map<int, Mat> d_;
};

// Degreewise map of complexes.
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex source, ChainComplex target);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }

  const Mat& comp(int r) const;  // f_r: source_r -> target_r
  void set_comp(int r, Mat f);

  bool is_chain_map() const;     // d_target f = f d_source everywhere
  Report validate() const;

  ChainMap compose(const ChainMap& inner) const;  // this after inner
  ChainMap operator+(const ChainMap& o) const;
  ChainMap operator-() const;

  // Dual f^*: target^{n-*} -> source^{n-*} has the same components
  // conjugate-transposed; exposed at the matrix level via Mat::star().

 private:
  ChainComplex source_, target_;
  std::map<int, Mat> f_;
  mutable std::map<int, Mat> zcache_;
};

// h_r : C_r -> D_{r+1} with d h + h d = f - g.
class ChainHomotopy {
 public:
  ChainHomotopy() = default;
  ChainHomotopy(ChainComplex source, ChainComplex target);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  const Mat& comp(int r) const;
  void set_comp(int r, Mat h);

  // checks d h + h d = f - g
  bool witnesses(const ChainMap& f, const ChainMap& g) const;

 private:
  ChainComplex source_, target_;
  std::map<int, Mat> h_;
  mutable std::map<int, Mat> zcache_;
};

// (C^{n-*})_r = C^{n-r} with differential (-1)^r d^*.
ChainComplex dual_complex(const ChainComplex& c, int n);
// The component matrix of the canonical identification C = C^{n-*}^{n-*}
// is the identity, so dual_complex is an involution; tested, not stored.

ChainComplex mapping_cone_complex(const ChainMap& f);
// cone inclusion D -> cone(f) and projection cone(f) -> C[-1] are not
// needed by the public surface.

ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);
ChainMap inclusion_left(const ChainComplex& a, const ChainComplex& b);
ChainMap inclusion_right(const ChainComplex& a, const ChainComplex& b);

// Shift degrees up by `shift` (C[shift]_r = C_{r-shift}) with no sign
// change on the differentials.
ChainComplex shift_complex(const ChainComplex& c, int shift);

// Z[Z/k] complex as a Z complex of k-fold rank via the regular
// representation.
ChainComplex restrict_scalars(const ChainComplex& c);

int parity_sign(long long e);  // (-1)^e as +1/-1

}  // namespace chainsurg
