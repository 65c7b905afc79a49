#include "chainsurg/homology.hpp"

#include <sstream>
#include <stdexcept>

namespace chainsurg {

std::string HomologyGroup::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

namespace {

IntMat to_intmat(const Mat& m) {
  IntMat out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).as_int();
  return out;
}

int rank_over_q(const Mat& m) {
  // exact Gaussian elimination on a rational copy
  if (m.is_empty()) return 0;
  std::vector<std::vector<Rat>> a(size_t(m.rows()), std::vector<Rat>(size_t(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      a[size_t(i)][size_t(j)] = m.ring().is_rationals() ? m.at(i, j).as_rat() : Rat(m.at(i, j).as_int());
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (a[size_t(i)][size_t(col)] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[size_t(rank)], a[size_t(piv)]);
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (a[size_t(i)][size_t(col)] == 0) continue;
      Rat f = a[size_t(i)][size_t(col)] / a[size_t(rank)][size_t(col)];
      for (int j = col; j < m.cols(); ++j) a[size_t(i)][size_t(j)] -= f * a[size_t(rank)][size_t(j)];
    }
    ++rank;
  }
  return rank;
}

HomologyGroup homology_degree_z(const ChainComplex& c, int r) {
  HomologyGroup h;
  if (c.rank(r) == 0) return h;
  IntMat dr = to_intmat(c.diff(r));
  IntMat dr1 = to_intmat(c.diff(r + 1));
  IntMat kernel = integer_kernel(dr);
  if (kernel.cols() == 0) return h;
  // express im d_{r+1} in the kernel basis (columns of `kernel` span a
  // direct summand containing the image)
  std::optional<IntMat> y = solve_integer(kernel, dr1);
  if (!y) throw std::logic_error("image not contained in kernel: d*d != 0");
  SmithForm s = smith_form(*y);
  h.free_rank = kernel.cols() - s.rank;
  for (int i = 0; i < s.rank; ++i)
    if (s.divisors[size_t(i)] > 1) h.torsion.push_back(s.divisors[size_t(i)]);
  return h;
}

}  // namespace

HomologyTable homology(const ChainComplex& c) {
  if (c.ring().is_group_ring())
    throw std::invalid_argument("homology over group rings: restrict scalars first");
  HomologyTable out;
  for (int r = c.lo(); r <= c.hi(); ++r) {
    if (c.rank(r) == 0) continue;
    HomologyGroup h;
    if (c.ring().is_integers()) {
      h = homology_degree_z(c, r);
    } else {
      h.free_rank = c.rank(r) - rank_over_q(c.diff(r)) - rank_over_q(c.diff(r + 1));
    }
    if (!h.is_zero()) out[r] = h;
  }
  return out;
}

bool homology_vanishes(const ChainComplex& c) { return homology(c).empty(); }

bool rationally_acyclic(const ChainComplex& c) {
  if (c.ring().is_group_ring())
    throw std::invalid_argument("rational acyclicity: restrict scalars first");
  for (int r = c.lo(); r <= c.hi(); ++r) {
    if (c.rank(r) == 0) continue;
    if (c.rank(r) != rank_over_q(c.diff(r)) + rank_over_q(c.diff(r + 1))) return false;
  }
  return true;
}

std::string homology_str(const HomologyTable& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, h] : t) {
    if (!first) os << ", ";
    os << "H_" << r << "=" << h.str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace chainsurg
