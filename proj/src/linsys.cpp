#include "chainsurg/linsys.hpp"

#include <stdexcept>

namespace chainsurg {

RingLinearSystem::RingLinearSystem(const Ring& ring) : ring_(ring) {
  if (ring.is_rationals())
    throw std::invalid_argument("ring linear systems are supported over Z and Z[Z/k]");
}

int RingLinearSystem::add_unknowns(int count) {
  int base = n_vars_;
  n_vars_ += count;
  return base;
}

int RingLinearSystem::new_equation(const RingElem& rhs) {
  rhs_.push_back(rhs);
  return int(rhs_.size()) - 1;
}

void RingLinearSystem::add_term(int eq, int var, const RingElem& coeff) {
  if (eq < 0 || eq >= int(rhs_.size()) || var < 0 || var >= n_vars_)
    throw std::out_of_range("linear system index");
  if (coeff.is_zero()) return;
  terms_.push_back({eq, var, coeff});
}

IntMat RingLinearSystem::assemble_matrix() const {
  const int k = ring_.coeff_len();
  IntMat m(int(rhs_.size()) * k, n_vars_ * k);
  for (const Term& t : terms_) {
    const std::vector<Int>& c = t.coeff.coeffs();
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q)
        m.at(t.eq * k + p, t.var * k + q) += c[size_t(((p - q) % k + k) % k)];
  }
  return m;
}

std::optional<std::vector<RingElem>> RingLinearSystem::solve() const {
  const int k = ring_.coeff_len();
  IntMat b(int(rhs_.size()) * k, 1);
  for (size_t e = 0; e < rhs_.size(); ++e) {
    const std::vector<Int>& c = rhs_[e].coeffs();
    for (int p = 0; p < k; ++p) b.at(int(e) * k + p, 0) = c[size_t(p)];
  }
  auto sol = solve_integer(assemble_matrix(), b);
  if (!sol) return std::nullopt;
  std::vector<RingElem> out;
  out.reserve(size_t(n_vars_));
  for (int v = 0; v < n_vars_; ++v) {
    std::vector<Int> c(static_cast<size_t>(k));
    for (int p = 0; p < k; ++p) c[size_t(p)] = sol->at(v * k + p, 0);
    out.push_back(RingElem::from_coeffs(ring_, std::move(c)));
  }
  return out;
}

std::vector<std::vector<RingElem>> RingLinearSystem::kernel_basis() const {
  const int k = ring_.coeff_len();
  IntMat kb = integer_kernel(assemble_matrix());
  std::vector<std::vector<RingElem>> out;
  for (int col = 0; col < kb.cols(); ++col) {
    std::vector<RingElem> assignment;
    assignment.reserve(size_t(n_vars_));
    for (int v = 0; v < n_vars_; ++v) {
      std::vector<Int> c(static_cast<size_t>(k));
      for (int p = 0; p < k; ++p) c[size_t(p)] = kb.at(v * k + p, col);
      assignment.push_back(RingElem::from_coeffs(ring_, std::move(c)));
    }
    out.push_back(std::move(assignment));
  }
  return out;
}

}  // namespace chainsurg
