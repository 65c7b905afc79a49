#pragma once

#include "chainsurg/complex.hpp"

#include <map>

namespace chainsurg {

// H_r = ker d_r / im d_{r+1} over Z (torsion divisors > 1, sorted by the
// divisibility chain) or over Q (torsion always empty).
struct HomologyGroup {
  int free_rank = 0;
  std::vector<Int> torsion;
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string str() const;
};

using HomologyTable = std::map<int, HomologyGroup>;

// Rings Z and Q only; use restrict_scalars first for group rings.
HomologyTable homology(const ChainComplex& c);

bool homology_vanishes(const ChainComplex& c);

// True iff homology over Q vanishes in every degree (torsion allowed).
bool rationally_acyclic(const ChainComplex& c);

std::string homology_str(const HomologyTable& t);

}  // namespace chainsurg
