#pragma once

#include "chainsurg/matrix.hpp"

#include <vector>

namespace chainsurg {

using RatRow = std::vector<Rat>;
using RatGrid = std::vector<RatRow>;

RatGrid to_rational_grid(const Mat& m);

// Diagonalize a symmetric rational matrix by a congruence P^T S P and
// return the diagonal.  Zero-diagonal blocks are split via the standard
// hyperbolic 2x2 trick, which contributes one +1 and one -1.
RatRow congruence_diagonal(RatGrid sym);

int rational_grid_rank(RatGrid a);

}  // namespace chainsurg
