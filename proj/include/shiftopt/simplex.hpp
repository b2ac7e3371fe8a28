#pragma once

#include <vector>

#include "shiftopt/numeric.hpp"

namespace shiftopt {

template <class S>
struct LpResult {
  bool feasible = false;
  S objective{};
  std::vector<S> x;
};

// Minimizes c.x subject to A x = b, x >= 0. Dense two-phase simplex with
// Bland's rule (no cycling). Exact over Rat; over double a 1e-9 tolerance
// separates zero from nonzero.
template <class S>
LpResult<S> solve_lp_min(const std::vector<std::vector<S>>& A, const std::vector<S>& b,
                         const std::vector<S>& c);

}  // namespace shiftopt
