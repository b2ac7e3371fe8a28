#pragma once

#include <vector>

#include "shiftopt/cocycle.hpp"

namespace shiftopt {

struct JsrUpper {
  Scalar value;        // (1/n) max over all length-n words of the k-sup window sum
  bool certified = false;  // exact k-sup structure: value upper-bounds the growth rate
  Word witness;        // lexicographically least maximizing word
  long long n = 0;
};

// Maximizes log_norm over all 2^n words by depth-first search with prefix
// pruning against the per-index envelope max_a phi(a, k+i); the envelope
// never undercounts, so the result equals the exhaustive maximum. Subtrees
// fan out across workers with independent local bests, keeping the value
// and witness independent of scheduling.
JsrUpper jsr_upper(const WeightFunction& phi, long long n, long long k_window);

struct JsrLower {
  Scalar value;
  bool certified = false;  // exact periodic rates entered the max
  Word witness;            // best candidate word (first among ties)
};

// max over candidate words of the periodic-product growth rate: the exact
// closed-form limit when phi has exact k-sup structure (certified lower
// bound for the joint growth rate), else the m-th iterate estimate.
JsrLower jsr_lower(const WeightFunction& phi, const std::vector<Word>& candidates, long long m,
                   long long k_window);

}  // namespace shiftopt
