#pragma once

#include "shiftopt/numeric.hpp"
#include "shiftopt/symbolic.hpp"
#include "shiftopt/weights.hpp"

namespace shiftopt {

// One evaluation of the window bound for psi_A: the window sum against any
// word x never exceeds 2N(N-1) plus N per marker occurrence in x.
struct UpperInequalityReport {
  long long n = 0;  // |x|
  long long k = 0;
  long long order = 0;        // N
  long long lhs = 0;          // sum_{i<n} psi_A(x_i, k+i)
  long long occurrences = 0;  // marker occurrences fully inside x
  long long rhs = 0;          // 2N(N-1) + N * occurrences
  bool holds = false;
};

UpperInequalityReport check_upper_inequality(const PerturbationPlan& plan, const Word& x,
                                             long long k);

// One level of the growth guarantee: along the plan's own window the
// perturbed average beats the base average by at least
// lambda * (N * freq - slack), slack = (2N^2(N-1) + N^2 n_j / 2^j) / n_j.
struct GrowthReport {
  int j = 0;
  long long order = 0;  // N
  long long n_j = 0;
  long long k_j = 0;
  long long occurrences = 0;  // markers fully inside the level window
  long long usable = 0;       // |A_j|: markers surviving the earlier-interval cut
  long long psi_sum = 0;      // integer window sum of psi_A at (k_j, n_j)
  Scalar lambda;
  Scalar base_avg;  // (1/n_j) sum phi(z_i, k_j + i)
  Rat freq;         // occurrences / n_j
  Rat slack;
  Scalar lhs_avg;  // perturbed average
  Scalar rhs;      // base_avg + lambda * (N * freq - slack)
  Scalar margin;   // lhs_avg - rhs; exact whenever lambda is exact
};

GrowthReport check_growth(const PerturbationPlan& plan, const WeightFunction& phi, Scalar lambda,
                          int j);

}  // namespace shiftopt
