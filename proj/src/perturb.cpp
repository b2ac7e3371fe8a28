#include "shiftopt/perturb.hpp"

namespace shiftopt {

UpperInequalityReport check_upper_inequality(const PerturbationPlan& plan, const Word& x,
                                             long long k) {
  const long long N = plan.order();
  if (x.size() <= N) throw invalid_input("window must be longer than the marker");
  UpperInequalityReport r;
  r.n = x.size();
  r.k = k;
  r.order = N;
  for (long long i = 0; i < r.n; ++i) r.lhs += plan.psi_A(x[i], k + i);
  r.occurrences = count_occurrences(x, plan.omega);
  r.rhs = 2 * N * (N - 1) + N * r.occurrences;
  r.holds = r.lhs <= r.rhs;
  return r;
}

GrowthReport check_growth(const PerturbationPlan& plan, const WeightFunction& phi, Scalar lambda,
                          int j) {
  if (j < 1 || j > plan.depth) throw invalid_input("plan has no such level");
  const long long N = plan.order();
  const std::size_t idx = static_cast<std::size_t>(j - 1);
  GrowthReport r;
  r.j = j;
  r.order = N;
  r.n_j = plan.n[idx];
  r.k_j = plan.k[idx];
  r.occurrences = plan.count_c[idx];
  r.usable = plan.count_a[idx];
  r.psi_sum = sum_psi_A_along_z(plan, r.k_j, r.n_j);
  r.lambda = lambda;
  r.freq = make_rat(r.occurrences, r.n_j);
  r.slack = make_rat(2 * N * N * (N - 1), r.n_j) + make_rat(N * N, 1LL << j);

  if (phi.is_exact())
    r.base_avg =
        Scalar(Rat(window_sum_along<Rat>(phi, plan.z, r.k_j, r.n_j) / make_rat(r.n_j, 1)));
  else
    r.base_avg =
        Scalar(window_sum_along<double>(phi, plan.z, r.k_j, r.n_j) / static_cast<double>(r.n_j));

  // The base average cancels out of the margin, so the psi side stays exact
  // rational even over a floating-point phi.
  const Rat psi_avg = make_rat(r.psi_sum, r.n_j);
  const Rat gap = make_rat(N, 1) * r.freq - r.slack;
  r.lhs_avg = r.base_avg + lambda * Scalar(psi_avg);
  r.rhs = r.base_avg + lambda * Scalar(gap);
  r.margin = lambda * Scalar(Rat(psi_avg - gap));
  return r;
}

}  // namespace shiftopt
