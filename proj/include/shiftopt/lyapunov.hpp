#pragma once

#include "shiftopt/cocycle.hpp"
#include "shiftopt/measures.hpp"

namespace shiftopt {

// Exact Lyapunov exponent of the uniform measure on the orbit of w^infinity,
// for weights whose k-sup structure and values are exactly rational: the
// best phase average of the far-field cycle.
Rat lyapunov_periodic_exact(const WeightFunction& phi, const Word& w);

struct LyapunovUpper {
  Scalar value;
  bool certified = false;  // every norm in the average was an exact k-sup
  long long n = 0;
  long long words = 0;  // cylinder-positive words that entered the average
};

// (1/n) sum over length-n words of mu([x]) * log_norm(phi, x): a certified
// upper bound on the Lyapunov exponent when norms are exact. Words of zero
// cylinder mass are pruned by prefix.
LyapunovUpper lyapunov_upper(const WeightFunction& phi, const MeasureSpec& mu, long long n,
                             long long k_window);

struct McResult {
  double mean = 0.0;
  double std_error = 0.0;
  double lower = 0.0;  // mean - 3 SE
  double upper = 0.0;  // mean + 3 SE
  long long samples = 0;
  bool norms_certified = false;  // sampled norms were exact sups, not window estimates
};

// Monte-Carlo estimate of the Lyapunov exponent: mean over samples of
// (1/n) log_norm along mu-distributed words. Empirical measures are drawn
// as circular subwindows and their norms scanned both near k = 0 and near
// the subwindow's own source position, where alignment lives.
McResult lyapunov_mc(const WeightFunction& phi, const MeasureSpec& mu, long long n,
                     long long samples, long long k_window, std::uint64_t seed);

}  // namespace shiftopt
