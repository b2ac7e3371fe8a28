#pragma once

#include <optional>

#include "shiftopt/weights.hpp"

namespace shiftopt {

// Certified bracket for a limit quantity, tagged with the parameters that
// produced it. upper is absent when only a one-sided estimate exists; when
// present, lower <= upper.
struct Bounds {
  Scalar lower;
  std::optional<Scalar> upper;
  long long n = 0;
  long long k_window = 0;
  std::optional<long long> m;
};

// sum_{i < |x|} phi(x_i, k + i), the inner sum of the norm identity.
template <class S>
S window_sum(const WeightFunction& phi, const Word& x, long long k);

// log ||L_{x_n} ... L_{x_1}|| = sup_{k in Z} sum_{i < |x|} phi(x_i, k + i).
//
// With exact k-sup structure the candidate set covering an argmax is finite
// (override support widened by |x| plus one far-field period on each side,
// or one bare period without support) and upper == lower is the certified
// sup over all of Z. Otherwise lower is the best value over
// [-k_window, k_window] and upper is absent.
Bounds log_norm(const WeightFunction& phi, const Word& x, long long k_window);

// Exact per-symbol limit rate lim_n (1/n) sup_k sum_{i<n} phi(x_i, k+i)
// along x = w^infinity. Requires phi.ksup().exact; local corrections wash
// out, so the value is the best far-field cycle average over phases.
template <class S>
S exact_periodic_rate(const WeightFunction& phi, const Word& w);

// Per-symbol growth-rate bracket for the periodic product over w.
// upper: min over 1 <= m' <= m of (1/(m'|w|)) log_norm(phi, w^m') when norms
// are certified (each iterate upper-bounds the limit by subadditivity).
// lower: the exact limit when phi has exact k-sup structure; otherwise the
// m-th iterate estimate with upper absent.
Bounds periodic_log_spectral_radius(const WeightFunction& phi, const Word& w, long long m,
                                    long long k_window);

namespace detail {

template <class S>
struct KScanResult {
  S best{};
  long long arg_k = 0;
  bool exact = false;
};

// Workhorse behind log_norm: evaluates the window sum on the certified
// candidate range when phi admits one, else on [-k_window, k_window].
// Ties go to the smallest k.
template <class S>
KScanResult<S> k_sup_scan(const WeightFunction& phi, const Word& x, long long k_window);

}  // namespace detail

}  // namespace shiftopt
