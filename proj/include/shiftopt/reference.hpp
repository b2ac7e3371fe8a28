#pragma once

#include "shiftopt/dbar.hpp"
#include "shiftopt/jsr.hpp"
#include "shiftopt/lyapunov.hpp"

namespace shiftopt::reference {

// Serial twins of the parallel kernels. Each one recomputes the same
// quantity with straight-line loops and direct weight evaluation, bypassing
// the batched profiles, the pruned search trees, and the OpenMP reductions.
// They exist to pin the kernels down in tests and to give the benchmark a
// baseline; they are not size-guarded for production inputs.

// sup_k sum_i phi(x_i, k+i) over the same certified candidate range the
// parallel scan uses (or [-k_window, k_window] without exact structure).
Bounds log_norm(const WeightFunction& phi, const Word& x, long long k_window);

// Exhaustive maximum of log_norm over all 2^n words, n <= 16.
JsrUpper jsr_upper(const WeightFunction& phi, long long n, long long k_window);

// Support-enumerated average of log_norm against cylinder masses.
LyapunovUpper lyapunov_upper(const WeightFunction& phi, const MeasureSpec& mu, long long n,
                             long long k_window);

// Same sample streams and reduction as the parallel estimator, evaluated
// serially; with a fixed seed the two agree to the byte.
McResult lyapunov_mc(const WeightFunction& phi, const MeasureSpec& mu, long long n,
                     long long samples, long long k_window, std::uint64_t seed);

// Minimum mismatch density between u^infinity and v^infinity over every
// starting-phase pair, averaged over one common period.
Rat dbar_brute(const Word& u, const Word& v);

// Minimum Hamming distance from x to the admissible windows of the target,
// enumerated outright: all phases for a periodic orbit, every follower path
// for a factor set. Work grows with the path tree; keep |x| small.
Rat matching_brute(const Word& x, const SubshiftSpec& target);

// sum_{i<n} psi_A(z_i, k+i) summed bump by bump, one membership test per
// index, with none of the residue-class shortcuts.
long long psi_window_brute(const PerturbationPlan& plan, long long k, long long n);

}  // namespace shiftopt::reference
