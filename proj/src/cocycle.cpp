#include "shiftopt/cocycle.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shiftopt {

namespace {

constexpr long long kMaxScanWidth = 1ll << 22;
constexpr long long kMaxScanWork = 1ll << 33;

template <class S>
S s_zero();
template <>
double s_zero<double>() {
  return 0.0;
}
template <>
Rat s_zero<Rat>() {
  return Rat(0);
}

}  // namespace

template <class S>
S window_sum(const WeightFunction& phi, const Word& x, long long k) {
  if (x.empty()) throw invalid_input("window sum of an empty word");
  Profile<S> prof = make_profile<S>(phi, k, k + x.size() - 1);
  S total = s_zero<S>();
  for (long long i = 0; i < x.size(); ++i)
    total += prof.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(x[i])];
  return total;
}

namespace detail {

template <class S>
KScanResult<S> k_sup_scan(const WeightFunction& phi, const Word& x, long long k_window) {
  if (x.empty()) throw invalid_input("norm of an empty word");
  if (k_window < 0) throw invalid_input("negative scan window");
  long long n = x.size();
  KSup ks = phi.ksup();
  long long k_lo, k_hi;
  bool exact = ks.exact;
  if (exact) {
    if (ks.support) {
      k_lo = ks.support->first - n + 1 - ks.period;
      k_hi = ks.support->second + ks.period;
    } else {
      k_lo = 0;
      k_hi = ks.period - 1;
    }
  } else {
    k_lo = -k_window;
    k_hi = k_window;
  }
  long long width = k_hi - k_lo + 1;
  if (width > kMaxScanWidth || width * n > kMaxScanWork)
    throw invalid_input("k scan exceeds the work cap for this weight/word size");

  Profile<S> prof = make_profile<S>(phi, k_lo, k_hi + n - 1);
  std::vector<S> sums(static_cast<std::size_t>(width), s_zero<S>());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long k = k_lo; k <= k_hi; ++k) {
    S total = s_zero<S>();
    for (long long i = 0; i < n; ++i)
      total += prof.rows[static_cast<std::size_t>(k - k_lo + i)][static_cast<std::size_t>(x[i])];
    sums[static_cast<std::size_t>(k - k_lo)] = total;
  }
  KScanResult<S> out;
  out.exact = exact;
  out.best = sums[0];
  out.arg_k = k_lo;
  for (long long k = k_lo + 1; k <= k_hi; ++k) {
    const S& v = sums[static_cast<std::size_t>(k - k_lo)];
    if (v > out.best) {
      out.best = v;
      out.arg_k = k;
    }
  }
  return out;
}

template KScanResult<double> k_sup_scan<double>(const WeightFunction&, const Word&, long long);
template KScanResult<Rat> k_sup_scan<Rat>(const WeightFunction&, const Word&, long long);

}  // namespace detail

Bounds log_norm(const WeightFunction& phi, const Word& x, long long k_window) {
  Bounds b;
  b.n = x.size();
  b.k_window = k_window;
  if (phi.is_exact()) {
    auto scan = detail::k_sup_scan<Rat>(phi, x, k_window);
    b.lower = Scalar(scan.best);
    if (scan.exact) b.upper = b.lower;
  } else {
    auto scan = detail::k_sup_scan<double>(phi, x, k_window);
    b.lower = Scalar(scan.best);
    if (scan.exact) b.upper = b.lower;
  }
  return b;
}

template <class S>
S exact_periodic_rate(const WeightFunction& phi, const Word& w) {
  if (w.empty()) throw invalid_input("rate of an empty word");
  KSup ks = phi.ksup();
  if (!ks.exact) throw invalid_input("exact periodic rate needs exact k-sup structure");
  long long L = checked_lcm(ks.period, w.size());
  if (L > kMaxScanWidth) throw invalid_input("far-field period too large for the exact rate");
  Profile<S> far = make_far_profile<S>(phi, 0, ks.period + L - 2);
  // cycle(k) = sum_{i<L} far(w_i, k+i) is periodic in k with the far period;
  // the limit rate is the best cycle average.
  S best = s_zero<S>();
  bool first = true;
  for (long long k = 0; k < ks.period; ++k) {
    S total = s_zero<S>();
    for (long long i = 0; i < L; ++i)
      total += far.rows[static_cast<std::size_t>(k + i)][static_cast<std::size_t>(w.cyclic(i))];
    if (first || total > best) {
      best = total;
      first = false;
    }
  }
  if constexpr (std::is_same_v<S, Rat>) {
    Rat r = best / make_rat(L, 1);
    return r;
  } else {
    return best / static_cast<double>(L);
  }
}

template double exact_periodic_rate<double>(const WeightFunction&, const Word&);
template Rat exact_periodic_rate<Rat>(const WeightFunction&, const Word&);

Bounds periodic_log_spectral_radius(const WeightFunction& phi, const Word& w, long long m,
                                    long long k_window) {
  if (m < 1) throw invalid_input("iterate count must be at least 1");
  if (w.empty()) throw invalid_input("rate of an empty word");
  Bounds b;
  b.n = w.size();
  b.k_window = k_window;
  b.m = m;
  KSup ks = phi.ksup();
  if (ks.exact) {
    bool exact_values = phi.is_exact();
    if (exact_values) {
      b.lower = Scalar(exact_periodic_rate<Rat>(phi, w));
      Rat best_upper;
      bool first = true;
      for (long long mm = 1; mm <= m; ++mm) {
        auto scan = detail::k_sup_scan<Rat>(phi, w.repeated(mm), k_window);
        Rat rate = scan.best / make_rat(mm * w.size(), 1);
        if (first || rate < best_upper) {
          best_upper = rate;
          first = false;
        }
      }
      b.upper = Scalar(best_upper);
    } else {
      b.lower = Scalar(exact_periodic_rate<double>(phi, w));
      double best_upper = 0;
      bool first = true;
      for (long long mm = 1; mm <= m; ++mm) {
        auto scan = detail::k_sup_scan<double>(phi, w.repeated(mm), k_window);
        double rate = scan.best / static_cast<double>(mm * w.size());
        if (first || rate < best_upper) {
          best_upper = rate;
          first = false;
        }
      }
      b.upper = Scalar(best_upper);
    }
    return b;
  }
  auto scan = detail::k_sup_scan<double>(phi, w.repeated(m), k_window);
  b.lower = Scalar(scan.best / static_cast<double>(m * w.size()));
  return b;
}

template double window_sum<double>(const WeightFunction&, const Word&, long long);
template Rat window_sum<Rat>(const WeightFunction&, const Word&, long long);

}  // namespace shiftopt
