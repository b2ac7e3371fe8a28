#include "shiftopt/jsr.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shiftopt {

namespace {

constexpr long long kMaxWordLen = 24;
constexpr long long kMaxEnvelopeWork = 1ll << 27;

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

template <class S>
struct DfsShared {
  long long n = 0;
  long long k_lo = 0;
  long long width = 0;
  Profile<S> prof;  // indices [k_lo, k_lo + width - 1 + n - 1]
  // env[i * width + w] = sum_{t >= i} max_a prof(k_lo + w + t, a), i in [0, n]
  std::vector<S> env;

  const S& val(long long w, long long i, int a) const {
    return prof.rows[static_cast<std::size_t>(w + i)][static_cast<std::size_t>(a)];
  }
};

template <class S>
struct DfsBest {
  bool any = false;
  S value{};
  std::vector<std::uint8_t> word;
};

template <class S>
void dfs(const DfsShared<S>& sh, long long i, std::vector<S>& cur,
         std::vector<std::uint8_t>& path, DfsBest<S>& best) {
  if (i == sh.n) {
    S top = cur[0];
    for (long long w = 1; w < sh.width; ++w)
      if (cur[static_cast<std::size_t>(w)] > top) top = cur[static_cast<std::size_t>(w)];
    if (!best.any || top > best.value) {
      best.any = true;
      best.value = top;
      best.word = path;
    }
    return;
  }
  for (int a = 0; a < 2; ++a) {
    // Reachable maximum through this child; prune unless it strictly beats
    // the incumbent, which also keeps the first (lex-least) maximizer.
    bool beats = !best.any;
    if (!beats) {
      for (long long w = 0; w < sh.width; ++w) {
        S bound = cur[static_cast<std::size_t>(w)] + sh.val(w, i, a) +
                  sh.env[static_cast<std::size_t>((i + 1) * sh.width + w)];
        if (bound > best.value) {
          beats = true;
          break;
        }
      }
    }
    if (!beats) continue;
    for (long long w = 0; w < sh.width; ++w)
      cur[static_cast<std::size_t>(w)] += sh.val(w, i, a);
    path.push_back(static_cast<std::uint8_t>(a));
    dfs(sh, i + 1, cur, path, best);
    path.pop_back();
    for (long long w = 0; w < sh.width; ++w)
      cur[static_cast<std::size_t>(w)] -= sh.val(w, i, a);
  }
}

template <class S>
JsrUpper jsr_upper_impl(const WeightFunction& phi, long long n, long long k_window) {
  KSup ks = phi.ksup();
  long long k_lo, k_hi;
  if (ks.exact) {
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
  DfsShared<S> sh;
  sh.n = n;
  sh.k_lo = k_lo;
  sh.width = k_hi - k_lo + 1;
  if (sh.width * (n + 1) > kMaxEnvelopeWork)
    throw invalid_input("k scan exceeds the work cap for this weight/word size");
  sh.prof = make_profile<S>(phi, k_lo, k_hi + n - 1);
  sh.env.assign(static_cast<std::size_t>((n + 1) * sh.width), s_zero<S>());
  for (long long i = n - 1; i >= 0; --i)
    for (long long w = 0; w < sh.width; ++w) {
      const S& v0 = sh.val(w, i, 0);
      const S& v1 = sh.val(w, i, 1);
      sh.env[static_cast<std::size_t>(i * sh.width + w)] =
          sh.env[static_cast<std::size_t>((i + 1) * sh.width + w)] + (v1 > v0 ? v1 : v0);
    }

  // Split the word tree at a fixed depth; each subtree keeps a private
  // incumbent so the reduction is schedule-independent.
  int split = static_cast<int>(std::min<long long>(n, 6));
  long long tasks = 1ll << split;
  std::vector<DfsBest<S>> results(static_cast<std::size_t>(tasks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long task = 0; task < tasks; ++task) {
    std::vector<S> cur(static_cast<std::size_t>(sh.width), s_zero<S>());
    std::vector<std::uint8_t> path;
    path.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < split; ++j) {
      int a = static_cast<int>((task >> (split - 1 - j)) & 1);
      for (long long w = 0; w < sh.width; ++w)
        cur[static_cast<std::size_t>(w)] += sh.val(w, j, a);
      path.push_back(static_cast<std::uint8_t>(a));
    }
    dfs(sh, split, cur, path, results[static_cast<std::size_t>(task)]);
  }
  long long best_task = 0;
  for (long long task = 1; task < tasks; ++task)
    if (results[static_cast<std::size_t>(task)].value >
        results[static_cast<std::size_t>(best_task)].value)
      best_task = task;
  const DfsBest<S>& win = results[static_cast<std::size_t>(best_task)];

  JsrUpper out;
  out.n = n;
  out.certified = ks.exact;
  out.witness = Word::from_symbols(win.word);
  if constexpr (std::is_same_v<S, Rat>) {
    out.value = Scalar(Rat(win.value / make_rat(n, 1)));
  } else {
    out.value = Scalar(win.value / static_cast<double>(n));
  }
  return out;
}

}  // namespace

JsrUpper jsr_upper(const WeightFunction& phi, long long n, long long k_window) {
  if (n <= 0) throw invalid_input("word length must be positive");
  if (n > kMaxWordLen) throw invalid_input("word length capped at 24");
  if (k_window < 0) throw invalid_input("negative scan window");
  if (phi.is_exact()) return jsr_upper_impl<Rat>(phi, n, k_window);
  return jsr_upper_impl<double>(phi, n, k_window);
}

JsrLower jsr_lower(const WeightFunction& phi, const std::vector<Word>& candidates, long long m,
                   long long k_window) {
  if (candidates.empty()) throw invalid_input("empty candidate list");
  if (m < 1) throw invalid_input("iterate count must be at least 1");
  KSup ks = phi.ksup();
  JsrLower out;
  out.certified = ks.exact;
  long long count = static_cast<long long>(candidates.size());
  if (ks.exact && phi.is_exact()) {
    std::vector<Rat> rates(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long long i = 0; i < count; ++i)
      rates[static_cast<std::size_t>(i)] =
          exact_periodic_rate<Rat>(phi, candidates[static_cast<std::size_t>(i)]);
    std::size_t best = 0;
    for (std::size_t i = 1; i < rates.size(); ++i)
      if (rates[i] > rates[best]) best = i;
    out.value = Scalar(rates[best]);
    out.witness = candidates[best];
    return out;
  }
  std::vector<double> rates(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long i = 0; i < count; ++i) {
    const Word& w = candidates[static_cast<std::size_t>(i)];
    if (ks.exact)
      rates[static_cast<std::size_t>(i)] = exact_periodic_rate<double>(phi, w);
    else
      rates[static_cast<std::size_t>(i)] =
          scalar_as<double>(periodic_log_spectral_radius(phi, w, m, k_window).lower);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < rates.size(); ++i)
    if (rates[i] > rates[best]) best = i;
  out.value = Scalar(rates[best]);
  out.witness = candidates[best];
  return out;
}

}  // namespace shiftopt
