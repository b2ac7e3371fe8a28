#include "shiftopt/reference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace shiftopt::reference {

namespace {

constexpr long long kMaxSerialScanWidth = 1ll << 22;
constexpr long long kMaxJsrLength = 16;
constexpr long long kMaxPathTree = 22;  // matching_brute branches 2^(n-L) at worst

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

// Candidate k range matching the certified scan; the twins must agree on
// where the sup is taken before they can agree on its value.
std::pair<long long, long long> scan_range(const WeightFunction& phi, long long n,
                                           long long k_window) {
  KSup ks = phi.ksup();
  if (ks.exact) {
    if (ks.support)
      return {ks.support->first - n + 1 - ks.period, ks.support->second + ks.period};
    return {0, ks.period - 1};
  }
  return {-k_window, k_window};
}

template <class S>
S direct_window_sum(const WeightFunction& phi, const Word& x, long long k) {
  S total = s_zero<S>();
  for (long long i = 0; i < x.size(); ++i)
    total += phi.template eval<S>(x[i], k + i);
  return total;
}

template <class S>
S scan_best(const WeightFunction& phi, const Word& x, long long k_lo, long long k_hi) {
  S best = s_zero<S>();
  bool first = true;
  for (long long k = k_lo; k <= k_hi; ++k) {
    S total = direct_window_sum<S>(phi, x, k);
    if (first || total > best) {
      best = total;
      first = false;
    }
  }
  return best;
}

}  // namespace

Bounds log_norm(const WeightFunction& phi, const Word& x, long long k_window) {
  if (x.empty()) throw invalid_input("norm of an empty word");
  if (k_window < 0) throw invalid_input("negative scan window");
  auto [k_lo, k_hi] = scan_range(phi, x.size(), k_window);
  if (k_hi - k_lo + 1 > kMaxSerialScanWidth)
    throw invalid_input("k scan range too wide for the serial reference");
  Bounds out;
  out.n = x.size();
  out.k_window = k_window;
  if (phi.is_exact()) {
    Rat best = scan_best<Rat>(phi, x, k_lo, k_hi);
    out.lower = Scalar(best);
    if (phi.ksup().exact) out.upper = Scalar(best);
    return out;
  }
  double best = scan_best<double>(phi, x, k_lo, k_hi);
  out.lower = Scalar(best);
  if (phi.ksup().exact) out.upper = Scalar(best);
  return out;
}

JsrUpper jsr_upper(const WeightFunction& phi, long long n, long long k_window) {
  if (n <= 0) throw invalid_input("word length must be positive");
  if (n > kMaxJsrLength) throw invalid_input("exhaustive word scan capped at 16 symbols");
  if (k_window < 0) throw invalid_input("negative scan window");
  auto [k_lo, k_hi] = scan_range(phi, n, k_window);
  if (k_hi - k_lo + 1 > kMaxSerialScanWidth)
    throw invalid_input("k scan range too wide for the serial reference");

  JsrUpper out;
  out.n = n;
  out.certified = phi.ksup().exact;

  bool exact = phi.is_exact();
  Rat best_r;
  double best_d = 0;
  bool first = true;
  std::vector<std::uint8_t> symbols(static_cast<std::size_t>(n));
  for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
    for (long long i = 0; i < n; ++i)
      symbols[static_cast<std::size_t>(i)] =
          static_cast<std::uint8_t>((bits >> (n - 1 - i)) & 1);
    Word w = Word::from_symbols(symbols);
    if (exact) {
      Rat v = scan_best<Rat>(phi, w, k_lo, k_hi);
      if (first || v > best_r) {
        best_r = v;
        out.witness = w;
        first = false;
      }
    } else {
      double v = scan_best<double>(phi, w, k_lo, k_hi);
      if (first || v > best_d) {
        best_d = v;
        out.witness = w;
        first = false;
      }
    }
  }
  if (exact)
    out.value = Scalar(Rat(best_r / make_rat(n, 1)));
  else
    out.value = Scalar(best_d / static_cast<double>(n));
  return out;
}

namespace {

bool mass_is_zero(const Scalar& s) {
  if (s.exact) return *s.exact == 0;
  return s.value == 0.0;
}

void enumerate_support(const MeasureSpec& mu, long long n, std::vector<std::uint8_t>& prefix,
                       std::vector<std::pair<Word, Scalar>>& out) {
  if (static_cast<long long>(prefix.size()) == n) {
    Word w = Word::from_symbols(prefix);
    out.emplace_back(w, cylinder_prob(mu, w));
    return;
  }
  for (int a = 0; a < 2; ++a) {
    prefix.push_back(static_cast<std::uint8_t>(a));
    if (!mass_is_zero(cylinder_prob(mu, Word::from_symbols(prefix))))
      enumerate_support(mu, n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

LyapunovUpper lyapunov_upper(const WeightFunction& phi, const MeasureSpec& mu, long long n,
                             long long k_window) {
  if (n < 1) throw invalid_input("word length must be positive");
  if (n > 20) throw invalid_input("word length above the enumeration budget");
  auto [k_lo, k_hi] = scan_range(phi, n, k_window);
  if (k_hi - k_lo + 1 > kMaxSerialScanWidth)
    throw invalid_input("k scan range too wide for the serial reference");
  std::vector<std::pair<Word, Scalar>> support;
  std::vector<std::uint8_t> prefix;
  enumerate_support(mu, n, prefix, support);

  LyapunovUpper out;
  out.n = n;
  out.words = static_cast<long long>(support.size());
  out.certified = phi.ksup().exact;

  if (phi.is_exact() && mu.is_exact()) {
    Rat total(0);
    for (const auto& [word, mass] : support)
      total += scalar_as<Rat>(mass) * scan_best<Rat>(phi, word, k_lo, k_hi);
    out.value = Scalar(Rat(total / make_rat(n, 1)));
    return out;
  }
  std::vector<double> terms(support.size());
  for (std::size_t i = 0; i < support.size(); ++i)
    terms[i] = scalar_as<double>(support[i].second) *
               scan_best<double>(phi, support[i].first, k_lo, k_hi);
  out.value = Scalar(deterministic_sum(terms) / static_cast<double>(n));
  return out;
}

namespace {

double serial_mc_log_norm(const WeightFunction& phi, const Word& x,
                          const std::vector<long long>& centers, long long k_window) {
  if (phi.ksup().exact) {
    auto [k_lo, k_hi] = scan_range(phi, x.size(), k_window);
    return scan_best<double>(phi, x, k_lo, k_hi);
  }
  double best = 0;
  bool first = true;
  for (long long c : centers) {
    for (long long k = c - k_window; k <= c + k_window; ++k) {
      double total = direct_window_sum<double>(phi, x, k);
      if (first || total > best) {
        best = total;
        first = false;
      }
    }
  }
  return best;
}

}  // namespace

McResult lyapunov_mc(const WeightFunction& phi, const MeasureSpec& mu, long long n,
                     long long samples, long long k_window, std::uint64_t seed) {
  if (samples < 1) throw invalid_input("sample count must be positive");
  if (n < 1) throw invalid_input("sample length must be positive");
  const auto* emp = std::get_if<MeasureSpec::Empirical>(&mu.variant());
  Word emp_window;
  if (emp) emp_window = emp->seq.window(emp->a, emp->a + emp->n - 1);

  std::vector<double> values(static_cast<std::size_t>(samples));
  for (long long s = 0; s < samples; ++s) {
    Word x;
    std::vector<long long> centers{0};
    if (emp) {
      Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(s));
      long long r = static_cast<long long>(rng.below(static_cast<std::uint64_t>(emp->n)));
      x = emp_window.cyclic_window(r, n);
      centers.push_back(emp->a + r);
    } else {
      std::uint64_t sub_seed =
          splitmix64(seed + 0x9e3779b97f4a7c15ull * (static_cast<std::uint64_t>(s) + 1));
      x = sample_word(mu, n, sub_seed);
    }
    values[static_cast<std::size_t>(s)] =
        serial_mc_log_norm(phi, x, centers, k_window) / static_cast<double>(n);
  }

  McResult out;
  out.samples = samples;
  out.norms_certified = phi.ksup().exact;
  out.mean = deterministic_sum(values) / static_cast<double>(samples);
  if (samples > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      double d = values[i] - out.mean;
      sq[i] = d * d;
    }
    double var = deterministic_sum(sq) / static_cast<double>(samples - 1);
    out.std_error = std::sqrt(var / static_cast<double>(samples));
  }
  out.lower = out.mean - 3.0 * out.std_error;
  out.upper = out.mean + 3.0 * out.std_error;
  return out;
}

Rat dbar_brute(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw invalid_input("periodic word must be nonempty");
  long long p = u.size(), q = v.size();
  long long L = std::lcm(p, q);
  if (p * q * L > (1ll << 24)) throw invalid_input("phase-pair enumeration too large");
  long long best = L + 1;
  for (long long s = 0; s < p; ++s)
    for (long long t = 0; t < q; ++t) {
      long long mism = 0;
      for (long long i = 0; i < L; ++i)
        if (u.cyclic(s + i) != v.cyclic(t + i)) ++mism;
      best = std::min(best, mism);
    }
  return make_rat(best, L);
}

namespace {

long long hamming(const Word& x, long long from, const Word& y) {
  long long d = 0;
  for (long long i = 0; i < y.size(); ++i)
    if (x[from + i] != y[i]) ++d;
  return d;
}

void walk_paths(const SubshiftSpec::FactorSet& fs, const Word& x, long long t, int g,
                long long cost, long long& best) {
  if (cost >= best) return;
  if (t == x.size()) {
    best = cost;
    return;
  }
  for (int h : fs.followers[static_cast<std::size_t>(g)]) {
    long long step = x[t] != fs.factors[static_cast<std::size_t>(h)][fs.L - 1] ? 1 : 0;
    walk_paths(fs, x, t + 1, h, cost + step, best);
  }
}

long long matching_factor_brute(const SubshiftSpec::FactorSet& fs, const Word& x) {
  validate_factor_set(fs);
  long long n = x.size();
  if (n <= fs.L) {
    // Every length-n window of a point is a subword of one of its length-L
    // windows, so scanning all subword offsets covers the admissible words.
    long long best = n + 1;
    for (const Word& f : fs.factors)
      for (long long o = 0; o + n <= fs.L; ++o) {
        long long d = 0;
        for (long long i = 0; i < n; ++i)
          if (x[i] != f[o + i]) ++d;
        best = std::min(best, d);
      }
    return best;
  }
  if (n - fs.L > kMaxPathTree) throw invalid_input("path enumeration too deep for the brute matcher");
  long long best = n + 1;
  for (std::size_t g = 0; g < fs.factors.size(); ++g) {
    long long head = hamming(x, 0, fs.factors[g]);
    walk_paths(fs, x, fs.L, static_cast<int>(g), head, best);
  }
  return best;
}

}  // namespace

Rat matching_brute(const Word& x, const SubshiftSpec& target) {
  if (x.empty()) throw invalid_input("matching distance of an empty window");
  long long n = x.size();
  if (const auto* po = std::get_if<SubshiftSpec::PeriodicOrbit>(&target.variant())) {
    const Word& w = po->word;
    if (w.empty()) throw invalid_input("periodic word must be nonempty");
    long long best = n + 1;
    for (long long r = 0; r < w.size(); ++r) {
      long long d = 0;
      for (long long i = 0; i < n; ++i)
        if (x[i] != w.cyclic(r + i)) ++d;
      best = std::min(best, d);
    }
    return make_rat(best, n);
  }
  if (const auto* fs = std::get_if<SubshiftSpec::FactorSet>(&target.variant()))
    return make_rat(matching_factor_brute(*fs, x), n);
  const auto& oc = std::get<SubshiftSpec::OrbitClosureApprox>(target.variant());
  SubshiftSpec::FactorSet fs = factor_set_of(*oc.seq, oc.window, oc.L);
  return make_rat(matching_factor_brute(fs, x), n);
}

long long psi_window_brute(const PerturbationPlan& plan, long long k, long long n) {
  if (n <= 0) throw invalid_input("window sum over empty range");
  if (n > (1ll << 22)) throw invalid_input("window too long for the brute psi sum");
  long long total = 0;
  for (long long i = 0; i < n; ++i)
    total += plan.psi_A(plan.z.symbol(i), k + i);
  return total;
}

}  // namespace shiftopt::reference
