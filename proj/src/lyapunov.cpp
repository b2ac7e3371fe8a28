#include "shiftopt/lyapunov.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shiftopt {

namespace {

constexpr long long kMaxEnumeratedWords = 1ll << 20;
constexpr long long kMaxEnumerationLength = 20;

bool scalar_is_zero(const Scalar& s) {
  if (s.exact) return *s.exact == 0;
  return s.value == 0.0;
}

void collect_support(const MeasureSpec& mu, long long n, std::vector<std::uint8_t>& prefix,
                     std::vector<std::pair<Word, Scalar>>& out) {
  if (static_cast<long long>(prefix.size()) == n) {
    Word w = Word::from_symbols(prefix);
    out.emplace_back(w, cylinder_prob(mu, w));
    if (static_cast<long long>(out.size()) > kMaxEnumeratedWords)
      throw invalid_input("cylinder support too large to enumerate");
    return;
  }
  for (int a = 0; a < 2; ++a) {
    prefix.push_back(static_cast<std::uint8_t>(a));
    if (!scalar_is_zero(cylinder_prob(mu, Word::from_symbols(prefix))))
      collect_support(mu, n, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Rat lyapunov_periodic_exact(const WeightFunction& phi, const Word& w) {
  if (!phi.ksup().exact)
    throw invalid_input("exact Lyapunov value needs periodic weight structure");
  if (!phi.is_exact())
    throw invalid_input("exact Lyapunov value needs rational weight values");
  return exact_periodic_rate<Rat>(phi, w);
}

LyapunovUpper lyapunov_upper(const WeightFunction& phi, const MeasureSpec& mu, long long n,
                             long long k_window) {
  if (n < 1) throw invalid_input("word length must be positive");
  if (n > kMaxEnumerationLength) throw invalid_input("word length above the enumeration budget");
  std::vector<std::pair<Word, Scalar>> support;
  std::vector<std::uint8_t> prefix;
  collect_support(mu, n, prefix, support);

  LyapunovUpper out;
  out.n = n;
  out.words = static_cast<long long>(support.size());
  out.certified = phi.ksup().exact;

  bool exact = phi.is_exact() && mu.is_exact();
  long long count = out.words;
  if (exact) {
    std::vector<Rat> terms(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long long i = 0; i < count; ++i) {
      const auto& [word, mass] = support[static_cast<std::size_t>(i)];
      terms[static_cast<std::size_t>(i)] =
          scalar_as<Rat>(mass) * detail::k_sup_scan<Rat>(phi, word, k_window).best;
    }
    Rat total(0);
    for (const Rat& t : terms) total += t;
    out.value = Scalar(Rat(total / make_rat(n, 1)));
    return out;
  }
  std::vector<double> terms(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (long long i = 0; i < count; ++i) {
    const auto& [word, mass] = support[static_cast<std::size_t>(i)];
    terms[static_cast<std::size_t>(i)] =
        scalar_as<double>(mass) * detail::k_sup_scan<double>(phi, word, k_window).best;
  }
  out.value = Scalar(deterministic_sum(terms) / static_cast<double>(n));
  return out;
}

namespace {

// One-sided norm estimate scanned around each candidate center. Exact
// structures ignore the centers: their certified scan already covers Z.
double mc_log_norm(const WeightFunction& phi, const Word& x,
                   const std::vector<long long>& centers, long long k_window) {
  if (phi.ksup().exact) return detail::k_sup_scan<double>(phi, x, k_window).best;
  long long n = x.size();
  double best = 0;
  bool first = true;
  for (long long c : centers) {
    Profile<double> prof = make_profile<double>(phi, c - k_window, c + k_window + n - 1);
    for (long long k = c - k_window; k <= c + k_window; ++k) {
      double total = 0;
      for (long long i = 0; i < n; ++i)
        total += prof.rows[static_cast<std::size_t>(k - (c - k_window) + i)]
                          [static_cast<std::size_t>(x[i])];
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
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
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
        mc_log_norm(phi, x, centers, k_window) / static_cast<double>(n);
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

}  // namespace shiftopt
