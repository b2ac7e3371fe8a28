#include "shiftopt/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "shiftopt/cocycle.hpp"
#include "shiftopt/dbar.hpp"
#include "shiftopt/jsr.hpp"

namespace shiftopt {

namespace {

WeightFunction match_weight(const BiSequence& z, Scalar match0, Scalar match1, Scalar miss) {
  std::array<std::array<Scalar, 2>, 2> table{};
  table[0][0] = match0;
  table[0][1] = miss;
  table[1][0] = miss;
  table[1][1] = match1;
  return WeightFunction::orbit_induced(z, table);
}

}  // namespace

GurvitsReport run_gurvits(const GurvitsConfig& config) {
  if (!(config.alpha > 0.0 && config.alpha < 1.0))
    throw invalid_input("alpha must lie in (0, 1)");
  if (config.n < 1 || config.max_word_len < 1 || config.min_total < 1 || config.k_window < 0)
    throw invalid_input("gurvits sizes must be positive");
  GurvitsReport r;
  r.config = config;
  const double log_alpha = std::log(config.alpha);
  r.target_half_log_alpha = 0.5 * log_alpha;

  BiSequence z = BiSequence::sturmian(config.gamma_spec, 0);
  WeightFunction phi = match_weight(z, Scalar(log_alpha), Scalar(log_alpha), Scalar(0.0));

  // Following the complement of the coding sequence makes every factor 1, so
  // the aligned window sum vanishes and no shift improves on it.
  Word complement = z.window(0, config.n - 1).complemented();
  Bounds greedy = log_norm(phi, complement, config.k_window);
  r.jsr_lower_estimate = scalar_as<double>(greedy.lower) / static_cast<double>(config.n);

  std::vector<Word> words = primitive_necklaces(config.max_word_len);
  const long long count = static_cast<long long>(words.size());
  std::vector<double> rates(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long i = 0; i < count; ++i) {
    const Word& w = words[static_cast<std::size_t>(i)];
    const long long m = (config.min_total + w.size() - 1) / w.size();
    rates[static_cast<std::size_t>(i)] =
        scalar_as<double>(periodic_log_spectral_radius(phi, w, m, config.k_window).lower);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < rates.size(); ++i)
    if (rates[i] > rates[best]) best = i;
  r.best_word_rate = rates[best];
  r.best_word = words[best];
  r.gap = r.best_word_rate - r.target_half_log_alpha;

  for (long long len : {1LL, 2LL, 3LL, 5LL, 8LL, 13LL}) {
    if (len > config.max_word_len) break;
    GurvitsFibRow row;
    row.length = len;
    bool any = false;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (words[i].size() != len) continue;
      if (!any || rates[i] > row.rate) {
        row.rate = rates[i];
        row.word = words[i];
        any = true;
      }
    }
    r.fibonacci_rates.push_back(std::move(row));
  }
  return r;
}

TechStrictlyReport run_tech_strictly(const TechStrictlyConfig& config) {
  if (config.z_word.empty()) throw invalid_input("greedy sequence word is empty");
  if (config.test_periods < 1 || config.test_periods > 12)
    throw invalid_input("test periods must lie in [1, 12]");
  TechStrictlyReport r;
  r.config = config;

  BiSequence z = BiSequence::periodic(config.z_word);
  WeightFunction phi = match_weight(z, Scalar(1), Scalar(1), Scalar(0));

  std::vector<Word> words = primitive_necklaces(config.test_periods);
  const long long count = static_cast<long long>(words.size());
  r.rows.resize(static_cast<std::size_t>(count));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long long i = 0; i < count; ++i) {
    const Word& w = words[static_cast<std::size_t>(i)];
    TechStrictlyRow row;
    row.mu_word = w;
    row.lyapunov = lyapunov_periodic_exact(phi, w);
    row.dbar = dbar_periodic_exact(config.z_word, w);
    row.one_minus_dbar = Rat(1) - row.dbar;
    row.equal = row.lyapunov == row.one_minus_dbar;
    r.rows[static_cast<std::size_t>(i)] = std::move(row);
  }
  r.all_equal = std::all_of(r.rows.begin(), r.rows.end(),
                            [](const TechStrictlyRow& row) { return row.equal; });
  return r;
}

NomatherReport run_nomather(const NomatherConfig& config) {
  const int depth = static_cast<int>(config.exponents.size());
  if (config.j < 1 || config.j >= depth)
    throw invalid_input("level must lie strictly inside the block depth");
  if (config.greedy_n < 1 || config.mc_n < 1 || config.mc_samples < 1)
    throw invalid_input("nomather sizes must be positive");
  NomatherReport r;
  r.config = config;
  r.depth = depth;

  BiSequence z =
      BiSequence::block_recursive(config.seed_b, config.seed_c, config.exponents, depth);
  const auto* block = z.as_block();
  r.block_len = block->len_b;
  const long long level_len = block->len_b[static_cast<std::size_t>(config.j)];

  // Matching the sequence pays 2 on a 1 and 1 on a 0; straying pays nothing.
  WeightFunction phi = match_weight(z, Scalar(1), Scalar(2), Scalar(0));

  // One high-scale block of each flavor: B_j is the prefix, the first C_j
  // sits right after the B_j^(a_{j+1}) run.
  r.b_window_offset = 0;
  r.c_window_offset = config.exponents[static_cast<std::size_t>(config.j)] * level_len;
  MeasureSpec mu_b = MeasureSpec::empirical(z, r.b_window_offset, level_len);
  MeasureSpec mu_c = MeasureSpec::empirical(z, r.c_window_offset, level_len);
  const Word one = Word::parse("1");
  r.f1_hat = scalar_as<Rat>(cylinder_prob(mu_c, one));
  r.f2_hat = scalar_as<Rat>(cylinder_prob(mu_b, one));
  r.separation = r.f1_hat - r.f2_hat;
  r.target = 1.0 + r.f1_hat.get_d();

  // Greedy window inside the top-level C block, where 1s dominate. The
  // aligned window sum is pointwise maximal, so its rate is exact.
  const long long top = depth - 1;
  r.greedy_offset = config.exponents[static_cast<std::size_t>(top)] *
                    block->len_b[static_cast<std::size_t>(top)];
  Word window = z.window(r.greedy_offset, r.greedy_offset + config.greedy_n - 1);
  r.greedy_ones = window.count_ones();
  r.greedy_rate = Rat(1) + make_rat(r.greedy_ones, config.greedy_n);
  r.greedy_close = std::abs(r.greedy_rate.get_d() - r.target) <= 0.05;

  r.mc_b = lyapunov_mc(phi, mu_b, config.mc_n, config.mc_samples, config.mc_k_window,
                       config.seed);
  r.mc_c = lyapunov_mc(phi, mu_c, config.mc_n, config.mc_samples, config.mc_k_window,
                       config.seed);
  r.inequality_holds = r.mc_b.upper < r.target - 0.1;
  r.swap_reverses = r.mc_c.mean > r.mc_b.mean;
  return r;
}

SandwichReport variational_sandwich(const WeightFunction& phi, int max_period, long long n,
                                    long long k_window) {
  if (!phi.is_exact() || !phi.ksup().exact)
    throw invalid_input("sandwich check needs exact weights with a certified scan");
  SandwichReport r;
  JsrLower lower = jsr_lower(phi, primitive_necklaces(max_period), 1, k_window);
  r.best_periodic = scalar_as<Rat>(lower.value);
  r.best_word = lower.witness;
  JsrUpper upper = jsr_upper(phi, n, k_window);
  r.upper = scalar_as<Rat>(upper.value);
  r.gap = r.upper - r.best_periodic;
  r.holds = r.gap >= 0;
  return r;
}

}  // namespace shiftopt
