#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftopt/lyapunov.hpp"
#include "shiftopt/measures.hpp"
#include "shiftopt/symbolic.hpp"
#include "shiftopt/weights.hpp"

namespace shiftopt {

// Rotation-coded weights: following the complement of the coding sequence
// costs nothing, every periodic word pays roughly half its sites.
struct GurvitsConfig {
  std::string gamma_spec = "golden";
  double alpha = 0.5;
  long long n = 10000;  // greedy window length
  int max_word_len = 10;
  long long min_total = 10000;  // every scanned product has |w| * m >= min_total
  long long k_window = 233;
};

struct GurvitsFibRow {
  long long length = 0;
  double rate = 0.0;
  Word word;
};

struct GurvitsReport {
  GurvitsConfig config;
  double jsr_lower_estimate = 0.0;  // rate along the complement window
  double best_word_rate = 0.0;
  Word best_word;
  double target_half_log_alpha = 0.0;
  double gap = 0.0;  // best_word_rate - target
  std::vector<GurvitsFibRow> fibonacci_rates;
};

GurvitsReport run_gurvits(const GurvitsConfig& config);

// Uniformly greedy weights along a periodic sequence: the Lyapunov exponent
// of every periodic orbit measure equals 1 minus its dbar distance to the
// orbit of the greedy sequence, exactly.
struct TechStrictlyConfig {
  Word z_word;
  int test_periods = 7;
};

struct TechStrictlyRow {
  Word mu_word;
  Rat lyapunov;
  Rat dbar;
  Rat one_minus_dbar;
  bool equal = false;
};

struct TechStrictlyReport {
  TechStrictlyConfig config;
  std::vector<TechStrictlyRow> rows;
  bool all_equal = false;
};

TechStrictlyReport run_tech_strictly(const TechStrictlyConfig& config);

// Two-scale block recursion where the growth rate along the sequence beats
// the Lyapunov exponent of the block-frequency measure: maximizing measures
// need not live where the mass is.
struct NomatherConfig {
  Word seed_b = Word::parse("0");
  Word seed_c = Word::parse("1");
  std::vector<long long> exponents = {4, 16, 64, 256, 1024};
  int j = 3;
  long long greedy_n = 100000;
  long long mc_n = 2000;
  long long mc_samples = 64;
  long long mc_k_window = 32;
  std::uint64_t seed = 1;
};

struct NomatherReport {
  NomatherConfig config;
  int depth = 0;
  std::vector<long long> block_len;  // |B_0| .. |B_depth|
  long long b_window_offset = 0;
  long long c_window_offset = 0;
  Rat f1_hat;  // 1-frequency of the C_j window
  Rat f2_hat;  // 1-frequency of the B_j window
  Rat separation;
  double target = 0.0;  // 1 + f1_hat
  long long greedy_offset = 0;
  long long greedy_ones = 0;
  Rat greedy_rate;  // 1 + ones / n, exact
  bool greedy_close = false;
  McResult mc_b;  // Lyapunov estimate for the B_j empirical measure
  McResult mc_c;  // same for the C_j empirical measure
  bool inequality_holds = false;  // mc_b bracket top < 1 + f1_hat - 0.1
  bool swap_reverses = false;     // mc_c mean exceeds mc_b mean
};

NomatherReport run_nomather(const NomatherConfig& config);

// Certified two-sided check of the variational inequality at finite n: the
// best exact periodic rate over short necklaces never exceeds the certified
// word-length-n upper bound.
struct SandwichReport {
  Rat best_periodic;
  Word best_word;
  Rat upper;
  Rat gap;  // upper - best_periodic
  bool holds = false;
};

SandwichReport variational_sandwich(const WeightFunction& phi, int max_period, long long n,
                                    long long k_window);

}  // namespace shiftopt
