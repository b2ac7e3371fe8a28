#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "shiftopt/numeric.hpp"
#include "shiftopt/symbolic.hpp"

namespace shiftopt {

class WeightFunction;

// Data of the marker-word perturbation psi_A = sum of psi_ell over ell in A,
// where A unions per-level sets A_j = C_j \ (earlier intervals).
//
// Level j occupies the interval I_j = [k_j, k_j + n_j - N]; the B_j partition
// union(I_1..I_j) by earliest level, C_j collects the ell in I_j where z
// shows the marker word at ell - k_j, and membership in A is decided lazily
// from (level_of, marker match) rather than from materialized sets.
struct PerturbationPlan {
  Word omega;    // marker word, length N
  BiSequence z;
  int depth = 0;  // J
  long long k_search_window = 0;
  std::vector<long long> n;  // n[j-1] = n_j; n_1 = N, each later level strict per the 2^-(j+1) rule
  std::vector<long long> k;  // k[j-1] = k_j, argmax of the level window sum
  std::vector<Scalar> achieved_avg;  // (1/n_j) sum_i phi(z_i, k_j + i) at the chosen k_j
  std::vector<long long> count_a, count_b, count_c;

  int order() const { return static_cast<int>(omega.size()); }
  long long interval_lo(int j) const { return k[static_cast<std::size_t>(j - 1)]; }
  long long interval_hi(int j) const {
    return k[static_cast<std::size_t>(j - 1)] + n[static_cast<std::size_t>(j - 1)] - order();
  }

  // Earliest level whose interval contains ell; 0 when none does.
  int level_of(long long ell) const;
  bool in_A(long long ell) const;
  // Integer value of psi_A at (symbol a, index i).
  long long psi_A(int a, long long i) const;
  // Both symbol values at index i in one membership pass: {psi_A(0,i), psi_A(1,i)}.
  std::pair<long long, long long> psi_pair(long long i) const;

  // Materialized per-level sets, smallest first. Guarded by a size cap; the
  // growth checks never need them, they exist for inspection and tests.
  std::vector<long long> set_B(int j) const;
  std::vector<long long> set_C(int j) const;
  std::vector<long long> set_A(int j) const;

  // Support hull of psi_A: smallest interval outside which psi_A vanishes
  // is contained in [hull_lo, hull_hi].
  long long hull_lo() const;
  long long hull_hi() const;
};

// Single-marker bump: +1 on (omega_t, ell + t), -N on the complementary
// symbol, zero elsewhere. Returned as a Tabular weight.
WeightFunction psi_ell(const Word& omega, long long ell);

// Builds the level data for the perturbation: n_j by the smallest-integer
// rule (sum_{i<j} n_i) / n_j < 2^-(j+1), k_j by scanning the window sum of
// phi over [-k_search_window, k_search_window] (ties to the smallest k).
// Throws when omega never occurs in z[0, n_J) unless allow_empty is set.
PerturbationPlan build_plan(const WeightFunction& phi, const Word& omega, const BiSequence& z,
                            int depth, long long k_search_window, bool allow_empty = false);

// Structure of the k-sup problem for a weight function: whether the exact
// sup over all k is computable by a finite scan, the far-field period, and
// the interval holding all non-periodic local corrections.
struct KSup {
  bool exact = false;
  long long period = 1;
  std::optional<std::pair<long long, long long>> support;
};

class WeightFunction {
 public:
  struct Tabular {
    Scalar def0;
    Scalar def1;
    std::map<long long, std::array<Scalar, 2>> overrides;  // index -> values for a = 0, 1
  };
  struct OrbitInduced {
    BiSequence z;
    std::array<std::array<Scalar, 2>, 2> table;  // table[a][z_i]
  };
  struct Combo {
    std::vector<std::pair<Scalar, std::shared_ptr<const WeightFunction>>> terms;
  };
  struct Psi {
    std::shared_ptr<const PerturbationPlan> plan;
  };
  using Variant = std::variant<Tabular, OrbitInduced, Combo, Psi>;

  static WeightFunction tabular(Scalar def0, Scalar def1,
                                std::map<long long, std::array<Scalar, 2>> overrides = {});
  static WeightFunction orbit_induced(BiSequence z, std::array<std::array<Scalar, 2>, 2> table);
  static WeightFunction combo(std::vector<std::pair<Scalar, WeightFunction>> terms);
  static WeightFunction psi(std::shared_ptr<const PerturbationPlan> plan);

  template <class S>
  S eval(int a, long long i) const;

  // Far-field value: the eventually periodic part, valid outside support.
  // Requires ksup().exact.
  template <class S>
  S far_eval(int a, long long i) const;

  KSup ksup() const;
  // True when every stored scalar is exactly rational, i.e. the Rat paths work.
  bool is_exact() const;
  // Finite bound on sup |phi|, conservative for Combo.
  Scalar sup_abs_bound() const;

  const Variant& variant() const { return v_; }

 private:
  explicit WeightFunction(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// Dense table of weight values over an index range, the working format of
// every inner loop. rows[i - lo] = {phi(0, i), phi(1, i)}.
template <class S>
struct Profile {
  long long lo = 0;
  std::vector<std::array<S, 2>> rows;

  long long hi() const { return lo + static_cast<long long>(rows.size()) - 1; }
  const std::array<S, 2>& at(long long i) const {
    return rows[static_cast<std::size_t>(i - lo)];
  }
};

template <class S>
Profile<S> make_profile(const WeightFunction& phi, long long lo, long long hi);

template <class S>
Profile<S> make_far_profile(const WeightFunction& phi, long long lo, long long hi);

// Diagnostic for orbit-induced greedy tables: the least advantage
// phi(z_i, i) - phi(1 - z_i, i) over i in [lo, hi].
Scalar greedy_gap(const WeightFunction& phi, const BiSequence& z, long long lo, long long hi);

// sum_{0 <= i < n} phi(z_i, k + i), with a closed form over one lcm period
// when phi has an exact k-sup structure and z is periodic; direct scan
// (capped) otherwise.
template <class S>
S window_sum_along(const WeightFunction& phi, const BiSequence& z, long long k, long long n);

// #{m in [m_lo, m_hi] : z[m .. m+N) == omega}, closed form for periodic z.
long long count_marker_occurrences(const BiSequence& z, const Word& omega, long long m_lo,
                                   long long m_hi);

// sum_{0 <= i < n} psi_A(z_i, k + i) along the plan's own z. Integer-valued.
// Periodic z gets a per-residue closed form (levels with n_j ~ 1e8 stay
// cheap); other sequences fall back to a capped direct scan.
long long sum_psi_A_along_z(const PerturbationPlan& plan, long long k, long long n);

}  // namespace shiftopt
