#pragma once

#include <array>
#include <string>
#include <variant>

#include "shiftopt/numeric.hpp"
#include "shiftopt/symbolic.hpp"

namespace shiftopt {

// A shift-invariant measure given as sampleable/enumerable data. Cylinder
// probabilities are the sole interface the growth-rate code consumes.
class MeasureSpec {
 public:
  struct PeriodicOrbit {
    Word word;  // uniform measure on the orbit of word^infinity
  };
  struct Bernoulli {
    Scalar p;  // P(symbol = 1)
  };
  struct Markov {
    std::array<std::array<Scalar, 2>, 2> P;  // row-stochastic transitions
    std::array<Scalar, 2> pi;                // stationary row vector, pi P = pi
  };
  // Unique invariant measure of the rotation coding: mu([w]) is the arc
  // length of the intersection of the rotated coding intervals.
  struct SturmianMeasure {
    std::string gamma_spec;
    mpf_class gamma;
  };
  // Periodized window seq[a, a+n): cylinder masses are circular frequencies,
  // which keeps the measure exactly shift-invariant and consistent.
  struct Empirical {
    BiSequence seq;
    long long a = 0;
    long long n = 0;
  };
  using Variant = std::variant<PeriodicOrbit, Bernoulli, Markov, SturmianMeasure, Empirical>;

  static MeasureSpec periodic_orbit(Word w);
  static MeasureSpec bernoulli(Scalar p);
  static MeasureSpec markov(std::array<std::array<Scalar, 2>, 2> P, std::array<Scalar, 2> pi);
  static MeasureSpec sturmian(const std::string& gamma_spec);
  static MeasureSpec empirical(BiSequence seq, long long a, long long n);

  // True when cylinder masses come out exactly rational.
  bool is_exact() const;

  const Variant& variant() const { return v_; }

 private:
  explicit MeasureSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// mu([w]): exact rational for PeriodicOrbit and Empirical, exact for
// Bernoulli/Markov with exact parameters, extended-precision arc length
// (a non-exact Scalar) for SturmianMeasure. The empty word has mass 1.
Scalar cylinder_prob(const MeasureSpec& mu, const Word& w);

// Length-n draw from the n-cylinder distribution, deterministic in seed.
// Empirical variants are data windows, not models, and are rejected.
Word sample_word(const MeasureSpec& mu, long long n, std::uint64_t seed);

}  // namespace shiftopt
