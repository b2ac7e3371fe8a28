#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace shiftopt {

// Exact rational scalar. All certified equalities in the library are stated
// over Rat; doubles only appear on flagged estimate paths.
using Rat = mpq_class;

// Circle arithmetic (rotation coding, cylinder arcs) runs at fixed extended
// precision. 256 bits keeps 1e7 accumulated rotation steps far above the
// endpoint guard.
inline constexpr int kCirclePrecBits = 256;

// An evaluation closer than this to an interval endpoint (without being an
// exact hit) aborts instead of guessing the symbol.
inline constexpr double kEndpointGuard = 5.42101086242752217e-20;  // 2^-64

struct invalid_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A real number that remembers whether it is exactly rational. The double
// mirror is always populated; `exact` is the authority when present.
struct Scalar {
  double value = 0.0;
  std::optional<Rat> exact;

  Scalar() : value(0.0), exact(Rat(0)) {}
  Scalar(double v) : value(v) {}
  Scalar(Rat q) : value(q.get_d()), exact(std::move(q)) {}
  Scalar(int v) : Scalar(Rat(v)) {}
  Scalar(long long v) : Scalar(Rat(static_cast<long>(v))) {}

  bool is_exact() const { return exact.has_value(); }

  Scalar operator+(const Scalar& o) const {
    if (exact && o.exact) return Scalar(Rat(*exact + *o.exact));
    return Scalar(value + o.value);
  }
  Scalar operator-() const {
    if (exact) return Scalar(Rat(-*exact));
    return Scalar(-value);
  }
  Scalar operator*(const Scalar& o) const {
    if (exact && o.exact) return Scalar(Rat(*exact * *o.exact));
    return Scalar(value * o.value);
  }
  Scalar abs() const {
    if (exact) return Scalar(Rat(::abs(*exact)));
    return Scalar(value < 0 ? -value : value);
  }
};

template <class S>
S scalar_as(const Scalar& s);

template <>
inline double scalar_as<double>(const Scalar& s) {
  return s.value;
}

template <>
inline Rat scalar_as<Rat>(const Scalar& s) {
  if (!s.exact) throw invalid_input("rational path requested on a non-exact value");
  return *s.exact;
}

Rat rat_from_string(const std::string& text);
std::string rat_to_string(const Rat& q);

inline Rat make_rat(long long num, long long den) {
  Rat q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// Parses either a JSON-style number already converted to string, a "p/q"
// rational, or an integer. Used by all spec readers.
Scalar scalar_from_string(const std::string& text);

// Mathematical modulo: result in [0, m) for m > 0.
inline long long imod(long long i, long long m) {
  long long r = i % m;
  return r < 0 ? r + m : r;
}

long long checked_lcm(long long a, long long b);

// --- deterministic randomness ------------------------------------------
//
// Sampling must be byte-identical across runs and thread counts, so every
// sample index gets its own generator derived from (seed, index) and no
// generator is shared between loop iterations.

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // Warm up so that small seeds do not produce small first outputs.
    next();
    next();
  }
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed + 0x9e3779b97f4a7c15ull * (index + 1)));
  }
  std::uint64_t next() {
    state_ = splitmix64_state(state_);
    return splitmix64_out(state_);
  }
  // Uniform in [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, n) by rejection; deterministic across platforms.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw internal_error("Rng::below(0)");
    std::uint64_t mask = ~0ull >> __builtin_clzll(n | 1);
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < n) return v;
    }
  }
  int bit() { return static_cast<int>(next() >> 63); }

 private:
  static std::uint64_t splitmix64_state(std::uint64_t s) {
    return s + 0x9e3779b97f4a7c15ull;
  }
  static std::uint64_t splitmix64_out(std::uint64_t s) {
    s ^= s >> 30;
    s *= 0xbf58476d1ce4e5b9ull;
    s ^= s >> 27;
    s *= 0x94d049bb133111ebull;
    s ^= s >> 31;
    return s;
  }
  std::uint64_t state_;
};

// Order-fixed parallel sum: values land in per-index slots, the final
// reduction is sequential, so the result does not depend on thread count.
double deterministic_sum(const std::vector<double>& values);

}  // namespace shiftopt
