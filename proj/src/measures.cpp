#include "shiftopt/measures.hpp"

#include <utility>
#include <vector>

namespace shiftopt {

namespace {

constexpr long long kMaxEmpiricalWindow = 1ll << 24;

void require_probability(const Scalar& s, const char* what) {
  if (s.exact) {
    if (*s.exact < 0 || *s.exact > 1) throw invalid_input(std::string(what) + " outside [0, 1]");
  } else if (!(s.value >= 0.0 && s.value <= 1.0)) {
    throw invalid_input(std::string(what) + " outside [0, 1]");
  }
}

bool scalar_near(const Scalar& a, const Scalar& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  double d = a.value - b.value;
  return d < 1e-12 && d > -1e-12;
}

}  // namespace

MeasureSpec MeasureSpec::periodic_orbit(Word w) {
  if (w.empty()) throw invalid_input("periodic orbit of an empty word");
  return MeasureSpec(PeriodicOrbit{std::move(w)});
}

MeasureSpec MeasureSpec::bernoulli(Scalar p) {
  require_probability(p, "Bernoulli parameter");
  return MeasureSpec(Bernoulli{std::move(p)});
}

MeasureSpec MeasureSpec::markov(std::array<std::array<Scalar, 2>, 2> P,
                                std::array<Scalar, 2> pi) {
  for (int a = 0; a < 2; ++a) {
    require_probability(P[a][0], "Markov transition");
    require_probability(P[a][1], "Markov transition");
    if (!scalar_near(P[a][0] + P[a][1], Scalar(1)))
      throw invalid_input("Markov row does not sum to 1");
  }
  require_probability(pi[0], "stationary mass");
  require_probability(pi[1], "stationary mass");
  if (!scalar_near(pi[0] + pi[1], Scalar(1))) throw invalid_input("stationary vector mass != 1");
  // pi P = pi
  for (int b = 0; b < 2; ++b) {
    Scalar lhs = pi[0] * P[0][b] + pi[1] * P[1][b];
    if (!scalar_near(lhs, pi[b])) throw invalid_input("vector is not stationary for P");
  }
  return MeasureSpec(Markov{std::move(P), std::move(pi)});
}

MeasureSpec MeasureSpec::sturmian(const std::string& gamma_spec) {
  return MeasureSpec(SturmianMeasure{gamma_spec, parse_gamma(gamma_spec)});
}

MeasureSpec MeasureSpec::empirical(BiSequence seq, long long a, long long n) {
  if (n < 1) throw invalid_input("empirical window must be nonempty");
  if (n > kMaxEmpiricalWindow) throw invalid_input("empirical window too large");
  return MeasureSpec(Empirical{std::move(seq), a, n});
}

bool MeasureSpec::is_exact() const {
  return std::visit(
      [](const auto& m) -> bool {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PeriodicOrbit> || std::is_same_v<T, Empirical>) {
          return true;
        } else if constexpr (std::is_same_v<T, Bernoulli>) {
          return m.p.is_exact();
        } else if constexpr (std::is_same_v<T, Markov>) {
          for (const auto& row : m.P)
            for (const auto& s : row)
              if (!s.is_exact()) return false;
          return m.pi[0].is_exact() && m.pi[1].is_exact();
        } else {
          return false;
        }
      },
      v_);
}

namespace {

// Disjoint non-wrapping arcs on [0, 1); a wrapping arc appears as two pieces.
using Arcs = std::vector<std::pair<mpf_class, mpf_class>>;

Arcs interval_arcs(const mpf_class& shift, int symbol) {
  // Coding interval for the symbol, translated by shift (already in [0,1)).
  mpf_class lo(0, kCirclePrecBits), hi(0, kCirclePrecBits);
  if (symbol == 1) {
    lo = shift;
    hi = shift + 0.5;
  } else {
    lo = shift + 0.5;
    hi = shift + 1;
  }
  Arcs out;
  if (lo >= 1) {
    out.emplace_back(lo - 1, hi - 1);
  } else if (hi > 1) {
    out.emplace_back(lo, mpf_class(1, kCirclePrecBits));
    out.emplace_back(mpf_class(0, kCirclePrecBits), hi - 1);
  } else {
    out.emplace_back(lo, hi);
  }
  return out;
}

Arcs intersect_arcs(const Arcs& a, const Arcs& b) {
  Arcs out;
  for (const auto& [alo, ahi] : a)
    for (const auto& [blo, bhi] : b) {
      mpf_class lo = alo > blo ? alo : blo;
      mpf_class hi = ahi < bhi ? ahi : bhi;
      if (lo < hi) out.emplace_back(lo, hi);
    }
  return out;
}

double sturmian_cylinder(const mpf_class& gamma, const Word& w) {
  mpf_class shift(0, kCirclePrecBits);
  Arcs arcs = interval_arcs(shift, w[0]);
  for (long long i = 1; i < w.size(); ++i) {
    shift -= gamma;
    if (shift < 0) shift += 1;
    arcs = intersect_arcs(arcs, interval_arcs(shift, w[i]));
    if (arcs.empty()) return 0.0;
  }
  mpf_class total(0, kCirclePrecBits);
  for (const auto& [lo, hi] : arcs) total += hi - lo;
  return total.get_d();
}

}  // namespace

Scalar cylinder_prob(const MeasureSpec& mu, const Word& w) {
  if (w.empty()) return Scalar(Rat(1));
  return std::visit(
      [&](const auto& m) -> Scalar {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MeasureSpec::PeriodicOrbit>) {
          return Scalar(Rat(make_rat(cyclic_count_occurrences(m.word, w), m.word.size())));
        } else if constexpr (std::is_same_v<T, MeasureSpec::Bernoulli>) {
          Scalar q(Rat(1));
          Scalar p0 = Scalar(1) + (-m.p);
          for (long long i = 0; i < w.size(); ++i) q = q * (w[i] ? m.p : p0);
          return q;
        } else if constexpr (std::is_same_v<T, MeasureSpec::Markov>) {
          Scalar q = m.pi[static_cast<std::size_t>(w[0])];
          for (long long i = 0; i + 1 < w.size(); ++i)
            q = q * m.P[static_cast<std::size_t>(w[i])][static_cast<std::size_t>(w[i + 1])];
          return q;
        } else if constexpr (std::is_same_v<T, MeasureSpec::SturmianMeasure>) {
          return Scalar(sturmian_cylinder(m.gamma, w));
        } else {
          Word win = m.seq.window(m.a, m.a + m.n - 1);
          return Scalar(Rat(make_rat(cyclic_count_occurrences(win, w), m.n)));
        }
      },
      mu.variant());
}

Word sample_word(const MeasureSpec& mu, long long n, std::uint64_t seed) {
  if (n < 1) throw invalid_input("sample length must be positive");
  Rng rng(seed);
  return std::visit(
      [&](const auto& m) -> Word {
        using T = std::decay_t<decltype(m)>;
        std::vector<std::uint8_t> bits;
        bits.reserve(static_cast<std::size_t>(n));
        if constexpr (std::is_same_v<T, MeasureSpec::PeriodicOrbit>) {
          long long r = static_cast<long long>(rng.below(static_cast<std::uint64_t>(m.word.size())));
          return m.word.cyclic_window(r, n);
        } else if constexpr (std::is_same_v<T, MeasureSpec::Bernoulli>) {
          double p = m.p.value;
          for (long long i = 0; i < n; ++i) bits.push_back(rng.u01() < p ? 1 : 0);
          return Word::from_symbols(std::move(bits));
        } else if constexpr (std::is_same_v<T, MeasureSpec::Markov>) {
          int cur = rng.u01() < m.pi[0].value ? 0 : 1;
          bits.push_back(static_cast<std::uint8_t>(cur));
          for (long long i = 1; i < n; ++i) {
            cur = rng.u01() < m.P[static_cast<std::size_t>(cur)][0].value ? 0 : 1;
            bits.push_back(static_cast<std::uint8_t>(cur));
          }
          return Word::from_symbols(std::move(bits));
        } else if constexpr (std::is_same_v<T, MeasureSpec::SturmianMeasure>) {
          mpf_class t(rng.u01(), kCirclePrecBits);
          for (long long i = 0; i < n; ++i) {
            bits.push_back(t <= 0.5 ? 1 : 0);
            t += m.gamma;
            if (t >= 1) t -= 1;
          }
          return Word::from_symbols(std::move(bits));
        } else {
          throw invalid_input("empirical measures are data windows; they cannot be sampled");
        }
      },
      mu.variant());
}

}  // namespace shiftopt
