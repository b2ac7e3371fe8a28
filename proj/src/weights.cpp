#include "shiftopt/weights.hpp"

#include <algorithm>

namespace shiftopt {

namespace {

constexpr long long kMaxDirectScan = 1ll << 22;
constexpr long long kMaxMaterializedLevel = 1ll << 22;

template <class S>
S s_of(long long v);
template <>
double s_of<double>(long long v) {
  return static_cast<double>(v);
}
template <>
Rat s_of<Rat>(long long v) {
  return make_rat(v, 1);
}

template <class S>
S s_mul_count(const S& s, long long count) {
  return s * s_of<S>(count);
}

// Floor division for b > 0.
long long fdiv(long long a, long long b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

// #{m in [lo, hi] : m == rho (mod p)}
long long residue_count(long long lo, long long hi, long long rho, long long p) {
  if (lo > hi) return 0;
  return fdiv(hi - rho, p) - fdiv(lo - 1 - rho, p);
}

}  // namespace

// --- WeightFunction ------------------------------------------------------

WeightFunction WeightFunction::tabular(Scalar def0, Scalar def1,
                                       std::map<long long, std::array<Scalar, 2>> overrides) {
  return WeightFunction(Tabular{std::move(def0), std::move(def1), std::move(overrides)});
}

WeightFunction WeightFunction::orbit_induced(BiSequence z,
                                             std::array<std::array<Scalar, 2>, 2> table) {
  return WeightFunction(OrbitInduced{std::move(z), std::move(table)});
}

WeightFunction WeightFunction::combo(std::vector<std::pair<Scalar, WeightFunction>> terms) {
  if (terms.empty()) throw invalid_input("combo needs at least one term");
  Combo c;
  c.terms.reserve(terms.size());
  for (auto& [scale, term] : terms)
    c.terms.emplace_back(std::move(scale), std::make_shared<const WeightFunction>(std::move(term)));
  return WeightFunction(std::move(c));
}

WeightFunction WeightFunction::psi(std::shared_ptr<const PerturbationPlan> plan) {
  if (!plan) throw invalid_input("psi weight needs a plan");
  return WeightFunction(Psi{std::move(plan)});
}

template <class S>
S WeightFunction::eval(int a, long long i) const {
  if (a != 0 && a != 1) throw invalid_input("symbol out of range");
  return std::visit(
      [&](const auto& w) -> S {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Tabular>) {
          auto it = w.overrides.find(i);
          if (it != w.overrides.end()) return scalar_as<S>(it->second[static_cast<std::size_t>(a)]);
          return scalar_as<S>(a ? w.def1 : w.def0);
        } else if constexpr (std::is_same_v<T, OrbitInduced>) {
          return scalar_as<S>(w.table[static_cast<std::size_t>(a)]
                                     [static_cast<std::size_t>(w.z.symbol(i))]);
        } else if constexpr (std::is_same_v<T, Combo>) {
          S total = s_of<S>(0);
          for (const auto& [scale, term] : w.terms)
            total += scalar_as<S>(scale) * term->template eval<S>(a, i);
          return total;
        } else {
          return s_of<S>(w.plan->psi_A(a, i));
        }
      },
      v_);
}

template <class S>
S WeightFunction::far_eval(int a, long long i) const {
  if (a != 0 && a != 1) throw invalid_input("symbol out of range");
  return std::visit(
      [&](const auto& w) -> S {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Tabular>) {
          return scalar_as<S>(a ? w.def1 : w.def0);
        } else if constexpr (std::is_same_v<T, OrbitInduced>) {
          return scalar_as<S>(w.table[static_cast<std::size_t>(a)]
                                     [static_cast<std::size_t>(w.z.symbol(i))]);
        } else if constexpr (std::is_same_v<T, Combo>) {
          S total = s_of<S>(0);
          for (const auto& [scale, term] : w.terms)
            total += scalar_as<S>(scale) * term->template far_eval<S>(a, i);
          return total;
        } else {
          return s_of<S>(0);
        }
      },
      v_);
}

KSup WeightFunction::ksup() const {
  return std::visit(
      [&](const auto& w) -> KSup {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Tabular>) {
          KSup k{true, 1, std::nullopt};
          if (!w.overrides.empty())
            k.support = std::pair(w.overrides.begin()->first, w.overrides.rbegin()->first);
          return k;
        } else if constexpr (std::is_same_v<T, OrbitInduced>) {
          auto p = w.z.periodic_period();
          if (!p) return KSup{false, 1, std::nullopt};
          return KSup{true, *p, std::nullopt};
        } else if constexpr (std::is_same_v<T, Combo>) {
          KSup merged{true, 1, std::nullopt};
          for (const auto& [scale, term] : w.terms) {
            KSup k = term->ksup();
            merged.exact = merged.exact && k.exact;
            if (!merged.exact) return KSup{false, 1, std::nullopt};
            merged.period = checked_lcm(merged.period, k.period);
            if (k.support) {
              if (!merged.support)
                merged.support = k.support;
              else
                merged.support = std::pair(std::min(merged.support->first, k.support->first),
                                           std::max(merged.support->second, k.support->second));
            }
          }
          return merged;
        } else {
          return KSup{true, 1, std::pair(w.plan->hull_lo(), w.plan->hull_hi())};
        }
      },
      v_);
}

bool WeightFunction::is_exact() const {
  return std::visit(
      [&](const auto& w) -> bool {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Tabular>) {
          if (!w.def0.is_exact() || !w.def1.is_exact()) return false;
          for (const auto& [i, pair] : w.overrides)
            if (!pair[0].is_exact() || !pair[1].is_exact()) return false;
          return true;
        } else if constexpr (std::is_same_v<T, OrbitInduced>) {
          for (const auto& row : w.table)
            for (const auto& s : row)
              if (!s.is_exact()) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Combo>) {
          for (const auto& [scale, term] : w.terms)
            if (!scale.is_exact() || !term->is_exact()) return false;
          return true;
        } else {
          return true;
        }
      },
      v_);
}

Scalar WeightFunction::sup_abs_bound() const {
  auto smax = [](const Scalar& a, const Scalar& b) {
    if (a.exact && b.exact) return *a.exact >= *b.exact ? a : b;
    return a.value >= b.value ? a : b;
  };
  return std::visit(
      [&](const auto& w) -> Scalar {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Tabular>) {
          Scalar m = smax(w.def0.abs(), w.def1.abs());
          for (const auto& [i, pair] : w.overrides)
            m = smax(m, smax(pair[0].abs(), pair[1].abs()));
          return m;
        } else if constexpr (std::is_same_v<T, OrbitInduced>) {
          Scalar m(0);
          for (const auto& row : w.table)
            for (const auto& s : row) m = smax(m, s.abs());
          return m;
        } else if constexpr (std::is_same_v<T, Combo>) {
          Scalar total(0);
          for (const auto& [scale, term] : w.terms)
            total = total + scale.abs() * term->sup_abs_bound();
          return total;
        } else {
          long long N = w.plan->order();
          return Scalar(make_rat(N * N, 1));
        }
      },
      v_);
}

// --- profiles ------------------------------------------------------------

namespace {

template <class S>
void add_profile(const WeightFunction& phi, const S& scale, Profile<S>& out, bool far_field) {
  long long lo = out.lo;
  long long len = static_cast<long long>(out.rows.size());
  std::visit(
      [&](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, WeightFunction::Tabular>) {
          S v0 = scale * scalar_as<S>(w.def0);
          S v1 = scale * scalar_as<S>(w.def1);
          for (auto& row : out.rows) {
            row[0] += v0;
            row[1] += v1;
          }
          if (!far_field) {
            auto it = w.overrides.lower_bound(lo);
            for (; it != w.overrides.end() && it->first < lo + len; ++it) {
              auto& row = out.rows[static_cast<std::size_t>(it->first - lo)];
              row[0] += scale * scalar_as<S>(it->second[0]) - v0;
              row[1] += scale * scalar_as<S>(it->second[1]) - v1;
            }
          }
        } else if constexpr (std::is_same_v<T, WeightFunction::OrbitInduced>) {
          Word zw = w.z.window(lo, lo + len - 1);
          std::array<std::array<S, 2>, 2> t;
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              t[a][b] = scale * scalar_as<S>(w.table[static_cast<std::size_t>(a)]
                                                    [static_cast<std::size_t>(b)]);
          for (long long i = 0; i < len; ++i) {
            int b = zw[i];
            out.rows[static_cast<std::size_t>(i)][0] += t[0][b];
            out.rows[static_cast<std::size_t>(i)][1] += t[1][b];
          }
        } else if constexpr (std::is_same_v<T, WeightFunction::Combo>) {
          for (const auto& [s, term] : w.terms)
            add_profile<S>(*term, scale * scalar_as<S>(s), out, far_field);
        } else {
          if (far_field) return;  // psi_A has no far field
          for (long long i = 0; i < len; ++i) {
            auto [p0, p1] = w.plan->psi_pair(lo + i);
            out.rows[static_cast<std::size_t>(i)][0] += s_mul_count<S>(scale, p0);
            out.rows[static_cast<std::size_t>(i)][1] += s_mul_count<S>(scale, p1);
          }
        }
      },
      phi.variant());
}

}  // namespace

template <class S>
Profile<S> make_profile(const WeightFunction& phi, long long lo, long long hi) {
  if (lo > hi) throw invalid_input("empty profile range");
  Profile<S> p;
  p.lo = lo;
  p.rows.assign(static_cast<std::size_t>(hi - lo + 1), {s_of<S>(0), s_of<S>(0)});
  add_profile<S>(phi, s_of<S>(1), p, false);
  return p;
}

template <class S>
Profile<S> make_far_profile(const WeightFunction& phi, long long lo, long long hi) {
  if (lo > hi) throw invalid_input("empty profile range");
  Profile<S> p;
  p.lo = lo;
  p.rows.assign(static_cast<std::size_t>(hi - lo + 1), {s_of<S>(0), s_of<S>(0)});
  add_profile<S>(phi, s_of<S>(1), p, true);
  return p;
}

template <class S>
S window_sum_along(const WeightFunction& phi, const BiSequence& z, long long k, long long n) {
  if (n <= 0) throw invalid_input("window sum over empty range");
  KSup ks = phi.ksup();
  auto pz = z.periodic_period();
  if (ks.exact && pz) {
    long long L = checked_lcm(*pz, ks.period);
    Word zw = z.window(0, L - 1);
    Profile<S> far = make_far_profile<S>(phi, k, k + L - 1);
    S cycle = s_of<S>(0);
    for (long long i = 0; i < L; ++i) cycle += far.rows[static_cast<std::size_t>(i)][zw.cyclic(i)];
    S total = s_mul_count<S>(cycle, n / L);
    for (long long i = 0; i < n % L; ++i)
      total += far.rows[static_cast<std::size_t>(i)][zw[i]];
    if (ks.support) {
      long long lo = std::max(ks.support->first - k, 0ll);
      long long hi = std::min(ks.support->second - k, n - 1);
      for (long long i = lo; i <= hi; ++i) {
        int a = zw.cyclic(i);
        total += phi.eval<S>(a, k + i) - phi.far_eval<S>(a, k + i);
      }
    }
    return total;
  }
  if (n > kMaxDirectScan)
    throw invalid_input("window sum needs periodic structure beyond the direct-scan cap");
  Word zw = z.window(0, n - 1);
  Profile<S> prof = make_profile<S>(phi, k, k + n - 1);
  S total = s_of<S>(0);
  for (long long i = 0; i < n; ++i) total += prof.rows[static_cast<std::size_t>(i)][zw[i]];
  return total;
}

long long count_marker_occurrences(const BiSequence& z, const Word& omega, long long m_lo,
                                   long long m_hi) {
  if (m_lo > m_hi) return 0;
  long long N = omega.size();
  auto pz = z.periodic_period();
  if (pz) {
    long long p = *pz;
    Word zw = z.window(0, p + N - 2 >= 0 ? p + N - 2 : 0);
    long long total = 0;
    for (long long rho = 0; rho < p; ++rho) {
      bool hit = true;
      for (long long t = 0; t < N && hit; ++t) hit = zw.cyclic(rho + t) == omega[t];
      if (hit) total += residue_count(m_lo, m_hi, imod(rho, p), p);
    }
    return total;
  }
  if (m_hi - m_lo + N > kMaxDirectScan)
    throw invalid_input("occurrence count needs periodic structure beyond the direct-scan cap");
  Word zw = z.window(m_lo, m_hi + N - 1);
  long long total = 0;
  for (long long m = 0; m <= m_hi - m_lo; ++m) {
    bool hit = true;
    for (long long t = 0; t < N && hit; ++t) hit = zw[m + t] == omega[t];
    total += hit;
  }
  return total;
}

// --- PerturbationPlan ----------------------------------------------------

int PerturbationPlan::level_of(long long ell) const {
  for (int j = 1; j <= depth; ++j)
    if (ell >= interval_lo(j) && ell <= interval_hi(j)) return j;
  return 0;
}

bool PerturbationPlan::in_A(long long ell) const {
  int j = level_of(ell);
  if (j == 0) return false;
  long long m = ell - k[static_cast<std::size_t>(j - 1)];
  for (int t = 0; t < order(); ++t)
    if (z.symbol(m + t) != omega[t]) return false;
  return true;
}

long long PerturbationPlan::psi_A(int a, long long i) const {
  int N = order();
  long long v = 0;
  for (long long ell = i - N + 1; ell <= i; ++ell) {
    if (!in_A(ell)) continue;
    v += (a == omega[i - ell]) ? 1 : -N;
  }
  return v;
}

std::pair<long long, long long> PerturbationPlan::psi_pair(long long i) const {
  int N = order();
  long long v0 = 0, v1 = 0;
  for (long long ell = i - N + 1; ell <= i; ++ell) {
    if (!in_A(ell)) continue;
    if (omega[i - ell] == 0) {
      v0 += 1;
      v1 -= N;
    } else {
      v1 += 1;
      v0 -= N;
    }
  }
  return {v0, v1};
}

std::vector<long long> PerturbationPlan::set_B(int j) const {
  if (j < 1 || j > depth) throw invalid_input("level out of range");
  if (n[static_cast<std::size_t>(j - 1)] > kMaxMaterializedLevel)
    throw invalid_input("level too large to materialize");
  std::vector<long long> out;
  for (long long ell = interval_lo(j); ell <= interval_hi(j); ++ell)
    if (level_of(ell) == j) out.push_back(ell);
  return out;
}

std::vector<long long> PerturbationPlan::set_C(int j) const {
  if (j < 1 || j > depth) throw invalid_input("level out of range");
  if (n[static_cast<std::size_t>(j - 1)] > kMaxMaterializedLevel)
    throw invalid_input("level too large to materialize");
  std::vector<long long> out;
  for (long long ell = interval_lo(j); ell <= interval_hi(j); ++ell) {
    long long m = ell - k[static_cast<std::size_t>(j - 1)];
    bool hit = true;
    for (int t = 0; t < order() && hit; ++t) hit = z.symbol(m + t) == omega[t];
    if (hit) out.push_back(ell);
  }
  return out;
}

std::vector<long long> PerturbationPlan::set_A(int j) const {
  std::vector<long long> out;
  for (long long ell : set_C(j))
    if (level_of(ell) == j) out.push_back(ell);
  return out;
}

long long PerturbationPlan::hull_lo() const {
  long long lo = interval_lo(1);
  for (int j = 2; j <= depth; ++j) lo = std::min(lo, interval_lo(j));
  return lo;
}

long long PerturbationPlan::hull_hi() const {
  long long hi = interval_hi(1) + order() - 1;
  for (int j = 2; j <= depth; ++j) hi = std::max(hi, interval_hi(j) + order() - 1);
  return hi;
}

WeightFunction psi_ell(const Word& omega, long long ell) {
  long long N = omega.size();
  std::map<long long, std::array<Scalar, 2>> ov;
  for (long long t = 0; t < N; ++t) {
    std::array<Scalar, 2> pair{Scalar(0), Scalar(0)};
    pair[static_cast<std::size_t>(omega[t])] = Scalar(1);
    pair[static_cast<std::size_t>(1 - omega[t])] = Scalar(make_rat(-N, 1));
    ov[ell + t] = pair;
  }
  return WeightFunction::tabular(Scalar(0), Scalar(0), std::move(ov));
}

namespace {

// Disjoint sorted interval list with merge and intersection bookkeeping.
using Intervals = std::vector<std::pair<long long, long long>>;

Intervals intersect(const Intervals& merged, long long lo, long long hi) {
  Intervals out;
  for (const auto& [a, b] : merged) {
    long long x = std::max(a, lo), y = std::min(b, hi);
    if (x <= y) out.emplace_back(x, y);
  }
  return out;
}

void merge_in(Intervals& merged, long long lo, long long hi) {
  merged.emplace_back(lo, hi);
  std::sort(merged.begin(), merged.end());
  Intervals out;
  for (const auto& [a, b] : merged) {
    if (!out.empty() && a <= out.back().second + 1)
      out.back().second = std::max(out.back().second, b);
    else
      out.emplace_back(a, b);
  }
  merged = std::move(out);
}

}  // namespace

PerturbationPlan build_plan(const WeightFunction& phi, const Word& omega, const BiSequence& z,
                            int depth, long long k_search_window, bool allow_empty) {
  if (omega.empty()) throw invalid_input("marker word is empty");
  if (depth < 1 || depth > 16) throw invalid_input("plan depth must lie in [1, 16]");
  if (k_search_window < 0 || k_search_window > 100000)
    throw invalid_input("search window must lie in [0, 1e5]");
  long long N = omega.size();

  PerturbationPlan plan{omega, z, depth, k_search_window, {}, {}, {}, {}, {}, {}};

  __int128 sum = 0;
  for (int j = 1; j <= depth; ++j) {
    __int128 nj = (j == 1) ? static_cast<__int128>(N) : ((static_cast<__int128>(1) << (j + 1)) * sum + 1);
    if (nj > (1ll << 60)) throw invalid_input("plan level size overflow");
    plan.n.push_back(static_cast<long long>(nj));
    sum += nj;
  }

  bool exact = phi.is_exact();
  KSup ks = phi.ksup();
  auto pz = z.periodic_period();
  for (int j = 1; j <= depth; ++j) {
    long long nj = plan.n[static_cast<std::size_t>(j - 1)];
    // The window sum is periodic in k with the far-field period when there
    // are no local corrections, so the scan can stop after one period.
    long long k_hi = k_search_window;
    if (ks.exact && !ks.support && -k_search_window + ks.period - 1 < k_hi)
      k_hi = -k_search_window + ks.period - 1;
    long long best_k = -k_search_window;
    double best_val = 0;
    Rat best_rat;
    bool first = true;
    for (long long kk = -k_search_window; kk <= k_hi; ++kk) {
      if (exact) {
        Rat v = window_sum_along<Rat>(phi, z, kk, nj);
        if (first || v > best_rat) {
          best_rat = v;
          best_k = kk;
          first = false;
        }
      } else {
        double v = window_sum_along<double>(phi, z, kk, nj);
        if (first || v > best_val) {
          best_val = v;
          best_k = kk;
          first = false;
        }
      }
    }
    plan.k.push_back(best_k);
    if (exact)
      plan.achieved_avg.emplace_back(Rat(best_rat / make_rat(nj, 1)));
    else
      plan.achieved_avg.emplace_back(best_val / static_cast<double>(nj));
    (void)pz;
  }

  Intervals earlier;
  long long total_a = 0;
  for (int j = 1; j <= depth; ++j) {
    long long nj = plan.n[static_cast<std::size_t>(j - 1)];
    long long kj = plan.k[static_cast<std::size_t>(j - 1)];
    long long lo = kj, hi = kj + nj - N;
    long long c = count_marker_occurrences(z, omega, 0, nj - N);
    long long b = hi - lo + 1;
    long long a = c;
    for (const auto& [x, y] : intersect(earlier, lo, hi)) {
      b -= y - x + 1;
      a -= count_marker_occurrences(z, omega, x - kj, y - kj);
    }
    plan.count_c.push_back(c);
    plan.count_b.push_back(b);
    plan.count_a.push_back(a);
    total_a += a;
    merge_in(earlier, lo, hi);
  }
  if (total_a == 0 && !allow_empty)
    throw invalid_input("marker word never usable in the plan windows (psi_A would vanish)");
  return plan;
}

long long sum_psi_A_along_z(const PerturbationPlan& plan, long long k, long long n) {
  if (n <= 0) throw invalid_input("window sum over empty range");
  const Word& omega = plan.omega;
  const BiSequence& z = plan.z;
  long long N = omega.size();

  // Contribution of the marker bump at ell, clipped to window indices
  // [k, k+n-1]; the bump's symbol at position ell+t is read off z itself.
  auto clipped = [&](long long ell) -> long long {
    if (!plan.in_A(ell)) return 0;
    long long t0 = std::max<long long>(0, k - ell);
    long long t1 = std::min<long long>(N - 1, k + n - 1 - ell);
    long long v = 0;
    for (long long t = t0; t <= t1; ++t) v += z.symbol(ell + t - k) == omega[t] ? 1 : -N;
    return v;
  };

  if (n < N) {
    long long total = 0;
    for (long long ell = k - N + 1; ell <= k + n - 1; ++ell) total += clipped(ell);
    return total;
  }

  long long total = 0;
  for (long long ell = k - N + 1; ell <= k - 1; ++ell) total += clipped(ell);
  for (long long ell = k + n - N + 1; ell <= k + n - 1; ++ell) total += clipped(ell);

  long long in_lo = k, in_hi = k + n - N;
  if (auto pz = z.periodic_period()) {
    long long p = *pz;
    Word zw = z.window(0, p + N - 2);
    std::vector<char> matchtab(static_cast<std::size_t>(p));
    std::vector<long long> vtab(static_cast<std::size_t>(p));
    for (long long rho = 0; rho < p; ++rho) {
      bool hit = true;
      long long v = 0;
      for (long long t = 0; t < N; ++t) {
        bool eq = zw.cyclic(rho + t) == omega[t];
        hit = hit && eq;
        v += eq ? 1 : -N;
      }
      matchtab[static_cast<std::size_t>(rho)] = hit;
      vtab[static_cast<std::size_t>(rho)] = v;
    }
    Intervals earlier;
    for (int j = 1; j <= plan.depth; ++j) {
      long long kj = plan.interval_lo(j);
      long long lo = std::max(kj, in_lo);
      long long hi = std::min(plan.interval_hi(j), in_hi);
      if (lo <= hi) {
        Intervals pieces{{lo, hi}};
        for (const auto& [a, b] : earlier) {
          Intervals next;
          for (auto [x, y] : pieces) {
            if (b < x || a > y) {
              next.emplace_back(x, y);
              continue;
            }
            if (x < a) next.emplace_back(x, a - 1);
            if (b < y) next.emplace_back(b + 1, y);
          }
          pieces = std::move(next);
        }
        for (auto [x, y] : pieces)
          for (long long c = 0; c < p; ++c) {
            long long g =
                matchtab[static_cast<std::size_t>(imod(c - kj, p))]
                    ? vtab[static_cast<std::size_t>(imod(c - k, p))]
                    : 0;
            if (g != 0) total += g * residue_count(x, y, c, p);
          }
      }
      merge_in(earlier, plan.interval_lo(j), plan.interval_hi(j));
    }
    return total;
  }
  if (n > (1ll << 20))
    throw invalid_input("psi window sum needs periodic z beyond the direct-scan cap");
  for (long long ell = in_lo; ell <= in_hi; ++ell) total += clipped(ell);
  return total;
}

Scalar greedy_gap(const WeightFunction& phi, const BiSequence& z, long long lo, long long hi) {
  if (lo > hi) throw invalid_input("empty greedy gap range");
  Word zw = z.window(lo, hi);
  if (phi.is_exact()) {
    Profile<Rat> prof = make_profile<Rat>(phi, lo, hi);
    Rat best;
    bool first = true;
    for (long long i = lo; i <= hi; ++i) {
      int a = zw[i - lo];
      Rat gap = prof.at(i)[static_cast<std::size_t>(a)] - prof.at(i)[static_cast<std::size_t>(1 - a)];
      if (first || gap < best) {
        best = gap;
        first = false;
      }
    }
    return Scalar(best);
  }
  Profile<double> prof = make_profile<double>(phi, lo, hi);
  double best = 0;
  bool first = true;
  for (long long i = lo; i <= hi; ++i) {
    int a = zw[i - lo];
    double gap = prof.at(i)[static_cast<std::size_t>(a)] - prof.at(i)[static_cast<std::size_t>(1 - a)];
    if (first || gap < best) {
      best = gap;
      first = false;
    }
  }
  return Scalar(best);
}

template double WeightFunction::eval<double>(int, long long) const;
template Rat WeightFunction::eval<Rat>(int, long long) const;
template double WeightFunction::far_eval<double>(int, long long) const;
template Rat WeightFunction::far_eval<Rat>(int, long long) const;
template Profile<double> make_profile<double>(const WeightFunction&, long long, long long);
template Profile<Rat> make_profile<Rat>(const WeightFunction&, long long, long long);
template Profile<double> make_far_profile<double>(const WeightFunction&, long long, long long);
template Profile<Rat> make_far_profile<Rat>(const WeightFunction&, long long, long long);
template double window_sum_along<double>(const WeightFunction&, const BiSequence&, long long,
                                         long long);
template Rat window_sum_along<Rat>(const WeightFunction&, const BiSequence&, long long, long long);

}  // namespace shiftopt
