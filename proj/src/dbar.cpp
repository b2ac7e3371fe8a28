#include "shiftopt/dbar.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

#include <omp.h>

#include "shiftopt/simplex.hpp"

namespace shiftopt {

namespace {

// Support presolve keeps the tableau dense-simplex sized; anything larger
// than these caps would not finish in exact arithmetic anyway.
constexpr long long kMaxCouplingVars = 4096;
constexpr long long kMaxCouplingCells = 1LL << 23;
constexpr long long kMaxCouplingOrder = 16;

bool positive_mass(const Scalar& s) {
  if (s.exact) return *s.exact > 0;
  return s.value > 0.0;
}

// Length-L cylinders of positive mass, lexicographic. Cylinder masses are
// monotone under extension, so zero-mass prefixes prune their whole subtree.
void collect_support(const MeasureSpec& mu, long long L, std::vector<Word>& words,
                     std::vector<Scalar>& mass) {
  std::vector<std::uint8_t> prefix;
  auto walk = [&](auto&& self) -> void {
    if (static_cast<long long>(prefix.size()) == L) {
      Word w = Word::from_symbols(prefix);
      Scalar m = cylinder_prob(mu, w);
      if (positive_mass(m)) {
        if (static_cast<long long>(words.size()) >= kMaxCouplingVars)
          throw invalid_input("coupling LP support exceeds the variable cap");
        words.push_back(std::move(w));
        mass.push_back(std::move(m));
      }
      return;
    }
    for (int a = 0; a < 2; ++a) {
      prefix.push_back(static_cast<std::uint8_t>(a));
      if (positive_mass(cylinder_prob(mu, Word::from_symbols(prefix)))) self(self);
      prefix.pop_back();
    }
  };
  walk(walk);
}

std::string entry_to_text(const Scalar& s) {
  if (s.exact) return rat_to_string(*s.exact);
  std::ostringstream os;
  os.precision(17);
  os << s.value;
  return os.str();
}

template <class S>
void solve_typed(CouplingLP& lp) {
  const int rows = static_cast<int>(lp.row_words.size());
  const int cols = static_cast<int>(lp.col_words.size());
  const std::size_t n = lp.vars.size();
  auto zero_row = [&] { return std::vector<S>(n, S(0)); };

  std::vector<std::vector<S>> A;
  std::vector<S> b;

  // Marginals: each mu-cylinder mass over its row of the coupling, each
  // nu-cylinder mass over its column.
  for (int i = 0; i < rows; ++i) {
    auto row = zero_row();
    for (std::size_t v = 0; v < n; ++v)
      if (lp.vars[v].first == i) row[v] = S(1);
    A.push_back(std::move(row));
    b.push_back(scalar_as<S>(lp.row_mass[static_cast<std::size_t>(i)]));
  }
  for (int j = 0; j < cols; ++j) {
    auto row = zero_row();
    for (std::size_t v = 0; v < n; ++v)
      if (lp.vars[v].second == j) row[v] = S(1);
    A.push_back(std::move(row));
    b.push_back(scalar_as<S>(lp.col_mass[static_cast<std::size_t>(j)]));
  }
  A.push_back(std::vector<S>(n, S(1)));
  b.push_back(S(1));

  // Shift-consistency: for every pair of (L-1)-words, the mass seen as a
  // prefix pair equals the mass seen as a suffix pair. This is the order-L
  // surrogate for invariance of the coupling; it only relaxes, never adds.
  if (lp.L >= 2) {
    std::map<std::pair<Word, Word>, std::size_t> slot;
    std::vector<std::vector<S>> balance;
    for (std::size_t v = 0; v < n; ++v) {
      const Word& u = lp.row_words[static_cast<std::size_t>(lp.vars[v].first)];
      const Word& w = lp.col_words[static_cast<std::size_t>(lp.vars[v].second)];
      auto touch = [&](Word a, Word c, int sign) {
        auto key = std::make_pair(std::move(a), std::move(c));
        auto it = slot.find(key);
        if (it == slot.end()) {
          it = slot.emplace(std::move(key), balance.size()).first;
          balance.push_back(zero_row());
        }
        auto& cell = balance[it->second][v];
        cell = cell + S(sign);
      };
      touch(u.subword(0, lp.L - 1), w.subword(0, lp.L - 1), +1);
      touch(u.subword(1, lp.L - 1), w.subword(1, lp.L - 1), -1);
    }
    for (auto& row : balance) {
      bool all_zero = std::all_of(row.begin(), row.end(), [](const S& x) { return x == S(0); });
      if (all_zero) continue;
      A.push_back(std::move(row));
      b.push_back(S(0));
    }
  }

  if (static_cast<long long>(A.size()) * static_cast<long long>(n) > kMaxCouplingCells)
    throw invalid_input("coupling LP tableau exceeds the size cap");

  // Objective: expected mismatch at coordinate 0.
  std::vector<S> c(n, S(0));
  for (std::size_t v = 0; v < n; ++v) {
    const Word& u = lp.row_words[static_cast<std::size_t>(lp.vars[v].first)];
    const Word& w = lp.col_words[static_cast<std::size_t>(lp.vars[v].second)];
    if (u[0] != w[0]) c[v] = S(1);
  }

  LpResult<S> res = solve_lp_min<S>(A, b, c);
  if (!res.feasible)
    throw invalid_input("coupling LP infeasible; the measure cylinder masses are inconsistent");
  lp.solution.clear();
  lp.solution.reserve(n);
  for (const S& x : res.x) lp.solution.emplace_back(x);
  lp.objective = Scalar(res.objective);
  lp.solved = true;
}

Rat matching_periodic(const Word& x, const Word& w) {
  const long long n = x.size();
  const long long p = w.size();
  std::vector<long long> mismatches(static_cast<std::size_t>(p));
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < p; ++r) {
    long long d = 0;
    for (long long i = 0; i < n; ++i) d += x[i] != w.cyclic(i + r) ? 1 : 0;
    mismatches[static_cast<std::size_t>(r)] = d;
  }
  long long best = *std::min_element(mismatches.begin(), mismatches.end());
  return make_rat(best, n);
}

Rat matching_factor_set(const Word& x, const SubshiftSpec::FactorSet& fs) {
  validate_factor_set(fs);
  const long long n = x.size();
  const long long L = fs.L;
  const int count = static_cast<int>(fs.factors.size());

  // Admissible length-n words for n <= L are exactly the length-n prefixes
  // of admissible length-L blocks.
  if (n <= L) {
    long long best = n;
    for (const Word& f : fs.factors) {
      long long d = 0;
      for (long long i = 0; i < n; ++i) d += x[i] != f[i] ? 1 : 0;
      best = std::min(best, d);
    }
    return make_rat(best, n);
  }

  // Viterbi over the follower graph: state = admissible block covering
  // x[t, t+L), cost = mismatches of x[0, t+L) against the walk so far.
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> dp(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (int g = 0; g < count; ++g) {
    long long d = 0;
    for (long long i = 0; i < L; ++i) d += x[i] != fs.factors[static_cast<std::size_t>(g)][i] ? 1 : 0;
    dp[static_cast<std::size_t>(g)] = d;
  }
  std::vector<long long> next(static_cast<std::size_t>(count));
  for (long long t = 0; t + L < n; ++t) {
    std::fill(next.begin(), next.end(), kInf);
    for (int g = 0; g < count; ++g) {
      const long long base = dp[static_cast<std::size_t>(g)];
      if (base >= kInf) continue;
      for (int h : fs.followers[static_cast<std::size_t>(g)]) {
        const long long cost =
            base + (x[t + L] != fs.factors[static_cast<std::size_t>(h)][L - 1] ? 1 : 0);
        if (cost < next[static_cast<std::size_t>(h)]) next[static_cast<std::size_t>(h)] = cost;
      }
    }
    dp.swap(next);
  }
  long long best = *std::min_element(dp.begin(), dp.end());
  if (best >= kInf) throw internal_error("follower graph left no admissible continuation");
  return make_rat(best, n);
}

}  // namespace

Rat dbar_periodic_exact(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw invalid_input("dbar needs nonempty words");
  const long long span = checked_lcm(u.size(), v.size());
  std::vector<long long> mismatches(static_cast<std::size_t>(span));
#pragma omp parallel for schedule(static)
  for (long long r = 0; r < span; ++r) {
    long long d = 0;
    for (long long i = 0; i < span; ++i) d += u.cyclic(i) != v.cyclic(i + r) ? 1 : 0;
    mismatches[static_cast<std::size_t>(r)] = d;
  }
  long long best = *std::min_element(mismatches.begin(), mismatches.end());
  return make_rat(best, span);
}

CouplingLP build_coupling_lp(const MeasureSpec& mu, const MeasureSpec& nu, long long L) {
  if (L < 1 || L > kMaxCouplingOrder) throw invalid_input("coupling order out of range");
  CouplingLP lp;
  lp.L = L;
  lp.exact = mu.is_exact() && nu.is_exact();
  collect_support(mu, L, lp.row_words, lp.row_mass);
  collect_support(nu, L, lp.col_words, lp.col_mass);
  const long long vars =
      static_cast<long long>(lp.row_words.size()) * static_cast<long long>(lp.col_words.size());
  if (vars > kMaxCouplingVars) throw invalid_input("coupling LP support exceeds the variable cap");
  lp.vars.reserve(static_cast<std::size_t>(vars));
  for (int i = 0; i < static_cast<int>(lp.row_words.size()); ++i)
    for (int j = 0; j < static_cast<int>(lp.col_words.size()); ++j) lp.vars.emplace_back(i, j);
  return lp;
}

void solve_coupling_lp(CouplingLP& lp) {
  if (lp.exact)
    solve_typed<Rat>(lp);
  else
    solve_typed<double>(lp);
}

Scalar dbar_lp_lower(const MeasureSpec& mu, const MeasureSpec& nu, long long L) {
  CouplingLP lp = build_coupling_lp(mu, nu, L);
  solve_coupling_lp(lp);
  return lp.objective;
}

Scalar dbar_upper_product(const MeasureSpec& mu, const MeasureSpec& nu) {
  const Word zero = Word::parse("0");
  const Word one = Word::parse("1");
  return cylinder_prob(mu, one) * cylinder_prob(nu, zero) +
         cylinder_prob(mu, zero) * cylinder_prob(nu, one);
}

Rat matching_distance(const Word& x, const SubshiftSpec& target) {
  if (x.empty()) throw invalid_input("matching distance needs a nonempty word");
  if (const auto* po = std::get_if<SubshiftSpec::PeriodicOrbit>(&target.variant()))
    return matching_periodic(x, po->word);
  if (const auto* fs = std::get_if<SubshiftSpec::FactorSet>(&target.variant()))
    return matching_factor_set(x, *fs);
  const auto& oc = std::get<SubshiftSpec::OrbitClosureApprox>(target.variant());
  return matching_factor_set(x, factor_set_of(*oc.seq, oc.window, oc.L));
}

std::string lp_to_text(const CouplingLP& lp) {
  std::ostringstream os;
  os << "coupling LP, order " << lp.L << "\n";
  os << "mu support (" << lp.row_words.size() << "):\n";
  for (std::size_t i = 0; i < lp.row_words.size(); ++i)
    os << "  " << lp.row_words[i].to_string() << "  " << entry_to_text(lp.row_mass[i])
       << "\n";
  os << "nu support (" << lp.col_words.size() << "):\n";
  for (std::size_t j = 0; j < lp.col_words.size(); ++j)
    os << "  " << lp.col_words[j].to_string() << "  " << entry_to_text(lp.col_mass[j])
       << "\n";
  os << "variables (" << lp.vars.size() << "), objective coefficient 1 where first symbols"
     << " differ\n";
  if (!lp.solved) {
    os << "status: not solved\n";
    return os.str();
  }
  os << "status: solved, objective " << entry_to_text(lp.objective) << "\n";
  for (std::size_t v = 0; v < lp.vars.size(); ++v) {
    const Scalar& x = lp.solution[v];
    bool zero = x.exact ? (*x.exact == 0) : (x.value == 0.0);
    if (zero) continue;
    os << "  x(" << lp.row_words[static_cast<std::size_t>(lp.vars[v].first)].to_string() << ", "
       << lp.col_words[static_cast<std::size_t>(lp.vars[v].second)].to_string() << ") = "
       << entry_to_text(x) << "\n";
  }
  return os.str();
}

}  // namespace shiftopt
