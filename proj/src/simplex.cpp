#include "shiftopt/simplex.hpp"

#include <algorithm>

namespace shiftopt {

namespace {

template <class S>
struct Tol;
template <>
struct Tol<double> {
  static bool pos(double v) { return v > 1e-9; }
  static bool neg(double v) { return v < -1e-9; }
  static bool nonzero(double v) { return v > 1e-9 || v < -1e-9; }
};
template <>
struct Tol<Rat> {
  static bool pos(const Rat& v) { return v > 0; }
  static bool neg(const Rat& v) { return v < 0; }
  static bool nonzero(const Rat& v) { return v != 0; }
};

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

// Dense tableau: rows 0..m-1 are constraints, row m is the objective.
// Column layout: structural + artificial variables, then the RHS.
template <class S>
class Tableau {
 public:
  Tableau(long long m, long long cols) : m_(m), cols_(cols), t_(static_cast<std::size_t>((m + 1) * cols), s_zero<S>()) {}

  S& at(long long r, long long c) { return t_[static_cast<std::size_t>(r * cols_ + c)]; }
  const S& at(long long r, long long c) const {
    return t_[static_cast<std::size_t>(r * cols_ + c)];
  }

  void pivot(long long pr, long long pc) {
    S inv = at(pr, pc);
    for (long long c = 0; c < cols_; ++c) at(pr, c) /= inv;
    for (long long r = 0; r <= m_; ++r) {
      if (r == pr) continue;
      S factor = at(r, pc);
      if (!Tol<S>::nonzero(factor)) continue;
      for (long long c = 0; c < cols_; ++c) at(r, c) -= factor * at(pr, c);
    }
  }

  long long m_;
  long long cols_;
  std::vector<S> t_;
};

// Bland's rule iteration to optimality on the current objective row.
// Entering: smallest-index column with negative reduced cost; leaving:
// smallest ratio, ties to the smallest basis index.
template <class S>
void iterate(Tableau<S>& tab, std::vector<long long>& basis, long long nvars, long long rhs) {
  for (;;) {
    long long enter = -1;
    for (long long c = 0; c < nvars; ++c)
      if (Tol<S>::neg(tab.at(tab.m_, c))) {
        enter = c;
        break;
      }
    if (enter < 0) return;
    long long leave = -1;
    S best_ratio{};
    for (long long r = 0; r < tab.m_; ++r) {
      if (!Tol<S>::pos(tab.at(r, enter))) continue;
      S ratio = tab.at(r, rhs) / tab.at(r, enter);
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[static_cast<std::size_t>(r)] <
                                      basis[static_cast<std::size_t>(leave)])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw internal_error("unbounded linear program");
    tab.pivot(leave, enter);
    basis[static_cast<std::size_t>(leave)] = enter;
  }
}

}  // namespace

template <class S>
LpResult<S> solve_lp_min(const std::vector<std::vector<S>>& A, const std::vector<S>& b,
                         const std::vector<S>& c) {
  long long m = static_cast<long long>(A.size());
  long long n = static_cast<long long>(c.size());
  if (static_cast<long long>(b.size()) != m) throw invalid_input("LP shape mismatch");
  for (const auto& row : A)
    if (static_cast<long long>(row.size()) != n) throw invalid_input("LP shape mismatch");

  long long total = n + m;  // structural + one artificial per row
  long long rhs = total;
  Tableau<S> tab(m, total + 1);
  for (long long r = 0; r < m; ++r) {
    bool flip = Tol<S>::neg(b[static_cast<std::size_t>(r)]);
    for (long long j = 0; j < n; ++j) {
      const S& v = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      tab.at(r, j) = flip ? -v : v;
    }
    tab.at(r, n + r) = S(1);
    tab.at(r, rhs) = flip ? -b[static_cast<std::size_t>(r)] : b[static_cast<std::size_t>(r)];
  }
  std::vector<long long> basis(static_cast<std::size_t>(m));
  for (long long r = 0; r < m; ++r) basis[static_cast<std::size_t>(r)] = n + r;

  // Phase 1: minimize the artificial mass. Its objective row is minus the
  // sum of constraint rows, which prices the artificial basis at zero.
  for (long long cidx = 0; cidx <= rhs; ++cidx) {
    S acc = s_zero<S>();
    for (long long r = 0; r < m; ++r) acc += tab.at(r, cidx);
    tab.at(m, cidx) = -acc;
  }
  for (long long r = 0; r < m; ++r) tab.at(m, n + r) = s_zero<S>();
  iterate(tab, basis, total, rhs);
  S art = -tab.at(m, rhs);
  if (Tol<S>::nonzero(art)) return LpResult<S>{};  // infeasible

  // Drive leftover artificial variables out of the basis where possible;
  // rows with no structural pivot are redundant and harmless (they stay with
  // a zero RHS and never constrain phase 2 since their artificial column is
  // priced out below).
  for (long long r = 0; r < m; ++r) {
    if (basis[static_cast<std::size_t>(r)] < n) continue;
    long long pc = -1;
    for (long long j = 0; j < n; ++j)
      if (Tol<S>::nonzero(tab.at(r, j))) {
        pc = j;
        break;
      }
    if (pc >= 0) {
      tab.pivot(r, pc);
      basis[static_cast<std::size_t>(r)] = pc;
    }
  }

  // Phase 2: rebuild the objective row from c, priced against the basis.
  for (long long cidx = 0; cidx <= rhs; ++cidx) tab.at(m, cidx) = s_zero<S>();
  for (long long j = 0; j < n; ++j) tab.at(m, j) = c[static_cast<std::size_t>(j)];
  for (long long r = 0; r < m; ++r) {
    long long bv = basis[static_cast<std::size_t>(r)];
    if (bv >= n) continue;  // residual artificial on a redundant row, value 0
    S cost = c[static_cast<std::size_t>(bv)];
    if (!Tol<S>::nonzero(cost)) continue;
    for (long long cidx = 0; cidx <= rhs; ++cidx) tab.at(m, cidx) -= cost * tab.at(r, cidx);
  }
  // Entering scan stops at n, so artificial columns can never re-enter.
  iterate(tab, basis, n, rhs);

  LpResult<S> out;
  out.feasible = true;
  out.x.assign(static_cast<std::size_t>(n), s_zero<S>());
  for (long long r = 0; r < m; ++r) {
    long long bv = basis[static_cast<std::size_t>(r)];
    if (bv < n) out.x[static_cast<std::size_t>(bv)] = tab.at(r, rhs);
  }
  out.objective = s_zero<S>();
  for (long long j = 0; j < n; ++j)
    out.objective += c[static_cast<std::size_t>(j)] * out.x[static_cast<std::size_t>(j)];
  return out;
}

template LpResult<double> solve_lp_min<double>(const std::vector<std::vector<double>>&,
                                               const std::vector<double>&,
                                               const std::vector<double>&);
template LpResult<Rat> solve_lp_min<Rat>(const std::vector<std::vector<Rat>>&,
                                         const std::vector<Rat>&, const std::vector<Rat>&);

}  // namespace shiftopt
