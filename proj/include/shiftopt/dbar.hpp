#pragma once

#include <string>
#include <utility>
#include <vector>

#include "shiftopt/measures.hpp"

namespace shiftopt {

// d-bar distance between the uniform measures on the orbits of u^inf and
// v^inf: the ergodic joinings of two periodic orbits are exactly the product
// orbits, enumerated by relative phase, so the minimum mismatch density over
// phases is the exact distance.
Rat dbar_periodic_exact(const Word& u, const Word& v);

// Finite-order transportation relaxation of the joining problem. Variables
// are couplings of length-L cylinders restricted to the marginal supports;
// constraints are the two marginals plus shift-consistency between the
// first- and last-(L-1) marginal pairs. Its optimum lower-bounds d-bar.
struct CouplingLP {
  long long L = 0;
  std::vector<Word> row_words;  // mu-support cylinders
  std::vector<Word> col_words;  // nu-support cylinders
  std::vector<Scalar> row_mass;
  std::vector<Scalar> col_mass;
  std::vector<std::pair<int, int>> vars;  // (row index, col index)
  bool exact = false;                     // both marginals rational
  // Filled by solve:
  bool solved = false;
  std::vector<Scalar> solution;
  Scalar objective;
};

CouplingLP build_coupling_lp(const MeasureSpec& mu, const MeasureSpec& nu, long long L);
void solve_coupling_lp(CouplingLP& lp);

// Optimal value of the order-L coupling LP: a certified lower bound for
// d-bar(mu, nu), nondecreasing in L.
Scalar dbar_lp_lower(const MeasureSpec& mu, const MeasureSpec& nu, long long L);

// Mismatch mass of the product joining mu x nu: mu([1])nu([0]) + mu([0])nu([1]).
Scalar dbar_upper_product(const MeasureSpec& mu, const MeasureSpec& nu);

// (1/|x|) min over admissible windows y of the target set of the Hamming
// distance between x and y. Periodic orbits go by phase scan; factor sets by
// dynamic programming over the follower graph; orbit-closure approximations
// are scanned into a factor set first.
Rat matching_distance(const Word& x, const SubshiftSpec& target);

// Plain-text dump of the LP (variables, marginals, optimum when solved).
std::string lp_to_text(const CouplingLP& lp);

}  // namespace shiftopt
