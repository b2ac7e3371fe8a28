#include <omp.h>

#include <map>
#include <vector>

#include "doctest.h"
#include "shiftopt/dbar.hpp"
#include "shiftopt/jsr.hpp"
#include "shiftopt/lyapunov.hpp"
#include "shiftopt/reference.hpp"

using namespace shiftopt;

namespace {

WeightFunction random_exact_tabular(Rng& r, int overrides) {
  auto pick = [&r]() { return Scalar(make_rat(static_cast<long long>(r.below(9)) - 4, 1 + static_cast<long long>(r.below(3)))); };
  std::map<long long, std::array<Scalar, 2>> ov;
  for (int t = 0; t < overrides; ++t) {
    long long idx = static_cast<long long>(r.below(11)) - 5;
    ov[idx] = {pick(), pick()};
  }
  return WeightFunction::tabular(pick(), pick(), std::move(ov));
}

// Greedy table for an orbit of z: weight 1 on agreeing with z, 0 otherwise.
WeightFunction agreement_weight(const Word& z) {
  std::array<std::array<Scalar, 2>, 2> table;
  table[0][0] = Scalar(make_rat(1, 1));  // phi(a=0, z_i=0) = 1
  table[0][1] = Scalar(make_rat(0, 1));
  table[1][0] = Scalar(make_rat(0, 1));
  table[1][1] = Scalar(make_rat(1, 1));
  return WeightFunction::orbit_induced(BiSequence::periodic(z), table);
}

}  // namespace

TEST_CASE("lyapunov_periodic_exact reads off symbol frequencies") {
  // phi(1, .) = 1, phi(0, .) = 0: the exponent is the one-frequency of w.
  auto phi = WeightFunction::tabular(Scalar(make_rat(0, 1)), Scalar(make_rat(1, 1)));
  CHECK(lyapunov_periodic_exact(phi, Word::parse("1")) == 1);
  CHECK(lyapunov_periodic_exact(phi, Word::parse("01")) == make_rat(1, 2));
  CHECK(lyapunov_periodic_exact(phi, Word::parse("0011101")) == make_rat(4, 7));

  // A local override cannot move the orbit average.
  auto bumped = WeightFunction::tabular(
      Scalar(make_rat(0, 1)), Scalar(make_rat(1, 1)),
      {{0, {Scalar(make_rat(50, 1)), Scalar(make_rat(50, 1))}}});
  CHECK(lyapunov_periodic_exact(bumped, Word::parse("01")) == make_rat(1, 2));
}

TEST_CASE("agreement weight ties the exponent to the mismatch distance") {
  // For the weight rewarding agreement with z^inf, the exponent of the orbit
  // measure of w equals 1 minus the best-phase mismatch density.
  Word z = Word::parse("01101");
  auto phi = agreement_weight(z);
  for (const Word& w : primitive_necklaces(4)) {
    Rat lambda = lyapunov_periodic_exact(phi, w);
    Rat dist = dbar_periodic_exact(z, w);
    CHECK(lambda == 1 - dist);
  }
}

TEST_CASE("lyapunov_upper matches the reference and brackets the exact value") {
  Rng r(404);
  for (int trial = 0; trial < 12; ++trial) {
    auto phi = random_exact_tabular(r, static_cast<int>(r.below(3)));
    Word w = primitive_necklaces(3)[r.below(5)];
    MeasureSpec mu = MeasureSpec::periodic_orbit(w);
    long long n = 3 + static_cast<long long>(r.below(4));
    LyapunovUpper fast = lyapunov_upper(phi, mu, n, 10);
    LyapunovUpper ref = reference::lyapunov_upper(phi, mu, n, 10);
    REQUIRE(fast.certified);
    REQUIRE(fast.value.is_exact());
    CHECK(*fast.value.exact == *ref.value.exact);
    CHECK(fast.words == ref.words);
    // Upper bound property against the exact orbit exponent.
    CHECK(lyapunov_periodic_exact(phi, w) <= *fast.value.exact);
    // And the measure average never exceeds the fixed-length joint bound.
    CHECK(*fast.value.exact <= *jsr_upper(phi, n, 10).value.exact);
  }
}

TEST_CASE("n times the upper bound is subadditive in n") {
  Rng r(606);
  MeasureSpec mu = MeasureSpec::bernoulli(Scalar(make_rat(1, 2)));
  for (int trial = 0; trial < 8; ++trial) {
    auto phi = random_exact_tabular(r, static_cast<int>(r.below(2)));
    long long m = 2 + static_cast<long long>(r.below(3));
    long long n = 2 + static_cast<long long>(r.below(3));
    Rat fm = make_rat(m, 1) * *lyapunov_upper(phi, mu, m, 12).value.exact;
    Rat fn = make_rat(n, 1) * *lyapunov_upper(phi, mu, n, 12).value.exact;
    Rat fmn = make_rat(m + n, 1) * *lyapunov_upper(phi, mu, m + n, 12).value.exact;
    CHECK(fmn <= fm + fn);
  }
}

TEST_CASE("monte carlo estimate matches the serial replica byte for byte") {
  auto phi = WeightFunction::tabular(
      Scalar(make_rat(1, 4)), Scalar(make_rat(5, 4)),
      {{1, {Scalar(make_rat(2, 1)), Scalar(make_rat(-1, 1))}}});
  MeasureSpec mu = MeasureSpec::bernoulli(Scalar(make_rat(1, 3)));
  McResult par = lyapunov_mc(phi, mu, 40, 128, 16, 2024);
  McResult ser = reference::lyapunov_mc(phi, mu, 40, 128, 16, 2024);
  CHECK(par.mean == ser.mean);
  CHECK(par.std_error == ser.std_error);
  CHECK(par.lower == ser.lower);
  CHECK(par.upper == ser.upper);
  CHECK(par.samples == 128);
  CHECK(par.norms_certified);
  CHECK(par.lower <= par.mean);
  CHECK(par.mean <= par.upper);
}

TEST_CASE("monte carlo output is invariant under thread count") {
  auto phi = WeightFunction::tabular(Scalar(make_rat(0, 1)), Scalar(make_rat(1, 1)));
  MeasureSpec mu = MeasureSpec::periodic_orbit(Word::parse("0110"));
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  McResult one = lyapunov_mc(phi, mu, 25, 64, 8, 7);
  omp_set_num_threads(4);
  McResult four = lyapunov_mc(phi, mu, 25, 64, 8, 7);
  omp_set_num_threads(saved);
  CHECK(one.mean == four.mean);
  CHECK(one.std_error == four.std_error);
  CHECK(one.lower == four.lower);
  CHECK(one.upper == four.upper);
}

TEST_CASE("monte carlo on an empirical window is deterministic") {
  BiSequence z = BiSequence::sturmian("golden", 0);
  MeasureSpec emp = MeasureSpec::empirical(z, 0, 200);
  auto phi = WeightFunction::tabular(Scalar(make_rat(0, 1)), Scalar(make_rat(1, 1)));
  McResult a = lyapunov_mc(phi, emp, 30, 48, 12, 99);
  McResult b = reference::lyapunov_mc(phi, emp, 30, 48, 12, 99);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
}
