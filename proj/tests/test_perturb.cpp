#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "shiftopt/lyapunov.hpp"
#include "shiftopt/perturb.hpp"
#include "shiftopt/reference.hpp"

using namespace shiftopt;

namespace {

// The plan every frozen constant below refers to: greedy base weight along a
// fixed 16-periodic sequence, marker 01.
PerturbationPlan fixture_plan(int depth) {
  BiSequence z = BiSequence::periodic(Word::parse("0110100110010110"));
  WeightFunction base = WeightFunction::tabular(Scalar(make_rat(0, 1)), Scalar(make_rat(1, 1)));
  return build_plan(base, Word::parse("01"), z, depth, 16);
}

WeightFunction fixture_base() {
  return WeightFunction::tabular(Scalar(make_rat(0, 1)), Scalar(make_rat(1, 1)));
}

Word random_word(Rng& r, int len) {
  std::string s;
  for (int i = 0; i < len; ++i) s.push_back(r.bit() ? '1' : '0');
  return Word::parse(s);
}

}  // namespace

TEST_CASE("single-marker bump takes the documented values") {
  Word omega = Word::parse("011");
  WeightFunction b = psi_ell(omega, 5);
  for (long long t = 0; t < 3; ++t) {
    int a = omega[t];
    CHECK(b.eval<Rat>(a, 5 + t) == 1);
    CHECK(b.eval<Rat>(1 - a, 5 + t) == -3);
  }
  CHECK(b.eval<Rat>(0, 4) == 0);
  CHECK(b.eval<Rat>(1, 8) == 0);
}

TEST_CASE("level sizes follow the smallest-integer rule") {
  PerturbationPlan plan = fixture_plan(4);
  CHECK(plan.n == std::vector<long long>{2, 17, 305, 10369});
  CHECK(plan.count_c == std::vector<long long>{1, 5, 95, 3240});
  long long sum = 0;
  for (int j = 1; j <= plan.depth; ++j) {
    long long nj = plan.n[static_cast<std::size_t>(j - 1)];
    if (j > 1) {
      // Strict domination: earlier levels occupy less than 2^-(j+1) of n_j,
      // and n_j is the least integer with that property.
      CHECK(make_rat(sum, 1) * make_rat(1ll << (j + 1), 1) < make_rat(nj, 1));
      CHECK(make_rat(sum, 1) * make_rat(1ll << (j + 1), 1) >= make_rat(nj - 1, 1));
    }
    sum += nj;
  }
}

TEST_CASE("materialized sets satisfy the containments") {
  PerturbationPlan plan = fixture_plan(3);
  std::set<long long> seen;
  for (int j = 1; j <= plan.depth; ++j) {
    auto A = plan.set_A(j);
    auto B = plan.set_B(j);
    auto C = plan.set_C(j);
    CHECK(std::is_sorted(A.begin(), A.end()));
    CHECK(std::is_sorted(B.begin(), B.end()));
    CHECK(static_cast<long long>(A.size()) == plan.count_a[static_cast<std::size_t>(j - 1)]);
    CHECK(static_cast<long long>(B.size()) == plan.count_b[static_cast<std::size_t>(j - 1)]);
    CHECK(static_cast<long long>(C.size()) == plan.count_c[static_cast<std::size_t>(j - 1)]);
    // A_j = C_j minus earlier intervals, so A_j sits inside both B_j and C_j.
    CHECK(std::includes(B.begin(), B.end(), A.begin(), A.end()));
    CHECK(std::includes(C.begin(), C.end(), A.begin(), A.end()));
    for (long long ell : B) {
      CHECK(plan.level_of(ell) == j);
      CHECK(seen.insert(ell).second);  // B-levels partition, no repeats
      CHECK(ell >= plan.interval_lo(j));
      CHECK(ell <= plan.interval_hi(j));
    }
    for (long long ell : C) {
      // C-members show the marker in z at the level offset.
      for (long long t = 0; t < plan.order(); ++t)
        CHECK(plan.z.symbol(ell + t) == plan.omega[t]);
    }
    for (long long ell : A) CHECK(plan.in_A(ell));
  }
}

TEST_CASE("psi values are bounded and vanish outside the hull") {
  PerturbationPlan plan = fixture_plan(3);
  long long N = plan.order();
  for (long long i = plan.hull_lo(); i <= plan.hull_hi(); ++i) {
    auto [p0, p1] = plan.psi_pair(i);
    CHECK(p0 == plan.psi_A(0, i));
    CHECK(p1 == plan.psi_A(1, i));
    for (long long v : {p0, p1}) {
      CHECK(v <= N);
      CHECK(v >= -N * N);
    }
  }
  for (long long i : {plan.hull_lo() - 1, plan.hull_hi() + 1, -1000000ll, 1000000ll}) {
    auto [p0, p1] = plan.psi_pair(i);
    CHECK(p0 == 0);
    CHECK(p1 == 0);
  }
}

TEST_CASE("window bound holds across random words and offsets") {
  PerturbationPlan plan = fixture_plan(4);
  int min_len = static_cast<int>(plan.order()) + 1;  // windows must exceed the marker
  Rng r(112233);
  for (int trial = 0; trial < 200; ++trial) {
    Word x = random_word(r, min_len + static_cast<int>(r.below(static_cast<std::uint64_t>(200 - min_len))));
    long long k = static_cast<long long>(r.below(601)) - 300;
    UpperInequalityReport rep = check_upper_inequality(plan, x, k);
    CHECK(rep.holds);
    CHECK(rep.rhs == 2 * rep.order * (rep.order - 1) + rep.order * rep.occurrences);
    CHECK(rep.lhs <= rep.rhs);
  }
}

TEST_CASE("marker powers are counted exactly") {
  PerturbationPlan plan = fixture_plan(3);
  for (long long m : {2ll, 3ll, 7ll}) {
    std::string s;
    for (long long i = 0; i < m; ++i) s += "01";
    UpperInequalityReport rep = check_upper_inequality(plan, Word::parse(s), -4);
    CHECK(rep.occurrences == m);
    CHECK(rep.holds);
  }
}

TEST_CASE("level growth margins match the frozen values") {
  PerturbationPlan plan = fixture_plan(4);
  WeightFunction base = fixture_base();
  Scalar lambda(make_rat(1, 10));
  GrowthReport g2 = check_growth(plan, base, lambda, 2);
  GrowthReport g3 = check_growth(plan, base, lambda, 3);
  GrowthReport g4 = check_growth(plan, base, lambda, 4);
  REQUIRE(g2.margin.is_exact());
  CHECK(*g2.margin.exact == make_rat(13, 85));
  CHECK(*g3.margin.exact == make_rat(323, 6100));
  CHECK(*g4.margin.exact == make_rat(10401, 414760));
  CHECK(g2.slack == make_rat(25, 17));
  CHECK(g3.slack == make_rat(321, 610));
  CHECK(g4.slack == make_rat(10401, 41476));
  // The slack splits into a boundary part 2N^2(N-1)/n_j and a tail part
  // N^2/2^j; the tail halves with each level.
  for (const GrowthReport& g : {g2, g3, g4}) {
    long long N = g.order;
    Rat tail = g.slack - make_rat(2 * N * N * (N - 1), g.n_j);
    CHECK(tail == make_rat(N * N, 1ll << g.j));
    CHECK(*g.margin.exact >= 0);
  }
}

TEST_CASE("growth report fields satisfy their defining identities") {
  PerturbationPlan plan = fixture_plan(4);
  WeightFunction base = fixture_base();
  Scalar lambda(make_rat(2, 7));
  for (int j = 1; j <= 4; ++j) {
    GrowthReport g = check_growth(plan, base, lambda, j);
    CHECK(g.j == j);
    CHECK(g.n_j == plan.n[static_cast<std::size_t>(j - 1)]);
    CHECK(g.k_j == plan.k[static_cast<std::size_t>(j - 1)]);
    CHECK(g.usable == plan.count_a[static_cast<std::size_t>(j - 1)]);
    CHECK(g.freq == make_rat(g.occurrences, g.n_j));
    CHECK(g.psi_sum == sum_psi_A_along_z(plan, g.k_j, g.n_j));
    Rat lam = make_rat(2, 7);
    Rat lhs = scalar_as<Rat>(g.base_avg) + lam * make_rat(g.psi_sum, g.n_j);
    CHECK(scalar_as<Rat>(g.lhs_avg) == lhs);
    Rat rhs = scalar_as<Rat>(g.base_avg) + lam * (make_rat(g.order, 1) * g.freq - g.slack);
    CHECK(scalar_as<Rat>(g.rhs) == rhs);
    CHECK(scalar_as<Rat>(g.margin) == lhs - rhs);
  }
  // Margin scales linearly in lambda, and vanishes at lambda = 0.
  GrowthReport z0 = check_growth(plan, base, Scalar(make_rat(0, 1)), 2);
  CHECK(scalar_as<Rat>(z0.margin) == 0);
  CHECK(scalar_as<Rat>(z0.lhs_avg) == scalar_as<Rat>(z0.rhs));
  GrowthReport one = check_growth(plan, base, Scalar(make_rat(1, 1)), 2);
  GrowthReport half = check_growth(plan, base, Scalar(make_rat(1, 2)), 2);
  CHECK(scalar_as<Rat>(one.margin) == 2 * scalar_as<Rat>(half.margin));
}

TEST_CASE("psi window sums agree with the direct scan") {
  PerturbationPlan plan = fixture_plan(4);
  for (long long k : {-16ll, -7ll, 0ll, 3ll, 31ll, plan.k[1], plan.k[2]}) {
    for (long long n : {1ll, 17ll, 305ll, 1000ll}) {
      CHECK(sum_psi_A_along_z(plan, k, n) == reference::psi_window_brute(plan, k, n));
    }
  }
}

TEST_CASE("perturbed averages respect the marker-mass bound") {
  // For the pure perturbation weight the measure-averaged norm bound is
  // N mu([omega]) + 2N(N-1)/n, uniformly over invariant measures.
  auto plan = std::make_shared<const PerturbationPlan>(fixture_plan(3));
  WeightFunction psi_w = WeightFunction::psi(plan);
  long long N = plan->order();
  Word omega = plan->omega;
  std::array<std::array<Scalar, 2>, 2> P = {
      {{Scalar(make_rat(1, 2)), Scalar(make_rat(1, 2))},
       {Scalar(make_rat(1, 4)), Scalar(make_rat(3, 4))}}};
  std::vector<MeasureSpec> nus = {
      MeasureSpec::bernoulli(Scalar(make_rat(1, 2))),
      MeasureSpec::markov(P, {Scalar(make_rat(1, 3)), Scalar(make_rat(2, 3))}),
      MeasureSpec::periodic_orbit(Word::parse("0110"))};
  for (const MeasureSpec& nu : nus) {
    Rat mass = scalar_as<Rat>(cylinder_prob(nu, omega));
    for (long long n : {4ll, 6ll, 8ll}) {
      LyapunovUpper up = lyapunov_upper(psi_w, nu, n, 16);
      REQUIRE(up.certified);
      CHECK(*up.value.exact <= make_rat(N, 1) * mass + make_rat(2 * N * (N - 1), n));
    }
  }
}

TEST_CASE("plans build on block-recursive sequences") {
  BiSequence z = BiSequence::block_recursive(Word::parse("0"), Word::parse("1"), {4, 16, 64}, 3);
  WeightFunction base = fixture_base();
  PerturbationPlan plan = build_plan(base, Word::parse("01"), z, 3, 8);
  CHECK(plan.n == std::vector<long long>{2, 17, 305});
  Rng r(4141);
  for (int trial = 0; trial < 40; ++trial) {
    Word x = random_word(r, 3 + static_cast<int>(r.below(58)));
    long long k = static_cast<long long>(r.below(201)) - 100;
    CHECK(check_upper_inequality(plan, x, k).holds);
  }
  for (long long k : {-9ll, 0ll, 5ll, plan.k[2]}) {
    CHECK(sum_psi_A_along_z(plan, k, 305) == reference::psi_window_brute(plan, k, 305));
  }
  for (int j = 1; j <= 3; ++j) {
    GrowthReport g = check_growth(plan, base, Scalar(make_rat(1, 10)), j);
    CHECK(scalar_as<Rat>(g.margin) ==
          scalar_as<Rat>(g.lhs_avg) - scalar_as<Rat>(g.rhs));
  }
}

TEST_CASE("missing markers are rejected unless allowed") {
  BiSequence zeros = BiSequence::periodic(Word::parse("0"));
  WeightFunction base = fixture_base();
  CHECK_THROWS_AS(build_plan(base, Word::parse("11"), zeros, 3, 8), invalid_input);
  PerturbationPlan empty = build_plan(base, Word::parse("11"), zeros, 3, 8, true);
  for (long long c : empty.count_c) CHECK(c == 0);
  for (long long a : empty.count_a) CHECK(a == 0);
}
