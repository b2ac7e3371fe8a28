#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "shiftopt/measures.hpp"

using namespace shiftopt;

namespace {

std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  if (n == 0) return {Word()};
  for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
      if (bits >> (n - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
    out.push_back(Word::parse(s));
  }
  return out;
}

// Kolmogorov consistency and total mass, exact variants compare with ==.
void check_consistency_exact(const MeasureSpec& mu, int max_len) {
  Rat total = 0;
  for (const Word& w : all_words(max_len)) total += scalar_as<Rat>(cylinder_prob(mu, w));
  CHECK(total == 1);
  for (int n = 0; n < max_len; ++n) {
    for (const Word& w : all_words(n)) {
      Rat whole = scalar_as<Rat>(cylinder_prob(mu, w));
      Rat left = scalar_as<Rat>(cylinder_prob(mu, Word::parse(w.to_string() + "0")));
      Rat right = scalar_as<Rat>(cylinder_prob(mu, Word::parse(w.to_string() + "1")));
      CHECK(whole == left + right);
    }
  }
}

}  // namespace

TEST_CASE("periodic orbit cylinder masses count phases") {
  MeasureSpec mu = MeasureSpec::periodic_orbit(Word::parse("011"));
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word())) == 1);
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("1"))) == make_rat(2, 3));
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("0"))) == make_rat(1, 3));
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("11"))) == make_rat(1, 3));
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("00"))) == 0);
  // A window longer than the period still reads off the orbit.
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("1101"))) == make_rat(1, 3));
  check_consistency_exact(mu, 6);
}

TEST_CASE("bernoulli cylinder masses are products") {
  MeasureSpec mu = MeasureSpec::bernoulli(Scalar(make_rat(1, 3)));
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("1"))) == make_rat(1, 3));
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("10"))) == make_rat(2, 9));
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("111"))) == make_rat(1, 27));
  check_consistency_exact(mu, 6);
}

TEST_CASE("markov cylinder masses follow the chain") {
  // P(0->1) = 1/2, P(1->0) = 1/4; stationary pi = (1/3, 2/3).
  std::array<std::array<Scalar, 2>, 2> P = {
      {{Scalar(make_rat(1, 2)), Scalar(make_rat(1, 2))},
       {Scalar(make_rat(1, 4)), Scalar(make_rat(3, 4))}}};
  std::array<Scalar, 2> pi = {Scalar(make_rat(1, 3)), Scalar(make_rat(2, 3))};
  MeasureSpec mu = MeasureSpec::markov(P, pi);
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("0"))) == make_rat(1, 3));
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("01"))) == make_rat(1, 6));
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("011"))) == make_rat(1, 8));
  check_consistency_exact(mu, 6);
}

TEST_CASE("markov validation rejects broken inputs") {
  std::array<std::array<Scalar, 2>, 2> P = {
      {{Scalar(make_rat(1, 2)), Scalar(make_rat(1, 2))},
       {Scalar(make_rat(1, 4)), Scalar(make_rat(3, 4))}}};
  // Row sums off.
  std::array<std::array<Scalar, 2>, 2> bad = P;
  bad[0][0] = Scalar(make_rat(1, 3));
  CHECK_THROWS_AS(
      MeasureSpec::markov(bad, {Scalar(make_rat(1, 3)), Scalar(make_rat(2, 3))}), invalid_input);
  // pi not stationary.
  CHECK_THROWS_AS(
      MeasureSpec::markov(P, {Scalar(make_rat(1, 2)), Scalar(make_rat(1, 2))}), invalid_input);
}

TEST_CASE("bernoulli parameter must be a probability") {
  CHECK_THROWS_AS(MeasureSpec::bernoulli(Scalar(make_rat(3, 2))), invalid_input);
  CHECK_THROWS_AS(MeasureSpec::bernoulli(Scalar(make_rat(-1, 2))), invalid_input);
}

TEST_CASE("empirical masses are circular window frequencies") {
  BiSequence z = BiSequence::periodic(Word::parse("0110100110010110"));  // any fixed window
  long long n = 10;
  MeasureSpec mu = MeasureSpec::empirical(z, 0, n);
  // One-symbol mass equals the count of ones among z[0..n).
  long long ones = 0;
  for (long long i = 0; i < n; ++i) ones += z.symbol(i);
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("1"))) == make_rat(ones, n));
  // Two-symbol mass counts circular occurrences, wrapping the window edge.
  long long c01 = 0;
  for (long long i = 0; i < n; ++i)
    c01 += (z.symbol(imod(i, n)) == 0 && z.symbol(imod(i + 1, n)) == 1) ? 1 : 0;
  CHECK(scalar_as<Rat>(cylinder_prob(mu, Word::parse("01"))) == make_rat(c01, n));
  check_consistency_exact(mu, 5);
}

TEST_CASE("rotation coding masses match the golden arcs") {
  MeasureSpec mu = MeasureSpec::sturmian("golden");
  Scalar one = cylinder_prob(mu, Word::parse("1"));
  CHECK_FALSE(one.is_exact());
  CHECK(std::fabs(one.value - 0.5) < 1e-15);
  double gamma = (std::sqrt(5.0) - 1.0) / 2.0;
  Scalar oneone = cylinder_prob(mu, Word::parse("11"));
  CHECK(std::fabs(oneone.value - (gamma - 0.5)) < 1e-12);

  // Consistency within extended precision.
  for (int n = 0; n < 5; ++n) {
    for (const Word& w : all_words(n)) {
      double whole = cylinder_prob(mu, w).value;
      double l = cylinder_prob(mu, Word::parse(w.to_string() + "0")).value;
      double r = cylinder_prob(mu, Word::parse(w.to_string() + "1")).value;
      CHECK(std::fabs(whole - l - r) < 1e-12);
    }
  }
}

TEST_CASE("sample_word is deterministic and model-only") {
  MeasureSpec mu = MeasureSpec::bernoulli(Scalar(make_rat(1, 2)));
  Word a = sample_word(mu, 32, 9001);
  Word b = sample_word(mu, 32, 9001);
  Word c = sample_word(mu, 32, 9002);
  CHECK(a.to_string() == b.to_string());
  CHECK(a.to_string() != c.to_string());
  CHECK(a.size() == 32);

  MeasureSpec orb = MeasureSpec::periodic_orbit(Word::parse("011"));
  Word w = sample_word(orb, 7, 5);
  CHECK(w.size() == 7);
  // Every sample is a window of the orbit: consecutive symbols follow 011.
  MeasureSpec emp = MeasureSpec::empirical(BiSequence::periodic(Word::parse("01")), 0, 2);
  CHECK_THROWS_AS(sample_word(emp, 4, 1), invalid_input);
}

TEST_CASE("is_exact reflects the parameter kinds") {
  CHECK(MeasureSpec::periodic_orbit(Word::parse("01")).is_exact());
  CHECK(MeasureSpec::bernoulli(Scalar(make_rat(1, 2))).is_exact());
  CHECK_FALSE(MeasureSpec::bernoulli(Scalar(0.5)).is_exact());
  CHECK_FALSE(MeasureSpec::sturmian("golden").is_exact());
}
