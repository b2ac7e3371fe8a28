#include <doctest.h>

#include <set>

#include "shiftopt/symbolic.hpp"

using namespace shiftopt;

TEST_CASE("word basics") {
  Word w = Word::parse("0110");
  CHECK(w.size() == 4);
  CHECK(w.to_string() == "0110");
  CHECK(w[0] == 0);
  CHECK(w[1] == 1);
  CHECK(w.cyclic(-1) == 0);
  CHECK(w.cyclic(5) == 1);
  CHECK(w.count_ones() == 2);
  CHECK(w.one_frequency() == make_rat(1, 2));
  CHECK(w.complemented().to_string() == "1001");
  CHECK(w.rotated(1).to_string() == "1100");
  CHECK(w.repeated(2).to_string() == "01100110");
  CHECK(w.subword(1, 2).to_string() == "11");
  CHECK(w.cyclic_window(3, 5).to_string() == "00110");
  CHECK_THROWS_AS(Word::parse("012"), invalid_input);
  CHECK_THROWS_AS(Word::parse(""), invalid_input);
}

TEST_CASE("primitive periods") {
  CHECK(Word::parse("0101").primitive_period() == 2);
  CHECK(Word::parse("011011").primitive_period() == 3);
  CHECK(Word::parse("0110").primitive_period() == 4);
  CHECK(Word::parse("1").is_primitive());
}

TEST_CASE("occurrence counting") {
  Word text = Word::parse("010101");
  CHECK(count_occurrences(text, Word::parse("01")) == 3);
  CHECK(count_occurrences(text, Word::parse("0101")) == 2);
  CHECK(count_occurrences(text, Word::parse("11")) == 0);
  CHECK(cyclic_count_occurrences(text, Word::parse("10")) == 3);
  CHECK(cyclic_count_occurrences(Word::parse("10"), Word::parse("01")) == 1);
  CHECK(mismatch_density(Word::parse("0110"), Word::parse("0101")) == make_rat(1, 2));
}

TEST_CASE("primitive necklace enumeration") {
  // Counts per exact period: 2, 1, 2, 3, 6, 9 for periods 1..6.
  std::vector<long long> expected = {2, 3, 5, 8, 14, 23};
  for (int p = 1; p <= 6; ++p) {
    std::vector<Word> neck = primitive_necklaces(p);
    CHECK(static_cast<long long>(neck.size()) == expected[static_cast<std::size_t>(p - 1)]);
    std::set<std::string> orbits;
    for (const Word& w : neck) {
      CHECK(w.is_primitive());
      std::string least = w.to_string();
      for (long long r = 1; r < w.size(); ++r)
        least = std::min(least, w.rotated(r).to_string());
      CHECK(w.to_string() == least);
      orbits.insert(least);
    }
    CHECK(orbits.size() == neck.size());
  }
}

TEST_CASE("rotation coding of the golden shift") {
  BiSequence z = BiSequence::sturmian("golden", 0);
  // Hand arithmetic with gamma = (sqrt(5)-1)/2: frac(n * gamma) <= 1/2
  // exactly at n = 0, 2, 4, 5, 7, 10 within the first eleven indices.
  CHECK(z.window(0, 10).to_string() == "10101101001");
  BiSequence shifted = BiSequence::sturmian("golden", 2);
  for (long long i = -5; i <= 5; ++i) CHECK(shifted.symbol(i) == z.symbol(i + 2));
  BiSequence comp = BiSequence::complemented(z);
  for (long long i = -5; i <= 5; ++i) CHECK(comp.symbol(i) == 1 - z.symbol(i));
  CHECK_THROWS_AS(BiSequence::sturmian("1.5", 0), invalid_input);
  CHECK_THROWS_AS(BiSequence::sturmian("nonsense", 0), invalid_input);
}

TEST_CASE("periodic sequence windows") {
  BiSequence z = BiSequence::periodic(Word::parse("011"));
  CHECK(z.window(-2, 4).to_string() == "1101101");
  CHECK(*z.periodic_period() == 3);
  BiSequence s = BiSequence::shifted(z, 1);
  CHECK(s.window(0, 2).to_string() == "110");
  CHECK(*s.periodic_period() == 3);
}

TEST_CASE("block recursion structure") {
  BiSequence z = BiSequence::block_recursive(Word::parse("0"), Word::parse("1"), {4, 16, 64, 256}, 4);
  const auto* b = z.as_block();
  REQUIRE(b != nullptr);
  CHECK(b->len_b == std::vector<long long>{1, 5, 85, 5525, 1419925});
  CHECK(b->len_c == std::vector<long long>{1, 5, 85, 5525, 1419925});

  // B_1 = 0^4 1, C_1 = 1^4 0.
  CHECK(z.window(0, 4).to_string() == "00001");
  // C_1 appears after 16 copies of B_1 inside B_2.
  CHECK(z.window(80, 84).to_string() == "11110");
  // C_2 = C_1^16 B_1 sits after 64 copies of B_2 inside B_3.
  std::string c2;
  for (int i = 0; i < 16; ++i) c2 += "11110";
  c2 += "00001";
  CHECK(z.window(64 * 85, 64 * 85 + 84).to_string() == c2);

  // One-frequencies of the level windows.
  long long ones_b2 = z.window(0, 84).count_ones();
  CHECK(ones_b2 == 20);
  long long ones_b3 = z.window(0, 5524).count_ones();
  CHECK(ones_b3 == 1345);
  long long ones_c3 = z.window(256 * 5525, 256 * 5525 + 5524).count_ones();
  CHECK(ones_c3 == 4180);

  // The sequence tiles with period |B_4|.
  CHECK(z.symbol(0) == z.symbol(1419925));
  CHECK(z.symbol(-1) == z.symbol(1419924));
}

TEST_CASE("block recursion guards") {
  CHECK_THROWS_AS(
      BiSequence::block_recursive(Word::parse("0"), Word::parse("1"), {0}, 1), invalid_input);
  CHECK_THROWS_AS(
      BiSequence::block_recursive(Word::parse("0"), Word::parse("1"), {4, 16}, 3), invalid_input);
}

TEST_CASE("factor sets of periodic orbits") {
  BiSequence z = BiSequence::periodic(Word::parse("01"));
  SubshiftSpec::FactorSet fs = factor_set_of(z, 100, 2);
  REQUIRE(fs.factors.size() == 2);
  CHECK(fs.factors[0].to_string() == "01");
  CHECK(fs.factors[1].to_string() == "10");
  validate_factor_set(fs);
  // Each factor has exactly one follower, the other factor.
  CHECK(fs.followers[0] == std::vector<int>{1});
  CHECK(fs.followers[1] == std::vector<int>{0});
}

TEST_CASE("factor set validation rejects dead ends") {
  SubshiftSpec::FactorSet fs;
  fs.L = 2;
  fs.factors = {Word::parse("01"), Word::parse("11")};
  fs.followers = {{1}, {}};  // 11 has no follower
  CHECK_THROWS_AS(validate_factor_set(fs), invalid_input);

  SubshiftSpec::FactorSet bad_overlap;
  bad_overlap.L = 2;
  bad_overlap.factors = {Word::parse("00"), Word::parse("11")};
  bad_overlap.followers = {{1}, {0}};  // 00 -> 11 breaks the 1-overlap
  CHECK_THROWS_AS(validate_factor_set(bad_overlap), invalid_input);
}

TEST_CASE("factor sets prune to a fixpoint") {
  // Scanning a finite window of 0^inf 1 0^inf style content: use a periodic
  // word whose window shows a factor that cannot recur.
  BiSequence z = BiSequence::periodic(Word::parse("0001"));
  SubshiftSpec::FactorSet fs = factor_set_of(z, 200, 3);
  validate_factor_set(fs);
  // All four cyclic windows of 0001 survive: 000, 001, 010, 100.
  CHECK(fs.factors.size() == 4);
}
