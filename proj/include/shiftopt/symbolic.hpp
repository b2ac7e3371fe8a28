#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "shiftopt/numeric.hpp"

namespace shiftopt {

// Finite binary word. Nonempty for every operation; the default-constructed
// state exists only so words can sit in containers before parsing.
class Word {
 public:
  Word() = default;
  static Word parse(std::string_view bits);
  static Word from_symbols(std::vector<std::uint8_t> symbols);

  long long size() const { return static_cast<long long>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }
  int operator[](long long i) const { return symbols_[static_cast<std::size_t>(i)]; }
  int cyclic(long long i) const { return symbols_[static_cast<std::size_t>(imod(i, size()))]; }

  std::string to_string() const;
  Word repeated(long long m) const;
  Word complemented() const;
  Word rotated(long long r) const;
  // Cyclic window of length n starting at phase r of the periodization.
  Word cyclic_window(long long r, long long n) const;
  Word subword(long long from, long long n) const;

  long long count_ones() const;
  Rat one_frequency() const;
  // Smallest p dividing size() with w = (prefix of length p) repeated.
  long long primitive_period() const;
  bool is_primitive() const { return primitive_period() == size(); }

  auto operator<=>(const Word&) const = default;
  const std::vector<std::uint8_t>& symbols() const { return symbols_; }

 private:
  std::vector<std::uint8_t> symbols_;
};

// Number of starting positions in [0, |text| - |pattern|] where pattern occurs.
long long count_occurrences(const Word& text, const Word& pattern);
// Occurrence count over one period of text's periodization (wrap-around).
long long cyclic_count_occurrences(const Word& text, const Word& pattern);

// Fraction of positions where two words of equal length differ.
Rat mismatch_density(const Word& u, const Word& v);

// Lexicographically least representatives of the primitive rotation classes,
// all periods from 1 through max_period.
std::vector<Word> primitive_necklaces(int max_period);

// Bi-infinite binary sequence, evaluated lazily by index.
class BiSequence {
 public:
  struct Periodic {
    Word word;
  };
  // symbol(i) = 1 iff frac((i + offset) * gamma) lies in [0, 1/2]; the left
  // interval is closed, so index -offset (an exact hit on 0) codes to 1.
  struct Sturmian {
    std::string gamma_spec;  // "golden" or a decimal literal, kept verbatim
    mpf_class gamma;         // kCirclePrecBits
    long long offset = 0;
  };
  // B_j = B_{j-1}^{a_j} C_{j-1} and C_j = C_{j-1}^{a_j} B_{j-1} with
  // a_j = exponents[j-1]; the sequence tiles B_depth with period |B_depth|
  // anchored at index 0. Evaluation descends the recursion, nothing above
  // the seed words is materialized.
  struct BlockRecursive {
    Word seed_b;
    Word seed_c;
    std::vector<long long> exponents;
    int depth = 0;
    std::vector<long long> len_b;  // len_b[j] = |B_j|, j = 0..depth
    std::vector<long long> len_c;
  };
  struct Shifted {
    std::shared_ptr<const BiSequence> base;
    long long shift = 0;  // symbol(i) = base(i + shift)
  };
  struct Complemented {
    std::shared_ptr<const BiSequence> base;
  };
  using Variant = std::variant<Periodic, Sturmian, BlockRecursive, Shifted, Complemented>;

  static BiSequence periodic(Word w);
  static BiSequence sturmian(const std::string& gamma_spec, long long offset);
  static BiSequence block_recursive(Word seed_b, Word seed_c,
                                    std::vector<long long> exponents, int depth);
  static BiSequence shifted(BiSequence base, long long shift);
  static BiSequence complemented(BiSequence base);

  int symbol(long long i) const;
  // Symbols a..b inclusive.
  Word window(long long a, long long b) const;
  // Period of the sequence when it is structurally periodic (Periodic
  // variant, possibly shifted/complemented); block tilings do not count.
  std::optional<long long> periodic_period() const;

  const Variant& variant() const { return v_; }
  const BlockRecursive* as_block() const { return std::get_if<BlockRecursive>(&v_); }

 private:
  explicit BiSequence(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// Parses "golden" or a decimal literal in (0, 1) at kCirclePrecBits.
mpf_class parse_gamma(const std::string& spec);

// Materializes B_depth of the block recursion (errors above 2^24 symbols).
Word block_sequence(const Word& seed_b, const Word& seed_c,
                    const std::vector<long long>& exponents, int depth);

// Target set for matching distances.
class SubshiftSpec {
 public:
  struct PeriodicOrbit {
    Word word;
  };
  // Admissible length-L blocks plus which block may follow which. The
  // follower relation must respect the (L-1)-overlap and leave no dead ends.
  struct FactorSet {
    long long L = 0;
    std::vector<Word> factors;               // sorted, unique, all length L
    std::vector<std::vector<int>> followers;  // indices into factors
  };
  struct OrbitClosureApprox {
    std::shared_ptr<const BiSequence> seq;
    long long window = 0;  // symbols [0, window) are scanned
    long long L = 0;
  };
  using Variant = std::variant<PeriodicOrbit, FactorSet, OrbitClosureApprox>;

  static SubshiftSpec periodic_orbit(Word w);
  static SubshiftSpec factor_set(long long L, std::vector<Word> factors,
                                 std::vector<std::vector<int>> followers);
  static SubshiftSpec orbit_closure(BiSequence seq, long long window, long long L);

  const Variant& variant() const { return v_; }

 private:
  explicit SubshiftSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// Validates a factor set (lengths, overlap consistency, dead ends).
void validate_factor_set(const SubshiftSpec::FactorSet& fs);

// Scans seq[0, window) and returns the observed factor set of order L with
// observed transitions; dead-end factors are pruned to a fixpoint.
SubshiftSpec::FactorSet factor_set_of(const BiSequence& seq, long long window, long long L);

}  // namespace shiftopt
