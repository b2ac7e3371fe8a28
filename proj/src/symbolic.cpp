#include "shiftopt/symbolic.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace shiftopt {

namespace {

constexpr long long kMaxMaterialized = 1ll << 24;
constexpr long long kMaxWindow = 1ll << 27;
constexpr long long kMaxBlockLen = 1ll << 62;

}  // namespace

Word Word::parse(std::string_view bits) {
  if (bits.empty()) throw invalid_input("empty word");
  std::vector<std::uint8_t> s;
  s.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') throw invalid_input("word symbols must be 0 or 1");
    s.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return from_symbols(std::move(s));
}

Word Word::from_symbols(std::vector<std::uint8_t> symbols) {
  if (symbols.empty()) throw invalid_input("empty word");
  for (auto v : symbols)
    if (v > 1) throw invalid_input("word symbols must be 0 or 1");
  Word w;
  w.symbols_ = std::move(symbols);
  return w;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(symbols_.size());
  for (auto v : symbols_) s.push_back(static_cast<char>('0' + v));
  return s;
}

Word Word::repeated(long long m) const {
  if (m < 1) throw invalid_input("repetition count must be positive");
  if (m * size() > kMaxMaterialized) throw invalid_input("repeated word too large");
  std::vector<std::uint8_t> s;
  s.reserve(static_cast<std::size_t>(m * size()));
  for (long long r = 0; r < m; ++r) s.insert(s.end(), symbols_.begin(), symbols_.end());
  return from_symbols(std::move(s));
}

Word Word::complemented() const {
  std::vector<std::uint8_t> s(symbols_);
  for (auto& v : s) v = static_cast<std::uint8_t>(1 - v);
  return from_symbols(std::move(s));
}

Word Word::rotated(long long r) const {
  std::vector<std::uint8_t> s(symbols_.size());
  for (long long i = 0; i < size(); ++i)
    s[static_cast<std::size_t>(i)] = symbols_[static_cast<std::size_t>(imod(i + r, size()))];
  return from_symbols(std::move(s));
}

Word Word::cyclic_window(long long r, long long n) const {
  if (n < 1 || n > kMaxWindow) throw invalid_input("bad cyclic window length");
  std::vector<std::uint8_t> s(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i)
    s[static_cast<std::size_t>(i)] = symbols_[static_cast<std::size_t>(imod(r + i, size()))];
  return from_symbols(std::move(s));
}

Word Word::subword(long long from, long long n) const {
  if (from < 0 || n < 1 || from + n > size()) throw invalid_input("subword out of range");
  return from_symbols(std::vector<std::uint8_t>(symbols_.begin() + from, symbols_.begin() + from + n));
}

long long Word::count_ones() const {
  long long c = 0;
  for (auto v : symbols_) c += v;
  return c;
}

Rat Word::one_frequency() const {
  if (empty()) throw invalid_input("frequency of empty word");
  return make_rat(count_ones(), size());
}

long long Word::primitive_period() const {
  if (empty()) throw invalid_input("period of empty word");
  long long n = size();
  for (long long p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (long long i = p; i < n && ok; ++i) ok = symbols_[i] == symbols_[i - p];
    if (ok) return p;
  }
  return n;
}

long long count_occurrences(const Word& text, const Word& pattern) {
  if (pattern.empty()) throw invalid_input("empty pattern");
  long long n = text.size(), m = pattern.size(), c = 0;
  for (long long i = 0; i + m <= n; ++i) {
    bool hit = true;
    for (long long t = 0; t < m && hit; ++t) hit = text[i + t] == pattern[t];
    c += hit;
  }
  return c;
}

long long cyclic_count_occurrences(const Word& text, const Word& pattern) {
  if (pattern.empty()) throw invalid_input("empty pattern");
  long long n = text.size(), m = pattern.size(), c = 0;
  for (long long i = 0; i < n; ++i) {
    bool hit = true;
    for (long long t = 0; t < m && hit; ++t) hit = text.cyclic(i + t) == pattern[t];
    c += hit;
  }
  return c;
}

Rat mismatch_density(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw invalid_input("mismatch_density needs equal lengths");
  long long d = 0;
  for (long long i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return make_rat(d, u.size());
}

std::vector<Word> primitive_necklaces(int max_period) {
  if (max_period < 1 || max_period > 24) throw invalid_input("bad necklace period bound");
  std::vector<Word> out;
  for (int p = 1; p <= max_period; ++p) {
    for (unsigned long long val = 0; val < (1ull << p); ++val) {
      std::vector<std::uint8_t> s(static_cast<std::size_t>(p));
      for (int t = 0; t < p; ++t)
        s[static_cast<std::size_t>(t)] = static_cast<std::uint8_t>((val >> (p - 1 - t)) & 1);
      Word w = Word::from_symbols(std::move(s));
      bool keep = true;
      for (long long r = 1; r < p && keep; ++r) {
        Word rot = w.rotated(r);
        if (rot <= w) keep = false;  // smaller rotation, or imprimitive
      }
      if (keep) out.push_back(std::move(w));
    }
  }
  return out;
}

// --- BiSequence ----------------------------------------------------------

mpf_class parse_gamma(const std::string& spec) {
  mpf_class g(0, kCirclePrecBits);
  if (spec == "golden") {
    mpf_class five(5, kCirclePrecBits), root(0, kCirclePrecBits);
    mpf_sqrt(root.get_mpf_t(), five.get_mpf_t());
    g = (root - 1) / 2;
    return g;
  }
  if (g.set_str(spec, 10) != 0) throw invalid_input("bad gamma literal: " + spec);
  if (g <= 0 || g >= 1) throw invalid_input("gamma must lie strictly in (0, 1)");
  return g;
}

BiSequence BiSequence::periodic(Word w) {
  if (w.empty()) throw invalid_input("periodic sequence needs a nonempty word");
  return BiSequence(Periodic{std::move(w)});
}

BiSequence BiSequence::sturmian(const std::string& gamma_spec, long long offset) {
  Sturmian s{gamma_spec, parse_gamma(gamma_spec), offset};
  return BiSequence(std::move(s));
}

BiSequence BiSequence::block_recursive(Word seed_b, Word seed_c,
                                       std::vector<long long> exponents, int depth) {
  if (seed_b.empty() || seed_c.empty()) throw invalid_input("block seeds must be nonempty");
  if (depth < 0 || depth > static_cast<int>(exponents.size()))
    throw invalid_input("block depth must lie in [0, #exponents]");
  for (long long a : exponents)
    if (a < 1) throw invalid_input("block exponents must be >= 1");
  BlockRecursive b{std::move(seed_b), std::move(seed_c), std::move(exponents), depth, {}, {}};
  b.len_b.resize(static_cast<std::size_t>(depth) + 1);
  b.len_c.resize(static_cast<std::size_t>(depth) + 1);
  b.len_b[0] = b.seed_b.size();
  b.len_c[0] = b.seed_c.size();
  for (int j = 1; j <= depth; ++j) {
    long long a = b.exponents[static_cast<std::size_t>(j - 1)];
    __int128 lb = static_cast<__int128>(a) * b.len_b[j - 1] + b.len_c[j - 1];
    __int128 lc = static_cast<__int128>(a) * b.len_c[j - 1] + b.len_b[j - 1];
    if (lb > kMaxBlockLen || lc > kMaxBlockLen) throw invalid_input("block recursion length overflow");
    b.len_b[static_cast<std::size_t>(j)] = static_cast<long long>(lb);
    b.len_c[static_cast<std::size_t>(j)] = static_cast<long long>(lc);
  }
  return BiSequence(std::move(b));
}

BiSequence BiSequence::shifted(BiSequence base, long long shift) {
  return BiSequence(Shifted{std::make_shared<const BiSequence>(std::move(base)), shift});
}

BiSequence BiSequence::complemented(BiSequence base) {
  return BiSequence(Complemented{std::make_shared<const BiSequence>(std::move(base))});
}

namespace {

mpf_class frac_part(const mpf_class& x) {
  mpf_class fl(0, kCirclePrecBits);
  mpf_floor(fl.get_mpf_t(), x.get_mpf_t());
  mpf_class r(0, kCirclePrecBits);
  r = x - fl;
  return r;
}

// Aborts when t sits inside the guard band of an endpoint of [0, 1/2] but is
// not an exact hit (m == 0 is the only exact hit an irrational gamma allows).
void guard_endpoints(const mpf_class& t, long long m) {
  static const mpf_class guard(kEndpointGuard, kCirclePrecBits);
  if (m == 0) return;
  mpf_class d(0, kCirclePrecBits);
  d = t;
  if (d < guard)
    throw invalid_input("rotation coding within guard of 0 at index " + std::to_string(m));
  d = t - mpf_class(0.5, kCirclePrecBits);
  if (d < 0) d = -d;
  if (d < guard)
    throw invalid_input("rotation coding within guard of 1/2 at index " + std::to_string(m));
  d = 1 - t;
  if (d < guard)
    throw invalid_input("rotation coding within guard of 1 at index " + std::to_string(m));
}

int sturmian_symbol_at(const BiSequence::Sturmian& s, long long i) {
  long long m = i + s.offset;
  if (m == 0) return 1;
  mpf_class t(0, kCirclePrecBits);
  t = s.gamma * static_cast<long>(m);
  t = frac_part(t);
  guard_endpoints(t, m);
  return t <= mpf_class(0.5, kCirclePrecBits) ? 1 : 0;
}

void sturmian_fill(const BiSequence::Sturmian& s, long long a, long long n,
                   std::vector<std::uint8_t>& out) {
  const mpf_class half(0.5, kCirclePrecBits);
  mpf_class t(0, kCirclePrecBits);
  t = s.gamma * static_cast<long>(a + s.offset);
  t = frac_part(t);
  for (long long j = 0; j < n; ++j) {
    long long m = a + s.offset + j;
    if (m == 0) {
      out.push_back(1);
      t = 0;  // pin the exact hit, killing any accumulated drift
    } else {
      guard_endpoints(t, m);
      out.push_back(t <= half ? 1 : 0);
    }
    t += s.gamma;
    if (t >= 1) t -= 1;
  }
}

int block_symbol_at(const BiSequence::BlockRecursive& b, long long i) {
  long long pos = imod(i, b.len_b[static_cast<std::size_t>(b.depth)]);
  bool in_b = true;
  for (int j = b.depth; j > 0; --j) {
    long long a = b.exponents[static_cast<std::size_t>(j - 1)];
    long long head = in_b ? b.len_b[static_cast<std::size_t>(j - 1)]
                          : b.len_c[static_cast<std::size_t>(j - 1)];
    long long cut = a * head;
    if (pos < cut) {
      pos %= head;
    } else {
      pos -= cut;
      in_b = !in_b;
    }
  }
  const Word& w = in_b ? b.seed_b : b.seed_c;
  return w[pos];
}

}  // namespace

int BiSequence::symbol(long long i) const {
  return std::visit(
      [&](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Periodic>) {
          return s.word.cyclic(i);
        } else if constexpr (std::is_same_v<T, Sturmian>) {
          return sturmian_symbol_at(s, i);
        } else if constexpr (std::is_same_v<T, BlockRecursive>) {
          return block_symbol_at(s, i);
        } else if constexpr (std::is_same_v<T, Shifted>) {
          return s.base->symbol(i + s.shift);
        } else {
          return 1 - s.base->symbol(i);
        }
      },
      v_);
}

Word BiSequence::window(long long a, long long b) const {
  if (a > b) throw invalid_input("window with a > b");
  long long n = b - a + 1;
  if (n > kMaxWindow) throw invalid_input("window too long");
  return std::visit(
      [&](const auto& s) -> Word {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Sturmian>) {
          std::vector<std::uint8_t> out;
          out.reserve(static_cast<std::size_t>(n));
          sturmian_fill(s, a, n, out);
          return Word::from_symbols(std::move(out));
        } else if constexpr (std::is_same_v<T, Shifted>) {
          return s.base->window(a + s.shift, b + s.shift);
        } else if constexpr (std::is_same_v<T, Complemented>) {
          return s.base->window(a, b).complemented();
        } else {
          std::vector<std::uint8_t> out;
          out.reserve(static_cast<std::size_t>(n));
          for (long long i = a; i <= b; ++i)
            out.push_back(static_cast<std::uint8_t>(symbol(i)));
          return Word::from_symbols(std::move(out));
        }
      },
      v_);
}

std::optional<long long> BiSequence::periodic_period() const {
  return std::visit(
      [&](const auto& s) -> std::optional<long long> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Periodic>) {
          return s.word.primitive_period();
        } else if constexpr (std::is_same_v<T, Shifted> || std::is_same_v<T, Complemented>) {
          return s.base->periodic_period();
        } else {
          return std::nullopt;
        }
      },
      v_);
}

Word block_sequence(const Word& seed_b, const Word& seed_c,
                    const std::vector<long long>& exponents, int depth) {
  if (depth < 0 || depth > static_cast<int>(exponents.size()))
    throw invalid_input("block depth must lie in [0, #exponents]");
  std::string b = seed_b.to_string(), c = seed_c.to_string();
  for (int j = 1; j <= depth; ++j) {
    long long a = exponents[static_cast<std::size_t>(j - 1)];
    if (a < 1) throw invalid_input("block exponents must be >= 1");
    if ((static_cast<long long>(b.size()) * a + static_cast<long long>(c.size())) > kMaxMaterialized)
      throw invalid_input("materialized block exceeds size cap");
    std::string nb, nc;
    for (long long r = 0; r < a; ++r) nb += b;
    nb += c;
    for (long long r = 0; r < a; ++r) nc += c;
    nc += b;
    b = std::move(nb);
    c = std::move(nc);
  }
  return Word::parse(b);
}

// --- SubshiftSpec --------------------------------------------------------

SubshiftSpec SubshiftSpec::periodic_orbit(Word w) {
  if (w.empty()) throw invalid_input("periodic orbit needs a nonempty word");
  return SubshiftSpec(PeriodicOrbit{std::move(w)});
}

SubshiftSpec SubshiftSpec::factor_set(long long L, std::vector<Word> factors,
                                      std::vector<std::vector<int>> followers) {
  FactorSet fs{L, std::move(factors), std::move(followers)};
  validate_factor_set(fs);
  return SubshiftSpec(std::move(fs));
}

SubshiftSpec SubshiftSpec::orbit_closure(BiSequence seq, long long window, long long L) {
  if (L < 1) throw invalid_input("factor order must be >= 1");
  if (window < L) throw invalid_input("window shorter than factor order");
  return SubshiftSpec(OrbitClosureApprox{std::make_shared<const BiSequence>(std::move(seq)), window, L});
}

void validate_factor_set(const SubshiftSpec::FactorSet& fs) {
  if (fs.L < 1) throw invalid_input("factor order must be >= 1");
  if (fs.factors.empty()) throw invalid_input("factor set is empty");
  if (fs.followers.size() != fs.factors.size())
    throw invalid_input("follower table size mismatch");
  for (std::size_t i = 0; i < fs.factors.size(); ++i) {
    if (fs.factors[i].size() != fs.L) throw invalid_input("factor of wrong length");
    if (i > 0 && !(fs.factors[i - 1] < fs.factors[i]))
      throw invalid_input("factors must be sorted and unique");
  }
  for (std::size_t i = 0; i < fs.followers.size(); ++i) {
    if (fs.followers[i].empty())
      throw invalid_input("factor set has a dead end at " + fs.factors[i].to_string());
    for (int f : fs.followers[i]) {
      if (f < 0 || f >= static_cast<int>(fs.factors.size()))
        throw invalid_input("follower index out of range");
      for (long long t = 0; t + 1 < fs.L; ++t)
        if (fs.factors[i][t + 1] != fs.factors[static_cast<std::size_t>(f)][t])
          throw invalid_input("follower violates overlap consistency");
    }
  }
}

SubshiftSpec::FactorSet factor_set_of(const BiSequence& seq, long long window, long long L) {
  if (L < 1) throw invalid_input("factor order must be >= 1");
  if (window < L) throw invalid_input("window shorter than factor order");
  Word w = seq.window(0, window - 1);
  std::map<Word, int> index;
  std::vector<Word> factors;
  for (long long i = 0; i + L <= window; ++i) {
    Word f = w.subword(i, L);
    if (index.emplace(f, 0).second) factors.push_back(std::move(f));
  }
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 0; i < factors.size(); ++i) index[factors[i]] = static_cast<int>(i);

  std::vector<std::set<int>> succ(factors.size());
  for (long long i = 0; i + L + 1 <= window; ++i)
    succ[static_cast<std::size_t>(index[w.subword(i, L)])].insert(index[w.subword(i + 1, L)]);

  // Drop dead-end factors until every survivor has a surviving follower.
  std::vector<bool> alive(factors.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (!alive[i]) continue;
      bool has = false;
      for (int f : succ[i])
        if (alive[static_cast<std::size_t>(f)]) has = true;
      if (!has) {
        alive[i] = false;
        changed = true;
      }
    }
  }

  std::vector<Word> kept;
  std::vector<int> remap(factors.size(), -1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (alive[i]) {
      remap[i] = static_cast<int>(kept.size());
      kept.push_back(factors[i]);
    }
  }
  if (kept.empty()) throw invalid_input("orbit closure approximation pruned to nothing");
  std::vector<std::vector<int>> followers(kept.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!alive[i]) continue;
    for (int f : succ[i])
      if (alive[static_cast<std::size_t>(f)])
        followers[static_cast<std::size_t>(remap[i])].push_back(remap[static_cast<std::size_t>(f)]);
  }
  SubshiftSpec::FactorSet fs{L, std::move(kept), std::move(followers)};
  validate_factor_set(fs);
  return fs;
}

}  // namespace shiftopt
