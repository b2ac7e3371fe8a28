#include "shiftopt/numeric.hpp"

#include <cctype>

namespace shiftopt {

Rat rat_from_string(const std::string& text) {
  if (text.empty()) throw invalid_input("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw invalid_input("bad rational literal: " + text);
  // Canonicalizing a zero denominator is a hard GMP error, so reject first.
  if (q.get_den() == 0) throw invalid_input("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

Scalar scalar_from_string(const std::string& text) {
  bool plain = !text.empty();
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
      plain = false;
  }
  if (plain) return Scalar(rat_from_string(text));
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw invalid_input("bad scalar literal: " + text);
    return Scalar(v);
  } catch (const std::exception&) {
    throw invalid_input("bad scalar literal: " + text);
  }
}

long long checked_lcm(long long a, long long b) {
  if (a <= 0 || b <= 0) throw invalid_input("lcm of non-positive arguments");
  long long g = std::gcd(a, b);
  long long q = a / g;
  if (q > (1ll << 62) / b) throw invalid_input("lcm overflow");
  return q * b;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

double deterministic_sum(const std::vector<double>& values) {
  double total = 0.0;
  for (double v : values) total += v;
  return total;
}

}  // namespace shiftopt
