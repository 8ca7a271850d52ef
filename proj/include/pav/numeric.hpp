#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "pav/errors.hpp"

namespace pav {

using Int = mpz_class;
using Rat = mpq_class;

// Floor division/remainder; for b > 0 the remainder lies in [0, b).
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int fmod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Exact n-th root of a >= 0 if it exists.
inline std::optional<Int> exact_root(const Int& a, unsigned long n) {
  if (a < 0) return std::nullopt;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
  if (!exact) return std::nullopt;
  return r;
}

inline Int rat_floor(const Rat& x) { return fdiv(x.get_num(), x.get_den()); }

// Canonical representative of x mod 1 in [0, 1).
inline Rat frac(const Rat& x) { return x - Rat(rat_floor(x)); }

// Robust against non-canonical mpq values (e.g. Rat(4, 2)).
inline bool is_integral(const Rat& x) { return x.get_num() % x.get_den() == 0; }

// Reduced "p/q", or just "p" when q = 1.
inline std::string rat_str(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Strict parse of "p" or "p/q" with q > 0; result is canonicalized.
inline Rat parse_rat(const std::string& s, const std::string& loc = "") {
  auto bad = [&]() -> Rat { throw Error("ParseError", "invalid rational '" + s + "'", loc); };
  if (s.empty()) return bad();
  std::size_t slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t, bool sign) {
    if (t.empty()) return false;
    std::size_t i = (sign && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) return bad();
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) return bad();
  if (r.get_den() == 0) return bad();
  r.canonicalize();
  return r;
}

// Deterministic uniform draw from [0, n); modulo reduction keeps results
// identical across standard libraries (std::uniform_int_distribution is not
// portable across implementations).
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

// Uniform-ish integer in [lo, hi].
inline long rng_range(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace pav
