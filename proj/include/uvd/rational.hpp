#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace uvd {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("not an integer: " + rat_str(r));
  if (!r.get_num().fits_slong_p()) throw std::domain_error("out of range");
  return r.get_num().get_si();
}

// lcm of two positive integers (as mpz).
inline mpz_class lcm_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g, l;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  l = a / g * b;
  return l;
}

inline long double to_ld(const Rat& r) {
  // get_d loses precision for huge operands, adequate for float cross-checks
  return static_cast<long double>(r.get_d());
}

// Deterministic PRNG used by all randomized property tests/solvers.
class RatRng {
 public:
  explicit RatRng(std::uint64_t seed) : eng_(seed) {}

  // uniform nonzero rational p/q with p in [-m, m]\{0}, q in [1, m]
  Rat nonzero(long m = 12) {
    for (;;) {
      long p = pick(-m, m), q = pick(1, m);
      if (p != 0) return rat(p, q);
    }
  }

  Rat any(long m = 12) { return rat(pick(-m, m), pick(1, m)); }

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng_);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace uvd
