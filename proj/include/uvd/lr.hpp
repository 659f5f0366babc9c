#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "uvd/linform.hpp"
#include "uvd/qrational.hpp"
#include "uvd/rational.hpp"
#include "uvd/sinhprod.hpp"
#include "uvd/universal.hpp"

namespace uvd {

// A direction in the (al, be, ga) parameter plane.
struct Direction {
  Rat dal, dbe, dga;
};

inline Rat hom_eval(const LinearForm& f, const Direction& d) {
  return f.a * d.dal + f.b * d.dbe + f.c * d.dga;
}

struct ZeroCounts {
  long num = 0;
  long den = 0;
};

// Counts sinh factors whose argument vanishes at p (cosh factors never do).
inline ZeroCounts structural_zeros(const SinhProduct& prod, const VogelPoint& p) {
  ZeroCounts z;
  for (const auto& f : prod.num_sinh)
    if (f.form(p) == 0) ++z.num;
  for (const auto& f : prod.den_sinh)
    if (f.form(p) == 0) ++z.den;
  return z;
}

enum class LRClass { Regular, LinearlyResolvable, NotResolvable };

inline std::string lr_class_name(LRClass c) {
  switch (c) {
    case LRClass::Regular: return "regular";
    case LRClass::LinearlyResolvable: return "LR";
    default: return "not-LR";
  }
}

// Regular: no denominator factor vanishes.  With d > 0 vanishing denominator
// factors and n vanishing numerator factors, the restriction to a generic
// line through p behaves as s^(n-d): finite limit iff n >= d.
inline LRClass classify_point(const SinhProduct& prod, const VogelPoint& p) {
  ZeroCounts z = structural_zeros(prod, p);
  if (z.den == 0) return LRClass::Regular;
  return z.num >= z.den ? LRClass::LinearlyResolvable : LRClass::NotResolvable;
}

struct LRError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A direction is regular at p when no vanishing factor form is annihilated by
// it; along such a line each vanishing sinh is asymptotically linear in the
// line parameter.
inline bool is_regular_direction(const SinhProduct& prod, const VogelPoint& p,
                                 const Direction& d) {
  for (const auto& f : prod.num_sinh)
    if (f.form(p) == 0 && hom_eval(f.form, d) == 0) return false;
  for (const auto& f : prod.den_sinh)
    if (f.form(p) == 0 && hom_eval(f.form, d) == 0) return false;
  return true;
}

// Limit of the product along p + s*d as s -> 0: vanishing factors contribute
// their slopes scale*f(d), the rest substitute at p.
inline QRational resolve_on_line(const SinhProduct& prod, const VogelPoint& p,
                                 const Direction& d) {
  if (!is_regular_direction(prod, p, d))
    throw LRError("direction not regular at this point");
  ZeroCounts z = structural_zeros(prod, p);
  if (z.num < z.den) throw LRError("pole along every line through the point");
  if (z.num > z.den) return QRational();
  SinhProduct rest;
  rest.prefactor = prod.prefactor;
  Rat slope = 1;
  for (const auto& f : prod.num_sinh) {
    if (f.form(p) == 0)
      slope *= f.scale * hom_eval(f.form, d);
    else
      rest.num_sinh.push_back(f);
  }
  for (const auto& f : prod.den_sinh) {
    if (f.form(p) == 0)
      slope /= f.scale * hom_eval(f.form, d);
    else
      rest.den_sinh.push_back(f);
  }
  rest.num_cosh = prod.num_cosh;
  rest.den_cosh = prod.den_cosh;
  return rest.substitute_point(p).scaled(slope);
}

struct LRResult {
  LRClass cls = LRClass::Regular;
  long num_zeros = 0;
  long den_zeros = 0;
  bool direction_independent = true;
  QRational value;  // resolved value; zero placeholder when NotResolvable
};

// Classifies, and for resolvable singular points verifies that the resolved
// value agrees across ndirs random regular directions.
inline LRResult lr_analyze(const SinhProduct& prod, const VogelPoint& p,
                           int ndirs, RatRng& rng) {
  LRResult r;
  ZeroCounts z = structural_zeros(prod, p);
  r.num_zeros = z.num;
  r.den_zeros = z.den;
  r.cls = classify_point(prod, p);
  if (r.cls == LRClass::Regular) {
    r.value = prod.substitute_point(p);
    return r;
  }
  if (r.cls == LRClass::NotResolvable) {
    r.direction_independent = false;
    return r;
  }
  bool have = false;
  for (int i = 0; i < ndirs; ++i) {
    Direction d;
    do {
      d = {rng.nonzero(), rng.nonzero(), rng.nonzero()};
    } while (!is_regular_direction(prod, p, d));
    QRational v = resolve_on_line(prod, p, d);
    if (!have) {
      r.value = v;
      have = true;
    } else if (!qrat_equal(r.value, v)) {
      r.direction_independent = false;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sweep over named point sets.
// ---------------------------------------------------------------------------
struct SweepCell {
  std::string point_name;
  VogelPoint point;
  long k = 0, n = 0;
  std::string perm;  // parameter permutation applied to the formula
  LRClass cls = LRClass::Regular;
  long num_zeros = 0, den_zeros = 0;
};

inline std::vector<std::pair<std::string, VogelPoint>> sweep_pointset(
    const std::string& name) {
  if (name == "vogel")
    return {{"A2", point_A(2)}, {"A3", point_A(3)}, {"B2", point_B(2)},
            {"B3", point_B(3)}, {"C3", point_C(3)}, {"D4", point_D(4)},
            {"D5", point_D(5)}, {"G2", point_G2()}, {"F4", point_F4()},
            {"E6", point_E6()}, {"E7", point_E7()}, {"E8", point_E8()}};
  std::vector<std::pair<std::string, VogelPoint>> pts;
  if (name == "isolated") {
    for (const auto& np : isolated_points()) pts.emplace_back(np.name, np.p);
    return pts;
  }
  if (name == "Y") {
    for (const auto& np : y_points()) pts.emplace_back(np.name, np.p);
    return pts;
  }
  throw std::invalid_argument("unknown point set: " + name);
}

// Classifies X2^k g^n at every point of the set, for all k, n <= kmax, nmax
// and all six parameter permutations.
inline std::vector<SweepCell> lr_sweep(const std::string& pointset, long kmax,
                                       long nmax) {
  std::vector<SweepCell> cells;
  auto pts = sweep_pointset(pointset);
  for (long k = 0; k <= kmax; ++k)
    for (long n = 0; n <= nmax; ++n) {
      SinhProduct base = qdim_xkn(k, n);
      for (const auto& perm : all_perms()) {
        SinhProduct prod = base.permuted(perm);
        for (const auto& [pname, p] : pts) {
          SweepCell c;
          c.point_name = pname;
          c.point = p;
          c.k = k;
          c.n = n;
          c.perm = perm.name();
          ZeroCounts z = structural_zeros(prod, p);
          c.num_zeros = z.num;
          c.den_zeros = z.den;
          c.cls = classify_point(prod, p);
          cells.push_back(std::move(c));
        }
      }
    }
  return cells;
}

}  // namespace uvd
