#pragma once

#include <array>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "uvd/rational.hpp"

namespace uvd {

// A point (al, be, ga) of Vogel's plane. Points are projective; most code
// works with a fixed affine representative.
struct VogelPoint {
  Rat al, be, ga;

  Rat t() const { return al + be + ga; }

  VogelPoint scaled(const Rat& s) const { return {al * s, be * s, ga * s}; }

  bool operator==(const VogelPoint& o) const {
    return al == o.al && be == o.be && ga == o.ga;
  }
};

// Linear form k0 + a*al + b*be + c*ga. The universal formulae use k0 == 0;
// the constant slot carries numeric entries of closed-form products.
struct LinearForm {
  Rat k0, a, b, c;

  Rat operator()(const VogelPoint& p) const {
    return k0 + a * p.al + b * p.be + c * p.ga;
  }

  bool is_zero() const {
    return k0 == 0 && a == 0 && b == 0 && c == 0;
  }

  bool is_constant() const { return a == 0 && b == 0 && c == 0; }

  LinearForm operator*(const Rat& s) const { return {k0 * s, a * s, b * s, c * s}; }
  LinearForm operator+(const LinearForm& o) const {
    return {k0 + o.k0, a + o.a, b + o.b, c + o.c};
  }
  LinearForm operator-() const { return {-k0, -a, -b, -c}; }

  bool operator==(const LinearForm& o) const {
    return k0 == o.k0 && a == o.a && b == o.b && c == o.c;
  }
  bool operator<(const LinearForm& o) const {
    if (k0 != o.k0) return k0 < o.k0;
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }

  // true if o == s*this for some nonzero rational s (k0 included)
  bool proportional(const LinearForm& o) const {
    const Rat* num = nullptr;
    const Rat* den = nullptr;
    const Rat *ts[4] = {&k0, &a, &b, &c}, *os[4] = {&o.k0, &o.a, &o.b, &o.c};
    for (int i = 0; i < 4; ++i) {
      if ((*ts[i] == 0) != (*os[i] == 0)) return false;
      if (*ts[i] != 0 && num == nullptr) { num = os[i]; den = ts[i]; }
    }
    if (num == nullptr) return true;  // both zero forms
    Rat s = *num / *den;
    return o.k0 == k0 * s && o.a == a * s && o.b == b * s && o.c == c * s;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rat& cf, const char* sym) {
      if (cf == 0) return;
      if (cf > 0 && !first) os << "+";
      if (cf == -1 && *sym) os << "-";
      else if (cf != 1 || !*sym) os << rat_str(cf);
      if ((cf != 1 && cf != -1) && *sym) os << "*";
      os << sym;
      first = false;
    };
    term(a, "α");
    term(b, "β");
    term(c, "γ");
    term(k0, "");
    if (first) os << "0";
    return os.str();
  }
};

// S3 action on the parameter slots: perm[i] tells which of (al,be,ga) feeds
// the i-th slot of a formula written in slot variables.
struct Perm3 {
  std::array<int, 3> p;  // values 0=al, 1=be, 2=ga

  static Perm3 identity() { return {{0, 1, 2}}; }

  std::string name() const {
    const char* sym[3] = {"α", "β", "γ"};
    return std::string(sym[p[0]]) + sym[p[1]] + sym[p[2]];
  }
  std::string ascii_name() const {
    const char* sym[3] = {"a", "b", "g"};
    return std::string(sym[p[0]]) + sym[p[1]] + sym[p[2]];
  }
};

inline const std::array<Perm3, 6>& all_perms() {
  static const std::array<Perm3, 6> all = {{{{0, 1, 2}}, {{0, 2, 1}}, {{1, 0, 2}},
                                            {{1, 2, 0}}, {{2, 0, 1}}, {{2, 1, 0}}}};
  return all;
}

// Coefficients migrate with their slot: slot i's coefficient lands on
// parameter perm.p[i].
inline LinearForm permute_form(const LinearForm& f, const Perm3& s) {
  Rat out[3] = {0, 0, 0};
  const Rat in[3] = {f.a, f.b, f.c};
  for (int i = 0; i < 3; ++i) out[s.p[i]] += in[i];
  return {f.k0, out[0], out[1], out[2]};
}

inline VogelPoint permute_point(const VogelPoint& pt, const Perm3& s) {
  // point whose slot-i coordinate is pt[perm[i]]
  const Rat in[3] = {pt.al, pt.be, pt.ga};
  return {in[s.p[0]], in[s.p[1]], in[s.p[2]]};
}

// Distinguished lines of Vogel's plane (forms in unprimed coordinates).
inline LinearForm sl_form() { return {0, 1, 1, 0}; }    // al + be
inline LinearForm so_form() { return {0, 2, 1, 0}; }    // 2al + be
inline LinearForm sp_form() { return {0, 1, 2, 0}; }    // al + 2be
inline LinearForm exc_form() { return {0, -2, -2, 1}; } // ga - 2(al+be)

// Named parametrized families (minimal normalization al = -2).
inline VogelPoint point_slN(const Rat& N) { return {-2, 2, N}; }
inline VogelPoint point_A(long n) { return {rat(-2), rat(2), rat(n + 1)}; }
inline VogelPoint point_B(long n) { return {rat(-2), rat(4), rat(2 * n - 3)}; }
inline VogelPoint point_C(long n) { return {rat(-2), rat(1), rat(n + 2)}; }
inline VogelPoint point_D(long n) { return {rat(-2), rat(4), rat(2 * n - 4)}; }
inline VogelPoint point_G2() { return {rat(-2), rat(10, 3), rat(8, 3)}; }
inline VogelPoint point_F4() { return {rat(-2), rat(5), rat(6)}; }
inline VogelPoint point_E6() { return {rat(-2), rat(6), rat(8)}; }
inline VogelPoint point_E7() { return {rat(-2), rat(8), rat(12)}; }
inline VogelPoint point_E8() { return {rat(-2), rat(12), rat(20)}; }

// Exc line in the (y, 1-y, 2) parametrization.
inline VogelPoint exc_line_point(const Rat& y) { return {y, 1 - y, 2}; }

}  // namespace uvd
