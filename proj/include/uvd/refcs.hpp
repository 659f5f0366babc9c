#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "uvd/linform.hpp"
#include "uvd/qrational.hpp"
#include "uvd/rootsys.hpp"
#include "uvd/universal.hpp"

namespace uvd {

struct RefCSError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// t = al+be+ga of the algebra in the root system's own normalization:
// the adjoint Casimir is 2t, and cas(theta) = (theta,theta) h_dual.
inline Rat algebra_t(const RootSystem& rs) {
  return rs.h_dual * rs.long_sq / 2;
}

// The refined exponent multiset { y(a,rho) - m(a,a)/2 : a > 0, 0 <= m < y }.
inline std::vector<Rat> refined_heights(const RootSystem& rs, long y) {
  if (y < 1) throw std::invalid_argument("refinement must be >= 1");
  std::vector<Rat> hs;
  hs.reserve(rs.positive.size() * y);
  for (const auto& mu : rs.positive) {
    Rat ar = rs.ip(mu, rs.rho), aa = rs.ip(mu, mu);
    for (long m = 0; m < y; ++m) hs.push_back(y * ar - m * aa / 2);
  }
  return hs;
}

inline QRational q_pow(const Rat& e) {
  long lat = static_cast<long>(e.get_den().get_si());
  detail::Poly num, one;
  num.emplace(static_cast<long>(e.get_num().get_si()), 1);
  one.emplace(0, 1);
  return QRational::from_polys(lat, std::move(num), std::move(one));
}

// F_X(x,y): the refined character sum r + sum_h (q^h + q^-h), q = e^x.
inline QRational f_x_direct(const RootSystem& rs, long y) {
  auto hs = refined_heights(rs, y);
  long lat = 1;
  for (const auto& h : hs)
    lat = static_cast<long>(
        lcm_z(lat, h.get_den()).get_si());
  detail::Poly p, one;
  detail::poly_add_term(p, 0, rs.rank);
  for (const auto& h : hs) {
    Rat e = h * lat;
    detail::poly_add_term(p, static_cast<long>(e.get_num().get_si()), 1);
    detail::poly_add_term(p, -static_cast<long>(e.get_num().get_si()), 1);
  }
  one.emplace(0, 1);
  return QRational::from_polys(lat, std::move(p), std::move(one));
}

// Universal three-factor form, equal to F_X(x,y) for every simply-laced
// algebra at its Vogel point (minimal normalization, al = -2 <-> long^2 = 2).
inline QRational f_x_simply_laced(const VogelPoint& p, const Rat& y) {
  Rat t = p.t();
  QRational num = QRational::q_binomial((p.al - 2 * t * y) / 4) *
                  QRational::q_binomial(y * (p.be - 2 * t) / 4) *
                  QRational::q_binomial(y * (p.ga - 2 * t) / 4);
  QRational den = QRational::q_binomial(p.al / 4) *
                  QRational::q_binomial(y * p.be / 4) *
                  QRational::q_binomial(y * p.ga / 4);
  return num / den;
}

struct FXClosedForm {
  std::string family;
  QRational A, B;  // Laurent polynomials in q

  QRational ratio() const { return A / B; }
};

// Closed forms for the non-simply-laced families, in the normalization that
// keeps all q-powers integral: long^2 = 4 for B, C, F4 and long^2 = 6 for G2.
// Simply-laced families come from the universal three-factor form instead.
inline FXClosedForm f_x_closed(Family family, int rank, long y) {
  if (y < 1) throw std::invalid_argument("refinement must be >= 1");
  const QRational one = QRational::constant(1);
  auto QP = [](long e) { return q_pow(Rat(e)); };
  long n = rank;
  FXClosedForm f;
  f.family = std::string(1, family_letter(family)) + std::to_string(rank);
  switch (family) {
    case Family::B: {
      if (rank < 2) throw std::invalid_argument("B needs rank >= 2");
      f.A = QP(4 * n * y + 2) + QP(-4 * (n - 1) * y) +
            (QP(1) + one) * (QP(y) - one) * (QP(2 * y) + one) *
                (QP(2 * n * y) - one) * (QP(y - 2 * n * y) + QP(1)) -
            QP(4 * y) - QP(2);
      f.B = (QP(2) - one) * (QP(4 * y) - one);
      return f;
    }
    case Family::C: {
      if (rank < 2) throw std::invalid_argument("C needs rank >= 2");
      // The q^(-2ny) prefactor restores the q -> 1/q symmetry of the
      // character sum; without it the ratio fails the direct-sum identity.
      f.A = QP(-2 * n * y) *
            ((QP(1) + one) * QP(y) * (QP(2 * n * y) - one) *
                 (QP(2 * n * y + 1) - one) +
             (QP(2 * y) - one) * (QP(n * y) - one) * (QP(n * y + 1) - one) *
                 (QP(2 * n * y + 1) - one));
      f.B = (QP(2) - one) * (QP(2 * y) - one);
      return f;
    }
    case Family::F: {
      if (rank != 4) throw std::invalid_argument("F needs rank 4");
      f.A = QP(-16 * y) * (QP(2 * y) + one) * (QP(4 * y) - QP(2 * y) + one) *
            (QP(12 * y + 1) - one) *
            (QP(5 * y + 1) - QP(8 * y + 1) + QP(9 * y + 1) + QP(14 * y + 1) +
             QP(5 * y) - QP(6 * y) + QP(9 * y) + one);
      f.B = QP(2) - one;
      return f;
    }
    case Family::G: {
      if (rank != 2) throw std::invalid_argument("G needs rank 2");
      f.A = QP(-9 * y) * (QP(6 * y + 1) - one) *
            (QP(4 * y + 1) + QP(8 * y + 1) + QP(4 * y + 2) - QP(6 * y + 2) +
             QP(8 * y + 2) + QP(12 * y + 2) + QP(4 * y) - QP(6 * y) +
             QP(8 * y) + one);
      f.B = QP(3) - one;
      return f;
    }
    default: {
      // simply-laced: universal three-factor form at the algebra's point
      VogelPoint p = vogel_point({family, rank});
      Rat t = p.t();
      f.A = QRational::q_binomial((p.al - 2 * t * y) / 4) *
            QRational::q_binomial(y * (p.be - 2 * t) / 4) *
            QRational::q_binomial(y * (p.ga - 2 * t) / 4);
      f.B = QRational::q_binomial(p.al / 4) *
            QRational::q_binomial(y * p.be / 4) *
            QRational::q_binomial(y * p.ga / 4);
      return f;
    }
  }
}

// dim(y) = y dim - (y-1)(be-2t)(ga-2t)/(be ga).  On simply-laced points the
// correction factor equals the rank, so this is y(dim-r)+r there; short-root
// algebras refine differently and take y(dim-r)+r directly from (dim, r).
inline Rat dim_refined(const VogelPoint& p, const Rat& y) {
  if (p.be == 0 || p.ga == 0)
    throw std::domain_error("dim_refined: be*ga == 0");
  Rat t = p.t();
  Rat rr = (p.be - 2 * t) * (p.ga - 2 * t) / (p.be * p.ga);
  return y * dim_adjoint(p) - (y - 1) * rr;
}

// ---------------------------------------------------------------------------
// Numeric layer.
// ---------------------------------------------------------------------------
struct RefCSParams {
  long double kappa = 1;
  long double y = 1;
};

struct QuadratureSpec {
  long double cutoff = 0;  // 0: pick from the integrand's decay rate
  long nodes = 8192;
  long double origin_eps = 1e-3L;  // series/direct switch point

  void validate() const {
    if (cutoff < 0 || nodes < 16 || origin_eps <= 0)
      throw std::invalid_argument("bad quadrature spec");
  }
};

// An even integrand profile F(u) with its small-u series
// F(u) = F0 + c2 u^2 + c4 u^4 + O(u^6) and growth exponent hmax.
struct RefinedIntegrand {
  std::function<long double(long double)> F;
  long double F0 = 0, c2 = 0, c4 = 0;
  long double t = 0;     // same normalization as the exponents in F
  long double hmax = 0;  // F(u) ~ e^(u*hmax) as u -> +inf
};

inline RefinedIntegrand integrand_from_rs(const RootSystem& rs, long y) {
  auto hs_q = refined_heights(rs, y);
  auto hs = std::make_shared<std::vector<long double>>();
  for (const auto& h : hs_q) hs->push_back(to_ld(h));
  RefinedIntegrand I;
  long double r = rs.rank;
  I.F0 = r + 2.0L * hs->size();
  for (long double h : *hs) {
    I.c2 += h * h;
    I.c4 += h * h * h * h / 12.0L;
    I.hmax = std::max(I.hmax, h);
  }
  I.t = to_ld(algebra_t(rs));
  I.F = [hs, r](long double u) {
    long double s = r;
    for (long double h : *hs) s += std::exp(u * h) + std::exp(-u * h);
    return s;
  };
  return I;
}

// f(x,y) evaluated in log space; real y is allowed here.
inline RefinedIntegrand integrand_universal(const VogelPoint& p,
                                            long double y) {
  long double al = to_ld(p.al), be = to_ld(p.be), ga = to_ld(p.ga);
  long double t = al + be + ga;
  auto a = std::make_shared<std::array<long double, 6>>();
  (*a) = {(al - 2 * t * y) / 4, y * (be - 2 * t) / 4, y * (ga - 2 * t) / 4,
          al / 4, y * be / 4, y * ga / 4};
  RefinedIntegrand I;
  I.t = t;
  long double f0 = 1, S2 = 0, S4 = 0;
  for (int i = 0; i < 3; ++i) {
    long double ai = (*a)[i], bi = (*a)[i + 3];
    f0 *= ai / bi;
    S2 += ai * ai - bi * bi;
    S4 += ai * ai * ai * ai - bi * bi * bi * bi;
    I.hmax += std::fabs(ai) - std::fabs(bi);
  }
  I.F0 = f0;
  I.c2 = f0 * S2 / 6;
  I.c4 = f0 * ((S2 / 6) * (S2 / 6) / 2 - S4 / 180);
  I.F = [a](long double u) {
    long double ln = 0, sign = 1;
    for (int i = 0; i < 3; ++i) {
      long double zn = u * (*a)[i], zd = u * (*a)[i + 3];
      if (zn < 0) {
        sign = -sign;
        zn = -zn;
      }
      if (zd < 0) {
        sign = -sign;
        zd = -zd;
      }
      ln += zn + std::log1p(-std::exp(-2 * zn));
      ln -= zd + std::log1p(-std::exp(-2 * zd));
    }
    return sign * std::exp(ln);
  };
  return I;
}

namespace detail {

inline long double simpson(const std::function<long double(long double)>& f,
                           long double a, long double b, long n) {
  if (n % 2) ++n;
  long double h = (b - a) / n, s = f(a) + f(b);
  for (long i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0L : 2.0L);
  return s * h / 3;
}

inline long double log_simpson(
    const std::function<long double(long double)>& f, long double a,
    long double b, long n) {
  auto g = [&](long double u) {
    long double x = std::exp(u);
    return f(x) * x;
  };
  return simpson(g, std::log(a), std::log(b), n);
}

}  // namespace detail

// ln Z = F0/2 ln(ty/delta) + int_0^inf dx/(x(e^x-1)) (F(x/ty) - F(x/delta)).
inline long double ln_z_integral(const RefinedIntegrand& I, long double kappa,
                                 long double y, QuadratureSpec quad = {}) {
  quad.validate();
  long double b = I.t * y, c = kappa + b;
  if (b <= 0 || c <= 0) throw RefCSError("need t y > 0 and delta > 0");
  if (kappa == 0) return 0.0L;
  if (c <= I.hmax || b <= I.hmax)
    throw RefCSError("non-decaying integrand for these parameters");
  long double rate = 1.0L - I.hmax / std::min(b, c);
  long double X = quad.cutoff > 0 ? quad.cutoff
                                  : std::min(4000.0L, std::max(60.0L, 48.0L / rate));
  long double d2 = 1 / (b * b) - 1 / (c * c), d4 = 1 / (b * b * b * b) -
                                                   1 / (c * c * c * c);
  auto series = [&](long double x) {
    return (I.c2 * d2 + x * x * I.c4 * d4) /
           (1 + x / 2 + x * x / 6 + x * x * x / 24);
  };
  auto direct = [&](long double x) {
    return (I.F(x / b) - I.F(x / c)) / (x * std::expm1(x));
  };
  long double xs = quad.origin_eps;
  long double head = detail::simpson(series, 0.0L, xs, 64);
  long double main = detail::log_simpson(direct, xs, X, quad.nodes);
  return 0.5L * I.F0 * std::log(b / c) + head + main;
}

// ln Z = -1/2 int_0^inf (h(x) - cm2/x^2) dx with
// h(x) = sinh(x(ty-delta))/(x sinh(x ty) sinh(x delta)) F(2x); the double
// pole of h integrates to zero along the origin-indented contour, and the
// 1/x^2 subtraction tail past the cutoff is added back analytically.
inline long double ln_z_fintrep(const RefinedIntegrand& I, long double kappa,
                                long double y, QuadratureSpec quad = {}) {
  quad.validate();
  long double b = I.t * y, c = kappa + b;
  if (b <= 0 || c <= 0) throw RefCSError("need t y > 0 and delta > 0");
  if (kappa == 0) return 0.0L;
  long double a = b - c;  // -kappa
  long double cm2 = a * I.F0 / (b * c);
  long double c0 = (a / (b * c)) * (I.F0 * (a * a - b * b - c * c) / 6 + 4 * I.c2);
  long double rate = 2 * (std::min(b, c) - I.hmax);
  if (rate <= 0) throw RefCSError("non-decaying integrand for these parameters");
  long double X = quad.cutoff > 0 ? quad.cutoff : std::max(8.0L, 44.0L / rate);
  auto reg = [&](long double x) {
    // coth(xc) - coth(xb) = 2(1/(e^(2xc)-1) - 1/(e^(2xb)-1))
    long double A = 2 * (1 / std::expm1(2 * x * c) - 1 / std::expm1(2 * x * b));
    return A * I.F(2 * x) / x - cm2 / (x * x);
  };
  long double xs = quad.origin_eps;
  long double head = c0 * xs;  // series constant term; O(xs^3) error
  long double main = detail::log_simpson(reg, xs, X, quad.nodes);
  long double tail = -cm2 / X;
  return -0.5L * (head + main + tail);
}

// Rank-ready evaluation wrappers.
inline long double z_product(const RootSystem& rs, long double kappa, long y) {
  if (y < 1) throw std::invalid_argument("refinement must be >= 1");
  long double t = to_ld(algebra_t(rs));
  long double delta = kappa + y * t;
  if (delta <= 0) throw RefCSError("delta must be positive");
  long double vol = std::sqrt(to_ld(coroot_gram_det(rs)));
  long double z = std::pow(delta, -0.5L * rs.rank) / vol;
  const long double pi = 3.141592653589793238462643383279502884L;
  for (const auto& h : refined_heights(rs, y)) {
    long double s = 2 * std::sin(pi * to_ld(h) / delta);
    if (std::fabs(s) < 1e-12L) throw RefCSError("degenerate level");
    z *= s;
  }
  return z;
}

inline long double vol_identity_residual(const RootSystem& rs, long y) {
  if (y < 1) throw std::invalid_argument("refinement must be >= 1");
  long double lhs = std::sqrt(to_ld(coroot_gram_det(rs)));
  long double ty = to_ld(algebra_t(rs)) * y;
  long double rhs = std::pow(ty, -0.5L * rs.rank);
  const long double pi = 3.141592653589793238462643383279502884L;
  for (const auto& h : refined_heights(rs, y))
    rhs *= 2 * std::sin(pi * to_ld(h) / ty);
  return std::fabs(lhs - rhs);
}

inline long double z_integral(const RootSystem& rs, long double kappa, long y,
                              QuadratureSpec quad = {}) {
  return std::exp(ln_z_integral(integrand_from_rs(rs, y), kappa, y, quad));
}

inline long double z_integral_universal(const VogelPoint& p, long double kappa,
                                        long double y,
                                        QuadratureSpec quad = {}) {
  return std::exp(ln_z_integral(integrand_universal(p, y), kappa, y, quad));
}

inline long double z_fintrep(const RootSystem& rs, long double kappa, long y,
                             QuadratureSpec quad = {}) {
  return std::exp(ln_z_fintrep(integrand_from_rs(rs, y), kappa, y, quad));
}

inline long double z_universal_nonrefined(const VogelPoint& p,
                                          long double kappa,
                                          QuadratureSpec quad = {}) {
  return z_integral_universal(p, kappa, 1.0L, quad);
}

}  // namespace uvd
