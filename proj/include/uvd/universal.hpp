#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "uvd/linform.hpp"
#include "uvd/rootsys.hpp"
#include "uvd/sinhprod.hpp"

namespace uvd {

// ---------------------------------------------------------------------------
// Quantum dimension of the adjoint representation:
//   prod over c in {al,be,ga} of sinh(x(c-2t)/4)/sinh(xc/4).
// ---------------------------------------------------------------------------
inline SinhProduct qdim_adjoint() {
  SinhProduct p;
  const Rat q4(1, 4);
  p.mul_sinh({0, -1, -2, -2}, q4).div_sinh({0, 1, 0, 0}, q4);
  p.mul_sinh({0, -2, -1, -2}, q4).div_sinh({0, 0, 1, 0}, q4);
  p.mul_sinh({0, -2, -2, -1}, q4).div_sinh({0, 0, 0, 1}, q4);
  return p;
}

inline Rat dim_adjoint(const VogelPoint& p) {
  auto lim = qdim_adjoint().limit_x_to_zero(p);
  if (lim.kind != LimitKind::Finite)
    throw std::domain_error("adjoint dimension not finite here");
  return lim.value;
}

// dim Y2(channel) closed form; channel 0,1,2 = al,be,ga slot.
inline Rat dim_y2_closed(const VogelPoint& p, int channel) {
  static const std::array<Perm3, 3> swaps = {{{{0, 1, 2}}, {{1, 0, 2}}, {{2, 1, 0}}}};
  VogelPoint q = permute_point(p, swaps[channel]);  // move channel into al slot
  Rat t = q.t();
  Rat num = (2 * t - 3 * q.al) * (q.be - 2 * t) * (q.ga - 2 * t) * t *
            (q.be + t) * (q.ga + t);
  Rat den = q.al * q.al * (q.al - q.be) * q.be * (q.al - q.ga) * q.ga;
  if (den == 0) throw std::domain_error("Y2 dimension singular here");
  return num / den;
}

inline Rat dim_x2(const VogelPoint& p) {
  Rat t = p.t();
  Rat num = (2 * t - p.al) * (2 * t - p.be) * (2 * t - p.ga) * (t + p.al) *
            (t + p.be) * (t + p.ga);
  Rat den = p.al * p.al * p.be * p.be * p.ga * p.ga;
  return num / den;
}

// Second Casimir eigenvalues in the (lam, lam+2rho) normalization (long^2=2):
// adjoint 2t, Y2(c) 4t-2c; the Cartan-power family below.
inline Rat casimir_adjoint(const VogelPoint& p) { return 2 * p.t(); }
inline Rat casimir_y2(const VogelPoint& p, int channel) {
  const Rat c = channel == 0 ? p.al : channel == 1 ? p.be : p.ga;
  return 4 * p.t() - 2 * c;
}

// C(k,n) for X2^k g^n.
inline Rat casimir_xkn(const VogelPoint& p, long k, long n) {
  return p.al * (3 * k - 3 * k * k + n - n * n - 3 * k * n) +
         p.t() * (4 * k + 2 * n);
}
inline Rat casimir_xkn_normalized(const VogelPoint& p, long k, long n) {
  return casimir_xkn(p, k, n) / (2 * p.t());
}

// Trace identity on the symmetric square: sum of dim*Casimir over the
// summands {1, Y2(al), Y2(be), Y2(ga)} equals (2+dim g) dim g C2(g).
inline bool deligne_trace_check(const VogelPoint& p) {
  Rat lhs = 0;
  for (int c = 0; c < 3; ++c) lhs += dim_y2_closed(p, c) * casimir_y2(p, c);
  Rat d = dim_adjoint(p);
  return lhs == (2 + d) * d * casimir_adjoint(p);
}

// ---------------------------------------------------------------------------
// X2^(x,k): ratio of products of sinh(x/4 * form); the one x/2-scaled factor
// is recorded with scale 1/2. For k >= 1 the identically-singular pair on the
// sl line, sinh(x/4(-2al-2be))/sinh(x/4(al+be)), is stored pre-substituted as
// -2 cosh(x/4(al+be)); this changes nothing off the sl line and makes the
// formula directly evaluable on it.
// ---------------------------------------------------------------------------
inline SinhProduct qdim_x2k(long k) {
  if (k < 0) throw std::invalid_argument("k >= 0");
  SinhProduct p;
  const Rat q4(1, 4), q2(1, 2);
  auto F = [](long K0, long A, long B, long C) {
    return LinearForm{Rat(K0), Rat(A), Rat(B), Rat(C)};
  };
  // L3
  p.mul_sinh(F(0, 3 * (k - 1), -2, -2), q4);
  p.mul_sinh(F(0, 3 * k - 4, -2, -2), q4);
  p.div_sinh(F(0, 2, 1, 1), q2);
  p.div_sinh(F(0, 3, 2, 2), q4);
  for (long i = 1; i <= 2 * k; ++i) {  // L21, L22
    p.mul_sinh(F(0, i - 5, -2, -2), q4).div_sinh(F(0, i - 2, -2, 0), q4);
    p.mul_sinh(F(0, 3 - i, 1, 2), q4).div_sinh(F(0, 2 - i, 1, 1), q4);
  }
  // L23
  p.mul_sinh(F(0, 3 - 2 * k, 2, 1), q4).div_sinh(F(0, 3, 2, 1), q4);
  for (long i = 1; i <= k; ++i) {
    p.mul_sinh(F(0, 4 - i, 2, 1), q4).div_sinh(F(0, i, 0, 0), q4);   // L11
    p.mul_sinh(F(0, i - 3, 0, -2), q4).div_sinh(F(0, i + 1, 0, 0), q4);  // L12
    p.mul_sinh(F(0, 2 - i, 1, 1), q4);                               // L13
    if (i == 1) {
      // den (be - al(i-2)) = al + be pairs with the L15 numerator -2al-2be
      p.prefactor *= -2;
      p.mul_cosh(F(0, 1, 1, 0), q4);
    } else {
      p.div_sinh(F(0, 2 - i, 1, 0), q4);
    }
    p.mul_sinh(F(0, 3 - i, 1, 1), q4).div_sinh(F(0, 1 - i, 1, 0), q4);  // L14
    if (i != 1) p.mul_sinh(F(0, i - 3, -2, 0), q4);                  // L15 num1
    p.mul_sinh(F(0, i - 2, -2, 0), q4);
    p.div_sinh(F(0, 2 - i, 0, 1), q4).div_sinh(F(0, 1 - i, 0, 1), q4);
    p.mul_sinh(F(0, 4 - i - k, 2, 1), q4).div_sinh(F(0, i + k - 2, 0, -2), q4);  // Lcorr
  }
  return p;
}

// Three-factor-per-line form specific to k=1 (cross-check fixture).
inline SinhProduct qdim_x2_k1_threeline() {
  SinhProduct p;
  const Rat q4(1, 4), q2(1, 2);
  // slot forms 2t-c, t+c, t-c for c = al, be, ga
  const long coef[3][3] = {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}};  // 2t-c coefficients
  for (int c = 0; c < 3; ++c) {
    LinearForm f{0, Rat(coef[c][0]), Rat(coef[c][1]), Rat(coef[c][2])};
    LinearForm unit{0, Rat(c == 0), Rat(c == 1), Rat(c == 2)};
    LinearForm tpc = LinearForm{0, 1, 1, 1} + unit;   // t + c
    LinearForm tmc = LinearForm{0, 1, 1, 1} + (-unit);  // t - c
    p.mul_sinh(f, q4).div_sinh(unit, q4);
    p.mul_sinh(tpc, q4).div_sinh(unit, q2);
    p.mul_sinh(tmc, q2).div_sinh(tmc, q4);
  }
  return p;
}

// ---------------------------------------------------------------------------
// X2^k g^n, thirteen column products. The printed display carries a typo in
// the denominator of the (2be+ga-al(i-4)) column: al(i+2) breaks the A-series
// values (and its own k=0 reduction), al(i+1) reproduces them; implemented
// with al(i+1). For k >= 1 the sl pair is pre-substituted as for qdim_x2k.
// ---------------------------------------------------------------------------
inline SinhProduct qdim_xkn(long k, long n) {
  if (k < 0 || n < 0) throw std::invalid_argument("k, n >= 0");
  SinhProduct p;
  const Rat q4(1, 4);
  auto F = [](long K0, long A, long B, long C) {
    return LinearForm{Rat(K0), Rat(A), Rat(B), Rat(C)};
  };
  p.mul_sinh(F(0, 3 * k + n - 4, -2, -2), q4).div_sinh(F(0, 4, 2, 2), q4);   // L31
  p.mul_sinh(F(0, 3 * k + 2 * n - 3, -2, -2), q4).div_sinh(F(0, 3, 2, 2), q4);  // L32
  for (long i = 1; i <= 2 * k + n; ++i) {  // L21s1, L21s2
    p.mul_sinh(F(0, i - 5, -2, -2), q4).div_sinh(F(0, i - 2, -2, 0), q4);
    p.mul_sinh(F(0, 3 - i, 1, 2), q4).div_sinh(F(0, 2 - i, 1, 1), q4);
  }
  p.mul_sinh(F(0, 3 - 2 * k - n, 2, 1), q4).div_sinh(F(0, 3, 2, 1), q4);     // L21s3
  for (long i = 1; i <= k; ++i) {  // L10s1..s3
    p.mul_sinh(F(0, 3 - i, 0, 2), q4).div_sinh(F(0, -i, 0, 0), q4);
    p.mul_sinh(F(0, 3 - i, 1, 1), q4);
    if (i == 1) {
      p.prefactor *= -2;  // sinh(-2(al+be)x/4)/sinh((al+be)x/4)
      p.mul_cosh(F(0, 1, 1, 0), q4);
    } else {
      p.div_sinh(F(0, 2 - i, 1, 0), q4);
      p.mul_sinh(F(0, i - 3, -2, 0), q4);
    }
    p.div_sinh(F(0, 2 - i, 0, 1), q4);
  }
  for (long i = 1; i <= k + n; ++i) {  // L11s1..s3
    p.mul_sinh(F(0, 4 - i, 2, 1), q4).div_sinh(F(0, i + 1, 0, 0), q4);
    p.mul_sinh(F(0, 2 - i, 1, 1), q4).div_sinh(F(0, 1 - i, 1, 0), q4);
    p.mul_sinh(F(0, i - 2, -2, 0), q4).div_sinh(F(0, 1 - i, 0, 1), q4);
  }
  p.mul_sinh(F(0, n + 1, 0, 0), q4).div_sinh(F(0, 1, 0, 0), q4);             // L01
  for (long i = 1; i <= k; ++i)  // Lc2
    p.mul_sinh(F(0, 4 - i - k - n, 2, 1), q4)
        .div_sinh(F(0, i + k + n - 2, 0, -2), q4);
  return p;
}

// be<->ga symmetric rearrangement of the same function; keeps the raw sl pair
// (avoid sl-line points), used as an independent cross-check.
inline SinhProduct qdim_xkn_symmetric(long k, long n) {
  SinhProduct p;
  const Rat q4(1, 4);
  auto F = [](long K0, long A, long B, long C) {
    return LinearForm{Rat(K0), Rat(A), Rat(B), Rat(C)};
  };
  for (long i = 0; i <= k - 1; ++i)
    for (int rep = 0; rep < 2; ++rep) {
      p.mul_sinh(F(0, i - 2, -2, 0), q4).mul_sinh(F(0, i - 2, 0, -2), q4);
      p.mul_sinh(F(0, 2 - i, 1, 1), q4);
      p.div_sinh(F(0, i + 1, 0, 0), q4);
      p.div_sinh(F(0, 1 - i, 1, 0), q4).div_sinh(F(0, 1 - i, 0, 1), q4);
    }
  for (long i = 0; i <= n; ++i) {
    p.mul_sinh(F(0, i + k - 2, -2, 0), q4).mul_sinh(F(0, i + k - 2, 0, -2), q4);
    p.mul_sinh(F(0, 2 - i - k, 1, 1), q4);
    p.div_sinh(F(0, i + k + 1, 0, 0), q4);
    p.div_sinh(F(0, 1 - i - k, 1, 0), q4).div_sinh(F(0, 1 - i - k, 0, 1), q4);
  }
  for (long i = 1; i <= 2 * k + n; ++i) {
    p.mul_sinh(F(0, i - 3, -1, -2), q4).mul_sinh(F(0, i - 3, -2, -1), q4);
    p.mul_sinh(F(0, i - 5, -2, -2), q4);
    p.div_sinh(F(0, i - 2, -2, 0), q4).div_sinh(F(0, i - 2, 0, -2), q4);
    p.div_sinh(F(0, 2 - i, 1, 1), q4);
  }
  p.mul_sinh(F(0, 1, 1, 0), q4).mul_sinh(F(0, 1, 0, 1), q4);
  p.mul_sinh(F(0, n + 1, 0, 0), q4);
  p.div_sinh(F(0, 2, 2, 0), q4).div_sinh(F(0, 2, 0, 2), q4);
  p.div_sinh(F(0, 2, 1, 1), q4);
  p.mul_sinh(F(0, 3 * k + n - 4, -2, -2), q4);
  p.mul_sinh(F(0, 3 * k + 2 * n - 3, -2, -2), q4);
  p.div_sinh(F(0, 3, 2, 2), q4).div_sinh(F(0, 4, 2, 2), q4);
  return p;
}

// A-series closed product: X(x,k,n) at (-2, 2, N+1) equals
// 2*sinh[x/2: ...] with purely numeric entries.
inline SinhProduct qdim_xkn_aseries_closed(long k, long n, long N) {
  SinhProduct p;
  p.prefactor = 2;
  const Rat q2(1, 2);
  auto C = [](long v) { return LinearForm{Rat(v), 0, 0, 0}; };
  for (long i = 1; i <= k; ++i)
    p.mul_sinh(C(i + N - 3), q2).div_sinh(C(i), q2);
  for (long i = 1; i <= k + n; ++i)
    p.mul_sinh(C(i + N - 2), q2).div_sinh(C(i + 1), q2);
  for (long i = 1; i <= 2 * k + n; ++i)
    p.mul_sinh(C(i + N - 3), q2).div_sinh(C(i), q2);
  p.mul_sinh(C(n + 1), q2).div_sinh(C(1), q2);
  p.mul_sinh(C(N + 3 * k + 2 * n - 1), q2).div_sinh(C(N - 1), q2);
  p.mul_sinh(C(N + 3 * k + n - 2), q2).div_sinh(C(N - 2), q2);
  return p;
}

// ---------------------------------------------------------------------------
// g^k Y2^l(be).
// ---------------------------------------------------------------------------
inline SinhProduct qdim_z(long k, long l) {
  if (k < 0 || l < 0) throw std::invalid_argument("k, l >= 0");
  SinhProduct p;
  const Rat q4(1, 4);
  auto F = [](long K0, long A, long B, long C) {
    return LinearForm{Rat(K0), Rat(A), Rat(B), Rat(C)};
  };
  for (long i = 1; i <= k + l; ++i) {
    p.mul_sinh(F(0, 3 - i, 0, 2), q4).mul_sinh(F(0, 4 - i, 1, 2), q4);
    p.mul_sinh(F(0, 3 - i, 2, 1), q4);
    p.div_sinh(F(0, 1 - i, 2, 0), q4).div_sinh(F(0, -i, 1, 0), q4);
    p.div_sinh(F(0, 1 - i, 0, 1), q4);
  }
  for (long i = 1; i <= k; ++i)
    p.mul_sinh(F(0, i - 1, -2, 0), q4).div_sinh(F(0, i, 0, 0), q4);
  for (long i = 1; i <= k + 2 * l; ++i)
    p.mul_sinh(F(0, 4 - i, 2, 2), q4).div_sinh(F(0, 3 - i, 0, 2), q4);
  for (long i = 1; i <= l; ++i) {
    p.mul_sinh(F(0, 3 - i, -1, 2), q4).mul_sinh(F(0, 3 - i, 1, 1), q4);
    p.mul_sinh(F(0, 4 - i, 0, 2), q4);
    p.div_sinh(F(0, 1 - i, -1, 1), q4).div_sinh(F(0, 1 - i, 1, 0), q4);
    p.div_sinh(F(0, -i, 0, 0), q4);
  }
  p.mul_sinh(F(0, 3 - 2 * k - 2 * l, 2, 2), q4);
  p.mul_sinh(F(0, 3 - 2 * l, 0, 2), q4);
  p.mul_sinh(F(0, 3 - k - 2 * l, 1, 2), q4);
  p.mul_sinh(F(0, -k, 1, 0), q4);
  p.div_sinh(F(0, 0, 1, 0), q4);
  p.div_sinh(F(0, 3, 2, 2), q4);
  p.div_sinh(F(0, 3, 0, 2), q4);
  p.div_sinh(F(0, 3, 1, 2), q4);
  return p;
}

// Y2(channel)^k via the Z family: Y2(be)^k = Z(0,k), other channels by the
// slot swap moving be into the channel.
inline SinhProduct qdim_y2(int channel, long k) {
  static const std::array<Perm3, 3> swaps = {{{{1, 0, 2}}, {{0, 1, 2}}, {{0, 2, 1}}}};
  if (channel < 0 || channel > 2) throw std::invalid_argument("channel 0..2");
  return qdim_z(0, k).permuted(swaps[channel]);
}

// ---------------------------------------------------------------------------
// Young-parametrized second Casimirs of the orthogonal/symplectic series as
// degree-1 polynomials in n: value = first + second * n.
// ---------------------------------------------------------------------------
using LinPoly = std::pair<Rat, Rat>;

inline LinPoly casimir2_young_so(const std::vector<Rat>& A,
                                 const std::vector<Rat>& B) {
  if (A.size() != B.size() || A.empty())
    throw std::invalid_argument("A, B same size >= 1");
  long k = static_cast<long>(A.size()) - 1;
  Rat c0 = 0, c1 = 0;
  for (long i = 1; i <= k; ++i) {
    c1 += 4 * A[i] * (B[k + 1 - i] - B[k - i]);
    c0 += 2 * A[i] * A[i] * (B[k - i] - B[k + 1 - i]);
    c0 += 2 * A[i] * (B[k - i] - B[k + 1 - i]);
    c0 += 2 * B[i] * B[i] * (A[k + 1 - i] - A[k - i]);
  }
  c1 += -4 * A[0] * B[k];
  c0 += A[0] * A[0] * (2 * B[k] + 4 * B[0]);
  c0 += 2 * A[0] * (B[k] - B[0]);
  c0 += -B[0] * B[0] * (2 * A[k] + 4 * A[0]);
  c1 += -(A[0] - B[0]);
  c1 += 2 * (A[0] * A[0] + B[0] * B[0]);
  c0 += 2 * (B[0] * B[0] * B[0] - A[0] * A[0] * A[0]);
  c0 += Rat(1, 2) * (A[0] - B[0]);
  return {c0, c1};
}

inline LinPoly casimir2_young_sp(const std::vector<Rat>& A,
                                 const std::vector<Rat>& B) {
  if (A.size() != B.size() || A.empty())
    throw std::invalid_argument("A, B same size >= 1");
  long k = static_cast<long>(A.size()) - 1;
  Rat c0 = 0, c1 = 0;
  for (long i = 1; i <= k; ++i) {
    c1 -= -4 * B[i] * (A[k + 1 - i] - A[k - i]);
    c0 -= 2 * A[i] * A[i] * (B[k + 1 - i] - B[k - i]);
    c0 -= 2 * B[i] * B[i] * (A[k - i] - A[k + 1 - i]);
    c0 -= 2 * B[i] * (A[k - i] - A[k + 1 - i]);
  }
  c1 += -4 * B[0] * A[k];
  c0 += A[0] * A[0] * (2 * B[k] + 4 * B[0]);
  c0 += -2 * B[0] * (A[k] - A[0]);
  c0 += -B[0] * B[0] * (2 * A[k] + 4 * A[0]);
  c1 += -(B[0] - A[0]);
  c1 += 2 * (A[0] * A[0] + B[0] * B[0]);
  c0 += Rat(1, 2) * (A[0] - B[0]);
  c0 += -2 * (A[0] * A[0] * A[0] - B[0] * B[0] * B[0]);
  return {c0, c1};
}

// C_2so(2n)(A,B) + C_2sp(-2n)(B,A) == 0 as a polynomial in n; returns the
// coefficient pair of the defect.
inline LinPoly casimir2_duality_defect(const std::vector<Rat>& A,
                                       const std::vector<Rat>& B) {
  LinPoly so = casimir2_young_so(A, B);
  LinPoly sp = casimir2_young_sp(B, A);
  // sp at -2n: n-coefficient flips sign
  return {so.first + sp.first, so.second - sp.second};
}

// ---------------------------------------------------------------------------
// Named point tables.
// ---------------------------------------------------------------------------
struct NamedPoint {
  std::string name;
  VogelPoint p;
  Rat dim;  // adjoint dimension recorded in the source tables
};

inline const std::vector<NamedPoint>& isolated_points() {
  static const std::vector<NamedPoint> v = {
      {"E8", {-6, -10, 1}, 248},   {"E7.5", {-8, 1, -5}, 190},
      {"X1", {-4, 1, -7}, 156},    {"E7", {-6, -4, 1}, 133},
      {"X2", {1, -3, -5}, 99},     {"E6", {-3, -4, 1}, 78},
      {"F4", {-6, 2, -5}, 52},     {"G2", {3, -5, -4}, 14}};
  return v;
}

inline const std::vector<NamedPoint>& y_points() {
  static const std::vector<NamedPoint> v = {
      {"Y1", {1, 1, 1}, -125},    {"Y2", {10, 8, 7}, -129},
      {"Y3", {6, 4, 5}, -130},    {"Y4", {2, 2, 3}, -132},
      {"Y5", {5, 7, 8}, -132},    {"Y6", {5, 8, 6}, -132},
      {"Y6b", {4, 5, 3}, -133},   {"Y7", {4, 7, 5}, -135},
      {"Y8", {7, 6, 4}, -135},    {"Y9", {2, 4, 3}, -140},
      {"Y10", {2, 1, 2}, -144},   {"Y11", {2, 1, 1}, -147},
      {"Y12", {7, 3, 4}, -150},   {"Y13", {2, 4, 5}, -153},
      {"Y14", {5, 3, 2}, -153},   {"Y15", {1, 2, 3}, -165},
      {"Y16", {2, 6, 5}, -168},   {"Y17", {6, 2, 7}, -184},
      {"Y18", {4, 5, 13}, -186},  {"Y19", {3, 10, 4}, -186},
      {"Y20", {3, 7, 2}, -187},   {"Y21", {1, 1, 3}, -189},
      {"Y22", {11, 5, 3}, -189},  {"Y23", {4, 1, 3}, -195},
      {"Y24", {2, 1, 4}, -195},   {"Y25", {3, 11, 4}, -200},
      {"Y26", {2, 3, 8}, -207},   {"Y27", {2, 5, 9}, -207},
      {"Y28", {3, 1, 5}, -221},   {"Y29", {1, 4, 5}, -228},
      {"Y30", {2, 1, 5}, -231},   {"Y31", {4, 1, 1}, -242},
      {"Y32", {6, 5, 22}, -244},  {"Y33", {18, 4, 5}, -245},
      {"Y34", {14, 4, 3}, -247},  {"Y35", {10, 2, 3}, -252},
      {"Y36", {1, 4, 6}, -252},   {"Y37", {3, 5, 16}, -258},
      {"Y38", {6, 1, 2}, -272},   {"Y39", {1, 3, 7}, -285},
      {"Y40", {1, 5, 7}, -285},   {"Y41", {14, 2, 5}, -296},
      {"Y42", {6, 8, 1}, -319},   {"Y43", {1, 3, 8}, -322},
      {"Y44", {4, 1, 9}, -342},   {"Y45", {10, 1, 4}, -377},
      {"Y46", {12, 1, 5}, -434},  {"Y47", {1, 6, 14}, -492}};
  return v;
}

// Representative algebra points with distinct parameters (Y2 denominators
// nonzero); used by the trace-identity sweep.
inline std::vector<std::pair<std::string, VogelPoint>> trace_sample_points() {
  return {{"A2", point_A(2)}, {"B3", point_B(3)}, {"C3", point_C(3)},
          {"D5", point_D(5)}, {"G2", point_G2()}, {"F4", point_F4()},
          {"E6", point_E6()}, {"E7", point_E7()}, {"E8", point_E8()}};
}

// ---------------------------------------------------------------------------
// Formula registry (CLI surface + coverage test).
// ---------------------------------------------------------------------------
struct FormulaEntry {
  std::string name;
  std::string description;
  std::function<SinhProduct(long, long)> make;  // (k, n-or-l)
};

inline const std::vector<FormulaEntry>& formula_registry() {
  static const std::vector<FormulaEntry> reg = {
      {"adjoint", "quantum dimension of the adjoint representation",
       [](long, long) { return qdim_adjoint(); }},
      {"Y2", "k-th Cartan power of Y2(be)",
       [](long k, long) { return qdim_y2(1, k); }},
      {"X2k", "k-th Cartan power of X2",
       [](long k, long) { return qdim_x2k(k); }},
      {"Xkn", "Cartan product X2^k g^n",
       [](long k, long n) { return qdim_xkn(k, n); }},
      {"Zkl", "Cartan product g^k Y2^l(be)",
       [](long k, long l) { return qdim_z(k, l); }}};
  return reg;
}

inline const FormulaEntry& formula_by_name(const std::string& name) {
  for (const auto& e : formula_registry())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown formula: " + name);
}

}  // namespace uvd
