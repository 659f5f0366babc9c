#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "uvd/rational.hpp"

namespace uvd {

namespace detail {

// Laurent polynomial over Q: exponent -> coefficient, zero coefficients absent.
using Poly = std::map<long, Rat>;

inline void poly_add_term(Poly& p, long e, const Rat& c) {
  if (c == 0) return;
  auto it = p.find(e);
  if (it == p.end()) {
    p.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) poly_add_term(r, ea + eb, ca * cb);
  return r;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [e, c] : b) poly_add_term(r, e, c);
  return r;
}

inline Poly poly_scale(const Poly& a, const Rat& s) {
  if (s == 0) return {};
  Poly r;
  for (const auto& [e, c] : a) r.emplace(e, c * s);
  return r;
}

inline Poly poly_shift(const Poly& a, long d) {
  Poly r;
  for (const auto& [e, c] : a) r.emplace(e + d, c);
  return r;
}

// Exponent dilation u -> u^m (m >= 1).
inline Poly poly_dilate(const Poly& a, long m) {
  Poly r;
  for (const auto& [e, c] : a) r.emplace(e * m, c);
  return r;
}

inline Poly poly_mirror(const Poly& a) {
  Poly r;
  for (const auto& [e, c] : a) r.emplace(-e, c);
  return r;
}

inline Rat poly_eval_one(const Poly& a) {
  Rat s = 0;
  for (const auto& [e, c] : a) s += c;
  return s;
}

// Evaluates at a nonzero rational u0 (exact).
inline Rat poly_eval(const Poly& a, const Rat& u0) {
  if (a.empty()) return 0;
  Rat s = 0;
  long prev = a.begin()->first;
  Rat upow = 1;  // u0^(e - emin) built incrementally
  for (const auto& [e, c] : a) {
    for (long k = prev; k < e; ++k) upow *= u0;
    prev = e;
    s += c * upow;
  }
  // multiply by u0^emin
  long emin = a.begin()->first;
  Rat base = 1;
  if (emin >= 0)
    for (long k = 0; k < emin; ++k) base *= u0;
  else
    for (long k = 0; k < -emin; ++k) base /= u0;
  return s * base;
}

// Divides by (u - 1); valid only when p(1) == 0. Laurent-safe: operates on
// the shifted ordinary polynomial.
inline Poly poly_divide_u_minus_1(const Poly& p) {
  if (p.empty()) return {};
  long emin = p.begin()->first;
  long emax = p.rbegin()->first;
  // synthetic division of sum c_e u^(e-emin) by (u-1), quotient degree-1 lower
  Poly q;
  Rat carry = 0;
  for (long e = emax; e > emin; --e) {
    auto it = p.find(e);
    Rat ce = (it == p.end()) ? Rat(0) : it->second;
    carry += ce;
    poly_add_term(q, e - 1 + 0, carry);  // coefficient of u^(e-1) before shift
  }
  // remainder = carry + c_emin must be 0
  return q;
}

// log|sum| with sign for evaluation at q = e^x; stable via max-exponent shift.
inline std::pair<long double, int> poly_eval_log(const Poly& a, long double x_over_d) {
  if (a.empty()) return {-INFINITY, 0};
  long double m = -INFINITY;
  for (const auto& [e, c] : a) {
    (void)c;
    long double v = x_over_d * e;
    if (v > m) m = v;
  }
  long double s = 0.0L;
  for (const auto& [e, c] : a) s += to_ld(c) * std::exp(x_over_d * e - m);
  if (s == 0.0L) return {-INFINITY, 0};
  int sign = s > 0 ? 1 : -1;
  return {m + std::log(std::fabs(s)), sign};
}

}  // namespace detail

struct QRationalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational function of q represented as a pair of Laurent polynomials
// in u = q^(1/lattice). No gcd cancellation is performed; equality is decided
// by cross-multiplication.
class QRational {
 public:
  QRational() : d_(1) { den_.emplace(0, 1); }  // zero

  static QRational constant(const Rat& c) {
    QRational r;
    if (c != 0) r.num_.emplace(0, c);
    return r;
  }

  static QRational from_polys(long lattice, detail::Poly num, detail::Poly den) {
    if (den.empty()) throw QRationalError("zero denominator");
    QRational r;
    r.d_ = lattice;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize_lattice();
    return r;
  }

  // q^(e) - q^(-e) for rational e (a "sinh numerator" in q-language, no 1/2).
  static QRational q_binomial(const Rat& e) {
    long den = static_cast<long>(e.get_den().get_si());
    long num = static_cast<long>(e.get_num().get_si());
    detail::Poly p;
    if (num != 0) {
      detail::poly_add_term(p, num, 1);
      detail::poly_add_term(p, -num, -1);
    }
    detail::Poly one;
    one.emplace(0, 1);
    return from_polys(den, std::move(p), std::move(one));
  }

  long lattice() const { return d_; }
  const detail::Poly& num() const { return num_; }
  const detail::Poly& den() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const { return num_ == den_; }

  QRational operator*(const QRational& o) const {
    auto [a, b] = aligned(*this, o);
    return from_polys(a.d_, detail::poly_mul(a.num_, b.num_),
                      detail::poly_mul(a.den_, b.den_));
  }

  QRational operator/(const QRational& o) const {
    if (o.is_zero()) throw QRationalError("division by zero");
    auto [a, b] = aligned(*this, o);
    return from_polys(a.d_, detail::poly_mul(a.num_, b.den_),
                      detail::poly_mul(a.den_, b.num_));
  }

  QRational operator+(const QRational& o) const {
    auto [a, b] = aligned(*this, o);
    return from_polys(
        a.d_,
        detail::poly_add(detail::poly_mul(a.num_, b.den_),
                         detail::poly_mul(b.num_, a.den_)),
        detail::poly_mul(a.den_, b.den_));
  }

  QRational operator-(const QRational& o) const { return *this + o.scaled(-1); }

  QRational scaled(const Rat& s) const {
    QRational r = *this;
    r.num_ = detail::poly_scale(r.num_, s);
    return r;
  }

  QRational reciprocal() const {
    if (is_zero()) throw QRationalError("reciprocal of zero");
    return from_polys(d_, den_, num_);
  }

  QRational pow(long k) const {
    if (k < 0) return reciprocal().pow(-k);
    QRational r = constant(1);
    for (long i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  // Exact equality as rational functions.
  bool equals(const QRational& o) const {
    auto [a, b] = aligned(*this, o);
    return detail::poly_mul(a.num_, b.den_) == detail::poly_mul(b.num_, a.den_);
  }

  // Substitution q -> 1/q fixes the function.
  bool is_palindromic() const {
    return detail::poly_mul(detail::poly_mirror(num_), den_) ==
           detail::poly_mul(detail::poly_mirror(den_), num_);
  }

  // Limit q -> 1 (L'Hopital by synthetic division); nullopt when infinite.
  std::optional<Rat> limit_q_to_one() const {
    detail::Poly n = num_, d = den_;
    if (n.empty()) return Rat(0);
    Rat nv = detail::poly_eval_one(n), dv = detail::poly_eval_one(d);
    while (nv == 0 && dv == 0) {
      n = detail::poly_divide_u_minus_1(n);
      d = detail::poly_divide_u_minus_1(d);
      if (d.empty()) {
        if (n.empty()) throw QRationalError("0/0 after full division");
        return std::nullopt;
      }
      nv = detail::poly_eval_one(n);
      dv = detail::poly_eval_one(d);
      if (n.empty()) return Rat(0);
    }
    if (dv == 0) return std::nullopt;
    return nv / dv;
  }

  // Exact evaluation at u = u0 (q = u0^lattice); throws on vanishing
  // denominator.
  Rat eval_at_u(const Rat& u0) const {
    Rat dv = detail::poly_eval(den_, u0);
    if (dv == 0) throw QRationalError("denominator vanishes at sample");
    return detail::poly_eval(num_, u0) / dv;
  }

  // Evaluation at q = e^x in log space.
  long double eval_float(long double x) const {
    auto [ln_n, s_n] = detail::poly_eval_log(num_, x / d_);
    auto [ln_d, s_d] = detail::poly_eval_log(den_, x / d_);
    if (s_n == 0) return 0.0L;
    if (s_d == 0) return NAN;
    return s_n * s_d * std::exp(ln_n - ln_d);
  }

  std::string str() const {
    auto render = [&](const detail::Poly& p) {
      if (p.empty()) return std::string("0");
      std::ostringstream os;
      bool first = true;
      for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first && c > 0) os << "+";
        if (c == -1 && e != 0) os << "-";
        else if (c != 1 || e == 0) os << rat_str(c);
        if (e != 0) {
          if (c != 1 && c != -1) os << "*";
          os << "q^";
          if (d_ == 1) os << "(" << e << ")";
          else os << "(" << e << "/" << d_ << ")";
        }
        first = false;
      }
      return os.str();
    };
    if (den_.size() == 1 && den_.begin()->first == 0 && den_.begin()->second == 1)
      return render(num_);
    return "(" + render(num_) + ") / (" + render(den_) + ")";
  }

 private:
  void normalize_lattice() {
    if (d_ == 1) return;
    mpz_class g(d_);
    for (const auto& [e, c] : num_) {
      (void)c;
      mpz_class ez(std::abs(e));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ez.get_mpz_t());
    }
    for (const auto& [e, c] : den_) {
      (void)c;
      mpz_class ez(std::abs(e));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ez.get_mpz_t());
    }
    long gl = static_cast<long>(g.get_si());
    if (gl <= 1) return;
    detail::Poly n2, d2;
    for (const auto& [e, c] : num_) n2.emplace(e / gl, c);
    for (const auto& [e, c] : den_) d2.emplace(e / gl, c);
    num_ = std::move(n2);
    den_ = std::move(d2);
    d_ /= gl;
  }

  static std::pair<QRational, QRational> aligned(const QRational& a,
                                                 const QRational& b) {
    if (a.d_ == b.d_) return {a, b};
    mpz_class l = lcm_z(mpz_class(a.d_), mpz_class(b.d_));
    long d = static_cast<long>(l.get_si());
    QRational a2 = a, b2 = b;
    a2.num_ = detail::poly_dilate(a.num_, d / a.d_);
    a2.den_ = detail::poly_dilate(a.den_, d / a.d_);
    a2.d_ = d;
    b2.num_ = detail::poly_dilate(b.num_, d / b.d_);
    b2.den_ = detail::poly_dilate(b.den_, d / b.d_);
    b2.d_ = d;
    return {a2, b2};
  }

  long d_;
  detail::Poly num_, den_;
};

inline bool qrat_equal(const QRational& a, const QRational& b) {
  return a.equals(b);
}

}  // namespace uvd
