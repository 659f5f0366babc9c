#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "uvd/linform.hpp"
#include "uvd/rational.hpp"

namespace uvd {

struct UniqError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Primed coordinates: al' = al+be, be' = 2al+be, ga' = ga-2(al+be).  They turn
// the distinguished lines into coordinate axes: sl: al'=0, so: be'=0,
// exc: ga'=0, sp: 3al'-be'=0.
// ---------------------------------------------------------------------------
inline VogelPoint to_primed(const VogelPoint& u) {
  return {u.al + u.be, 2 * u.al + u.be, u.ga - 2 * (u.al + u.be)};
}
inline VogelPoint from_primed(const VogelPoint& p) {
  return {p.be - p.al, 2 * p.al - p.be, p.ga + 2 * p.al};
}
inline LinearForm form_to_primed(const LinearForm& f) {
  return {f.k0, -f.a + 2 * f.b + 2 * f.c, f.a - f.b, f.c};
}
inline LinearForm form_from_primed(const LinearForm& f) {
  return {f.k0, f.a + 2 * f.b - 2 * f.c, f.a + f.b - 2 * f.c, f.c};
}

inline LinearForm primed_sl() { return {0, 1, 0, 0}; }
inline LinearForm primed_so() { return {0, 0, 1, 0}; }
inline LinearForm primed_exc() { return {0, 0, 0, 1}; }
inline LinearForm primed_sp() { return {0, 3, -1, 0}; }

// ---------------------------------------------------------------------------
// Ratios of products of linear forms (no sinh).
// ---------------------------------------------------------------------------
struct RationalProductRatio {
  std::vector<LinearForm> num, den;

  Rat evaluate(const VogelPoint& p) const {
    Rat v = 1;
    for (const auto& f : num) v *= f(p);
    Rat d = 1;
    for (const auto& f : den) d *= f(p);
    if (d == 0) throw UniqError("denominator vanishes at evaluation point");
    return v / d;
  }

  // Removes proportional num/den pairs.
  RationalProductRatio cancelled() const {
    RationalProductRatio r = *this;
    for (auto it = r.num.begin(); it != r.num.end();) {
      bool hit = false;
      for (auto jt = r.den.begin(); jt != r.den.end(); ++jt)
        if (it->proportional(*jt)) {
          r.den.erase(jt);
          it = r.num.erase(it);
          hit = true;
          break;
        }
      if (!hit) ++it;
    }
    return r;
  }
};

namespace detail {
// Two independent points of the projective line f = 0 (f homogeneous).
inline std::pair<VogelPoint, VogelPoint> line_basis(const LinearForm& f) {
  if (f.k0 != 0) throw std::invalid_argument("projective line required");
  if (f.c != 0)
    return {{1, 0, -f.a / f.c}, {0, 1, -f.b / f.c}};
  if (f.b != 0)
    return {{1, -f.a / f.b, 0}, {0, 0, 1}};
  if (f.a != 0)
    return {{0, 1, 0}, {0, 0, 1}};
  throw std::invalid_argument("zero form is not a line");
}

// Binary form coefficients of prod (f(P) s + f(Q) t) over the given forms.
inline std::vector<Rat> restricted_product(const std::vector<LinearForm>& fs,
                                           const VogelPoint& P,
                                           const VogelPoint& Q) {
  std::vector<Rat> poly = {Rat(1)};
  for (const auto& f : fs) {
    Rat u = f(P), v = f(Q);
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * u;
      next[i + 1] += poly[i] * v;
    }
    poly = std::move(next);
  }
  return poly;
}
}  // namespace detail

// Exact check that Q restricts to the constant 1 on every given line.
inline bool is_unit_on_lines(const RationalProductRatio& Q,
                             const std::vector<LinearForm>& lines) {
  if (Q.num.size() != Q.den.size())
    throw UniqError("numerator/denominator length mismatch");
  for (const auto& line : lines) {
    auto [P, Pt] = detail::line_basis(line);
    auto npoly = detail::restricted_product(Q.num, P, Pt);
    auto dpoly = detail::restricted_product(Q.den, P, Pt);
    bool dzero = true;
    for (const auto& c : dpoly)
      if (c != 0) dzero = false;
    if (dzero) throw UniqError("degenerate on line " + line.str());
    if (npoly != dpoly) return false;
  }
  return true;
}

// The inequivalent-but-unit ratio fixture (unprimed coordinates).
inline RationalProductRatio eq_unit_fixture() {
  RationalProductRatio q;
  q.num = {{0, 2, 1, 1}, {0, 7, 4, 1}, {0, 8, 6, 1}};
  q.den = {{0, 3, 2, 1}, {0, 4, 2, 1}, {0, 10, 7, 1}};
  return q;
}

// ---------------------------------------------------------------------------
// Laurent monomials in named symbols, for the multiplicative solution layer.
// ---------------------------------------------------------------------------
namespace sym {

struct Mono {
  Rat coeff = 1;
  std::map<std::string, int> pw;

  bool is_one() const { return coeff == 1 && pw.empty(); }
  bool is_constant() const { return pw.empty(); }
};

inline Mono mono_const(const Rat& r) { return {r, {}}; }
inline Mono mono_sym(const std::string& s) { return {Rat(1), {{s, 1}}}; }

inline Mono operator*(const Mono& a, const Mono& b) {
  Mono r{a.coeff * b.coeff, a.pw};
  for (const auto& [s, e] : b.pw) {
    r.pw[s] += e;
    if (r.pw[s] == 0) r.pw.erase(s);
  }
  return r;
}

inline Mono inverse(const Mono& m) {
  if (m.coeff == 0) throw UniqError("zero monomial has no inverse");
  Mono r{1 / m.coeff, {}};
  for (const auto& [s, e] : m.pw) r.pw[s] = -e;
  return r;
}

inline Mono operator/(const Mono& a, const Mono& b) { return a * inverse(b); }

inline Mono pow(const Mono& m, int e) {
  Mono r = mono_const(1);
  if (e == 0) return r;
  Mono base = e > 0 ? m : inverse(m);
  for (int i = 0; i < std::abs(e); ++i) r = r * base;
  return r;
}

inline Rat eval(const Mono& m, const std::map<std::string, Rat>& v) {
  Rat r = m.coeff;
  for (const auto& [s, e] : m.pw) {
    auto it = v.find(s);
    if (it == v.end()) throw UniqError("unbound symbol " + s);
    if (it->second == 0) throw UniqError("zero value for symbol " + s);
    Rat p = 1;
    Rat base = e > 0 ? it->second : 1 / it->second;
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    r *= p;
  }
  return r;
}

inline std::string str(const Mono& m) {
  std::string s;
  if (m.pw.empty() || (m.coeff != 1 && m.coeff != -1))
    s = rat_str(m.coeff);
  else if (m.coeff == -1)
    s = "-";
  for (const auto& [name, e] : m.pw) {
    if (!s.empty() && s != "-") s += "*";
    s += name;
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// Polynomials: normalized monomial sums (exponent maps strictly increasing).
using Poly = std::vector<Mono>;

inline Poly normalized(Poly p) {
  std::sort(p.begin(), p.end(),
            [](const Mono& a, const Mono& b) { return a.pw < b.pw; });
  Poly out;
  for (auto& m : p) {
    if (!out.empty() && out.back().pw == m.pw)
      out.back().coeff += m.coeff;
    else
      out.push_back(m);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Mono& m) { return m.coeff == 0; }),
            out.end());
  return out;
}

inline Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r.insert(r.end(), b.begin(), b.end());
  return normalized(r);
}

inline Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return normalized(r);
}

inline Poly negated(const Poly& p) {
  Poly r = p;
  for (auto& m : r) m.coeff = -m.coeff;
  return r;
}

}  // namespace sym

// ---------------------------------------------------------------------------
// The non-uniqueness constraint system
//   Q = prod (n_i al + x_i be + y_i ga) / (c_i n_p(i) al + x_i be + y_i ga)
//   x_i = c_i x_p(i),  y_i = k_i y_s(i),  k_i n_s(i) = c_i n_p(i),
//   prod c = prod k = 1; with the fourth line: y_i = r_i y_v(i),
//   c_i n_p(i) + 3 x_i = r_i (n_v(i) + 3 x_v(i)), prod r = 1.
// Solved multiplicatively by cycle propagation with closure elimination;
// the additive layer is solved exactly per instantiation (it is linear in
// the per-cycle x generators once the multiplicative symbols have values).
// ---------------------------------------------------------------------------
struct NonUniqFamily {
  long k = 0;
  std::vector<long> s, p, v;  // 1-indexed images; v empty for the 3-line system
  bool trivial = false;
  std::string certificate;
  std::vector<std::string> elimination_log;

  std::vector<sym::Mono> x, y, n, c, km, r;  // per-index solved monomials
  std::vector<std::string> free_symbols;     // independent symbols

  struct Instance {
    std::map<std::string, Rat> values;
    std::vector<Rat> xi, yi, ni, ci, ki, ri;
    RationalProductRatio Q;  // primed coordinates
  };

  std::optional<Instance> instantiate_with(std::map<std::string, Rat> vals) const;
  Instance instantiate(RatRng& rng, int max_tries = 256) const;
};

namespace detail {

inline void check_bijection(const std::vector<long>& f, long k,
                            const std::string& name) {
  if (static_cast<long>(f.size()) != k)
    throw std::invalid_argument(name + " must have size k");
  std::vector<bool> seen(k, false);
  for (long im : f) {
    if (im < 1 || im > k || seen[im - 1])
      throw std::invalid_argument(name + " is not a bijection on {1..k}");
    seen[im - 1] = true;
  }
}

// Shared solving state: eliminated symbols mapped to monomials in the
// surviving ones.
struct Subst {
  std::map<std::string, sym::Mono> defs;
  std::vector<std::string>* log = nullptr;

  sym::Mono reduce(sym::Mono m) const {
    sym::Mono out = sym::mono_const(m.coeff);
    for (const auto& [s, e] : m.pw) {
      auto it = defs.find(s);
      if (it == defs.end())
        out = out * sym::pow(sym::mono_sym(s), e);
      else
        out = out * sym::pow(it->second, e);
    }
    return out;
  }

  // Imposes constraint mono == 1 by eliminating one unit-exponent symbol.
  // Returns false if the constraint is an inconsistent constant.
  bool impose_unit(sym::Mono m) {
    m = reduce(m);
    if (m.is_one()) return true;
    if (m.is_constant()) return false;
    std::string pick;
    int pe = 0;
    for (const auto& [s, e] : m.pw)
      if (e == 1 || e == -1) {
        pick = s;
        pe = e;
      }
    if (pick.empty())
      throw UniqError("closure constraint without unit-exponent symbol: " +
                      sym::str(m));
    sym::Mono rest = m;
    rest.pw.erase(pick);
    sym::Mono val = pe == 1 ? sym::inverse(rest) : rest;
    for (auto& [nm, def] : defs) {
      auto it = def.pw.find(pick);
      if (it == def.pw.end()) continue;
      int e = it->second;
      def.pw.erase(pick);
      def = def * sym::pow(val, e);
    }
    defs[pick] = val;
    if (log) log->push_back(pick + " = " + sym::str(val));
    return true;
  }
};

}  // namespace detail

// Expands prod of forms (a_i al + b_i be + c_i ga) with sym::Mono entries into
// a trivariate polynomial keyed by exponent triple.
inline std::map<std::array<int, 3>, sym::Poly> expand_form_product(
    const std::vector<std::array<sym::Mono, 3>>& forms) {
  std::map<std::array<int, 3>, sym::Poly> acc;
  acc[{0, 0, 0}] = {sym::mono_const(1)};
  for (const auto& f : forms) {
    std::map<std::array<int, 3>, sym::Poly> next;
    for (const auto& [e, poly] : acc)
      for (int slot = 0; slot < 3; ++slot) {
        std::array<int, 3> e2 = e;
        e2[slot] += 1;
        sym::Poly term = poly * sym::Poly{f[slot]};
        auto it = next.find(e2);
        if (it == next.end())
          next[e2] = term;
        else
          it->second = it->second + term;
      }
    acc = std::move(next);
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.empty() ? acc.erase(it) : std::next(it);
  return acc;
}

inline NonUniqFamily solve_nonuniq(long k, std::vector<long> s,
                                   std::vector<long> p,
                                   std::vector<long> v = {}) {
  detail::check_bijection(s, k, "s");
  detail::check_bijection(p, k, "p");
  if (!v.empty()) detail::check_bijection(v, k, "v");

  NonUniqFamily fam;
  fam.k = k;
  fam.s = s;
  fam.p = p;
  fam.v = v;

  detail::Subst sub;
  sub.log = &fam.elimination_log;
  auto csym = [](long i) { return sym::mono_sym("c" + std::to_string(i + 1)); };
  auto ksym = [](long i) { return sym::mono_sym("k" + std::to_string(i + 1)); };

  fam.x.assign(k, sym::mono_const(0));
  fam.y.assign(k, sym::mono_const(0));
  fam.n.assign(k, sym::mono_const(0));

  bool consistent = true;
  // x along p-cycles: x_p(i) = x_i / c_i.
  {
    std::vector<bool> vis(k, false);
    for (long i0 = 0; i0 < k; ++i0) {
      if (vis[i0]) continue;
      fam.x[i0] = sym::mono_sym("x" + std::to_string(i0 + 1));
      sym::Mono closure = sym::mono_const(1);
      long j = i0;
      while (true) {
        vis[j] = true;
        closure = closure * csym(j);
        long nj = p[j] - 1;
        if (nj == i0) break;
        fam.x[nj] = fam.x[j] / sub.reduce(csym(j));
        j = nj;
      }
      consistent = consistent && sub.impose_unit(closure);
    }
  }
  // y along s-cycles: y_s(i) = y_i / k_i.
  {
    std::vector<bool> vis(k, false);
    for (long i0 = 0; i0 < k; ++i0) {
      if (vis[i0]) continue;
      fam.y[i0] = sym::mono_sym("y" + std::to_string(i0 + 1));
      sym::Mono closure = sym::mono_const(1);
      long j = i0;
      while (true) {
        vis[j] = true;
        closure = closure * ksym(j);
        long nj = s[j] - 1;
        if (nj == i0) break;
        fam.y[nj] = fam.y[j] / sub.reduce(ksym(j));
        j = nj;
      }
      consistent = consistent && sub.impose_unit(closure);
    }
  }
  // n along cycles of tau = s o p^{-1}: n_tau(j) = (c_q / k_q) n_j, q = p^{-1}(j).
  {
    std::vector<long> pinv(k);
    for (long i = 0; i < k; ++i) pinv[p[i] - 1] = i;
    std::vector<bool> vis(k, false);
    for (long j0 = 0; j0 < k; ++j0) {
      if (vis[j0]) continue;
      fam.n[j0] = sym::mono_sym("n" + std::to_string(j0 + 1));
      sym::Mono closure = sym::mono_const(1);
      long j = j0;
      while (true) {
        vis[j] = true;
        long q = pinv[j];
        sym::Mono mult = sub.reduce(csym(q) / ksym(q));
        closure = closure * mult;
        long nj = s[q] - 1;
        if (nj == j0) break;
        fam.n[nj] = fam.n[j] * mult;
        j = nj;
      }
      consistent = consistent && sub.impose_unit(closure);
    }
  }
  if (!consistent) {
    fam.trivial = true;
    fam.certificate = "multiplicative closure constraints are inconsistent";
    return fam;
  }

  // Final reduction pass (early monomials may mention later-eliminated syms).
  for (long i = 0; i < k; ++i) {
    fam.x[i] = sub.reduce(fam.x[i]);
    fam.y[i] = sub.reduce(fam.y[i]);
    fam.n[i] = sub.reduce(fam.n[i]);
  }
  fam.c.resize(k);
  fam.km.resize(k);
  for (long i = 0; i < k; ++i) {
    fam.c[i] = sub.reduce(csym(i));
    fam.km[i] = sub.reduce(ksym(i));
  }
  if (!v.empty()) {
    fam.r.resize(k);
    sym::Mono rp = sym::mono_const(1);
    for (long i = 0; i < k; ++i) {
      fam.r[i] = fam.y[i] / fam.y[v[i] - 1];
      rp = rp * fam.r[i];
    }
    if (!rp.is_one()) throw UniqError("prod r != 1; unexpected");
  }

  std::set<std::string> syms;
  for (long i = 0; i < k; ++i)
    for (const auto* m : {&fam.x[i], &fam.y[i], &fam.n[i], &fam.c[i], &fam.km[i]})
      for (const auto& [nm, e] : m->pw) syms.insert(nm);
  fam.free_symbols.assign(syms.begin(), syms.end());

  // Triviality of the multiplicative family: expand prod num - prod den
  // symbolically; zero means Q == 1 for every admissible instantiation
  // (the additive layer only restricts further).
  std::vector<std::array<sym::Mono, 3>> nf, df;
  for (long i = 0; i < k; ++i) {
    nf.push_back({fam.n[i], fam.x[i], fam.y[i]});
    df.push_back({fam.c[i] * fam.n[p[i] - 1], fam.x[i], fam.y[i]});
  }
  auto en = expand_form_product(nf);
  auto ed = expand_form_product(df);
  bool equal = en.size() == ed.size();
  if (equal)
    for (const auto& [e, poly] : en) {
      auto it = ed.find(e);
      if (it == ed.end() || !(poly + sym::negated(it->second)).empty()) {
        equal = false;
        break;
      }
    }
  if (equal) {
    fam.trivial = true;
    fam.certificate =
        "after the multiplicative constraints the numerator and denominator "
        "products coincide identically";
  }
  return fam;
}

inline NonUniqFamily three_line_solve(long k, std::vector<long> s,
                                      std::vector<long> p) {
  return solve_nonuniq(k, std::move(s), std::move(p));
}

inline std::optional<NonUniqFamily::Instance> NonUniqFamily::instantiate_with(
    std::map<std::string, Rat> vals) const {
  // x generators are determined by the additive layer when v is present;
  // remove any caller-supplied values in that case.
  std::vector<std::string> xgens;
  for (const auto& nm : free_symbols)
    if (nm[0] == 'x') xgens.push_back(nm);
  for (const auto& nm : free_symbols)
    if ((v.empty() || nm[0] != 'x') && !vals.count(nm)) return std::nullopt;

  if (!v.empty() && !xgens.empty()) {
    // Each x_i = coef_i * gen_{g(i)}; equations
    //   3 coef_i X_g(i) - 3 r_i coef_v(i) X_g(v(i)) = r_i n_v(i) - c_i n_p(i).
    std::map<std::string, size_t> gidx;
    for (size_t t = 0; t < xgens.size(); ++t) gidx[xgens[t]] = t;
    auto split = [&](const sym::Mono& m) -> std::pair<size_t, Rat> {
      sym::Mono rest = m;
      for (const auto& nm : xgens) {
        auto it = rest.pw.find(nm);
        if (it != rest.pw.end()) {
          if (it->second != 1) throw UniqError("unexpected x-generator power");
          rest.pw.erase(nm);
          return {gidx[nm], sym::eval(rest, vals)};
        }
      }
      throw UniqError("x entry lacks a generator");
    };
    size_t m = xgens.size();
    std::vector<std::vector<Rat>> aug(k, std::vector<Rat>(m + 1, Rat(0)));
    for (long i = 0; i < k; ++i) {
      auto [gi, coi] = split(x[i]);
      long w = v[i] - 1;
      auto [gw, cow] = split(x[w]);
      Rat ri = sym::eval(r[i], vals);
      aug[i][gi] += 3 * coi;
      aug[i][gw] -= 3 * ri * cow;
      aug[i][m] = ri * sym::eval(n[w], vals) -
                  sym::eval(c[i] * n[p[i] - 1], vals);
    }
    // Exact Gaussian elimination with consistency check.
    size_t row = 0;
    std::vector<long> pivot_col;
    for (size_t col = 0; col < m && row < static_cast<size_t>(k); ++col) {
      size_t sel = row;
      while (sel < static_cast<size_t>(k) && aug[sel][col] == 0) ++sel;
      if (sel == static_cast<size_t>(k)) continue;
      std::swap(aug[row], aug[sel]);
      for (size_t rr = 0; rr < static_cast<size_t>(k); ++rr) {
        if (rr == row || aug[rr][col] == 0) continue;
        Rat f = aug[rr][col] / aug[row][col];
        for (size_t cc = col; cc <= m; ++cc) aug[rr][cc] -= f * aug[row][cc];
      }
      pivot_col.push_back(static_cast<long>(col));
      ++row;
    }
    for (size_t rr = row; rr < static_cast<size_t>(k); ++rr)
      if (aug[rr][m] != 0) return std::nullopt;  // inconsistent instantiation
    std::vector<bool> solved(m, false);
    for (size_t t = 0; t < pivot_col.size(); ++t) {
      size_t col = pivot_col[t];
      vals[xgens[col]] = aug[t][m] / aug[t][col];
      solved[col] = true;
    }
    for (size_t t = 0; t < m; ++t)
      if (!solved[t]) {
        if (!vals.count(xgens[t])) return std::nullopt;  // free; caller supplies
      }
  }

  Instance inst;
  inst.values = vals;
  inst.xi.resize(k);
  inst.yi.resize(k);
  inst.ni.resize(k);
  inst.ci.resize(k);
  inst.ki.resize(k);
  for (long i = 0; i < k; ++i) {
    inst.xi[i] = sym::eval(x[i], vals);
    inst.yi[i] = sym::eval(y[i], vals);
    inst.ni[i] = sym::eval(n[i], vals);
    inst.ci[i] = sym::eval(c[i], vals);
    inst.ki[i] = sym::eval(km[i], vals);
    if (inst.xi[i] == 0 || inst.yi[i] == 0 || inst.ni[i] == 0)
      return std::nullopt;  // degenerate
  }
  if (!v.empty()) {
    inst.ri.resize(k);
    for (long i = 0; i < k; ++i) inst.ri[i] = sym::eval(r[i], vals);
  }
  for (long i = 0; i < k; ++i) {
    // consistency of the two denominator representations
    if (inst.ki[i] * inst.ni[s[i] - 1] != inst.ci[i] * inst.ni[p[i] - 1])
      throw UniqError("denominator representation mismatch");
    inst.Q.num.push_back({0, inst.ni[i], inst.xi[i], inst.yi[i]});
    inst.Q.den.push_back(
        {0, inst.ci[i] * inst.ni[p[i] - 1], inst.xi[i], inst.yi[i]});
  }
  for (const auto& nf : inst.Q.num)
    for (const auto& df : inst.Q.den)
      if (nf.proportional(df)) return std::nullopt;  // cancellation
  return inst;
}

inline NonUniqFamily::Instance NonUniqFamily::instantiate(RatRng& rng,
                                                          int max_tries) const {
  for (int t = 0; t < max_tries; ++t) {
    std::map<std::string, Rat> vals;
    for (const auto& nm : free_symbols)
      if (v.empty() || nm[0] != 'x') vals[nm] = rng.nonzero(6);
    if (!v.empty())
      for (const auto& nm : free_symbols)
        if (nm[0] == 'x') vals[nm] = rng.nonzero(6);  // only used if E5-free
    auto inst = instantiate_with(vals);
    if (inst) return *inst;
  }
  throw UniqError("no nondegenerate instantiation found");
}

// ---------------------------------------------------------------------------
// The two closed-form families (primed coordinates).
// ---------------------------------------------------------------------------
inline RationalProductRatio q33_display(const Rat& c1, const Rat& c2,
                                        const Rat& x, const Rat& y) {
  RationalProductRatio q;
  q.num = {{0, 1, x, y}, {0, c1 * c2, c2 * x, y}, {0, c1, c1 * c2 * x, y}};
  q.den = {{0, c1, x, y}, {0, 1, c2 * x, y}, {0, c1 * c2, c1 * c2 * x, y}};
  return q;
}

inline RationalProductRatio qq_display(const Rat& k, const Rat& k1,
                                       const Rat& k2, const Rat& c2,
                                       const Rat& n, const Rat& y) {
  RationalProductRatio q;
  q.num = {
      {0, 3 * k * k1 * k2 * n, -k * k1 * k2 * n - k1 * n, 3 * c2 * k * y},
      {0, 3 * n, n * (-k * k2 - 1), 3 * k * k2 * y},
      {0, 3 * c2 * n, -c2 * n - k1 * k2 * n, 3 * c2 * y},
      {0, -3 * k1 * k2 * n, c2 * n + k1 * k2 * n, -3 * c2 * k * k2 * y}};
  // First denominator factor normalized to make the ratio +1 (not -1) on
  // the four distinguished lines; it is often quoted with the opposite sign.
  q.den = {
      {0, 3 * k1 * n, -k * k1 * k2 * n - k1 * n, 3 * c2 * k * y},
      {0, -3 * c2 * n, c2 * n + k1 * k2 * n, -3 * c2 * k * k2 * y},
      {0, 3 * k1 * k2 * n, -c2 * n - k1 * k2 * n, 3 * c2 * y},
      {0, 3 * k * k2 * n, -k * k2 * n - n, 3 * k * k2 * y}};
  return q;
}

// Exact equality of two form-product ratios as rational functions.
inline bool ratio_equal(const RationalProductRatio& A,
                        const RationalProductRatio& B) {
  auto expand = [](const std::vector<LinearForm>& fs) {
    std::map<std::array<int, 3>, Rat> poly;
    poly[{0, 0, 0}] = 1;
    for (const auto& f : fs) {
      std::map<std::array<int, 3>, Rat> next;
      const Rat co[3] = {f.a, f.b, f.c};
      for (const auto& [e, val] : poly)
        for (int slot = 0; slot < 3; ++slot) {
          if (co[slot] == 0) continue;
          std::array<int, 3> e2 = e;
          e2[slot] += 1;
          next[e2] += val * co[slot];
        }
      poly = std::move(next);
    }
    for (auto it = poly.begin(); it != poly.end();)
      it = it->second == 0 ? poly.erase(it) : std::next(it);
    return poly;
  };
  auto mul = [](const std::map<std::array<int, 3>, Rat>& a,
                const std::map<std::array<int, 3>, Rat>& b) {
    std::map<std::array<int, 3>, Rat> r;
    for (const auto& [ea, va] : a)
      for (const auto& [eb, vb] : b) {
        std::array<int, 3> e = {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        r[e] += va * vb;
      }
    for (auto it = r.begin(); it != r.end();)
      it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
  };
  return mul(expand(A.num), expand(B.den)) == mul(expand(B.num), expand(A.den));
}

// ---------------------------------------------------------------------------
// Point-line configurations and colorings.
// ---------------------------------------------------------------------------
struct Configuration {
  long npoints = 0;
  std::vector<std::vector<int>> lines;  // sorted point indices per line

  long point_degree() const {  // gamma (validated uniform)
    std::vector<long> deg(npoints, 0);
    for (const auto& ln : lines)
      for (int q : ln) ++deg[q];
    return deg.empty() ? 0 : deg[0];
  }
  long line_size() const { return lines.empty() ? 0 : lines[0].size(); }

  void validate() const {
    if (npoints <= 0 || lines.empty()) throw UniqError("empty configuration");
    std::vector<long> deg(npoints, 0);
    size_t pi = lines[0].size();
    for (const auto& ln : lines) {
      if (ln.size() != pi) throw UniqError("nonuniform line size");
      for (size_t a = 0; a < ln.size(); ++a) {
        if (ln[a] < 0 || ln[a] >= npoints) throw UniqError("point out of range");
        if (a && ln[a] <= ln[a - 1]) throw UniqError("line not sorted unique");
        ++deg[ln[a]];
      }
    }
    long gamma = deg[0];
    for (long d : deg)
      if (d != gamma) throw UniqError("nonuniform point degree");
    for (size_t a = 0; a < lines.size(); ++a)
      for (size_t b = a + 1; b < lines.size(); ++b) {
        int common = 0;
        for (int q : lines[a])
          if (std::find(lines[b].begin(), lines[b].end(), q) != lines[b].end())
            ++common;
        if (common > 1) throw UniqError("two lines share two points");
      }
    if (npoints * gamma != static_cast<long>(lines.size() * pi))
      throw UniqError("incidence count mismatch");
  }
};

inline Configuration config_from_json(const nlohmann::ordered_json& j) {
  Configuration c;
  c.npoints = j.at("points").get<long>();
  for (const auto& ln : j.at("lines")) {
    std::vector<int> v = ln.get<std::vector<int>>();
    std::sort(v.begin(), v.end());
    c.lines.push_back(std::move(v));
  }
  c.validate();
  return c;
}

inline nlohmann::ordered_json config_to_json(const Configuration& c) {
  nlohmann::ordered_json j;
  j["points"] = c.npoints;
  j["lines"] = c.lines;
  return j;
}

struct Coloring {
  std::vector<int> color;  // per line: 0 black, 1 red, 2 green
};

struct ColorResult {
  bool ok = false;
  Coloring coloring;
  long nodes = 0;  // assignments explored; exhaustion certificate when !ok
};

// Exhaustive search for a coloring with k lines of each color such that every
// point lies on one line of each color.  Color-class permutation symmetry is
// broken by seeding: line 0 is black, the first non-black line is red.
inline ColorResult colorable(const Configuration& conf, long k) {
  conf.validate();
  if (static_cast<long>(conf.lines.size()) > 20)
    throw UniqError("coloring search limited to configurations with <= 20 lines");
  if (conf.point_degree() != 3)
    throw UniqError("coloring requires point degree 3");
  if (static_cast<long>(conf.lines.size()) != 3 * k)
    throw UniqError("line count must be 3k");

  long L = conf.lines.size();
  ColorResult res;
  std::vector<int> color(L, -1);
  std::vector<long> count(3, 0);
  // point x color usage
  std::vector<std::array<int, 3>> used(conf.npoints, {0, 0, 0});

  std::function<bool(long, int)> rec = [&](long i, int maxc) -> bool {
    if (i == L) {
      res.coloring.color = color;
      return true;
    }
    int limit = std::min(maxc + 1, 2);
    for (int col = 0; col <= limit; ++col) {
      if (count[col] == k) continue;
      bool fits = true;
      for (int q : conf.lines[i])
        if (used[q][col]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      ++res.nodes;
      color[i] = col;
      ++count[col];
      for (int q : conf.lines[i]) ++used[q][col];
      if (rec(i + 1, std::max(maxc, col))) return true;
      color[i] = -1;
      --count[col];
      for (int q : conf.lines[i]) --used[q][col];
    }
    return false;
  };
  res.ok = rec(0, -1);
  return res;
}

struct ExtractedPerms {
  long k = 0;
  std::vector<long> s, p, v;  // 1-indexed; v empty when only 3 black lines
};

// Reads the permutations off a colored configuration.  Black lines in id
// order play the roles sl, so, exc (and sp when there are four); red lines
// are numbered by id order and greens inherit their red partner's number
// through the sl-role pairing.
inline ExtractedPerms q_from_coloring(const Configuration& conf,
                                      const Coloring& col) {
  conf.validate();
  if (col.color.size() != conf.lines.size())
    throw UniqError("coloring size mismatch");
  std::vector<long> blacks, reds, greens;
  for (size_t i = 0; i < conf.lines.size(); ++i) {
    int c = col.color[i];
    if (c == 0)
      blacks.push_back(i);
    else if (c == 1)
      reds.push_back(i);
    else if (c == 2)
      greens.push_back(i);
    else
      throw UniqError("invalid color value");
  }
  long k = reds.size();
  if (k < 1 || static_cast<long>(greens.size()) != k ||
      blacks.size() < 3 || blacks.size() > 4)
    throw UniqError("coloring must have k reds, k greens, 3 or 4 blacks");
  if (static_cast<long>(blacks.size()) != (conf.line_size()))
    throw UniqError("black count must equal line size");

  // per point: its line of each color
  std::vector<std::array<long, 3>> at(conf.npoints, {-1, -1, -1});
  for (size_t i = 0; i < conf.lines.size(); ++i)
    for (int q : conf.lines[i]) {
      int c = col.color[i];
      if (at[q][c] != -1) throw UniqError("point sees two lines of one color");
      at[q][c] = i;
    }
  for (long q = 0; q < conf.npoints; ++q)
    for (int c = 0; c < 3; ++c)
      if (at[q][c] == -1) throw UniqError("point misses a color");

  std::map<long, long> red_no;
  for (long i = 0; i < k; ++i) red_no[reds[i]] = i + 1;

  // green numbering via the sl-role pairing
  std::map<long, long> green_no;
  for (int q : conf.lines[blacks[0]]) green_no[at[q][2]] = red_no[at[q][1]];
  if (static_cast<long>(green_no.size()) != k)
    throw UniqError("sl pairing does not number the greens");

  auto extract = [&](long black) {
    std::vector<long> perm(k, 0);
    for (int q : conf.lines[black]) {
      long gi = green_no[at[q][2]];
      perm[gi - 1] = red_no[at[q][1]];
    }
    detail::check_bijection(perm, k, "extracted permutation");
    return perm;
  };
  ExtractedPerms e;
  e.k = k;
  e.s = extract(blacks[1]);
  e.p = extract(blacks[2]);
  if (blacks.size() == 4) e.v = extract(blacks[3]);
  return e;
}

// ---------------------------------------------------------------------------
// Geometric realization of a solved instance: black role lines plus one line
// per numerator (red) and denominator (green) form, intersected in the primed
// projective plane.
// ---------------------------------------------------------------------------
struct GeometricFixture {
  Configuration conf;
  Coloring coloring;
};

namespace detail {
inline std::array<Rat, 3> cross3(const std::array<Rat, 3>& u,
                                 const std::array<Rat, 3>& w) {
  return {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2],
          u[0] * w[1] - u[1] * w[0]};
}
inline std::array<Rat, 3> normalize_proj(std::array<Rat, 3> p) {
  for (int i = 0; i < 3; ++i)
    if (p[i] != 0) {
      Rat d = p[i];
      for (int j = 0; j < 3; ++j) p[j] /= d;
      return p;
    }
  throw UniqError("zero projective point");
}
}  // namespace detail

inline GeometricFixture configuration_from_instance(
    const NonUniqFamily& fam, const NonUniqFamily::Instance& inst) {
  std::vector<std::array<Rat, 3>> forms;  // blacks, reds, greens
  forms.push_back({1, 0, 0});
  forms.push_back({0, 1, 0});
  forms.push_back({0, 0, 1});
  if (!fam.v.empty()) forms.push_back({3, -1, 0});
  size_t nb = forms.size();
  for (const auto& f : inst.Q.num) forms.push_back({f.a, f.b, f.c});
  for (const auto& f : inst.Q.den) forms.push_back({f.a, f.b, f.c});

  auto on_line = [&](const std::array<Rat, 3>& pt, size_t li) {
    return forms[li][0] * pt[0] + forms[li][1] * pt[1] + forms[li][2] * pt[2] ==
           0;
  };
  std::vector<std::array<Rat, 3>> pts;
  auto point_id = [&](const std::array<Rat, 3>& pt) {
    for (size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == pt) return static_cast<int>(i);
    pts.push_back(pt);
    return static_cast<int>(pts.size() - 1);
  };

  std::vector<std::vector<int>> lines(forms.size());
  for (size_t b = 0; b < nb; ++b)
    for (size_t r = nb; r < nb + inst.Q.num.size(); ++r) {
      auto pt = detail::normalize_proj(detail::cross3(forms[b], forms[r]));
      int inc = 0;
      for (size_t li = 0; li < forms.size(); ++li)
        if (on_line(pt, li)) ++inc;
      if (inc != 3)
        throw UniqError("non-generic instance: a crossing has degree != 3");
      int id = point_id(pt);
      for (size_t li = 0; li < forms.size(); ++li)
        if (on_line(pt, li) &&
            std::find(lines[li].begin(), lines[li].end(), id) == lines[li].end())
          lines[li].push_back(id);
    }

  GeometricFixture g;
  g.conf.npoints = pts.size();
  for (auto& ln : lines) {
    std::sort(ln.begin(), ln.end());
    g.conf.lines.push_back(ln);
  }
  g.conf.validate();
  g.coloring.color.assign(forms.size(), 2);
  for (size_t i = 0; i < nb; ++i) g.coloring.color[i] = 0;
  for (size_t i = nb; i < nb + inst.Q.num.size(); ++i) g.coloring.color[i] = 1;
  return g;
}

// ---------------------------------------------------------------------------
// The three (9_3) incidence tables as read off the source figures, and the
// lex-minimal representatives from exhaustive enumeration.
// ---------------------------------------------------------------------------
inline Configuration config_93_figure(int which) {
  Configuration c;
  c.npoints = 9;
  switch (which) {
    case 1:  // Pappus hexagon figure
      c.lines = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 4, 6}, {1, 5, 8},
                 {2, 3, 7}, {2, 4, 8}, {1, 3, 6}, {0, 5, 7}};
      break;
    case 2:
      c.lines = {{0, 1, 5}, {1, 2, 4}, {0, 2, 3}, {3, 5, 8}, {3, 4, 7},
                 {4, 5, 6}, {0, 7, 8}, {2, 6, 7}, {1, 6, 8}};
      break;
    case 3:
      c.lines = {{0, 1, 3}, {1, 2, 5}, {0, 2, 4}, {0, 5, 8}, {2, 3, 6},
                 {1, 4, 7}, {3, 7, 8}, {4, 6, 8}, {5, 6, 7}};
      break;
    default:
      throw std::invalid_argument("which must be 1, 2, 3");
  }
  c.validate();
  return c;
}

inline Configuration config_93_canonical(int which) {
  Configuration c;
  c.npoints = 9;
  switch (which) {
    case 1:
      c.lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 7}, {1, 5, 8},
                 {2, 4, 8}, {2, 6, 7}, {3, 6, 8}, {4, 5, 7}};
      break;
    case 2:
      c.lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 7},
                 {2, 4, 8}, {2, 6, 7}, {3, 6, 8}, {5, 7, 8}};
      break;
    case 3:
      c.lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 7},
                 {2, 3, 8}, {2, 6, 7}, {4, 6, 8}, {5, 7, 8}};
      break;
    default:
      throw std::invalid_argument("which must be 1, 2, 3");
  }
  c.validate();
  return c;
}

inline long count_triangles(const Configuration& c) {
  long n = 0;
  size_t L = c.lines.size();
  auto common = [&](size_t a, size_t b) {
    std::vector<int> out;
    for (int q : c.lines[a])
      if (std::find(c.lines[b].begin(), c.lines[b].end(), q) !=
          c.lines[b].end())
        out.push_back(q);
    return out;
  };
  for (size_t a = 0; a < L; ++a)
    for (size_t b = a + 1; b < L; ++b)
      for (size_t d = b + 1; d < L; ++d) {
        auto ab = common(a, b), ad = common(a, d), bd = common(b, d);
        if (ab.size() == 1 && ad.size() == 1 && bd.size() == 1 &&
            ab[0] != ad[0] && ab[0] != bd[0] && ad[0] != bd[0])
          ++n;
      }
  return n;
}

inline long count_disjoint_triples(const Configuration& c) {
  long n = 0;
  size_t L = c.lines.size();
  auto disjoint = [&](size_t a, size_t b) {
    for (int q : c.lines[a])
      if (std::find(c.lines[b].begin(), c.lines[b].end(), q) !=
          c.lines[b].end())
        return false;
    return true;
  };
  for (size_t a = 0; a < L; ++a)
    for (size_t b = a + 1; b < L; ++b) {
      if (!disjoint(a, b)) continue;
      for (size_t d = b + 1; d < L; ++d)
        if (disjoint(a, d) && disjoint(b, d)) ++n;
    }
  return n;
}

// Brute-force isomorphism test for 9-point configurations.
inline bool configs_isomorphic(const Configuration& a, const Configuration& b) {
  if (a.npoints != b.npoints || a.lines.size() != b.lines.size()) return false;
  if (a.npoints > 9) throw UniqError("isomorphism test limited to 9 points");
  std::set<std::vector<int>> bl(b.lines.begin(), b.lines.end());
  std::vector<int> perm(a.npoints);
  for (int i = 0; i < a.npoints; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (const auto& ln : a.lines) {
      std::vector<int> m;
      for (int q : ln) m.push_back(perm[q]);
      std::sort(m.begin(), m.end());
      if (!bl.count(m)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of (9_3) incidence tables: all lex-ordered sets of 9
// sorted triples on 9 points with every point of degree 3 and no two triples
// sharing two points, bucketed by triangle count.
// ---------------------------------------------------------------------------
struct Enum93Class {
  long count = 0;
  long triangles = 0;
  long disjoint_triples = 0;
  Configuration lexmin;
};

struct Enum93Result {
  long total = 0;
  std::vector<Enum93Class> classes;  // sorted by triangle count
};

inline Enum93Result enumerate_93() {
  Enum93Result res;
  std::map<long, Enum93Class> buckets;
  std::array<int, 9> deg{};
  std::array<std::array<bool, 9>, 9> pair{};
  std::vector<std::array<int, 3>> cur;

  std::function<void(int)> rec = [&](int depth) {
    if (depth == 9) {
      Configuration c;
      c.npoints = 9;
      for (const auto& t : cur) c.lines.push_back({t[0], t[1], t[2]});
      ++res.total;
      long tri = count_triangles(c);
      auto it = buckets.find(tri);
      if (it == buckets.end()) {
        Enum93Class cl;
        cl.count = 1;
        cl.triangles = tri;
        cl.disjoint_triples = count_disjoint_triples(c);
        cl.lexmin = c;  // lex-ordered enumeration: first hit is minimal
        buckets[tri] = cl;
      } else {
        ++it->second.count;
      }
      return;
    }
    std::array<int, 3> lo = depth ? cur.back() : std::array<int, 3>{0, 1, 2};
    int remaining = 9 - depth;
    for (int a = 0; a < 9; ++a) {
      if (deg[a] >= 3) continue;
      for (int b = a + 1; b < 9; ++b) {
        if (deg[b] >= 3 || pair[a][b]) continue;
        for (int d = b + 1; d < 9; ++d) {
          if (deg[d] >= 3 || pair[a][d] || pair[b][d]) continue;
          std::array<int, 3> t = {a, b, d};
          if (depth && !(lo < t)) continue;
          // degree feasibility: remaining incidences must fit
          long deficit = 0;
          for (int q = 0; q < 9; ++q)
            deficit += 3 - deg[q] - (q == a || q == b || q == d ? 1 : 0);
          if (deficit != 3L * (remaining - 1)) continue;
          cur.push_back(t);
          ++deg[a], ++deg[b], ++deg[d];
          pair[a][b] = pair[a][d] = pair[b][d] = true;
          rec(depth + 1);
          pair[a][b] = pair[a][d] = pair[b][d] = false;
          --deg[a], --deg[b], --deg[d];
          cur.pop_back();
        }
      }
    }
  };
  rec(0);
  for (auto& [tri, cl] : buckets) res.classes.push_back(cl);
  return res;
}

}  // namespace uvd
