#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "uvd/linform.hpp"
#include "uvd/qrational.hpp"
#include "uvd/rational.hpp"

namespace uvd {

struct SingularFactorError : std::runtime_error {
  LinearForm factor;
  SingularFactorError(const std::string& what, LinearForm f)
      : std::runtime_error(what), factor(std::move(f)) {}
};

// One hyperbolic factor sinh(scale*x*form) or cosh(scale*x*form); scale > 0,
// signs live in the form / product prefactor.
struct SinhFactor {
  LinearForm form;
  Rat scale;  // multiplies x; bracket notation sinh[x/4: A] has scale 1/4

  bool operator==(const SinhFactor& o) const {
    return scale == o.scale && form == o.form;
  }
  bool operator<(const SinhFactor& o) const {
    if (scale != o.scale) return scale < o.scale;
    return form < o.form;
  }
};

enum class LimitKind { Finite, Zero, Infinite };

struct LimitResult {
  LimitKind kind;
  Rat value;  // meaningful for Finite (Zero reports 0)
};

// Signed rational multiple of a ratio of products of sinh/cosh factors of
// linear forms in (al, be, ga). This is the common shape of all universal
// quantum dimension formulae.
class SinhProduct {
 public:
  Rat prefactor = 1;
  std::vector<SinhFactor> num_sinh, den_sinh;
  std::vector<SinhFactor> num_cosh, den_cosh;

  static SinhProduct one() { return SinhProduct{}; }

  SinhProduct& mul_sinh(LinearForm f, Rat scale) {
    num_sinh.push_back({std::move(f), std::move(scale)});
    return *this;
  }
  SinhProduct& div_sinh(LinearForm f, Rat scale) {
    den_sinh.push_back({std::move(f), std::move(scale)});
    return *this;
  }
  SinhProduct& mul_cosh(LinearForm f, Rat scale) {
    num_cosh.push_back({std::move(f), std::move(scale)});
    return *this;
  }
  SinhProduct& div_cosh(LinearForm f, Rat scale) {
    den_cosh.push_back({std::move(f), std::move(scale)});
    return *this;
  }

  SinhProduct times(const SinhProduct& o) const {
    SinhProduct r = *this;
    r.prefactor *= o.prefactor;
    r.num_sinh.insert(r.num_sinh.end(), o.num_sinh.begin(), o.num_sinh.end());
    r.den_sinh.insert(r.den_sinh.end(), o.den_sinh.begin(), o.den_sinh.end());
    r.num_cosh.insert(r.num_cosh.end(), o.num_cosh.begin(), o.num_cosh.end());
    r.den_cosh.insert(r.den_cosh.end(), o.den_cosh.begin(), o.den_cosh.end());
    return r;
  }

  SinhProduct permuted(const Perm3& s) const {
    SinhProduct r = *this;
    for (auto* v : {&r.num_sinh, &r.den_sinh, &r.num_cosh, &r.den_cosh})
      for (auto& f : *v) f.form = permute_form(f.form, s);
    return r;
  }

  // Removes factor pairs that are identical as (form, scale); no polynomial
  // factoring beyond that.
  SinhProduct cancelled() const {
    auto drop = [](std::vector<SinhFactor> num, std::vector<SinhFactor> den) {
      std::vector<SinhFactor> num2;
      for (auto& f : num) {
        auto it = std::find(den.begin(), den.end(), f);
        if (it != den.end())
          den.erase(it);
        else
          num2.push_back(f);
      }
      return std::make_pair(num2, den);
    };
    SinhProduct r = *this;
    std::tie(r.num_sinh, r.den_sinh) = drop(r.num_sinh, r.den_sinh);
    std::tie(r.num_cosh, r.den_cosh) = drop(r.num_cosh, r.den_cosh);
    return r;
  }

  // Exact substitution of a point: q = e^x, sinh(s*x*v) -> (q^(sv)-q^(-sv))/2.
  // Vanishing denominator factors are singular here by definition.
  QRational substitute_point(const VogelPoint& p) const {
    for (const auto& f : den_sinh)
      if (f.form(p) == 0)
        throw SingularFactorError(
            "singular point: denominator factor sinh(" + f.form.str() +
                ") vanishes",
            f.form);
    long twos = static_cast<long>(den_sinh.size() + den_cosh.size()) -
                static_cast<long>(num_sinh.size() + num_cosh.size());
    Rat pref = prefactor;
    mpz_class two = 2;
    if (twos >= 0) {
      mpz_class m;
      mpz_pow_ui(m.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(twos));
      pref *= Rat(m);
    } else {
      mpz_class m;
      mpz_pow_ui(m.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(-twos));
      pref /= Rat(m);
    }

    // exact cancellation of equal exponent magnitudes keeps the polynomials
    // small before multiplying out
    std::vector<Rat> nums, dens;
    for (const auto& f : num_sinh) {
      Rat v = f.scale * f.form(p);
      if (v == 0) return QRational();  // whole product vanishes identically
      if (v < 0) {
        pref = -pref;
        v = -v;
      }
      nums.push_back(v);
    }
    for (const auto& f : den_sinh) {
      Rat v = f.scale * f.form(p);
      if (v < 0) {
        pref = -pref;
        v = -v;
      }
      dens.push_back(v);
    }
    std::sort(nums.begin(), nums.end());
    std::sort(dens.begin(), dens.end());
    {
      std::vector<Rat> n2, d2;
      auto i = nums.begin();
      auto j = dens.begin();
      while (i != nums.end() && j != dens.end()) {
        if (*i == *j) {
          ++i;
          ++j;
        } else if (*i < *j) {
          n2.push_back(*i++);
        } else {
          d2.push_back(*j++);
        }
      }
      n2.insert(n2.end(), i, nums.end());
      d2.insert(d2.end(), j, dens.end());
      nums = std::move(n2);
      dens = std::move(d2);
    }

    QRational r = QRational::constant(pref);
    for (const auto& v : nums) r = r * QRational::q_binomial(v);
    for (const auto& v : dens) r = r / QRational::q_binomial(v);
    for (const auto& f : num_cosh) r = r * q_cosh_binomial(f.scale * f.form(p));
    for (const auto& f : den_cosh) r = r / q_cosh_binomial(f.scale * f.form(p));
    return r;
  }

  // x -> 0 at a fixed point. Vanishing denominator factors make the point
  // singular; a vanishing numerator factor makes the function identically 0.
  LimitResult limit_x_to_zero(const VogelPoint& p) const {
    for (const auto& f : den_sinh)
      if (f.form(p) == 0)
        throw SingularFactorError(
            "singular point: denominator factor sinh(" + f.form.str() +
                ") vanishes",
            f.form);
    for (const auto& f : num_sinh)
      if (f.form(p) == 0) return {LimitKind::Zero, 0};
    long order = static_cast<long>(num_sinh.size()) -
                 static_cast<long>(den_sinh.size());
    if (order > 0) return {LimitKind::Zero, 0};
    if (order < 0) return {LimitKind::Infinite, 0};
    Rat v = prefactor;
    for (const auto& f : num_sinh) v *= f.scale * f.form(p);
    for (const auto& f : den_sinh) v /= f.scale * f.form(p);
    return {LimitKind::Finite, v};  // cosh factors -> 1
  }

  // Floating evaluation at real (al, be, ga, x); log-magnitude plus sign.
  // Returns {log|P|, sign}; sign 0 encodes an exact numerator zero and a NaN
  // log encodes a vanishing denominator.
  std::pair<long double, int> eval_float_log(long double al, long double be,
                                             long double ga,
                                             long double x) const {
    long double lg = std::log(std::fabs(to_ld(prefactor)));
    int sg = prefactor == 0 ? 0 : (prefactor > 0 ? 1 : -1);
    if (sg == 0) return {-INFINITY, 0};
    auto arg = [&](const SinhFactor& f) {
      long double v = to_ld(f.form.k0) + to_ld(f.form.a) * al +
                      to_ld(f.form.b) * be + to_ld(f.form.c) * ga;
      return to_ld(f.scale) * v * x;
    };
    // log|sinh u| = |u| + log1p(-exp(-2|u|)) - log 2
    auto lsinh = [](long double u) {
      long double a = std::fabs(u);
      if (a == 0.0L) return -std::numeric_limits<long double>::infinity();
      return a + std::log1p(-std::exp(-2.0L * a)) - std::log(2.0L);
    };
    auto lcosh = [](long double u) {
      long double a = std::fabs(u);
      return a + std::log1p(std::exp(-2.0L * a)) - std::log(2.0L);
    };
    for (const auto& f : num_sinh) {
      long double u = arg(f);
      if (u == 0.0L) return {-INFINITY, 0};
      if (u < 0) sg = -sg;
      lg += lsinh(u);
    }
    for (const auto& f : den_sinh) {
      long double u = arg(f);
      if (u == 0.0L) return {NAN, 0};
      if (u < 0) sg = -sg;
      lg -= lsinh(u);
    }
    for (const auto& f : num_cosh) lg += lcosh(arg(f));
    for (const auto& f : den_cosh) lg -= lcosh(arg(f));
    return {lg, sg};
  }

  long double eval_float(long double al, long double be, long double ga,
                         long double x) const {
    auto [lg, sg] = eval_float_log(al, be, ga, x);
    if (sg == 0) return std::isnan(lg) ? NAN : 0.0L;
    return sg * std::exp(lg);
  }

  // Bracket rendering: pre * sinh[x*s: A.B/(C.D)] grouped by scale.
  std::string bracket() const {
    std::ostringstream os;
    if (prefactor != 1) os << rat_str(prefactor) << "*";
    std::map<Rat, std::pair<std::vector<std::string>, std::vector<std::string>>>
        sinh_groups, cosh_groups;
    for (const auto& f : num_sinh)
      sinh_groups[f.scale].first.push_back("(" + f.form.str() + ")");
    for (const auto& f : den_sinh)
      sinh_groups[f.scale].second.push_back("(" + f.form.str() + ")");
    for (const auto& f : num_cosh)
      cosh_groups[f.scale].first.push_back("(" + f.form.str() + ")");
    for (const auto& f : den_cosh)
      cosh_groups[f.scale].second.push_back("(" + f.form.str() + ")");
    auto emit = [&](const char* fn, const Rat& s,
                    const std::pair<std::vector<std::string>,
                                    std::vector<std::string>>& g) {
      os << fn << "[x";
      if (s != 1) {
        if (s.get_num() == 1) os << "/" << rat_str(Rat(s.get_den()));
        else os << "*" << rat_str(s);
      }
      os << ": ";
      if (g.first.empty()) os << "1";
      for (size_t i = 0; i < g.first.size(); ++i)
        os << (i ? "." : "") << g.first[i];
      if (!g.second.empty()) {
        os << " / ";
        for (size_t i = 0; i < g.second.size(); ++i)
          os << (i ? "." : "") << g.second[i];
      }
      os << "]";
    };
    bool first = true;
    for (const auto& [s, g] : sinh_groups) {
      if (!first) os << " * ";
      emit("sinh", s, g);
      first = false;
    }
    for (const auto& [s, g] : cosh_groups) {
      if (!first) os << " * ";
      emit("cosh", s, g);
      first = false;
    }
    if (first) os << rat_str(prefactor == 1 ? Rat(1) : Rat(1));
    return os.str();
  }

  nlohmann::ordered_json to_json() const {
    auto forms = [](const std::vector<SinhFactor>& v) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto& f : v)
        a.push_back({{"k0", rat_str(f.form.k0)},
                     {"a", rat_str(f.form.a)},
                     {"b", rat_str(f.form.b)},
                     {"c", rat_str(f.form.c)},
                     {"scale", rat_str(f.scale)}});
      return a;
    };
    return {{"prefactor", rat_str(prefactor)},
            {"num_sinh", forms(num_sinh)},
            {"den_sinh", forms(den_sinh)},
            {"num_cosh", forms(num_cosh)},
            {"den_cosh", forms(den_cosh)}};
  }

  static SinhProduct from_json(const nlohmann::json& j) {
    auto forms = [](const nlohmann::json& a) {
      std::vector<SinhFactor> v;
      for (const auto& f : a)
        v.push_back({LinearForm{rat_parse(f.at("k0").get<std::string>()),
                                rat_parse(f.at("a").get<std::string>()),
                                rat_parse(f.at("b").get<std::string>()),
                                rat_parse(f.at("c").get<std::string>())},
                     rat_parse(f.at("scale").get<std::string>())});
      return v;
    };
    SinhProduct r;
    r.prefactor = rat_parse(j.at("prefactor").get<std::string>());
    r.num_sinh = forms(j.at("num_sinh"));
    r.den_sinh = forms(j.at("den_sinh"));
    r.num_cosh = forms(j.at("num_cosh"));
    r.den_cosh = forms(j.at("den_cosh"));
    return r;
  }

 private:
  // q^e + q^(-e) (cosh without the 1/2; bookkeeping matches q_binomial)
  static QRational q_cosh_binomial(const Rat& e) {
    long den = static_cast<long>(e.get_den().get_si());
    long num = std::abs(static_cast<long>(e.get_num().get_si()));
    detail::Poly p;
    if (num == 0) {
      detail::poly_add_term(p, 0, 2);
    } else {
      detail::poly_add_term(p, num, 1);
      detail::poly_add_term(p, -num, 1);
    }
    detail::Poly one;
    one.emplace(0, 1);
    return QRational::from_polys(den, std::move(p), std::move(one));
  }
};

// Scale invariance helper: simultaneous rescale of the point and 1/x leaves
// every universal formula unchanged; used by homogeneity property tests.
inline VogelPoint scale_point(const VogelPoint& p, const Rat& s) {
  return p.scaled(s);
}

}  // namespace uvd
