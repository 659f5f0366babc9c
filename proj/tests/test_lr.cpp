#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "uvd/lr.hpp"
#include "uvd/rootsys.hpp"
#include "uvd/universal.hpp"

using namespace uvd;

namespace {

// Value at p of the restriction of prod to the line p + s*d: factors
// vanishing identically on the line (form proportional to the line's form)
// pair up num against den and contribute their scale*coefficient ratios; the
// remaining vanishing factors resolve along d as usual.
QRational value_on_line(const SinhProduct& prod, const VogelPoint& p,
                        const Direction& d) {
  const Direction probes[4] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 2, 3}};
  auto on_line = [&](const LinearForm& f) {
    return f(p) == 0 && hom_eval(f, d) == 0;
  };
  long nline = 0, dline = 0, ntr = 0, dtr = 0;
  for (const auto& f : prod.num_sinh)
    if (f.form(p) == 0) (on_line(f.form) ? nline : ntr) += 1;
  for (const auto& f : prod.den_sinh)
    if (f.form(p) == 0) (on_line(f.form) ? dline : dtr) += 1;
  if (nline > dline) return QRational();
  if (nline < dline) throw LRError("pole along the whole line");
  if (ntr > dtr) return QRational();
  if (ntr < dtr) throw LRError("pole at the point within the line");

  Direction e{0, 0, 0};
  for (const auto& cand : probes) {
    bool ok = true;
    for (const auto& f : prod.num_sinh)
      if (on_line(f.form) && hom_eval(f.form, cand) == 0) ok = false;
    for (const auto& f : prod.den_sinh)
      if (on_line(f.form) && hom_eval(f.form, cand) == 0) ok = false;
    if (ok) {
      e = cand;
      break;
    }
  }
  SinhProduct rest;
  rest.prefactor = prod.prefactor;
  rest.num_cosh = prod.num_cosh;
  rest.den_cosh = prod.den_cosh;
  Rat slope = 1;
  for (const auto& f : prod.num_sinh) {
    if (f.form(p) != 0)
      rest.num_sinh.push_back(f);
    else
      slope *= f.scale * hom_eval(f.form, on_line(f.form) ? e : d);
  }
  for (const auto& f : prod.den_sinh) {
    if (f.form(p) != 0)
      rest.den_sinh.push_back(f);
    else
      slope /= f.scale * hom_eval(f.form, on_line(f.form) ? e : d);
  }
  return rest.substitute_point(p).scaled(slope);
}

}  // namespace

struct lr : ::testing::Test {
  // X(k,n,be,al,ga) resp. X(k,n,ga,al,be)
  static inline const Perm3 beta_first{{1, 0, 2}};
  static inline const Perm3 gamma_first{{2, 0, 1}};
  static inline const Direction d_exc{1, -1, 0};  // tangent to the exc line
  static inline const Direction d_so{0, 0, 1};    // tangent to the so line

  static QRational resolved(long k, long n, const Perm3& pm,
                            const VogelPoint& p, const Direction& d) {
    return value_on_line(qdim_xkn(k, n).permuted(pm), p, d);
  }
  static QRational weyl(const RootSystem& r, const std::vector<long>& coeffs) {
    return weyl_qdim(r, r.weight_l(coeffs));
  }
  static QRational c(long v) { return QRational::constant(v); }
};

#define EXPECT_QEQ(a, b) EXPECT_TRUE(qrat_equal((a), (b)))

TEST_F(lr, classification) {
  VogelPoint generic{1, rat(22, 7), rat(113, 13)};
  SinhProduct x2 = qdim_xkn(1, 0);
  EXPECT_EQ(classify_point(x2, generic), LRClass::Regular);

  VogelPoint pD4 = point_D(4);
  auto zeros = [&](long k, long n) {
    return structural_zeros(qdim_xkn(k, n).permuted(beta_first), pD4);
  };
  EXPECT_EQ(zeros(1, 0).num, 1);
  EXPECT_EQ(zeros(1, 0).den, 1);
  EXPECT_EQ(zeros(1, 2).num, 3);
  EXPECT_EQ(zeros(1, 2).den, 3);
  EXPECT_EQ(zeros(3, 0).num, 4);
  EXPECT_EQ(zeros(3, 0).den, 4);
  EXPECT_EQ(classify_point(qdim_xkn(3, 0).permuted(beta_first), pD4),
            LRClass::LinearlyResolvable);

  // adjoint^2 at the symmetric point: two denominator zeros, no numerator
  VogelPoint y1{1, 1, 1};
  ZeroCounts z = structural_zeros(qdim_xkn(0, 2), y1);
  EXPECT_EQ(z.num, 0);
  EXPECT_EQ(z.den, 2);
  EXPECT_EQ(classify_point(qdim_xkn(0, 2), y1), LRClass::NotResolvable);

  EXPECT_EQ(lr_class_name(LRClass::Regular), "regular");
  EXPECT_EQ(lr_class_name(LRClass::LinearlyResolvable), "LR");
  EXPECT_EQ(lr_class_name(LRClass::NotResolvable), "not-LR");
}

TEST_F(lr, direction_regularity_and_errors) {
  VogelPoint pD4 = point_D(4);
  SinhProduct b10 = qdim_xkn(1, 0).permuted(beta_first);
  SinhProduct b12 = qdim_xkn(1, 2).permuted(beta_first);
  EXPECT_TRUE(is_regular_direction(b10, pD4, d_exc));
  EXPECT_TRUE(is_regular_direction(b12, pD4, d_exc));
  // a factor vanishes identically along the so tangent
  EXPECT_FALSE(is_regular_direction(b12, pD4, d_so));
  EXPECT_THROW(resolve_on_line(b12, pD4, d_so), LRError);

  // not resolvable: pole along every line
  EXPECT_THROW(resolve_on_line(qdim_xkn(0, 2), {1, 1, 1}, {1, 2, 3}), LRError);

  // where the direction is regular the two restriction routes agree
  EXPECT_QEQ(resolve_on_line(b10, pD4, d_exc), value_on_line(b10, pD4, d_exc));
  EXPECT_QEQ(resolve_on_line(b12, pD4, d_exc), value_on_line(b12, pD4, d_exc));
}

TEST_F(lr, analyze_reports_direction_dependence) {
  RatRng rng(11);
  VogelPoint pD4 = point_D(4);
  RootSystem d4 = build_root_system({Family::D, 4});

  LRResult reg = lr_analyze(qdim_xkn(1, 0), {1, rat(22, 7), rat(113, 13)}, 3, rng);
  EXPECT_EQ(reg.cls, LRClass::Regular);
  EXPECT_TRUE(reg.direction_independent);

  LRResult res = lr_analyze(qdim_xkn(1, 0).permuted(beta_first), pD4, 3, rng);
  EXPECT_EQ(res.cls, LRClass::LinearlyResolvable);
  EXPECT_TRUE(res.direction_independent);
  EXPECT_QEQ(res.value, weyl(d4, {1, 0, 1, 1}));

  LRResult bad = lr_analyze(qdim_xkn(0, 2), {1, 1, 1}, 3, rng);
  EXPECT_EQ(bad.cls, LRClass::NotResolvable);

  // resolvable but direction dependent: the value is only defined per line
  LRResult dep = lr_analyze(qdim_xkn(2, 2).permuted(beta_first),
                            point_E7(), 3, rng);
  EXPECT_EQ(dep.cls, LRClass::LinearlyResolvable);
  EXPECT_FALSE(dep.direction_independent);
}

// Restrictions of X(k,n,be,al,ga) and X(k,n,ga,al,be) at the D4 point, which
// lies on both the so and exc lines; approached along either tangent.
TEST_F(lr, d4_beta_channel_exc_approach) {
  RootSystem d4 = build_root_system({Family::D, 4});
  VogelPoint p = point_D(4);
  QRational X2 = weyl(d4, {1, 0, 1, 1});
  EXPECT_QEQ(resolved(1, 0, beta_first, p, d_exc), X2);
  EXPECT_QEQ(resolved(1, 1, beta_first, p, d_exc), X2.scaled(2));
  EXPECT_QEQ(resolved(1, 2, beta_first, p, d_exc),
             weyl(d4, {2, 0, 0, 0}) + weyl(d4, {0, 0, 2, 0}) +
                 weyl(d4, {0, 0, 0, 2}));
  EXPECT_QEQ(resolved(1, 3, beta_first, p, d_exc), c(-2));
  EXPECT_QEQ(resolved(2, 0, beta_first, p, d_exc), X2);
  EXPECT_QEQ(resolved(2, 1, beta_first, p, d_exc), weyl(d4, {0, 1, 0, 0}));
  EXPECT_QEQ(resolved(3, 0, beta_first, p, d_exc), c(3));
}

TEST_F(lr, d4_gamma_channel_exc_approach) {
  RootSystem d4 = build_root_system({Family::D, 4});
  VogelPoint p = point_D(4);
  QRational X2 = weyl(d4, {1, 0, 1, 1});
  EXPECT_QEQ(resolved(1, 0, gamma_first, p, d_exc), X2);
  EXPECT_QEQ(resolved(1, 1, gamma_first, p, d_exc), X2.scaled(-1));
  EXPECT_QEQ(resolved(1, 2, gamma_first, p, d_exc), c(0));
  EXPECT_QEQ(resolved(1, 3, gamma_first, p, d_exc), c(1));
  EXPECT_QEQ(resolved(2, 0, gamma_first, p, d_exc), X2);
  EXPECT_QEQ(resolved(2, 1, gamma_first, p, d_exc), weyl(d4, {0, 1, 0, 0}));
  EXPECT_QEQ(resolved(3, 0, gamma_first, p, d_exc), c(0));
}

TEST_F(lr, d4_beta_channel_so_approach) {
  RootSystem d4 = build_root_system({Family::D, 4});
  VogelPoint p = point_D(4);
  QRational X2 = weyl(d4, {1, 0, 1, 1});
  EXPECT_QEQ(resolved(1, 0, beta_first, p, d_so), X2);
  EXPECT_QEQ(resolved(1, 1, beta_first, p, d_so), X2);
  EXPECT_QEQ(resolved(1, 2, beta_first, p, d_so), weyl(d4, {2, 0, 0, 0}));
  EXPECT_QEQ(resolved(1, 3, beta_first, p, d_so), c(-1));
  EXPECT_QEQ(resolved(2, 0, beta_first, p, d_so), c(0));
  EXPECT_QEQ(resolved(2, 1, beta_first, p, d_so), c(0));
  EXPECT_QEQ(resolved(3, 0, beta_first, p, d_so), c(0));
}

TEST_F(lr, d4_gamma_channel_so_approach) {
  RootSystem d4 = build_root_system({Family::D, 4});
  VogelPoint p = point_D(4);
  EXPECT_QEQ(resolved(1, 0, gamma_first, p, d_so), weyl(d4, {1, 0, 1, 1}));
  EXPECT_QEQ(resolved(1, 1, gamma_first, p, d_so), c(0));
  EXPECT_QEQ(resolved(1, 2, gamma_first, p, d_so), c(0));
  EXPECT_QEQ(resolved(1, 3, gamma_first, p, d_so), c(0));
  EXPECT_QEQ(resolved(2, 0, gamma_first, p, d_so), c(0));
  EXPECT_QEQ(resolved(2, 1, gamma_first, p, d_so), c(0));
  EXPECT_QEQ(resolved(3, 0, gamma_first, p, d_so), c(0));
}

// Cells of the beta channel at E7 that only resolve along the exc tangent;
// the values are negated Weyl quantum dimensions.
TEST_F(lr, e7_beta_channel_exc_approach) {
  RootSystem e7 = build_root_system({Family::E, 7});
  VogelPoint p = point_E7();
  EXPECT_QEQ(resolved(1, 3, beta_first, p, d_exc),
             weyl(e7, {0, 0, 0, 0, 0, 2, 0}).scaled(-1));
  EXPECT_QEQ(resolved(2, 1, beta_first, p, d_exc),
             weyl(e7, {0, 0, 0, 0, 0, 1, 1}).scaled(-1));
  EXPECT_QEQ(resolved(2, 2, beta_first, p, d_exc),
             weyl(e7, {0, 0, 0, 0, 1}).scaled(-1));
  EXPECT_QEQ(resolved(3, 0, beta_first, p, d_exc),
             weyl(e7, {0, 1}).scaled(-1));
  EXPECT_QEQ(resolved(3, 1, beta_first, p, d_exc),
             weyl(e7, {1}).scaled(-1));
  EXPECT_QEQ(resolved(4, 0, beta_first, p, d_exc), c(-1));
}

// Direction-independent singular cells of the beta channel at the
// exceptional-line points; checked through random regular directions.
TEST_F(lr, exceptional_beta_channel) {
  RatRng rng(11);
  auto analyzed = [&rng](long k, long n, const Perm3& pm, const VogelPoint& p) {
    LRResult r = lr_analyze(qdim_xkn(k, n).permuted(pm), p, 3, rng);
    EXPECT_TRUE(r.direction_independent) << k << "," << n;
    return r.value;
  };
  RootSystem g2 = build_root_system({Family::G, 2});
  VogelPoint pG2 = point_G2();
  EXPECT_QEQ(analyzed(1, 1, beta_first, pG2), weyl(g2, {1, 1}));
  EXPECT_QEQ(analyzed(1, 2, beta_first, pG2), c(0));

  RootSystem f4 = build_root_system({Family::F, 4});
  VogelPoint pF4 = point_F4();
  EXPECT_QEQ(analyzed(1, 1, beta_first, pF4), weyl(f4, {0, 0, 1, 1}));
  EXPECT_QEQ(analyzed(1, 2, beta_first, pF4), weyl(f4, {1, 0, 0, 1}));
  EXPECT_QEQ(analyzed(2, 0, beta_first, pF4), weyl(f4, {0, 0, 0, 3}));

  RootSystem e6 = build_root_system({Family::E, 6});
  VogelPoint pE6 = point_E6();
  EXPECT_QEQ(analyzed(1, 1, beta_first, pE6),
             weyl(e6, {1, 1}) + weyl(e6, {0, 0, 0, 1, 1}));
  EXPECT_QEQ(analyzed(1, 2, beta_first, pE6), weyl(e6, {0, 0, 1}));
  EXPECT_QEQ(analyzed(2, 0, beta_first, pE6),
             weyl(e6, {3}) + weyl(e6, {0, 0, 0, 0, 3}));
  EXPECT_QEQ(analyzed(2, 1, beta_first, pE6), weyl(e6, {0, 0, 1}).scaled(-1));
  EXPECT_QEQ(analyzed(2, 2, beta_first, pE6),
             weyl(e6, {0, 0, 0, 0, 0, 1}).scaled(-1));
  EXPECT_QEQ(analyzed(3, 0, beta_first, pE6),
             weyl(e6, {1, 0, 0, 0, 1}).scaled(-1));
  EXPECT_QEQ(analyzed(1, 4, beta_first, pE6), c(-1));

  RootSystem e7 = build_root_system({Family::E, 7});
  EXPECT_QEQ(analyzed(1, 1, beta_first, point_E7()),
             weyl(e7, {0, 0, 0, 0, 0, 1, 1}));

  RootSystem e8 = build_root_system({Family::E, 8});
  VogelPoint pE8 = point_E8();
  QRational x2e8 = weyl(e8, {0, 0, 0, 0, 0, 1});
  EXPECT_QEQ(analyzed(1, 1, beta_first, pE8), weyl(e8, {0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_QEQ(analyzed(1, 2, beta_first, pE8),
             weyl(e8, {0, 0, 0, 0, 0, 0, 0, 1}).scaled(-1));
  EXPECT_QEQ(analyzed(1, 3, beta_first, pE8), x2e8.scaled(-1));
  EXPECT_QEQ(analyzed(2, 2, beta_first, pE8), x2e8);
  EXPECT_QEQ(analyzed(2, 3, beta_first, pE8), weyl(e8, {0, 0, 0, 0, 0, 0, 1}));
  EXPECT_QEQ(analyzed(3, 0, beta_first, pE8), weyl(e8, {0, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_QEQ(analyzed(3, 1, beta_first, pE8), weyl(e8, {1}));
  EXPECT_QEQ(analyzed(1, 5, beta_first, pE8), c(1));
}

TEST_F(lr, exceptional_gamma_channel) {
  RatRng rng(11);
  auto analyzed = [&rng](long k, long n, const Perm3& pm, const VogelPoint& p) {
    LRResult r = lr_analyze(qdim_xkn(k, n).permuted(pm), p, 3, rng);
    EXPECT_TRUE(r.direction_independent) << k << "," << n;
    return r.value;
  };
  RootSystem g2 = build_root_system({Family::G, 2});
  VogelPoint pG2 = point_G2();
  QRational x2g2 = weyl(g2, {3});
  EXPECT_QEQ(analyzed(1, 0, gamma_first, pG2), x2g2);
  EXPECT_QEQ(analyzed(1, 1, gamma_first, pG2), x2g2.scaled(-1));
  EXPECT_QEQ(analyzed(1, 3, gamma_first, pG2), c(1));
  EXPECT_QEQ(analyzed(2, 0, gamma_first, pG2), x2g2);
  EXPECT_QEQ(analyzed(2, 1, gamma_first, pG2), weyl(g2, {0, 1}));

  RootSystem f4 = build_root_system({Family::F, 4});
  EXPECT_QEQ(analyzed(1, 1, gamma_first, point_F4()),
             weyl(f4, {0, 1}).scaled(-1));
  EXPECT_QEQ(analyzed(2, 1, gamma_first, point_F4()), weyl(f4, {1}));

  RootSystem e6 = build_root_system({Family::E, 6});
  EXPECT_QEQ(analyzed(1, 1, gamma_first, point_E6()),
             weyl(e6, {0, 0, 1}).scaled(-1));
  EXPECT_QEQ(analyzed(2, 1, gamma_first, point_E6()),
             weyl(e6, {0, 0, 0, 0, 0, 1}));

  RootSystem e7 = build_root_system({Family::E, 7});
  QRational x2e7 = weyl(e7, {0, 1});
  EXPECT_QEQ(analyzed(1, 1, gamma_first, point_E7()), x2e7.scaled(-1));
  EXPECT_QEQ(analyzed(2, 0, gamma_first, point_E7()), x2e7);
  EXPECT_QEQ(analyzed(2, 1, gamma_first, point_E7()), weyl(e7, {1}));

  RootSystem e8 = build_root_system({Family::E, 8});
  EXPECT_QEQ(analyzed(1, 1, gamma_first, point_E8()),
             weyl(e8, {0, 0, 0, 0, 0, 1}).scaled(-1));
  EXPECT_QEQ(analyzed(1, 3, gamma_first, point_E8()), c(1));
  EXPECT_QEQ(analyzed(2, 1, gamma_first, point_E8()),
             weyl(e8, {0, 0, 0, 0, 0, 0, 1}));
}

TEST_F(lr, sweep_vogel_points_never_fail) {
  auto cells = lr_sweep("vogel", 2, 2);
  EXPECT_EQ(cells.size(), 648u);  // 12 points x 9 (k,n) x 6 perms
  for (const auto& cell : cells)
    EXPECT_NE(cell.cls, LRClass::NotResolvable)
        << cell.point_name << " k=" << cell.k << " n=" << cell.n << " "
        << cell.perm;
}

TEST_F(lr, sweep_isolated_points) {
  std::map<std::string, std::array<long, 3>> per;
  for (const auto& cell : lr_sweep("isolated", 2, 2))
    per[cell.point_name][static_cast<int>(cell.cls)] += 1;
  // E6 and E7 have LR cells; the rest stay regular throughout
  const std::map<std::string, std::array<long, 3>> expect = {
      {"E8", {54, 0, 0}},  {"E7.5", {54, 0, 0}}, {"X1", {54, 0, 0}},
      {"E7", {50, 4, 0}},  {"X2", {54, 0, 0}},   {"E6", {44, 10, 0}},
      {"F4", {54, 0, 0}},  {"G2", {54, 0, 0}}};
  EXPECT_EQ(per, expect);
}

TEST_F(lr, sweep_y_points) {
  std::map<std::string, std::array<long, 3>> per;
  for (const auto& cell : lr_sweep("Y", 2, 2))
    per[cell.point_name][static_cast<int>(cell.cls)] += 1;
  std::set<std::string> fully_regular;
  long with_not = 0;
  for (const auto& [name, v] : per) {
    if (v[1] == 0 && v[2] == 0) fully_regular.insert(name);
    if (v[2] > 0) ++with_not;
  }
  EXPECT_TRUE(fully_regular.count("Y2"));
  EXPECT_TRUE(fully_regular.count("Y6"));
  EXPECT_TRUE(fully_regular.count("Y32"));
  EXPECT_EQ(fully_regular.size(), 18u);
  EXPECT_EQ(with_not, 27);
}

TEST_F(lr, sweep_pointset_names) {
  EXPECT_EQ(sweep_pointset("vogel").size(), 12u);
  EXPECT_EQ(sweep_pointset("isolated").size(), 8u);
  EXPECT_EQ(sweep_pointset("Y").size(), 48u);
  EXPECT_THROW(sweep_pointset("nope"), std::invalid_argument);
  EXPECT_EQ(all_perms().size(), 6u);
}

#undef EXPECT_QEQ
