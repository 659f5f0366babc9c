#include <gtest/gtest.h>

#include <utility>
#include <vector>

#include "uvd/rootsys.hpp"
#include "uvd/universal.hpp"

using namespace uvd;

struct universal : ::testing::Test {
  // generic plane points off every line cut out by the formula factors
  static VogelPoint g1() { return {1, rat(22, 7), rat(113, 13)}; }
  static VogelPoint g2() { return {rat(-5, 11), rat(17, 6), rat(23, 5)}; }

  static Rat weyl_dim(AlgebraId id, const std::vector<long>& c) {
    RootSystem r = build_root_system(id);
    return *weyl_qdim(r, r.weight_l(c)).limit_q_to_one();
  }
};

TEST_F(universal, adjoint_dimension_at_named_points) {
  for (const auto& np : isolated_points())
    EXPECT_EQ(dim_adjoint(np.p), np.dim) << np.name;
  for (const auto& np : y_points())
    EXPECT_EQ(dim_adjoint(np.p), np.dim) << np.name;
  EXPECT_EQ(dim_adjoint({1, 1, 1}), -125);
  EXPECT_EQ(dim_adjoint({10, 8, 7}), -129);
  EXPECT_EQ(dim_adjoint({1, 6, 14}), -492);
  EXPECT_EQ(isolated_points().size(), 8u);
  EXPECT_EQ(y_points().size(), 48u);  // Y1..Y47 plus the Y6b companion
}

TEST_F(universal, adjoint_dimension_matches_algebra_points) {
  const std::vector<std::pair<AlgebraId, VogelPoint>> samples = {
      {{Family::A, 2}, point_A(2)}, {{Family::B, 3}, point_B(3)},
      {{Family::C, 3}, point_C(3)}, {{Family::D, 5}, point_D(5)},
      {{Family::G, 2}, point_G2()}, {{Family::F, 4}, point_F4()},
      {{Family::E, 6}, point_E6()}, {{Family::E, 7}, point_E7()},
      {{Family::E, 8}, point_E8()}};
  for (const auto& [id, p] : samples) {
    RootSystem r = build_root_system(id);
    EXPECT_EQ(dim_adjoint(p), r.dim()) << id.name();
  }
}

TEST_F(universal, exterior_square_splits_off_x2) {
  // dim Lambda^2 g = dim g + dim X2, identically on the plane
  auto check = [](const VogelPoint& p, const std::string& tag) {
    Rat d = dim_adjoint(p);
    EXPECT_EQ(d * (d - 1) / 2, d + dim_x2(p)) << tag;
  };
  for (const auto& np : isolated_points()) check(np.p, np.name);
  for (const auto& np : y_points()) check(np.p, np.name);
  check(g1(), "generic1");
  check(g2(), "generic2");
}

TEST_F(universal, x2_dimension_at_isolated_points) {
  const std::vector<std::pair<std::string, long>> expect = {
      {"E8", 30380}, {"E7.5", 17765}, {"X1", 11934}, {"E7", 8645},
      {"X2", 4752},  {"E6", 2925},    {"F4", 1274},  {"G2", 77}};
  for (size_t i = 0; i < expect.size(); ++i) {
    const NamedPoint& np = isolated_points()[i];
    EXPECT_EQ(np.name, expect[i].first);
    EXPECT_EQ(dim_x2(np.p), expect[i].second) << np.name;
  }
}

TEST_F(universal, symmetric_square_channels) {
  // dim S^2 g = 1 + sum over channels of dim Y2(channel)
  auto sum_rule = [](const VogelPoint& p, const std::string& tag) {
    Rat d = dim_adjoint(p);
    Rat s = 1;
    for (int c = 0; c < 3; ++c) s += dim_y2_closed(p, c);
    EXPECT_EQ(d * (d + 1) / 2, s) << tag;
  };
  for (auto [name, p] : trace_sample_points()) sum_rule(p, name);
  sum_rule(g1(), "generic1");
  sum_rule(g2(), "generic2");

  auto dims = [](const VogelPoint& p, long a, long b, long c) {
    EXPECT_EQ(dim_y2_closed(p, 0), a);
    EXPECT_EQ(dim_y2_closed(p, 1), b);
    EXPECT_EQ(dim_y2_closed(p, 2), c);
  };
  dims(point_A(2), 27, 0, 8);
  dims(point_B(2), 35, 5, 14);
  dims(point_B(3), 168, 35, 27);
  dims(point_C(3), 126, 90, 14);
  dims(point_D(5), 770, 210, 54);
  dims(point_G2(), 77, 27, 0);  // exceptional line: the ga channel dies
  dims(point_F4(), 1053, 324, 0);
  dims(point_E6(), 2430, 650, 0);
  dims(point_E7(), 7371, 1539, 0);
  dims(point_E8(), 27000, 3875, 0);

  EXPECT_THROW(dim_y2_closed({1, 1, 1}, 0), std::domain_error);
}

TEST_F(universal, casimir_eigenvalues) {
  for (auto [name, p] : trace_sample_points()) {
    EXPECT_EQ(casimir_adjoint(p), 2 * p.t()) << name;
    EXPECT_EQ(casimir_xkn(p, 0, 1), casimir_adjoint(p)) << name;
  }
  VogelPoint a2 = point_A(2);
  EXPECT_EQ(casimir_y2(a2, 0), 16);
  EXPECT_EQ(casimir_y2(a2, 1), 8);
  EXPECT_EQ(casimir_y2(a2, 2), 6);

  // C(k,n) - C(k,0) - C(0,n) = -3 al k n
  for (const VogelPoint& p : {g1(), g2()})
    for (long k = 0; k <= 3; ++k)
      for (long n = 0; n <= 3; ++n)
        EXPECT_EQ(casimir_xkn(p, k, n),
                  casimir_xkn(p, k, 0) + casimir_xkn(p, 0, n) - 3 * p.al * k * n);
}

TEST_F(universal, casimir_matches_weight_eigenvalues) {
  // (lam, lam + 2 rho) of the actual X2^k g^n highest weights
  auto check = [](AlgebraId id, const VogelPoint& p, long k, long n,
                  const std::vector<long>& coeffs) {
    RootSystem r = build_root_system(id);
    EXPECT_EQ(casimir_xkn(p, k, n), r.casimir(r.weight_l(coeffs)))
        << id.name() << " (" << k << "," << n << ")";
  };
  check({Family::A, 4}, point_A(4), 1, 0, {2, 0, 1, 0});
  check({Family::A, 4}, point_A(4), 1, 1, {3, 0, 1, 1});
  check({Family::D, 4}, point_D(4), 1, 0, {1, 0, 1, 1});
  check({Family::D, 4}, point_D(4), 1, 1, {1, 1, 1, 1});
  check({Family::D, 4}, point_D(4), 2, 0, {2, 0, 2, 2});
  check({Family::G, 2}, point_G2(), 1, 0, {3, 0});
  check({Family::G, 2}, point_G2(), 2, 0, {6, 0});
  check({Family::F, 4}, point_F4(), 1, 0, {0, 1});
  check({Family::F, 4}, point_F4(), 1, 1, {1, 1});
  check({Family::E, 6}, point_E6(), 1, 2, {0, 0, 1, 0, 0, 2});
  check({Family::E, 7}, point_E7(), 2, 1, {1, 2});
  check({Family::E, 8}, point_E8(), 1, 1, {0, 0, 0, 0, 0, 1, 1, 0});
}

TEST_F(universal, conformity_grid) {
  // normalized eigenvalues C(k,n) / 2t for (2,0), (1,1), (1,2)
  struct Row {
    VogelPoint p;
    Rat t, c20, c11, c12;
  };
  const std::vector<Row> rows = {
      {point_A(1), 2, 7, rat(9, 2), 8},
      {point_A(2), 3, 6, 4, rat(20, 3)},
      {point_G2(), 4, rat(11, 2), rat(15, 4), 6},
      {point_D(4), 6, 5, rat(7, 2), rat(16, 3)},
      {point_F4(), 9, rat(14, 3), rat(10, 3), rat(44, 9)},
      {point_E6(), 12, rat(9, 2), rat(13, 4), rat(14, 3)},
      {point_E7(), 18, rat(13, 3), rat(19, 6), rat(40, 9)},
      {point_E8(), 30, rat(21, 5), rat(31, 10), rat(64, 15)}};
  for (const Row& r : rows) {
    EXPECT_EQ(r.p.t(), r.t);
    EXPECT_EQ(casimir_xkn_normalized(r.p, 2, 0), r.c20);
    EXPECT_EQ(casimir_xkn_normalized(r.p, 1, 1), r.c11);
    EXPECT_EQ(casimir_xkn_normalized(r.p, 1, 2), r.c12);
  }
}

TEST_F(universal, trace_identity_on_symmetric_square) {
  for (auto [name, p] : trace_sample_points())
    EXPECT_TRUE(deligne_trace_check(p)) << name;
  EXPECT_TRUE(deligne_trace_check(g1()));
  EXPECT_TRUE(deligne_trace_check(g2()));
}

TEST_F(universal, young_casimir_polynomials) {
  // orthogonal/symplectic second Casimirs as {constant, n-coefficient}
  LinPoly so = casimir2_young_so({0, 1, 3}, {0, 1, 2});
  EXPECT_EQ(so.first, -16);
  EXPECT_EQ(so.second, 16);
  LinPoly sp = casimir2_young_sp({0, 1, 2}, {0, 1, 3});
  EXPECT_EQ(sp.first, 16);
  EXPECT_EQ(sp.second, 16);

  for (long k = 1; k <= 3; ++k) {
    LinPoly s = casimir2_young_so({0, 1, 3}, {0, k, 2 * k});
    EXPECT_EQ(s.first, 12 * k * k - 28 * k) << k;
    EXPECT_EQ(s.second, 16 * k) << k;
    LinPoly d = casimir2_young_sp({0, k, 2 * k}, {0, 1, 3});
    EXPECT_EQ(d.first, -12 * k * k + 28 * k) << k;
    EXPECT_EQ(d.second, 16 * k) << k;
  }

  EXPECT_THROW(casimir2_young_so({0, 1}, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(casimir2_young_sp({}, {}), std::invalid_argument);
}

TEST_F(universal, young_casimir_duality) {
  // C_so(2n)(A,B) = -C_sp(-2n)(B,A), so the defect vanishes identically
  RatRng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    size_t sz = static_cast<size_t>(rng.pick(1, 5));
    std::vector<Rat> A(sz), B(sz);
    for (size_t i = 0; i < sz; ++i) {
      A[i] = rng.any();
      B[i] = rng.any();
    }
    LinPoly defect = casimir2_duality_defect(A, B);
    EXPECT_EQ(defect.first, 0) << trial;
    EXPECT_EQ(defect.second, 0) << trial;
  }
}

#define EXPECT_QEQ(a, b) EXPECT_TRUE(qrat_equal((a), (b)))

TEST_F(universal, qdim_families_agree_at_generic_points) {
  for (const VogelPoint& p : {g1(), g2()}) {
    EXPECT_QEQ(qdim_x2k(1).substitute_point(p),
               qdim_x2_k1_threeline().substitute_point(p));
    EXPECT_QEQ(qdim_xkn(2, 0).substitute_point(p),
               qdim_x2k(2).substitute_point(p));
    EXPECT_QEQ(qdim_xkn(0, 1).substitute_point(p),
               qdim_adjoint().substitute_point(p));
    EXPECT_QEQ(qdim_xkn(0, 2).substitute_point(p),
               qdim_z(2, 0).substitute_point(p));
    for (auto [k, n] :
         std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {2, 2}})
      EXPECT_QEQ(qdim_xkn_symmetric(k, n).substitute_point(p),
                 qdim_xkn(k, n).substitute_point(p));
  }
}

TEST_F(universal, aseries_closed_product) {
  // closed sl(N) product vs the universal formula on the A line
  for (long N = 4; N <= 6; ++N) {
    VogelPoint p = point_A(N - 1);
    for (long k = 1; k <= 2; ++k)
      for (long n = 0; n <= 2; ++n)
        EXPECT_QEQ(qdim_xkn_aseries_closed(k, n, N).substitute_point(p),
                   qdim_xkn(k, n).substitute_point(p));
  }
  auto dim = [](long k, long n, long N) {
    return qdim_xkn_aseries_closed(k, n, N).limit_x_to_zero(point_A(N - 1)).value;
  };
  EXPECT_EQ(dim(1, 0, 4), 90);  // both 45-dim components, summed
  EXPECT_EQ(dim(1, 1, 4), 512);
  EXPECT_EQ(dim(1, 0, 5), 252);
  EXPECT_EQ(dim(2, 2, 6), 635040);
}

#undef EXPECT_QEQ

TEST_F(universal, z_family_dimensions) {
  EXPECT_EQ(qdim_z(1, 1).limit_x_to_zero(point_E7()).value, 152152);
  EXPECT_EQ(weyl_dim({Family::E, 7}, {1, 0, 0, 0, 1}), 152152);

  for (long N : {4L, 5L})
    EXPECT_EQ(qdim_z(0, 1).limit_x_to_zero(point_B(N)).value,
              dim_y2_closed(point_B(N), 1))
        << N;
  for (int c = 0; c < 3; ++c)
    EXPECT_EQ(qdim_y2(c, 1).limit_x_to_zero(g1()).value,
              dim_y2_closed(g1(), c))
        << c;

  // removable singularities of the display: a denominator factor vanishes
  EXPECT_THROW(qdim_z(0, 1).substitute_point(point_B(2)), SingularFactorError);
  EXPECT_THROW(qdim_z(0, 1).substitute_point(point_B(3)), SingularFactorError);
  EXPECT_THROW(qdim_z(-1, 0), std::invalid_argument);
  EXPECT_THROW(qdim_y2(3, 1), std::invalid_argument);
}

TEST_F(universal, formula_registry_surface) {
  const auto& reg = formula_registry();
  ASSERT_EQ(reg.size(), 5u);
  EXPECT_EQ(reg[0].name, "adjoint");
  EXPECT_EQ(reg[1].name, "Y2");
  EXPECT_EQ(reg[2].name, "X2k");
  EXPECT_EQ(reg[3].name, "Xkn");
  EXPECT_EQ(reg[4].name, "Zkl");
  for (const auto& e : reg) EXPECT_FALSE(e.description.empty()) << e.name;

  QRational via_reg = formula_by_name("Xkn").make(2, 1).substitute_point(g1());
  EXPECT_TRUE(qrat_equal(via_reg, qdim_xkn(2, 1).substitute_point(g1())));
  EXPECT_THROW(formula_by_name("nope"), std::invalid_argument);
}
