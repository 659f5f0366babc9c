#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "uvd/rootsys.hpp"

using namespace uvd;

struct rootsys : ::testing::Test {
  static RootSystem rs(Family f, int r) { return build_root_system({f, r}); }

  // highest root = positive root maximizing (rho, .)
  static Vec highest_root(const RootSystem& r) {
    const Vec* best = &r.positive.front();
    for (const auto& mu : r.positive)
      if (r.ip(r.rho, mu) > r.ip(r.rho, *best)) best = &mu;
    return *best;
  }

};

#define CHECK_DIMS(F, R, DIM, NPOS, HD, GRAM)               \
  {                                                         \
    RootSystem r = rs(Family::F, R);                        \
    EXPECT_EQ(r.dim(), DIM) << #F << R;                     \
    EXPECT_EQ((long)r.positive.size(), NPOS) << #F << R;    \
    EXPECT_EQ(r.h_dual, HD) << #F << R;                     \
    EXPECT_EQ(coroot_gram_det(r), GRAM) << #F << R;         \
  }

TEST_F(rootsys, classical_families) {
  CHECK_DIMS(A, 1, 3, 1, 2, 2);
  CHECK_DIMS(A, 2, 8, 3, 3, 3);
  CHECK_DIMS(A, 5, 35, 15, 6, 6);
  CHECK_DIMS(A, 8, 80, 36, 9, 9);
  CHECK_DIMS(B, 2, 10, 4, 3, 4);
  CHECK_DIMS(B, 3, 21, 9, 5, 4);
  CHECK_DIMS(B, 6, 78, 36, 11, 4);
  CHECK_DIMS(C, 3, 21, 9, 4, 8);
  CHECK_DIMS(C, 6, 78, 36, 7, 64);
  CHECK_DIMS(D, 4, 28, 12, 6, 4);
  CHECK_DIMS(D, 7, 91, 42, 12, 4);
}

TEST_F(rootsys, exceptional_families) {
  CHECK_DIMS(G, 2, 14, 6, 4, 3);
  CHECK_DIMS(F, 4, 52, 24, 9, 4);
  CHECK_DIMS(E, 6, 78, 36, 12, 3);
  CHECK_DIMS(E, 7, 133, 63, 18, 2);
  CHECK_DIMS(E, 8, 248, 120, 30, 1);
}

#undef CHECK_DIMS

TEST_F(rootsys, invalid_ranks_throw) {
  EXPECT_THROW(rs(Family::B, 1), std::invalid_argument);
  EXPECT_THROW(rs(Family::D, 2), std::invalid_argument);
  EXPECT_THROW(rs(Family::E, 5), std::invalid_argument);
  EXPECT_THROW(rs(Family::E, 9), std::invalid_argument);
  EXPECT_THROW(rs(Family::G, 3), std::invalid_argument);
  EXPECT_THROW(rs(Family::F, 5), std::invalid_argument);
}

TEST_F(rootsys, weyl_vector_and_weights) {
  for (AlgebraId id : std::vector<AlgebraId>{{Family::A, 4},
                                             {Family::B, 4},
                                             {Family::C, 4},
                                             {Family::D, 5},
                                             {Family::G, 2},
                                             {Family::F, 4},
                                             {Family::E, 7}}) {
    RootSystem r = build_root_system(id);
    for (int i = 0; i < r.rank; ++i) {
      EXPECT_EQ(r.ip(r.rho, r.coroot(r.simple[i])), 1) << id.name();
      for (int j = 0; j < r.rank; ++j)
        EXPECT_EQ(r.ip(r.omega[i], r.coroot(r.simple[j])), i == j ? 1 : 0)
            << id.name();
    }
  }
}

TEST_F(rootsys, adjoint_casimir_is_twice_dual_coxeter) {
  // minimal normalization long^2 = 2: (theta, theta + 2 rho) = 2 h_dual
  for (AlgebraId id : std::vector<AlgebraId>{{Family::A, 3},
                                             {Family::B, 5},
                                             {Family::C, 4},
                                             {Family::D, 6},
                                             {Family::G, 2},
                                             {Family::F, 4},
                                             {Family::E, 6},
                                             {Family::E, 8}}) {
    RootSystem r = build_root_system(id);
    EXPECT_EQ(r.casimir(highest_root(r)), 2 * r.h_dual) << id.name();
  }
}

TEST_F(rootsys, adjoint_qdim_recovers_dimension) {
  for (AlgebraId id : std::vector<AlgebraId>{{Family::A, 2},
                                             {Family::B, 3},
                                             {Family::C, 3},
                                             {Family::D, 4},
                                             {Family::G, 2},
                                             {Family::F, 4},
                                             {Family::E, 6},
                                             {Family::E, 7},
                                             {Family::E, 8}}) {
    RootSystem r = build_root_system(id);
    QRational qd = weyl_qdim(r, highest_root(r));
    EXPECT_EQ(*qd.limit_q_to_one(), r.dim()) << id.name();
    EXPECT_TRUE(qd.is_palindromic()) << id.name();
  }
}

TEST_F(rootsys, fundamental_dimensions_pin_the_numeration) {
  // E-series nodes: 1 = short chain end, 2..rank-1 continue the long chain,
  // rank = branch node.
  RootSystem e6 = rs(Family::E, 6);
  const long e6dims[6] = {27, 351, 2925, 351, 27, 78};
  for (int i = 0; i < 6; ++i) {
    std::vector<long> c(6, 0);
    c[i] = 1;
    EXPECT_EQ(*weyl_qdim(e6, e6.weight_l(c)).limit_q_to_one(), e6dims[i])
        << "e6 omega" << i + 1;
  }
  RootSystem e7 = rs(Family::E, 7);
  const long e7dims[7] = {133, 8645, 365750, 27664, 1539, 56, 912};
  for (int i = 0; i < 7; ++i) {
    std::vector<long> c(7, 0);
    c[i] = 1;
    EXPECT_EQ(*weyl_qdim(e7, e7.weight_l(c)).limit_q_to_one(), e7dims[i])
        << "e7 omega" << i + 1;
  }
  RootSystem e8 = rs(Family::E, 8);
  const long e8dims[8] = {3875,      6696000, 6899079264, 146325270,
                          2450240,   30380,   248,        147250};
  for (int i = 0; i < 8; ++i) {
    std::vector<long> c(8, 0);
    c[i] = 1;
    EXPECT_EQ(*weyl_qdim(e8, e8.weight_l(c)).limit_q_to_one(), e8dims[i])
        << "e8 omega" << i + 1;
  }
}

TEST_F(rootsys, x2_dimension_pins) {
  RootSystem g2 = rs(Family::G, 2);
  EXPECT_EQ(*weyl_qdim(g2, g2.weight_l({3})).limit_q_to_one(), 77);
  RootSystem f4 = rs(Family::F, 4);
  EXPECT_EQ(*weyl_qdim(f4, f4.weight_l({0, 1})).limit_q_to_one(), 1274);
  RootSystem d4 = rs(Family::D, 4);
  EXPECT_EQ(*weyl_qdim(d4, d4.weight_l({1, 0, 1, 1})).limit_q_to_one(), 350);
  RootSystem a3 = rs(Family::A, 3);
  EXPECT_EQ(*weyl_qdim(a3, a3.weight_l({2, 1, 0})).limit_q_to_one(), 45);
  EXPECT_EQ(*weyl_qdim(a3, a3.weight_l({0, 1, 2})).limit_q_to_one(), 45);
}

struct rootsys_heights : rootsys {
  // per-s histograms of (rho, mu) over mu > 0 with (lam, mu) = s
  static long total(const std::map<Rat, long>& h) {
    long n = 0;
    for (const auto& [k, v] : h) n += v;
    return n;
  }
};

TEST_F(rootsys_heights, e6_x2_weight) {
  RootSystem e6 = rs(Family::E, 6);
  Vec lam = e6.weight_l({0, 0, 1});
  EXPECT_EQ(total(heights_histogram(e6, lam, 0)), 7);
  std::map<Rat, long> s1, s2, s3;
  const long c1[6] = {1, 3, 5, 5, 3, 1};
  for (int i = 0; i < 6; ++i) s1[i + 1] = c1[i];
  const long c2[5] = {1, 2, 3, 2, 1};
  for (int i = 0; i < 5; ++i) s2[i + 5] = c2[i];
  s3[10] = 1;
  s3[11] = 1;
  EXPECT_EQ(heights_histogram(e6, lam, 1), s1);
  EXPECT_EQ(heights_histogram(e6, lam, 2), s2);
  EXPECT_EQ(heights_histogram(e6, lam, 3), s3);
}

TEST_F(rootsys_heights, e7_x2_weight) {
  RootSystem e7 = rs(Family::E, 7);
  Vec lam = e7.weight_l({0, 1});
  EXPECT_EQ(total(heights_histogram(e7, lam, 0)), 16);
  std::map<Rat, long> s1, s2, s3;
  const long c1[10] = {1, 2, 3, 4, 5, 5, 4, 3, 2, 1};
  for (int i = 0; i < 10; ++i) s1[i + 1] = c1[i];
  const long c2[9] = {1, 1, 2, 2, 3, 2, 2, 1, 1};
  for (int i = 0; i < 9; ++i) s2[i + 7] = c2[i];
  s3[16] = 1;
  s3[17] = 1;
  EXPECT_EQ(heights_histogram(e7, lam, 1), s1);
  EXPECT_EQ(heights_histogram(e7, lam, 2), s2);
  EXPECT_EQ(heights_histogram(e7, lam, 3), s3);
}

TEST_F(rootsys_heights, e8_x2_weight) {
  RootSystem e8 = rs(Family::E, 8);
  Vec lam = e8.weight_l({0, 0, 0, 0, 0, 1});
  EXPECT_EQ(total(heights_histogram(e8, lam, 0)), 37);
  std::map<Rat, long> s1, s2, s3;
  const long c1[18] = {1, 2, 2, 2, 3, 4, 4, 4, 5, 5, 4, 4, 4, 3, 2, 2, 2, 1};
  for (int i = 0; i < 18; ++i) s1[i + 1] = c1[i];
  const long c2[17] = {1, 1, 1, 1, 2, 2, 2, 2, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  for (int i = 0; i < 17; ++i) s2[i + 11] = c2[i];
  s3[28] = 1;
  s3[29] = 1;
  EXPECT_EQ(heights_histogram(e8, lam, 1), s1);
  EXPECT_EQ(heights_histogram(e8, lam, 2), s2);
  EXPECT_EQ(heights_histogram(e8, lam, 3), s3);
  EXPECT_EQ(total(heights_histogram(e8, lam, 0)) + total(s1) + total(s2) +
                total(s3),
            120);
}

TEST_F(rootsys_heights, e7_adjoint_weight) {
  RootSystem e7 = rs(Family::E, 7);
  Vec lam = e7.weight_l({1});
  std::map<Rat, long> s1, s2;
  const long c1[16] = {1, 1, 1, 2, 2, 3, 3, 3, 3, 3, 3, 2, 2, 1, 1, 1};
  for (int i = 0; i < 16; ++i) s1[i + 1] = c1[i];
  s2[17] = 1;  // the highest root itself at height h_dual - 1
  EXPECT_EQ(heights_histogram(e7, lam, 1), s1);
  EXPECT_EQ(heights_histogram(e7, lam, 2), s2);
}

TEST_F(rootsys, vogel_points) {
  auto expect_pt = [](AlgebraId id, Rat a, Rat b, Rat c) {
    VogelPoint p = vogel_point(id);
    EXPECT_EQ(p.al, a) << id.name();
    EXPECT_EQ(p.be, b) << id.name();
    EXPECT_EQ(p.ga, c) << id.name();
    RootSystem r = build_root_system(id);
    EXPECT_EQ(p.t(), r.h_dual) << id.name();  // t = dual Coxeter number
  };
  expect_pt({Family::A, 3}, -2, 2, 4);
  expect_pt({Family::B, 4}, -2, 4, 5);
  expect_pt({Family::C, 3}, -2, 1, 5);
  expect_pt({Family::D, 5}, -2, 4, 6);
  expect_pt({Family::G, 2}, -2, rat(10, 3), rat(8, 3));
  expect_pt({Family::F, 4}, -2, 5, 6);
  expect_pt({Family::E, 6}, -2, 6, 8);
  expect_pt({Family::E, 7}, -2, 8, 12);
  expect_pt({Family::E, 8}, -2, 12, 20);
}

TEST_F(rootsys, normalization_rescales_inner_products) {
  RootSystem two = build_root_system({Family::B, 3});
  RootSystem four = build_root_system({Family::B, 3}, 4);
  EXPECT_EQ(four.long_sq, 4);
  EXPECT_EQ(four.dim(), two.dim());
  EXPECT_EQ(four.h_dual, two.h_dual);
  EXPECT_EQ(four.casimir(highest_root(four)),
            2 * two.casimir(highest_root(two)));
}

TEST_F(rootsys, json_snapshot_shape) {
  auto j = root_system_json(build_root_system({Family::G, 2}));
  EXPECT_EQ(j["algebra"], "G2");
  EXPECT_EQ(j["dim"], 14);
  EXPECT_EQ(j["n_positive_roots"], 6);
  EXPECT_EQ(j["coroot_gram_det"], "3");
  EXPECT_EQ(j["simple_roots"].size(), 2u);
  EXPECT_EQ(j["fundamental_weights"].size(), 2u);
}
