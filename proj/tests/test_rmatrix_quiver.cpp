#include <gtest/gtest.h>

#include "swd/quiver/quiver.hpp"

using namespace swd;

namespace {
QMonomial nq(int m) { return QMonomial::neg_q_pow(m); }
Qqz z() { return Qqz::var(); }

std::vector<int> dims(const std::vector<Summand>& s) {
  std::vector<int> d;
  for (const auto& x : s) d.push_back(x.dim());
  std::sort(d.begin(), d.end());
  return d;
}

Matrix<Qqz> lifted(const Matrix<Qq>& m) {
  return m.map<Qqz>([](const Qq& v) { return Qqz(v); });
}

const Summand& with_highest(const std::vector<Summand>& s, const WeightVec& w) {
  auto it = std::find_if(s.begin(), s.end(), [&](const Summand& x) { return x.highest == w; });
  if (it == s.end()) throw std::out_of_range("no summand " + weight_string(w));
  return *it;
}
}  // namespace

TEST(Decompose, SlTwo) { EXPECT_EQ(dims(sl_decompose(1, 1, 2)), (std::vector<int>{1, 3})); }

TEST(Decompose, SymmetricAndExteriorSquare) {
  for (int N = 2; N <= 4; ++N) {
    const auto s = sl_decompose(1, 1, N);
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(with_highest(s, finite_weight_sum(N, 1, 1)).dim(), N * (N + 1) / 2);
    EXPECT_EQ(with_highest(s, finite_weight_sum(N, 2, 0)).dim(), N * (N - 1) / 2);
  }
}

TEST(Decompose, SummandCount) {
  EXPECT_EQ(sl_decompose(1, 2, 3).size(), 2u);
  EXPECT_EQ(sl_decompose(2, 2, 4).size(), 3u);
  EXPECT_EQ(dims(sl_decompose(1, 2, 3)), (std::vector<int>{1, 8}));
  int total = 0;
  for (int d : dims(sl_decompose(2, 2, 4))) total += d;
  EXPECT_EQ(total, 36);
}

TEST(RMatrix, FundamentalSquare) {
  for (int N = 2; N <= 3; ++N) {
    const auto s = sl_decompose(1, 1, N);
    const Qqz p = Qqz(nq(2).value());
    const Matrix<Qqz> expect = lifted(with_highest(s, finite_weight_sum(N, 1, 1)).projector) +
                               ((Qqz(1) - p * z()) / (z() - p)) * lifted(with_highest(s, finite_weight_sum(N, 2, 0)).projector);
    EXPECT_EQ(rmatrix_solver(1, 1, N).dense, expect);
  }
}

TEST(RMatrix, FixesDominantPair) {
  const auto R = rmatrix_solver(1, 2, 3).dense;
  EXPECT_EQ(R.at(0, 0), Qqz(1));
  for (int r = 1; r < R.rows(); ++r) EXPECT_TRUE(R.at(r, 0).is_zero());
}

TEST(RMatrix, SpectralAgreesWithSolver) {
  for (auto [k, l, N] : {std::tuple{1, 1, 2}, {1, 2, 3}, {2, 2, 4}})
    EXPECT_EQ(rmatrix_spectral(k, l, N).dense, rmatrix_solver(k, l, N).dense) << k << l << N;
}

TEST(Denominator, SmallRanks) {
  for (int N = 2; N <= 4; ++N) EXPECT_EQ(denominator(1, 1, N).factored(), "(z - (-q)^2)");
  for (int N = 3; N <= 4; ++N) EXPECT_EQ(denominator(1, 2, N).factored(), "(z - (-q)^3)");
  EXPECT_EQ(denominator(2, 2, 4).factored(), "(z - (-q)^2)*(z - (-q)^4)");
}

TEST(Denominator, ShortRankTruncatesPoles) {
  EXPECT_EQ(denominator(2, 2, 3).factored(), "(z - (-q)^2)");
  EXPECT_EQ(denominator(2, 2, 3).poly, pole_product(2, 2, 1).monic());
}

TEST(Unitarity, HoldsAndDetectsPerturbation) {
  EXPECT_TRUE(verify_unitarity(1, 1, 2));
  EXPECT_TRUE(verify_unitarity(1, 2, 3));
  const auto S = rmatrix_spectral(1, 1, 2);
  Matrix<Qqz> bent(S.dense.rows(), S.dense.cols());
  for (std::size_t i = 0; i < S.terms.size(); ++i) {
    const Qqz c = i == 1 ? S.terms[i].scalar * Qqz(2) : S.terms[i].scalar;
    bent = bent + c * lifted(S.terms[i].map);
  }
  EXPECT_FALSE(unitarity_holds(bent, bent));
  EXPECT_TRUE(unitarity_holds(S.dense, S.dense));
}

TEST(YangBaxter, Holds) {
  EXPECT_TRUE(verify_ybe(1, 1, 1, 2));
  EXPECT_TRUE(verify_ybe(1, 2, 1, 3));
  EXPECT_TRUE(verify_ybe(1, 1, 1, 2, RMethod::spectral));
}

TEST(YangBaxter, FailsForWrongScalar) {
  const auto R = rmatrix_solver(1, 1, 2).dense;
  const auto s = sl_decompose(1, 1, 2);
  const Matrix<Qqz> wrong = lifted(with_highest(s, finite_weight_sum(2, 1, 1)).projector) +
                            ((Qqz(1) - Qqz(q_pow(4)) * z()) / (z() - Qqz(q_pow(4)))) *
                                lifted(with_highest(s, finite_weight_sum(2, 2, 0)).projector);
  auto [l1, r1] = ybe_sides(R, R, R, 2, 2, 2);
  EXPECT_EQ(l1, r1);
  auto [l2, r2] = ybe_sides(wrong, wrong, wrong, 2, 2, 2);
  EXPECT_NE(l2, r2);
}

TEST(Quiver, SingleVertex) {
  const Quiver Q = build_quiver({{1, nq(0)}}, 2);
  EXPECT_EQ(Q.size(), 1);
  EXPECT_FALSE(Q.has_loop());
}

TEST(Quiver, OneArrow) {
  const Quiver Q = build_quiver({{1, nq(0)}, {1, nq(2)}}, 2);
  EXPECT_EQ(Q.d[0][1] + Q.d[1][0], 1);
  EXPECT_EQ(Q.d[0][1], 1);
}

TEST(Quiver, NoArrow) {
  const Quiver Q = build_quiver({{1, nq(0)}, {1, nq(4)}}, 2);
  EXPECT_EQ(Q.d[0][1] + Q.d[1][0], 0);
}

TEST(Quiver, RejectsRepeatedIndex) {
  EXPECT_THROW(build_quiver({{1, nq(0)}, {1, nq(0)}}, 2), std::invalid_argument);
}

TEST(Quiver, ConstantAnchorsNeverConnect) {
  const Quiver Q = build_quiver({{1, nq(0)}, {1, QMonomial{Rat(3), 2}}}, 2);
  EXPECT_EQ(Q.d[0][1] + Q.d[1][0], 0);
  EXPECT_FALSE(Q.log.empty());
}

TEST(Classify, PathStarAndMultiEdge) {
  const auto a2 = klr_params_from_arrows({{0, 1}, {0, 0}});
  EXPECT_EQ(classify(a2).tag(), "A_2");
  EXPECT_EQ(a2.cartan(0, 0), 2);
  EXPECT_EQ(a2.cartan(0, 1), -1);
  EXPECT_EQ(a2.cartan(1, 0), -1);
  const auto d4 = klr_params_from_arrows({{0, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  EXPECT_EQ(classify(d4).tag(), "D_4");
  const auto multi = klr_params_from_arrows({{0, 2}, {0, 0}});
  EXPECT_EQ(classify(multi).tag(), "other");
  EXPECT_FALSE(classify(multi).ade);
  const auto e6 = klr_params_from_arrows({{0, 1, 0, 0, 0, 0},
                                          {0, 0, 1, 0, 0, 0},
                                          {0, 0, 0, 1, 0, 1},
                                          {0, 0, 0, 0, 1, 0},
                                          {0, 0, 0, 0, 0, 0},
                                          {0, 0, 0, 0, 0, 0}});
  EXPECT_EQ(classify(e6).tag(), "E_6");
}

TEST(Classify, BuiltFromIndexSets) {
  const Quiver Q = build_quiver({{1, nq(0)}, {1, nq(2)}, {1, nq(4)}}, 2);
  EXPECT_EQ(classify(klr_params(Q)).tag(), "A_3");
  const Quiver M = build_quiver({{1, nq(0)}, {2, nq(3)}, {1, nq(2)}}, 3);
  EXPECT_EQ(classify(klr_params(M)).tag(), "A_3");
  EXPECT_FALSE(M.has_two_cycle());
}
