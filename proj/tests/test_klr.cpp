#include <gtest/gtest.h>

#include "oracle.hpp"
#include "swd/klr/relations.hpp"
#include "swd/klr/ses.hpp"

using namespace swd;

namespace {
KLRParams a2() { return klr_params_from_arrows({{0, 1}, {0, 0}}); }
KLRParams a3() { return klr_params_from_arrows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}); }
KLRParams two_points() { return klr_params_from_arrows({{0, 0}, {0, 0}}); }

std::map<int, int> counts(const LaurentQ& l) {
  std::map<int, int> m;
  for (const auto& [e, c] : l.terms()) m[e] = static_cast<int>(c.get_num().get_si());
  return m;
}

PolyElem one(const PolyRep& R, const Seq& nu) { return R.basis(nu, Exponent(nu.size(), 0)); }
}  // namespace

TEST(PolyRep, StraighteningOnEqualColors) {
  const PolyRep R(a2(), 2);
  const Seq nu{0, 0};
  const PolyElem lhs = R.tau(0, R.x(0, one(R, nu)));
  const PolyElem rhs = R.x(1, R.tau(0, one(R, nu)));
  const PolyElem diff = lhs - rhs;
  ASSERT_EQ(diff.size(), 1u);
  EXPECT_EQ(diff.at(nu), Poly::monomial({0, 0}, Rat(-1)));
}

TEST(PolyRep, TauKillsSymmetricInputOnEqualColors) {
  const PolyRep R(a2(), 2);
  EXPECT_TRUE(R.tau(0, one(R, {1, 1})).empty());
  const Poly sym = Poly::variable(2, 0) * Poly::variable(2, 1) + Poly::variable(2, 0) + Poly::variable(2, 1);
  EXPECT_TRUE(R.tau(0, R.times(sym, one(R, {0, 0}))).empty());
}

TEST(PolyRep, TauSquaredIsQ) {
  const KLRParams p = a2();
  const PolyRep R(p, 2);
  for (const Seq& nu : {Seq{0, 1}, Seq{1, 0}}) {
    const PolyElem v = R.basis(nu, {2, 1});
    const PolyElem expect = R.times(p.Q(nu[0], nu[1], 2, 0, 1), v);
    EXPECT_TRUE((R.tau(0, R.tau(0, v)) - expect).empty()) << seq_string(nu);
  }
}

TEST(PolyRep, GeneratorOperatorsAreHomogeneous) {
  const KLRAlgebraSpec spec{a2(), 2};
  const auto op = polyrep_generator(spec, Generator{GenKind::tau, 0, {}}, 4);
  const PolyRep R(spec.params, 2);
  for (const auto& [key, out] : op.action) {
    const auto [homog, deg] = R.homogeneous_degree(out);
    EXPECT_TRUE(homog);
    if (!out.empty()) EXPECT_EQ(deg, R.degree(key.first, key.second) + R.tau_degree(0, key.first));
  }
}

TEST(Relations, AllPassForA2) {
  for (int n = 1; n <= 2; ++n) {
    const KLRReport r = verify_klr_relations(a2(), n, 6);
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GT(r.checked, 0);
  }
}

TEST(Relations, AllPassForA3AtThreeStrands) {
  const KLRReport r = verify_klr_relations(a3(), 3, 6);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Relations, ZeroScalarBreaksTauSquared) {
  KLRParams p = a2();
  p.scale[{0, 1}] = Rat(0);
  p.scale[{1, 0}] = Rat(0);
  const KLRReport r = verify_klr_relations(p, 2, 6);
  ASSERT_FALSE(r.ok());
  bool tau2 = false;
  for (const auto& f : r.failures) tau2 = tau2 || f.find("tau") != std::string::npos;
  EXPECT_TRUE(tau2);
}

TEST(Relations, BraidCorrectionOnlyWhenEndsAgree) {
  const PolyRep R(a3(), 3);
  auto braid_defect = [&](const Seq& nu) {
    const PolyElem v = R.basis(nu, {1, 0, 2});
    return R.tau_word({1, 0, 1}, v) - R.tau_word({0, 1, 0}, v);
  };
  EXPECT_TRUE(braid_defect({0, 1, 2}).empty());
  EXPECT_TRUE(braid_defect({1, 1, 1}).empty());
  const Seq nu{0, 1, 0};
  const PolyElem defect = braid_defect(nu);
  ASSERT_FALSE(defect.empty());
  const PolyElem expect = R.times(braid_correction(a3(), 3, 0, 1, 0), R.basis(nu, {1, 0, 2}));
  EXPECT_TRUE((defect - expect).empty());
}

TEST(GradedDim, SingleVertex) {
  const LaurentQ g = graded_dim({klr_params_from_arrows({{0}}), 1}, {0}, {0}, 6);
  EXPECT_EQ(g.to_string(), "q^6 + q^4 + q^2 + 1");
}

TEST(GradedDim, LowestTermsOfSwaps) {
  EXPECT_EQ(graded_dim({two_points(), 2}, {0, 1}, {1, 0}, 6).min_degree(), 0);
  EXPECT_EQ(graded_dim({a2(), 2}, {0, 1}, {1, 0}, 6).min_degree(), 1);
  EXPECT_EQ(graded_dim({a2(), 2}, {0, 0}, {0, 0}, 4).to_string(), "7*q^4 + 5*q^2 + 3 + q^-2");
}

TEST(GradedDim, DifferentBlocksRejected) {
  EXPECT_THROW(graded_dim({a2(), 2}, {0, 0}, {0, 1}, 4), std::invalid_argument);
}

TEST(GradedDim, MatchesOracles) {
  const KLRParams p = a3();
  const KLRAlgebraSpec spec{p, 3};
  for (const Seq& nu : {Seq{0, 1, 0}, Seq{0, 1, 2}, Seq{1, 1, 0}})
    for (const auto& mu : spec.sequences()) {
      if (block_of(nu, 3) != block_of(mu, 3)) continue;
      const auto got = counts(graded_dim(spec, nu, mu, 6));
      EXPECT_EQ(got, oracle::graded_dim(p.d, nu, mu, 6)) << seq_string(nu) << seq_string(mu);
      EXPECT_EQ(got, oracle::pbw_count(p.d, nu, mu, 6)) << seq_string(nu) << seq_string(mu);
    }
}

TEST(OneDim, AcceptsAndRejects) {
  EXPECT_TRUE(check_klr_module(one_dim_module(a2(), {0, 1})).ok());
  EXPECT_TRUE(check_klr_module(one_dim_module(a2(), {1, 0})).ok());
  EXPECT_THROW(one_dim_module(a2(), {0, 0}), std::invalid_argument);
  EXPECT_THROW(one_dim_module(two_points(), {0, 1}), std::invalid_argument);
}

TEST(Convolution, DimensionLaw) {
  const KLRParams p = a2();
  const FDModule L0 = one_dim_module(p, {0}), L1 = one_dim_module(p, {1}), L01 = one_dim_module(p, {0, 1});
  EXPECT_EQ(convolution(L0, L1).dim(), 2);
  const FDModule M = convolution(L0, L1);
  EXPECT_EQ(convolution(M, L0).dim(), 3 * 2);
  EXPECT_EQ(convolution(L01, M).dim(), 6 * 2);
  EXPECT_EQ(convolution(L0, L01).dim(), 3);
}

TEST(Convolution, CharacterOfAdjacentPair) {
  const KLRParams p = a2();
  const auto ch = graded_character(convolution(one_dim_module(p, {0}), one_dim_module(p, {1})));
  ASSERT_EQ(ch.size(), 2u);
  EXPECT_EQ(ch.at({0, 1}), LaurentQ::monomial(Rat(1), 0));
  EXPECT_EQ(ch.at({1, 0}), LaurentQ::monomial(Rat(1), 1));
}

TEST(Convolution, GradeShiftCommutes) {
  const KLRParams p = a2();
  const FDModule L0 = one_dim_module(p, {0}), L1 = one_dim_module(p, {1});
  EXPECT_EQ(graded_character(convolution(grade_shift(L0, 1), L1)), graded_character(grade_shift(convolution(L0, L1), 1)));
}

TEST(Character, DeltaAndAdditivity) {
  const KLRParams p = a2();
  const FDModule L = one_dim_module(p, {0, 1});
  const auto ch = graded_character(L);
  ASSERT_EQ(ch.size(), 1u);
  EXPECT_EQ(ch.at({0, 1}), LaurentQ::monomial(Rat(1), 0));
  const FDModule M = convolution(one_dim_module(p, {0}), one_dim_module(p, {1}));
  auto sum = graded_character(M);
  for (const auto& [nu, c] : ch) sum[nu] = sum[nu] + c;
  EXPECT_EQ(graded_character(direct_sum(M, L)), sum);
}

TEST(SES, AdjacentPair) {
  const SESWitness w = build_ses_adjacent(a2(), 0, 1);
  EXPECT_EQ(w.sub.dim(), 1);
  EXPECT_EQ(w.quo.dim(), 1);
  EXPECT_TRUE(verify_ses(w).ok());
  EXPECT_EQ(w.quo.idem.front(), (Seq{0, 1}));
}

TEST(SES, Split) {
  const KLRParams p = a2();
  const SESWitness w = build_ses_split(one_dim_module(p, {0, 1}), convolution(one_dim_module(p, {0}), one_dim_module(p, {1})));
  EXPECT_TRUE(verify_ses(w).ok());
}

TEST(SES, NonIntertwinerRejected) {
  SESWitness w = build_ses_adjacent(a2(), 0, 1);
  w.surj = Matrix<Qq>(w.quo.dim(), w.mid.dim());
  for (int b = 0; b < w.mid.dim(); ++b) w.surj.set(0, b, Qq(1));
  const SESReport r = verify_ses(w);
  EXPECT_FALSE(r.surj_hom);
  EXPECT_FALSE(r.ok());
  EXPECT_THROW(build_ses_adjacent(two_points(), 0, 1), std::invalid_argument);
}
