#include <gtest/gtest.h>

#include "swd/affine/hom.hpp"
#include "swd/affine/relations.hpp"
#include "swd/exact/parse.hpp"
#include "swd/exact/truncpoly.hpp"

using namespace swd;

namespace {
using X1 = RatFun<Qq, VarX<1>>;
using X2 = RatFun<X1, VarX<2>>;

Qqz z() { return Qqz::var(); }
Qqz qz(int e) { return embed<Qqz>(q_pow(e)); }
QMonomial nq(int m) { return QMonomial::neg_q_pow(m); }
}  // namespace

TEST(RatFun, FieldArithmetic) {
  const Qqz q = qz(1);
  EXPECT_TRUE(((z() - q) + (q - z())).is_zero());
  EXPECT_EQ(Qqz(1) / (z() - q) * (z() - q), Qqz(1));
  EXPECT_EQ((z() * z() - q * q) / (z() - q), z() + q);
}

TEST(RatFun, CanonicalFormIsUnique) {
  const Qqz a = (z() * z() - Qqz(1)) / (Qqz(2) * z() - Qqz(2));
  const Qqz b = (z() + Qqz(1)) / Qqz(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_string(), b.to_string());
  EXPECT_EQ(parse_qqz("(q^2 - 1)/(q*z - q^-1)"), (qz(2) - Qqz(1)) / (qz(1) * z() - qz(-1)));
}

TEST(RatFun, PoleOrder) {
  EXPECT_EQ(pole_order(Qqz(1) / (z() - Qqz(nq(2).value())), nq(2).value()), 1);
  const Qqz f = (z() - Qqz(nq(3).value())) * (z() - Qqz(nq(3).value()));
  EXPECT_EQ(pole_order(f, nq(3).value()), -2);
  const Qqz d = z() - Qqz(nq(2).value());
  EXPECT_EQ(pole_order(d, nq(2).value()), -1);
  EXPECT_EQ(pole_order(d, nq(4).value()), 0);
}

TEST(Laurent, QuantumIntegers) {
  EXPECT_EQ(quantum_integer(2).to_string(), "q + q^-1");
  EXPECT_EQ(quantum_integer(3).to_string(), "q^2 + 1 + q^-2");
  for (int s = 1; s <= 4; ++s) EXPECT_EQ(quantum_integer(1, s), LaurentQ::monomial(Rat(1), 0));
}

TEST(TruncEval, Monomial) {
  const auto t = trunc_eval(X1::var(), {nq(2)}, {2});
  EXPECT_EQ(t.coeff({0}), q_pow(2));
  EXPECT_EQ(t.coeff({1}), q_pow(2));
}

TEST(TruncEval, GeometricSeries) {
  const QMonomial c{Rat(3, 2), 1};
  const auto t = trunc_eval(X1(1) / X1::var(), {c}, {2});
  EXPECT_EQ(t.coeff({0}), Qq(1) / c.value());
  EXPECT_EQ(t.coeff({1}), -(Qq(1) / c.value()));
}

TEST(TruncEval, InverseDifferenceTimesDifferenceIsOne) {
  const X2 x1 = X2(X1::var()), x2 = X2::var();
  const std::vector<QMonomial> a{nq(0), nq(2)};
  const auto inv = trunc_eval(X2(1) / (x2 - x1), a, {2, 2});
  const auto diff = trunc_eval(x2 - x1, a, {2, 2});
  EXPECT_EQ(inv.constant_term(), Qq(1) / (q_pow(2) - Qq(1)));
  EXPECT_EQ(inv * diff, TruncPoly<Qq>::constant({2, 2}, Qq(1)));
}

TEST(TruncEval, PoleAtAnchorThrows) {
  const X2 x1 = X2(X1::var()), x2 = X2::var();
  EXPECT_THROW(trunc_eval(X2(1) / (x2 - x1), {nq(2), nq(2)}, {2, 2}), PoleError);
}

TEST(Fundamental, SlTwoConventions) {
  const auto V = fundamental_module(2, 1);
  ASSERT_EQ(V.dim(), 2);
  const int u1 = V.index_of("{1}"), u2 = V.index_of("{2}");
  EXPECT_EQ(V.Fm[1].at(u2, u1), Qq(1));
  EXPECT_EQ(V.E[1].at(u1, u2), Qq(1));
  EXPECT_EQ(V.K(1).at(u1, u1), q_pow(1));
}

TEST(Fundamental, WeightSpacesOfWedgeTwo) {
  const auto V = fundamental_module(4, 2);
  EXPECT_EQ(V.dim(), 6);
  for (const auto& [w, mult] : weight_character(V)) EXPECT_EQ(mult, 1);
}

TEST(Fundamental, DominantWeightSpaceIsOneDimensional) {
  const auto V = fundamental_module(3, 1);
  EXPECT_EQ(weight_character(V).at(V.weights[0]), 1);
}

TEST(Relations, FundamentalAndTensorPass) {
  EXPECT_TRUE(check_defining_relations(fundamental_module(2, 1)).ok());
  EXPECT_TRUE(check_defining_relations(fundamental_module(4, 2)).ok());
  const auto V = fundamental_module(3, 1);
  EXPECT_TRUE(check_defining_relations(tensor(V, twist(V, q_pow(2)))).ok());
}

TEST(Relations, CorruptedEntryReportsSerre) {
  auto V = fundamental_module(3, 1);
  V.E[1].set(V.index_of("{1}"), V.index_of("{3}"), Qq(1));
  const auto rep = check_defining_relations(V);
  ASSERT_FALSE(rep.ok());
  bool serre = false;
  for (const auto& f : rep.failures) serre = serre || f.rfind("Serre", 0) == 0;
  EXPECT_TRUE(serre);
}

TEST(Twist, Laws) {
  const auto V = fundamental_module(3, 1);
  EXPECT_EQ(twist(V, Qq(1)), V);
  const Qq x = q_pow(2), y = Qq(Rat(-3, 5)) * q_pow(1);
  EXPECT_EQ(twist(twist(V, x), y), twist(V, x * y));
  const auto W = fundamental_module(3, 2);
  EXPECT_EQ(twist(tensor(V, W), x), tensor(twist(V, x), twist(W, x)));
}

TEST(Affinize, EvaluateRoundTrip) {
  const auto V = fundamental_module(2, 1);
  const auto Va = affinize(V);
  EXPECT_EQ(evaluate(Va, Qq(1)), V);
  for (const Qq& a : {q_pow(3), Qq(Rat(7, 2)), Qq(Rat(-2)) * q_pow(-1)}) EXPECT_EQ(evaluate(Va, a), twist(V, a));
  for (int r = 0; r < Va.dim(); ++r)
    for (const auto& [c, v] : Va.E[0].row(r)) EXPECT_EQ(v, z());
}

TEST(Tensor, DimensionAndWeights) {
  const auto A = fundamental_module(3, 1), B = fundamental_module(3, 2);
  const auto T = tensor(A, B);
  EXPECT_EQ(T.dim(), A.dim() * B.dim());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < B.dim(); ++j) EXPECT_EQ(T.weights[i * B.dim() + j], A.weights[i] + B.weights[j]);
}

TEST(Hom, IdentityAndVanishing) {
  const auto V = fundamental_module(3, 1);
  const auto H = hom_space(V, V);
  ASSERT_EQ(H.size(), 1u);
  EXPECT_TRUE(is_homomorphism(Matrix<Qq>::identity(3), V, V));
  EXPECT_TRUE(hom_space(V, fundamental_module(3, 2)).empty());
}

TEST(Hom, GenericTensorProducts) {
  const auto V = fundamental_module(2, 1);
  const Qq x = Qq(Rat(2, 7)), y = Qq(5) * q_pow(1);
  const auto A = tensor(twist(V, x), twist(V, y)), B = tensor(twist(V, y), twist(V, x));
  EXPECT_EQ(hom_space(A, B).size(), 1u);
  EXPECT_EQ(hom_space(A, A).size(), 1u);
}
