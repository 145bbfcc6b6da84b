#include "test_util.hpp"

namespace qsym {
namespace {

using testing::compositions_upto;
using testing::el;

const RatFunc q = RatFunc::q();
const RatFunc t = RatFunc::t();

// Independent definitional expansions in M, written from scratch here.
QSymElement L_def(const Composition& alpha) {
  QSymElement out(BasisKind::M);
  for (const auto& beta : refinements(alpha)) out.add(beta, 1);
  return out;
}

QSymElement D_def(const Composition& alpha) {
  QSymElement out(BasisKind::M);
  const int n = alpha.size();
  for (const auto& beta : coarsenings(alpha))
    out.add(beta, q.pow(beta.length() - n) * (-t).pow(alpha.length() - beta.length()));
  return out;
}

QSymElement Mq_def(const Composition& alpha) {
  QSymElement out(BasisKind::M);
  for (const auto& beta : refinements(alpha)) out += L_def(beta) * (-q).pow(beta.length() - alpha.length());
  return out;
}

QSymElement eta_def(const Composition& alpha) {
  QSymElement out(BasisKind::M);
  for (const auto& beta : coarsenings(alpha)) out.add(beta, RatFunc(2).pow(beta.length()));
  return out;
}

TEST(Basis, Names) {
  for (const auto& b : rule_bases()) EXPECT_EQ(basis_from_name(b.name()), b);
  EXPECT_EQ(basis_from_name("K", 3), Basis::K(3));
  EXPECT_THROW(basis_from_name("K"), std::invalid_argument);
  EXPECT_THROW(Basis::K(1), std::invalid_argument);
  EXPECT_THROW(basis_from_name("X"), std::invalid_argument);
}

TEST(Element, ArithmeticDropsZeros) {
  QSymElement x = el("D[2,1] + q*D[3]");
  QSymElement y = x - x;
  EXPECT_TRUE(y.is_zero());
  EXPECT_EQ(x.coefficient({3}), q);
  EXPECT_EQ(x.coefficient({1, 1, 1}), 0);
  EXPECT_EQ((x * RatFunc(0)).terms().size(), 0u);
  EXPECT_EQ(x.homogeneous_part(3), x);
  EXPECT_TRUE(x.homogeneous_part(2).is_zero());
}

TEST(Element, BasisMismatchThrows) {
  EXPECT_THROW(el("M[1]") + el("L[1]"), std::invalid_argument);
  EXPECT_THROW(mul(el("M[1]"), el("L[1]")), std::invalid_argument);
}

TEST(Expansion, AgreesWithDefinitions) {
  for (const auto& a : compositions_upto(6)) {
    SCOPED_TRACE(a.to_string());
    EXPECT_EQ(expand_in_M(BasisKind::L, a), L_def(a));
    EXPECT_EQ(expand_in_M(BasisKind::D, a), D_def(a));
    EXPECT_EQ(expand_in_M(BasisKind::Mq, a), Mq_def(a));
    EXPECT_EQ(expand_in_M(BasisKind::Eta, a), eta_def(a));
    EXPECT_EQ(expand_in_M(BasisKind::M, a), QSymElement::single(BasisKind::M, a));
  }
}

TEST(Expansion, SmallCases) {
  EXPECT_EQ(expand_in_M(BasisKind::D, {2}), el("q^-1*M[2]"));
  EXPECT_EQ(convert(el("D[2,1]"), BasisKind::M), el("(-t/q^2)*M[3] + (1/q)*M[2,1]"));
  EXPECT_EQ(convert(el("L[2]"), BasisKind::D), el("(q+t)*D[2] + D[1,1]"));
  EXPECT_EQ(convert(el("M[]"), BasisKind::D), el("D[]"));
}

TEST(Expansion, RoundTripsThroughM) {
  std::vector<Basis> bases = rule_bases();
  bases.push_back(Basis::K(2));
  bases.push_back(Basis::K(3));
  for (const auto& b : bases)
    for (const auto& a : compositions_upto(5)) {
      QSymElement x = QSymElement::single(b, a, q + 2);
      ASSERT_EQ(from_M(to_M(x), b), x) << b.name() << a.to_string();
    }
  EXPECT_EQ(convert(convert(el("G[1,2,1]"), BasisKind::Mq), BasisKind::G), el("G[1,2,1]"));
}

TEST(Specializations, GAndMqAtZeroAndOne) {
  for (const auto& a : compositions_upto(6)) {
    QSymElement g = to_M(QSymElement::single(BasisKind::G, a));
    QSymElement mq = to_M(QSymElement::single(BasisKind::Mq, a));
    QSymElement l = L_def(a);
    QSymElement m = QSymElement::single(BasisKind::M, a);
    ASSERT_EQ(evaluate(g, 0, 0), l) << a.to_string();
    ASSERT_EQ(evaluate(g, 1, 0), m) << a.to_string();
    ASSERT_EQ(evaluate(mq, 0, 0), l) << a.to_string();
    ASSERT_EQ(evaluate(mq, 1, 0), m) << a.to_string();
  }
}

TEST(Transitions, GAndLAreInverse) {
  for (int n = 0; n <= 6; ++n)
    for (const auto& a : compositions_of(n)) {
      QSymElement back(BasisKind::L);
      for (QSymElement row = l_in_G(a); const auto& [b, c] : row.terms()) back += g_in_L(b) * c;
      ASSERT_EQ(back, QSymElement::single(BasisKind::L, a)) << a.to_string();
    }
  EXPECT_EQ(g_in_L({2}).coefficient({1, 1}), -q);
}

TEST(Product, DExample) {
  QSymElement got = product_rule(BasisKind::D, {2, 1}, {2});
  QSymElement want = el("D[2,1,2] + (q+t)*D[2,3] + D[2,2,1] + (q+t)*D[4,1] + t*D[2,3] + (q+t)*t*D[5] + D[2,2,1] + t*D[4,1]");
  EXPECT_EQ(got, want);
  EXPECT_EQ(got.coefficient({2, 2, 1}), 2);
}

TEST(Product, GExample) {
  // I = {} and J = {1} inside [1].
  QSymElement got = product_rule(BasisKind::G, comp_of(Subset(2)), comp_of(Subset(2, {1})));
  QSymElement want(BasisKind::G);
  auto add = [&](std::initializer_list<int> k, RatFunc c) { want.add(comp_of(Subset(4, k)), c); };
  add({1}, 1);
  add({2}, 1 - q);
  add({3}, 1);
  add({1, 2}, 1);
  add({1, 3}, 1 - q + q * q);
  add({2, 3}, 1 + q * q - q.pow(3));
  EXPECT_EQ(got, want);
}

TEST(Product, MAndLSmall) {
  EXPECT_EQ(mul(el("M[1]"), el("M[1]")), el("M[2] + 2*M[1,1]"));
  EXPECT_EQ(mul(el("L[1]"), el("L[1]")), el("L[2] + L[1,1]"));
  EXPECT_EQ(mul(el("E[1]"), el("E[1]")), el("2*E[1,1] - E[2]"));
}

TEST(Product, UnitInEveryBasis) {
  std::vector<Basis> bases = rule_bases();
  bases.push_back(Basis::K(3));
  for (const auto& b : bases) {
    QSymElement x = QSymElement::single(b, {2, 1}, q) + QSymElement::single(b, {1}, t);
    EXPECT_EQ(mul(QSymElement::unit(b), x), x) << b.name();
    EXPECT_EQ(mul(x, QSymElement::unit(b)), x) << b.name();
  }
}

TEST(Product, RuleMatchesMultiplicationThroughM) {
  for (const auto& b : rule_bases())
    for (const auto& x : compositions_upto(3))
      for (const auto& y : compositions_upto(3)) {
        QSymElement lhs = product_rule(b, x, y);
        QSymElement rhs = mul_via_M(QSymElement::single(b, x), QSymElement::single(b, y));
        ASSERT_EQ(lhs, rhs) << b.name() << x.to_string() << y.to_string();
      }
}

TEST(Product, GRepresentativesAgree) {
  Subset i(3, {1}), j(3, {2});
  QSymElement a = g_product(descent_rep_blocks(i), descent_rep_blocks(j));
  QSymElement b = g_product({2, 1, 3}, {1, 3, 2});
  QSymElement c = g_product({3, 1, 2}, {2, 3, 1});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a, product_rule(BasisKind::G, comp_of(i), comp_of(j)));
}

TEST(Coproduct, GExample) {
  TensorElement got = coproduct_rule(BasisKind::G, {1, 2, 1});
  TensorElement want(BasisKind::G, BasisKind::G);
  want.add({}, {1, 2, 1}, 1);
  want.add({1}, {2, 1}, 1);
  want.add({1}, {1, 1, 1}, q * (1 - q));
  want.add({1, 2}, {1}, 1);
  want.add({1, 2, 1}, {}, 1);
  want.add({1, 1}, {1, 1}, 1 - q * q);
  EXPECT_EQ(got, want);
}

TEST(Coproduct, DDeconcatenates) {
  TensorElement want(BasisKind::D, BasisKind::D);
  want.add({}, {2, 1}, 1);
  want.add({2}, {1}, 1);
  want.add({2, 1}, {}, 1);
  EXPECT_EQ(coproduct_rule(BasisKind::D, {2, 1}), want);
  EXPECT_EQ(comul(el("D[2,1]")), want);
}

TEST(Coproduct, MatchesComputationThroughM) {
  std::vector<Basis> bases = rule_bases();
  bases.push_back(Basis::K(2));
  for (const auto& b : bases)
    for (const auto& g : compositions_upto(4)) {
      QSymElement x = QSymElement::single(b, g);
      ASSERT_EQ(comul(x), comul_via_M(x)) << b.name() << g.to_string();
    }
}

TEST(Coproduct, Counit) {
  EXPECT_EQ(counit(el("3*D[] + D[1]")), 3);
  EXPECT_EQ(counit(el("G[2,1]")), 0);
  for (const auto& b : rule_bases())
    for (const auto& g : compositions_upto(4)) {
      QSymElement x = QSymElement::single(b, g, q - t);
      QSymElement left(b), right(b);
      for (TensorElement d = comul(x); const auto& [key, c] : d.terms()) {
        if (key.first.empty()) left.add(key.second, c);
        if (key.second.empty()) right.add(key.first, c);
      }
      ASSERT_EQ(left, x);
      ASSERT_EQ(right, x);
    }
}

TEST(Antipode, MonomialExamples) {
  EXPECT_EQ(antipode_M(el("M[]")), el("M[]"));
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(antipode_M(QSymElement::single(BasisKind::M, {n})), QSymElement::single(BasisKind::M, {n}, -1));
  EXPECT_EQ(antipode_M(el("M[1,2]")), el("M[2,1] + M[3]"));
}

TEST(Antipode, FundamentalIsSignedOmega) {
  for (const auto& a : compositions_upto(6)) {
    QSymElement want = QSymElement::single(BasisKind::L, reverse(complement(a)), a.size() % 2 ? -1 : 1);
    ASSERT_EQ(antipode(QSymElement::single(BasisKind::L, a)), want) << a.to_string();
  }
}

TEST(Antipode, IsAnInvolutionOnD) {
  for (const auto& a : compositions_upto(4)) {
    QSymElement x = QSymElement::single(BasisKind::D, a);
    ASSERT_EQ(antipode(antipode(x)), x);
  }
}

TEST(Transitions, DAndLRows) {
  for (int n = 0; n <= 5; ++n) {
    auto l_in_d = dl_transition(DLTransition::LtoD, n);
    auto d_in_l = dl_transition(DLTransition::DtoL, n);
    auto m_in_d = dl_transition(DLTransition::MtoD, n);
    ASSERT_EQ(l_in_d.size(), compositions_of(n).size());
    for (const auto& [a, x] : l_in_d) EXPECT_EQ(to_M(x), L_def(a)) << a.to_string();
    for (const auto& [a, x] : d_in_l) EXPECT_EQ(to_M(x), D_def(a)) << a.to_string();
    for (const auto& [a, x] : m_in_d) EXPECT_EQ(to_M(x), QSymElement::single(BasisKind::M, a)) << a.to_string();
  }
}

TEST(Coefficients, SubstituteAndEvaluate) {
  QSymElement x = el("(q+t)*D[2] + D[1,1]");
  EXPECT_EQ(substitute(x, RatFunc(1), RatFunc(0)), el("D[2] + D[1,1]"));
  EXPECT_EQ(evaluate(x, 2, -2), el("D[1,1]"));
}

}  // namespace
}  // namespace qsym
