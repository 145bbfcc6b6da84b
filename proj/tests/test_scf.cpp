#include <random>

#include "test_util.hpp"

namespace qsym {
namespace {

Rat pow_rat(Rat x, int e) {
  Rat r = 1;
  for (int k = 0; k < e; ++k) r *= x;
  return r;
}

ClassTensor tensor_of(const ClassFunction& a, const ClassFunction& b) {
  ClassTensor out(a.nu());
  for (const auto& k : all_subsets(a.grade()))
    for (const auto& l : all_subsets(b.grade())) out.add(k, l, a.value(k) * b.value(l));
  return out;
}

ClassFunction random_class_function(int nu, int n, std::mt19937& gen) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  ClassFunction out(nu, n);
  for (std::uint32_t b = 0; b < out.num_classes(); ++b) out[b] = make_rat(num(gen), den(gen));
  return out;
}

TEST(ClassFunctions, KappaIsIndicator) {
  ClassFunction k = kappa(Subset(2, {1}), 3);
  EXPECT_EQ(k.value(Subset(2, {1})), 1);
  EXPECT_EQ(k.value(Subset(2)), 0);
  EXPECT_EQ(k.num_classes(), 2u);
}

TEST(ClassFunctions, SupercharacterValues) {
  // chi^{{1}} on Q_3(3): one free coordinate at position 2.
  ClassFunction c = chi(Subset(3, {1}), 3);
  EXPECT_EQ(c.value(Subset(3)), 2);
  EXPECT_EQ(c.value(Subset(3, {1})), 2);
  EXPECT_EQ(c.value(Subset(3, {2})), -1);
  EXPECT_EQ(c.value(Subset(3, {1, 2})), -1);
  for (int nu : {2, 3})
    for (const auto& i : all_subsets(5)) {
      EXPECT_EQ(chi(i, nu).value(Subset(5)), pow_rat(nu - 1, i.complement().size()));
      EXPECT_EQ(chi_dot(i, nu).value(Subset(5)), 1);
    }
}

TEST(ClassFunctions, AtomsReproduceChiDot) {
  for (int nu : {2, 3, 5})
    for (const auto& i : all_subsets(5)) {
      std::vector<std::pair<int, Atom>> atoms;
      for (int k = 1; k <= 4; ++k) atoms.emplace_back(k, i.contains(k) ? Atom::unit() : Atom::regular_bar());
      EXPECT_EQ(from_atoms(nu, atoms).to_class_function(5), chi_dot(i, nu));
    }
}

TEST(ClassFunctions, SuperclassSizesPartitionTheGroup) {
  for (int nu : {2, 3, 5})
    for (int n = 1; n <= 8; ++n) {
      Rat total = 0;
      for (const auto& j : all_subsets(n)) total += pow_rat(nu - 1, j.size());
      EXPECT_EQ(total, pow_rat(nu, n - 1));
      // The same count through the inner product of the trivial function.
      EXPECT_EQ(hall_inner(one(nu, n), one(nu, n)), 1);
    }
}

TEST(ClassFunctions, HallInnerProduct) {
  for (int nu : {2, 3})
    for (int n = 1; n <= 4; ++n)
      for (const auto& i : all_subsets(n)) {
        EXPECT_EQ(hall_inner(chi(i, nu), chi(i, nu)), pow_rat(nu - 1, i.complement().size()));
        EXPECT_EQ(hall_inner(kappa(i, nu), kappa(i, nu)), pow_rat(nu - 1, i.size()) / pow_rat(nu, n - 1));
        for (const auto& j : all_subsets(n))
          if (!(i == j)) EXPECT_EQ(hall_inner(chi(i, nu), chi(j, nu)), 0);
      }
  // Order-2 group: the nonidentity superclass has one element.
  EXPECT_EQ(hall_inner(kappa(Subset(2, {1}), 2), kappa(Subset(2, {1}), 2)), make_rat(1, 2));
}

TEST(ClassFunctions, Restriction) {
  for (int nu : {2, 3})
    for (const auto& s : all_subsets(5))
      for (const auto& t : all_subsets(5)) {
        ClassFunction r = restrict(kappa(s, nu), t);
        EXPECT_EQ(r, s.is_subset_of(t) ? kappa(s, nu) : ClassFunction(nu, 5));
      }
}

TEST(ClassFunctions, AtomRestrictionCommutes) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int n = 1; n <= 5; ++n)
    for (const auto& keep : all_subsets(n + 1)) {
      std::vector<std::pair<int, Atom>> atoms, kept;
      Rat dropped = 1;  // dropped coordinates sit at the identity
      for (int k = 1; k <= n; ++k) {
        Atom a{d(gen), d(gen)};
        atoms.emplace_back(k, a);
        if (keep.contains(k))
          kept.emplace_back(k, a);
        else
          dropped *= a.at_zero();
      }
      auto full = from_atoms(3, atoms);
      auto want = from_atoms(3, kept);
      for (std::size_t i = 0; i < want.values().size(); ++i) want[i] *= dropped;
      EXPECT_EQ(restrict(full, keep.elements()), want);
    }
}

TEST(ClassFunctions, TensorOfOnes) {
  IndexedClassFunction a(one(3, 3)), b = reindex(IndexedClassFunction(one(3, 2)), {3});
  EXPECT_EQ(tensor_u(a, b, {1, 2, 3}), IndexedClassFunction(one(3, 4)));
  EXPECT_THROW(tensor_u(a, b, {1, 2, 3, 4}), std::invalid_argument);
  EXPECT_THROW(tensor_u(a, a), std::invalid_argument);
}

TEST(Product, MultiplicationExample) {
  const int m = 4, n = 3;
  Subset i(m, {2, 3}), j(n, {2});
  Subset a(m + n + 1, {1, 3, 4});
  for (int nu : {2, 3, 5}) {
    ClassFunction got = m_A(chi_dot(i, nu), chi_dot(j, nu), a);
    EXPECT_EQ(got, chi_dot(Subset(7, {1, 3, 4, 5, 6}), nu));
    std::vector<std::pair<int, Atom>> atoms{{1, Atom::unit()}, {2, Atom::regular_bar()}, {3, Atom::unit()},
                                            {4, Atom::unit()}, {5, Atom::unit()},         {6, Atom::unit()}};
    EXPECT_EQ(got, from_atoms(nu, atoms).to_class_function(7));
  }
}

TEST(Product, ChiDotLemmaExhaustive) {
  for (int nu : {2, 3})
    for (int m = 1; m <= 5; ++m)
      for (int n = 1; m + n <= 6; ++n)
        for (const auto& i : all_subsets(m))
          for (const auto& j : all_subsets(n))
            for (const auto& a : subsets_of_size(m + n, n))
              ASSERT_EQ(m_A(chi_dot(i, nu), chi_dot(j, nu), a), chi_dot(preshuffle(i, j, a).shuffle, nu));
}

TEST(Product, UnitAndErrors) {
  ClassFunction psi = chi(Subset(4, {2}), 3);
  EXPECT_EQ(m(one(3, 0), psi), psi);
  EXPECT_EQ(m(psi, one(3, 0)), psi);
  EXPECT_THROW(m(one(2, 1), one(3, 1)), std::invalid_argument);
  EXPECT_THROW(m_A(one(3, 2), one(3, 2), Subset(5, {1})), std::invalid_argument);
}

TEST(Product, KappaExampleCoefficient) {
  ClassFunction d = kappa_product(Subset(2, {1}), Subset(3, {2}), 3);
  EXPECT_EQ(d.value(Subset(5, {1, 2, 3, 4})), make_rat(-1, 2));
  EXPECT_EQ(d, m(kappa(Subset(2, {1}), 3), kappa(Subset(3, {2}), 3)));
}

TEST(Coproduct, SplitExample) {
  for (int nu : {2, 3}) {
    ClassTensor got = coprod_k(chi_dot(Subset(5, {1, 3, 4}), nu), 2);
    EXPECT_EQ(got, tensor_of(chi_dot(Subset(2, {1}), nu), chi_dot(Subset(3, {1, 2}), nu)));
  }
  EXPECT_THROW(coprod_k(one(2, 3), 4), std::invalid_argument);
}

TEST(Coproduct, ChiDotLemmaExhaustive) {
  for (int nu : {2, 3})
    for (int n = 0; n <= 6; ++n)
      for (const auto& i : all_subsets(n))
        for (int k = 0; k <= n; ++k) {
          Subset low(k), high(n - k);
          for (int e : i.elements()) {
            if (e < k) low = low.inserted(e);
            if (e > k) high = high.inserted(e - k);
          }
          ASSERT_EQ(coprod_k(chi_dot(i, nu), k), tensor_of(chi_dot(low, nu), chi_dot(high, nu)));
        }
}

TEST(Coproduct, KappaVanishesAtDescents) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& i : all_subsets(n))
      for (int k : i.elements()) EXPECT_TRUE(coprod_k(kappa(i, 3), k).terms().empty());
}

TEST(Coproduct, KappaExample) {
  for (int nu : {2, 3}) {
    ClassTensor want(nu);
    for (auto [a, b] : std::vector<std::pair<Composition, Composition>>{
             {{}, {1, 3, 2}}, {{1, 1}, {2, 2}}, {{1, 2}, {1, 2}}, {{1, 3, 1}, {1}}, {{1, 3, 2}, {}}})
      want.add(set_of(a), set_of(b), 1);
    EXPECT_EQ(kappa_coproduct({1, 3, 2}, nu), want);
    EXPECT_EQ(coprod(kappa(set_of({1, 3, 2}), nu)), want);
  }
}

TEST(Characteristic, ChiDotGoesToL) {
  for (int nu : {2, 3})
    for (int n = 0; n <= 5; ++n)
      for (const auto& i : all_subsets(n)) EXPECT_EQ(ch(chi_dot(i, nu)), QSymElement::single(BasisKind::L, comp_of(i)));
}

TEST(Characteristic, HallLittlewoodAndQMonomial) {
  for (int nu : {2, 3})
    for (int n = 1; n <= 5; ++n)
      for (const auto& i : all_subsets(n)) {
        Composition a = comp_of(i);
        QSymElement g = evaluate(to_M(QSymElement::single(BasisKind::G, a)), nu, 0);
        QSymElement mq = evaluate(to_M(QSymElement::single(BasisKind::Mq, a)), nu, 0);
        ASSERT_EQ(to_M(ch(mk_G_classfn(i, nu))), g) << i.to_string();
        ASSERT_EQ(to_M(ch(mk_M_classfn(i, nu))), mq) << i.to_string();
      }
}

TEST(Characteristic, ExpansionWithZeroShift) {
  for (int nu : {2, 3})
    for (int n = 1; n <= 5; ++n)
      for (const auto& i : all_subsets(n)) {
        auto coeffs = expand_in_G(i, std::vector<Rat>(n - 1, 0), nu);
        for (const auto& [j, c] : coeffs) {
          ASSERT_TRUE(i.is_subset_of(j));
          EXPECT_EQ(c, pow_rat(nu, stat_g(i, j)));
        }
        std::size_t supersets = std::size_t{1} << (n - 1 - i.size());
        EXPECT_EQ(coeffs.size(), supersets);
      }
}

TEST(Characteristic, RandomMorphism) {
  std::mt19937 gen(17);
  for (int nu : {2, 3})
    for (int rep = 0; rep < 30; ++rep) {
      int a = rep % 4, b = (rep / 4) % 4;
      ClassFunction phi = random_class_function(nu, a, gen), psi = random_class_function(nu, b, gen);
      ASSERT_EQ(ch(m(phi, psi)), mul(ch(phi), ch(psi)));
      ASSERT_EQ(ch(coprod(phi)), comul(ch(phi)));
    }
}

TEST(Characteristic, KappaGivesKBasis) {
  for (int nu : {2, 3})
    for (const auto& a : testing::compositions_upto(5)) {
      Subset i = set_of(a);
      ClassFunction k = kappa(i, nu) * (1 / pow_rat(nu - 1, i.size()));
      ASSERT_EQ(to_M(ch(k)), expand_in_M(Basis::K(nu), a)) << a.to_string();
    }
}

}  // namespace
}  // namespace qsym
