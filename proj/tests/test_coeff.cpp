#include <random>

#include "test_util.hpp"

namespace qsym {
namespace {

using testing::rf;

const RatFunc q = RatFunc::q();
const RatFunc t = RatFunc::t();

TEST(Poly2, ProductOfPolynomials) {
  Poly2 p = Poly2::q() + Poly2::t();
  Poly2 prod = p * Poly2::t();
  EXPECT_EQ(prod, Poly2::monomial({1, 1}) + Poly2::t(2));
  EXPECT_EQ(prod.coefficient({1, 1}), 1);
  EXPECT_EQ(prod.coefficient({0, 2}), 1);
  EXPECT_EQ(prod.coefficient({2, 0}), 0);
}

TEST(Poly2, TermsAreSortedAndNonzero) {
  Poly2 p = Poly2::q(2) + Poly2::t() - Poly2::t() + Poly2(3) + Poly2::monomial({1, 1}, make_rat(1, 2));
  ASSERT_EQ(p.terms().size(), 3u);
  for (std::size_t i = 1; i < p.terms().size(); ++i) EXPECT_TRUE(p.terms()[i - 1].first < p.terms()[i].first);
  for (const auto& [mono, c] : p.terms()) EXPECT_NE(c, 0);
}

TEST(Poly2, DivideExact) {
  Poly2 a = Poly2::q() + Poly2::t();
  Poly2 b = Poly2::q() - Poly2::t(2);
  auto quotient = (a * b).divide_exact(a);
  ASSERT_TRUE(quotient.has_value());
  EXPECT_EQ(*quotient, b);
  EXPECT_FALSE((a * b + Poly2(1)).divide_exact(a).has_value());
}

TEST(RatFunc, PolynomialProduct) {
  RatFunc x = (q + t) * t;
  EXPECT_TRUE(x.is_polynomial());
  EXPECT_EQ(x, q * t + t * t);
  EXPECT_EQ(x.den(), Poly2(1));
}

TEST(RatFunc, EqualityByCrossMultiplication) {
  RatFunc a = q / (q + t);
  RatFunc b(Poly2::q(2) + Poly2::monomial({1, 1}), (Poly2::q() + Poly2::t()).pow(2));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, t / (q + t));
}

TEST(RatFunc, NormalizedDenominatorIsMonic) {
  RatFunc a(Poly2(3) * Poly2::q(), Poly2(6) * Poly2::t() + Poly2(2));
  EXPECT_EQ(a.den().leading().second, 1);
  EXPECT_EQ(a, rf("3*q/(6*t+2)"));
}

TEST(RatFunc, Evaluation) {
  EXPECT_EQ((q + t).eval(2, -1), 1);
  EXPECT_EQ(RatFunc(cq(3, 2)).eval(2, 0), 21);
  EXPECT_EQ(q.pow(-2).eval(3, 0), make_rat(1, 9));
  EXPECT_EQ((q / (q + t)).eval(make_rat(1, 2), make_rat(1, 3)), make_rat(3, 5));
}

TEST(RatFunc, PoleReportsPoint) {
  RatFunc x = q / (q + t);
  try {
    x.eval(1, -1);
    FAIL() << "expected PoleError";
  } catch (const PoleError& e) {
    EXPECT_EQ(e.q(), 1);
    EXPECT_EQ(e.t(), -1);
  }
  EXPECT_THROW(q.pow(-1).eval(0, 5), PoleError);
}

TEST(RatFunc, DivisionByZeroThrows) {
  EXPECT_ANY_THROW(q / RatFunc(0));
  EXPECT_ANY_THROW(RatFunc(0).inverse());
  EXPECT_ANY_THROW(RatFunc(Poly2::q(), Poly2()));
}

TEST(RatFunc, Substitute) {
  RatFunc x = (q + t) / (q - t);
  EXPECT_EQ(x.substitute(RatFunc(1), RatFunc(0)), 1);
  EXPECT_EQ(x.substitute(q + 1, RatFunc(-1)), (q) / (q + 2));
  EXPECT_EQ(x.substitute(t, q), -x);
}

TEST(RatFunc, AsConstant) {
  EXPECT_EQ(rf("(q+t)/(2*q+2*t)").as_constant(), std::optional<Rat>(make_rat(1, 2)));
  EXPECT_FALSE(q.as_constant().has_value());
}

TEST(Cq, Values) {
  EXPECT_EQ(cq(5, 0), Poly2(1));
  EXPECT_EQ(cq(2, 3), Poly2(0));
  EXPECT_EQ(cq(2, 1), Poly2(1) - Poly2::q(2));
  EXPECT_EQ(cq(3, 2), (Poly2(1) - Poly2::q(3)) * (Poly2(1) - Poly2::q(2)));
  EXPECT_EQ(cq(0, 0), Poly2(1));
}

TEST(Parse, Expressions) {
  EXPECT_EQ(rf("q*t + t^2"), (q + t) * t);
  EXPECT_EQ(rf("q^-2"), q.pow(-2));
  EXPECT_EQ(rf("(1-q)^2/(q+t)"), (1 - q) * (1 - q) / (q + t));
  EXPECT_EQ(rf("-3/4"), RatFunc(make_rat(-3, 4)));
  EXPECT_EQ(rf("2(q+1)"), 2 * (q + 1));
  EXPECT_EQ(parse_rat("-7/21"), make_rat(-1, 3));
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_ratfunc("q + * t");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos);
  }
  EXPECT_THROW(parse_ratfunc("(q + t"), ParseError);
  EXPECT_THROW(parse_ratfunc("x"), ParseError);
  EXPECT_THROW(parse_ratfunc(""), ParseError);
  EXPECT_THROW(parse_rat("1/0"), ParseError);
}

class RandomRatFunc {
 public:
  explicit RandomRatFunc(unsigned seed) : gen_(seed) {}

  Poly2 poly() {
    Poly2 p;
    int terms = pick(0, 3);
    for (int k = 0; k < terms; ++k)
      p += Poly2::monomial({pick(0, 2), pick(0, 2)}, make_rat(pick(-4, 4), pick(1, 3)));
    return p;
  }

  RatFunc next() {
    Poly2 den = poly();
    while (den.is_zero()) den = poly();
    return RatFunc(poly(), den);
  }

  Rat point() { return make_rat(pick(-6, 6), pick(1, 5)); }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  std::mt19937 gen_;
};

TEST(RatFunc, RandomFieldAxioms) {
  RandomRatFunc r(11);
  for (int k = 0; k < 1000; ++k) {
    RatFunc a = r.next(), b = r.next(), c = r.next();
    ASSERT_TRUE((a + (-a)).is_zero()) << a.to_string();
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a * 1, a);
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), 1) << a.to_string();
    if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
  }
}

TEST(RatFunc, RandomEvalIsHomomorphism) {
  RandomRatFunc r(12);
  int checked = 0;
  for (int k = 0; k < 500; ++k) {
    RatFunc a = r.next(), b = r.next();
    Rat x = r.point(), y = r.point();
    try {
      Rat ea = a.eval(x, y), eb = b.eval(x, y);
      EXPECT_EQ((a + b).eval(x, y), ea + eb);
      EXPECT_EQ((a * b).eval(x, y), ea * eb);
      ++checked;
    } catch (const PoleError&) {
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(RatFunc, RandomPrintParseRoundTrip) {
  RandomRatFunc r(13);
  for (int k = 0; k < 500; ++k) {
    RatFunc a = r.next();
    ASSERT_EQ(rf(a.to_string()), a) << a.to_string();
  }
}

}  // namespace
}  // namespace qsym
