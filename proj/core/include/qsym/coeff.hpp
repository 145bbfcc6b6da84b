#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsym {

using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
std::string to_string(const Rat& r);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class PoleError : public std::domain_error {
 public:
  PoleError(const Rat& q, const Rat& t);
  const Rat& q() const { return q_; }
  const Rat& t() const { return t_; }

 private:
  Rat q_;
  Rat t_;
};

// q^q * t^t.
struct Monomial {
  int q = 0;
  int t = 0;

  int degree() const { return q + t; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lex order with q before t, so q^2 > q*t > t^2 > q > t > 1.
inline bool operator<(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.q < b.q;
}

class Poly2 {
 public:
  using Term = std::pair<Monomial, Rat>;

  Poly2() = default;
  Poly2(int c);
  Poly2(const Rat& c);

  static Poly2 monomial(Monomial m, const Rat& c = 1);
  static Poly2 q(int e = 1) { return monomial({e, 0}); }
  static Poly2 t(int e = 1) { return monomial({0, e}); }

  // Sorted ascending in monomial order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rat constant_term() const;
  Rat coefficient(Monomial m) const;
  const Term& leading() const;

  // Componentwise minimum of the exponents; zero polynomial gives {0,0}.
  Monomial min_exponents() const;
  Poly2 divided_by_monomial(Monomial m) const;
  Poly2 times_monomial(Monomial m) const;
  std::optional<Poly2> divide_exact(const Poly2& d) const;

  Rat eval(const Rat& q, const Rat& t) const;
  Poly2 pow(unsigned e) const;

  Poly2 operator-() const;
  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const Rat& c);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rat& c) { return a *= c; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract);
  std::vector<Term> terms_;
};

// Element of Q(q,t).  The denominator is never zero; monomial content
// shared by numerator and denominator is removed and the denominator has
// leading coefficient 1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}
  RatFunc(Poly2 p) : num_(std::move(p)), den_(1) {}
  RatFunc(Poly2 num, Poly2 den);

  static RatFunc q(int e = 1);
  static RatFunc t(int e = 1);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<Rat> as_constant() const;

  RatFunc pow(int e) const;
  RatFunc inverse() const;

  Rat eval(const Rat& q, const Rat& t) const;
  RatFunc substitute(const RatFunc& q, const RatFunc& t) const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

 private:
  void normalize();
  Poly2 num_;
  Poly2 den_;
};

// c_q(u, v) = (1 - q^u)(1 - q^(u-1))...(1 - q^(u-v+1)); 1 when v = 0.
Poly2 cq(int u, int v);

// Expressions over q, t and integers with + - * / ^ and parentheses.
RatFunc parse_ratfunc(std::string_view text);
Rat parse_rat(std::string_view text);

}  // namespace qsym
