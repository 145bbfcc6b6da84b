#include "qsym/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace qsym {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

PoleError::PoleError(const Rat& q, const Rat& t)
    : std::domain_error("pole at q=" + q.get_str() + ", t=" + t.get_str()), q_(q), t_(t) {}

// ---------------------------------------------------------------- Poly2

Poly2::Poly2(int c) {
  if (c != 0) terms_.push_back({Monomial{}, Rat(c)});
}

Poly2::Poly2(const Rat& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

Poly2 Poly2::monomial(Monomial m, const Rat& c) {
  if (m.q < 0 || m.t < 0) throw std::invalid_argument("negative exponent in polynomial");
  Poly2 p;
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

bool Poly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Rat Poly2::constant_term() const { return coefficient(Monomial{}); }

Rat Poly2::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& a, const Monomial& b) { return a.first < b; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

const Poly2::Term& Poly2::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.back();
}

Monomial Poly2::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().first;
  for (const auto& [mono, c] : terms_) {
    m.q = std::min(m.q, mono.q);
    m.t = std::min(m.t, mono.t);
  }
  return m;
}

Poly2 Poly2::divided_by_monomial(Monomial m) const {
  Poly2 r = *this;
  for (auto& [mono, c] : r.terms_) {
    mono.q -= m.q;
    mono.t -= m.t;
    if (mono.q < 0 || mono.t < 0) throw std::domain_error("monomial does not divide polynomial");
  }
  // Dividing every term by the same monomial keeps the order.
  return r;
}

Poly2 Poly2::times_monomial(Monomial m) const {
  Poly2 r = *this;
  for (auto& [mono, c] : r.terms_) {
    mono.q += m.q;
    mono.t += m.t;
  }
  return r;
}

std::optional<Poly2> Poly2::divide_exact(const Poly2& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly2 rem = *this;
  Poly2 quot;
  const auto& [dm, dc] = d.leading();
  while (!rem.is_zero()) {
    const auto [rm, rc] = rem.leading();
    if (rm.q < dm.q || rm.t < dm.t) return std::nullopt;
    Poly2 step = monomial({rm.q - dm.q, rm.t - dm.t}, rc / dc);
    quot += step;
    rem -= step * d;
  }
  return quot;
}

Rat Poly2::eval(const Rat& q, const Rat& t) const {
  Rat sum = 0;
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < m.q; ++i) term *= q;
    for (int i = 0; i < m.t; ++i) term *= t;
    sum += term;
  }
  return sum;
}

Poly2 Poly2::pow(unsigned e) const {
  Poly2 result(1);
  Poly2 base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& term : r.terms_) term.second = -term.second;
  return r;
}

std::vector<Poly2::Term> Poly2::merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                      bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
      if (subtract) out.back().second = -out.back().second;
    } else {
      Rat c = subtract ? Rat(a[i].second - b[j].second) : Rat(a[i].second + b[j].second);
      if (sgn(c) != 0) out.push_back({a[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return Poly2();
  std::vector<Poly2::Term> prods;
  prods.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prods.push_back({{ma.q + mb.q, ma.t + mb.t}, ca * cb});
  std::stable_sort(prods.begin(), prods.end(),
                   [](const Poly2::Term& x, const Poly2::Term& y) { return x.first < y.first; });
  Poly2 r;
  for (auto& term : prods) {
    if (!r.terms_.empty() && r.terms_.back().first == term.first) {
      r.terms_.back().second += term.second;
    } else {
      if (!r.terms_.empty() && sgn(r.terms_.back().second) == 0) r.terms_.pop_back();
      r.terms_.push_back(std::move(term));
    }
  }
  if (!r.terms_.empty() && sgn(r.terms_.back().second) == 0) r.terms_.pop_back();
  return r;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  *this = *this * o;
  return *this;
}

Poly2& Poly2::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= c;
  return *this;
}

namespace {

void write_monomial(std::ostream& os, Monomial m) {
  bool first = true;
  auto factor = [&](char var, int e) {
    if (e == 0) return;
    if (!first) os << '*';
    first = false;
    os << var;
    if (e > 1) os << '^' << e;
  };
  factor('q', m.q);
  factor('t', m.t);
}

}  // namespace

std::string Poly2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (m == Monomial{}) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << '*';
      write_monomial(os, m);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::q(int e) { return e >= 0 ? RatFunc(Poly2::q(e)) : RatFunc(Poly2(1), Poly2::q(-e)); }

RatFunc RatFunc::t(int e) { return e >= 0 ? RatFunc(Poly2::t(e)) : RatFunc(Poly2(1), Poly2::t(-e)); }

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly2(1);
    return;
  }
  if (den_.is_constant()) {
    Rat d = den_.constant_term();
    if (d != 1) {
      num_ *= Rat(1 / d);
      den_ = Poly2(1);
    }
    return;
  }
  Monomial a = num_.min_exponents();
  Monomial b = den_.min_exponents();
  Monomial common{std::min(a.q, b.q), std::min(a.t, b.t)};
  if (common.q > 0 || common.t > 0) {
    num_ = num_.divided_by_monomial(common);
    den_ = den_.divided_by_monomial(common);
  }
  Rat lead = den_.leading().second;
  if (lead != 1) {
    Rat inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.is_constant()) return;
  if (!den_.is_monomial()) {
    if (auto quotient = num_.divide_exact(den_)) {
      num_ = std::move(*quotient);
      den_ = Poly2(1);
    }
  }
}

std::optional<Rat> RatFunc::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_term();
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  r.normalize();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RatFunc(den_, num_);
}

Rat RatFunc::eval(const Rat& q, const Rat& t) const {
  Rat d = den_.eval(q, t);
  if (sgn(d) == 0) throw PoleError(q, t);
  return num_.eval(q, t) / d;
}

namespace {

RatFunc substitute_poly(const Poly2& p, const RatFunc& q, const RatFunc& t) {
  RatFunc sum;
  std::vector<RatFunc> qpow{RatFunc(1)}, tpow{RatFunc(1)};
  for (const auto& [m, c] : p.terms()) {
    while (static_cast<int>(qpow.size()) <= m.q) qpow.push_back(qpow.back() * q);
    while (static_cast<int>(tpow.size()) <= m.t) tpow.push_back(tpow.back() * t);
    sum += RatFunc(c) * qpow[m.q] * tpow[m.t];
  }
  return sum;
}

}  // namespace

RatFunc RatFunc::substitute(const RatFunc& q, const RatFunc& t) const {
  RatFunc d = substitute_poly(den_, q, t);
  if (d.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
  return substitute_poly(num_, q, t) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Poly2(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (o.is_constant()) {
    num_ *= o.num_.constant_term();
    return *this;
  }
  num_ *= o.num_;
  if (!o.den_.is_constant()) den_ *= o.den_;
  if (!den_.is_constant()) normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

bool operator==(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  if (a.den_.is_monomial() && b.den_.is_monomial()) return false;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

Poly2 cq(int u, int v) {
  if (v < 0) throw std::invalid_argument("c_q with negative length");
  if (v > u) return Poly2();
  Poly2 r(1);
  for (int i = 0; i < v; ++i) {
    int e = u - i;
    if (e < 0) throw std::invalid_argument("c_q with negative exponent");
    r *= Poly2(1) - Poly2::q(e);
  }
  return r;
}

}  // namespace qsym
