#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsym/coeff.hpp"
#include "qsym/combinat.hpp"

namespace qsym {

enum class BasisKind { M, L, E, LambdaStar, Eta, EtaQ, D, G, Mq, K };

class Basis {
 public:
  Basis(BasisKind kind);
  static Basis K(int nu);

  BasisKind kind() const { return kind_; }
  // Specialization parameter of K; 0 for the other bases.
  int nu() const { return nu_; }
  std::string name() const;

  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis&, const Basis&) = default;

 private:
  Basis(BasisKind kind, int nu) : kind_(kind), nu_(nu) {}
  BasisKind kind_;
  int nu_ = 0;
};

Basis basis_from_name(std::string_view name, std::optional<int> nu = std::nullopt);
// The bases carrying a combinatorial product rule over Q(q,t).
std::vector<Basis> rule_bases();

class QSymElement {
 public:
  using Terms = std::map<Composition, RatFunc>;

  explicit QSymElement(Basis basis) : basis_(basis) {}
  static QSymElement single(Basis basis, const Composition& alpha, const RatFunc& coeff = 1);
  static QSymElement unit(Basis basis) { return single(basis, Composition()); }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const Composition& alpha) const;
  void add(const Composition& alpha, const RatFunc& coeff);
  QSymElement homogeneous_part(int n) const;

  QSymElement& operator+=(const QSymElement& o);
  QSymElement& operator-=(const QSymElement& o);
  QSymElement& operator*=(const RatFunc& c);
  friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
  friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
  friend QSymElement operator*(QSymElement a, const RatFunc& c) { return a *= c; }
  friend QSymElement operator*(const RatFunc& c, QSymElement a) { return a *= c; }
  friend bool operator==(const QSymElement& a, const QSymElement& b);

  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

class TensorElement {
 public:
  using Key = std::pair<Composition, Composition>;
  using Terms = std::map<Key, RatFunc>;

  TensorElement(Basis left, Basis right) : left_(left), right_(right) {}

  Basis left_basis() const { return left_; }
  Basis right_basis() const { return right_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const Composition& a, const Composition& b) const;
  void add(const Composition& a, const Composition& b, const RatFunc& coeff);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  friend bool operator==(const TensorElement& a, const TensorElement& b);

  std::string to_string() const;

 private:
  Basis left_;
  Basis right_;
  Terms terms_;
};

// ---- changes of basis

// B_alpha written in the monomial basis.
QSymElement expand_in_M(Basis basis, const Composition& alpha);
QSymElement to_M(const QSymElement& x);
QSymElement from_M(const QSymElement& x, Basis target);
QSymElement convert(const QSymElement& x, Basis target);
TensorElement convert(const TensorElement& x, Basis left, Basis right);

// Direct transitions used for tables.
QSymElement g_in_L(const Composition& alpha);
QSymElement l_in_G(const Composition& alpha);
QSymElement mq_in_L(const Composition& alpha);
QSymElement l_in_Mq(const Composition& alpha);
QSymElement l_in_K(const Composition& alpha, int nu);
QSymElement k_in_L(const Composition& alpha, int nu);
QSymElement m_in_K(const Composition& alpha, int nu);

enum class DLTransition { LtoD, DtoL, MtoD };
// Closed-form rows for grade n: L in D, D in L, or M in D.
std::vector<std::pair<Composition, QSymElement>> dl_transition(DLTransition dir, int n);

// ---- Hopf structure

// B_alpha * B_beta by the combinatorial rule of the basis.
QSymElement product_rule(Basis basis, const Composition& alpha, const Composition& beta);
// G_I * G_J computed from chosen representatives u (Des u = I) and v (Des v = J).
QSymElement g_product(const Word& u, const Word& v);
QSymElement mul(const QSymElement& x, const QSymElement& y);
QSymElement mul_via_M(const QSymElement& x, const QSymElement& y);

TensorElement coproduct_rule(Basis basis, const Composition& gamma);
TensorElement comul(const QSymElement& x);
TensorElement comul_via_M(const QSymElement& x);
TensorElement tensor_mul(const TensorElement& x, const TensorElement& y);

RatFunc counit(const QSymElement& x);
QSymElement antipode_M(const QSymElement& x);
QSymElement antipode(const QSymElement& x);

// ---- coefficient maps

QSymElement substitute(const QSymElement& x, const RatFunc& q, const RatFunc& t);
QSymElement evaluate(const QSymElement& x, const Rat& q, const Rat& t);

}  // namespace qsym
