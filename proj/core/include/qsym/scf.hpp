#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qsym/algebra.hpp"
#include "qsym/coeff.hpp"
#include "qsym/combinat.hpp"

namespace qsym {

// Superclass function on Q_n(nu).  Superclasses are indexed by subsets J
// of [n-1]; values() is indexed by J.bits().
class ClassFunction {
 public:
  ClassFunction(int nu, int n);
  ClassFunction(int nu, int n, std::vector<Rat> values);

  int nu() const { return nu_; }
  int grade() const { return n_; }
  std::size_t num_classes() const { return values_.size(); }
  const std::vector<Rat>& values() const { return values_; }

  const Rat& value(const Subset& j) const;
  const Rat& operator[](std::uint32_t bits) const { return values_.at(bits); }
  Rat& operator[](std::uint32_t bits) { return values_.at(bits); }

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Rat& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rat& c) { return a *= c; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int nu_;
  int n_;
  std::vector<Rat> values_;
};

// A superclass function on Q_U(nu) for a finite U of positive integers,
// the tensor product of copies of Q_1.  Bit k of a class refers to index()[k].
class IndexedClassFunction {
 public:
  IndexedClassFunction(int nu, std::vector<int> index);
  IndexedClassFunction(int nu, std::vector<int> index, std::vector<Rat> values);
  explicit IndexedClassFunction(const ClassFunction& phi);

  int nu() const { return nu_; }
  const std::vector<int>& index() const { return index_; }
  const std::vector<Rat>& values() const { return values_; }
  // Value at the class supported on the given elements of index().
  Rat value_at(const std::vector<int>& support) const;
  Rat& operator[](std::uint32_t bits) { return values_.at(bits); }
  const Rat& operator[](std::uint32_t bits) const { return values_.at(bits); }

  // Requires index() == {1, ..., grade - 1}.
  ClassFunction to_class_function(int grade) const;

  friend bool operator==(const IndexedClassFunction&, const IndexedClassFunction&) = default;

 private:
  int nu_;
  std::vector<int> index_;
  std::vector<Rat> values_;
};

// a * 1 + b * reg_bar on Q_1(nu), where reg_bar = (reg - 1) / (nu - 1).
struct Atom {
  Rat one;
  Rat reg_bar;

  Rat at_zero() const { return one + reg_bar; }
  Rat at_nonzero(int nu) const { return one - reg_bar / (nu - 1); }

  static Atom unit() { return {1, 0}; }
  static Atom regular_bar() { return {0, 1}; }
};

// Tensor product of atoms, one per index.
IndexedClassFunction from_atoms(int nu, const std::vector<std::pair<int, Atom>>& atoms);

// phi ⊗ psi over the disjoint union of the index sets.
IndexedClassFunction tensor_u(const IndexedClassFunction& phi, const IndexedClassFunction& psi);
// Same, checking that the index sets partition the ambient set.
IndexedClassFunction tensor_u(const IndexedClassFunction& phi, const IndexedClassFunction& psi,
                              const std::vector<int>& ambient);
IndexedClassFunction restrict(const IndexedClassFunction& phi, const std::vector<int>& t);
ClassFunction restrict(const ClassFunction& phi, const Subset& t);
// Relabel the index set of phi onto s, order preserving.
IndexedClassFunction reindex(const IndexedClassFunction& phi, const std::vector<int>& s);

ClassFunction one(int nu, int n);
ClassFunction kappa(const Subset& i, int nu);
ClassFunction chi(const Subset& i, int nu);
ClassFunction chi_dot(const Subset& i, int nu);

// Tensor in the kappa ⊗ kappa coordinates.
class ClassTensor {
 public:
  struct Key {
    int left_grade;
    std::uint32_t left;
    int right_grade;
    std::uint32_t right;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  explicit ClassTensor(int nu) : nu_(nu) {}
  int nu() const { return nu_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  void add(const Subset& left, const Subset& right, const Rat& c);
  ClassTensor& operator+=(const ClassTensor& o);
  friend bool operator==(const ClassTensor&, const ClassTensor&) = default;

 private:
  int nu_;
  std::map<Key, Rat> terms_;
};

// The A-summand of the product Q_m × Q_n → Q_{m+n}; A is an n-subset of [m+n].
ClassFunction m_A(const ClassFunction& phi, const ClassFunction& psi, const Subset& a);
ClassFunction m(const ClassFunction& phi, const ClassFunction& psi);
ClassTensor coprod_k(const ClassFunction& phi, int k);
ClassTensor coprod(const ClassFunction& phi);

// Closed forms in the kappa basis.
ClassFunction kappa_product(const Subset& i, const Subset& j, int nu);
ClassTensor kappa_coproduct(const Composition& gamma, int nu);

ClassFunction mk_G_classfn(const Subset& i, int nu);
ClassFunction mk_M_classfn(const Subset& i, int nu);
// Atoms 1 on I and reg_bar + f(i) off I; f is indexed by position i - 1.
ClassFunction mk_phi_If(const Subset& i, const std::vector<Rat>& f, int nu);
std::map<Subset, Rat> expand_in_G(const Subset& i, const std::vector<Rat>& f, int nu);
// Expansion of an arbitrary class function in the G-class-function basis.
std::map<Subset, Rat> expand_in_G(const ClassFunction& phi);

Rat hall_inner(const ClassFunction& phi, const ClassFunction& psi);
// Characteristic map to QSym, written in the L basis.
QSymElement ch(const ClassFunction& phi);
TensorElement ch(const ClassTensor& t);

}  // namespace qsym
