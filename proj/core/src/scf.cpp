#include "qsym/scf.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsym {

namespace {

std::size_t class_count(int n) { return std::size_t{1} << (n > 0 ? n - 1 : 0); }

void check_nu(int nu) {
  if (nu < 2) throw std::invalid_argument("nu must be at least 2");
}

Rat power(const Rat& base, int e) {
  Rat r = 1;
  if (e < 0) return 1 / power(base, -e);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- ClassFunction

ClassFunction::ClassFunction(int nu, int n) : nu_(nu), n_(n) {
  check_nu(nu);
  if (n < 0 || n > 24) throw std::invalid_argument("class function grade out of range");
  values_.assign(class_count(n), Rat(0));
}

ClassFunction::ClassFunction(int nu, int n, std::vector<Rat> values) : ClassFunction(nu, n) {
  if (values.size() != values_.size()) throw std::invalid_argument("wrong number of class values");
  values_ = std::move(values);
}

const Rat& ClassFunction::value(const Subset& j) const {
  if (j.grade() != n_) throw std::invalid_argument("superclass of the wrong grade");
  return values_[j.bits()];
}

namespace {

void check_compatible(const ClassFunction& a, const ClassFunction& b) {
  if (a.nu() != b.nu() || a.grade() != b.grade())
    throw std::invalid_argument("class functions on different groups");
}

}  // namespace

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_compatible(*this, o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_compatible(*this, o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rat& c) {
  for (auto& v : values_) v *= c;
  return *this;
}

// ---------------------------------------------------------------- IndexedClassFunction

IndexedClassFunction::IndexedClassFunction(int nu, std::vector<int> index)
    : nu_(nu), index_(std::move(index)) {
  check_nu(nu);
  for (std::size_t k = 0; k < index_.size(); ++k) {
    if (index_[k] < 1 || (k > 0 && index_[k] <= index_[k - 1]))
      throw std::invalid_argument("index set must be increasing positive integers");
  }
  if (index_.size() > 24) throw std::invalid_argument("index set too large");
  values_.assign(std::size_t{1} << index_.size(), Rat(0));
}

IndexedClassFunction::IndexedClassFunction(int nu, std::vector<int> index, std::vector<Rat> values)
    : IndexedClassFunction(nu, std::move(index)) {
  if (values.size() != values_.size()) throw std::invalid_argument("wrong number of class values");
  values_ = std::move(values);
}

IndexedClassFunction::IndexedClassFunction(const ClassFunction& phi)
    : IndexedClassFunction(phi.nu(), range(1, phi.grade() - 1), phi.values()) {}

Rat IndexedClassFunction::value_at(const std::vector<int>& support) const {
  std::uint32_t bits = 0;
  for (int e : support) {
    auto it = std::lower_bound(index_.begin(), index_.end(), e);
    if (it == index_.end() || *it != e) throw std::invalid_argument("support outside the index set");
    bits |= 1u << (it - index_.begin());
  }
  return values_[bits];
}

ClassFunction IndexedClassFunction::to_class_function(int grade) const {
  if (index_ != range(1, grade - 1)) throw std::invalid_argument("index set is not [grade-1]");
  return ClassFunction(nu_, grade, values_);
}

IndexedClassFunction from_atoms(int nu, const std::vector<std::pair<int, Atom>>& atoms) {
  std::vector<std::pair<int, Atom>> sorted = atoms;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> index;
  for (const auto& [i, atom] : sorted) index.push_back(i);
  IndexedClassFunction out(nu, index);
  for (std::uint32_t bits = 0; bits < out.values().size(); ++bits) {
    Rat v = 1;
    for (std::size_t k = 0; k < sorted.size(); ++k)
      v *= (bits >> k) & 1u ? sorted[k].second.at_nonzero(nu) : sorted[k].second.at_zero();
    out[bits] = v;
  }
  return out;
}

IndexedClassFunction tensor_u(const IndexedClassFunction& phi, const IndexedClassFunction& psi) {
  if (phi.nu() != psi.nu()) throw std::invalid_argument("tensor of class functions with different nu");
  std::vector<int> u;
  std::vector<std::pair<int, int>> source;  // (which factor, bit there)
  std::size_t a = 0, b = 0;
  const auto& ia = phi.index();
  const auto& ib = psi.index();
  while (a < ia.size() || b < ib.size()) {
    if (b == ib.size() || (a < ia.size() && ia[a] < ib[b])) {
      u.push_back(ia[a]);
      source.emplace_back(0, static_cast<int>(a++));
    } else if (a == ia.size() || ib[b] < ia[a]) {
      u.push_back(ib[b]);
      source.emplace_back(1, static_cast<int>(b++));
    } else {
      throw std::invalid_argument("tensor of class functions with overlapping index sets");
    }
  }
  IndexedClassFunction out(phi.nu(), u);
  for (std::uint32_t bits = 0; bits < out.values().size(); ++bits) {
    std::uint32_t pa = 0, pb = 0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (!((bits >> k) & 1u)) continue;
      if (source[k].first == 0)
        pa |= 1u << source[k].second;
      else
        pb |= 1u << source[k].second;
    }
    out[bits] = phi[pa] * psi[pb];
  }
  return out;
}

IndexedClassFunction tensor_u(const IndexedClassFunction& phi, const IndexedClassFunction& psi,
                              const std::vector<int>& ambient) {
  IndexedClassFunction out = tensor_u(phi, psi);
  std::vector<int> sorted = ambient;
  std::sort(sorted.begin(), sorted.end());
  if (out.index() != sorted) throw std::invalid_argument("index sets do not partition the ambient set");
  return out;
}

IndexedClassFunction restrict(const IndexedClassFunction& phi, const std::vector<int>& t) {
  std::vector<int> sorted = t;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> where;
  for (int e : sorted) {
    auto it = std::lower_bound(phi.index().begin(), phi.index().end(), e);
    if (it == phi.index().end() || *it != e) throw std::invalid_argument("restriction to a non-subset");
    where.push_back(static_cast<int>(it - phi.index().begin()));
  }
  IndexedClassFunction out(phi.nu(), sorted);
  for (std::uint32_t bits = 0; bits < out.values().size(); ++bits) {
    std::uint32_t src = 0;
    for (std::size_t k = 0; k < where.size(); ++k)
      if ((bits >> k) & 1u) src |= 1u << where[k];
    out[bits] = phi[src];
  }
  return out;
}

ClassFunction restrict(const ClassFunction& phi, const Subset& t) {
  if (t.grade() != phi.grade()) throw std::invalid_argument("restriction set of the wrong grade");
  ClassFunction out(phi.nu(), phi.grade());
  for (std::uint32_t bits = 0; bits < out.num_classes(); ++bits)
    if ((bits & ~t.bits()) == 0) out[bits] = phi[bits];
  return out;
}

IndexedClassFunction reindex(const IndexedClassFunction& phi, const std::vector<int>& s) {
  if (s.size() != phi.index().size()) throw std::invalid_argument("reindexing onto a set of another size");
  return IndexedClassFunction(phi.nu(), s, phi.values());
}

// ---------------------------------------------------------------- standard functions

ClassFunction one(int nu, int n) {
  ClassFunction out(nu, n);
  for (std::uint32_t bits = 0; bits < out.num_classes(); ++bits) out[bits] = 1;
  return out;
}

ClassFunction kappa(const Subset& i, int nu) {
  ClassFunction out(nu, i.grade());
  out[i.bits()] = 1;
  return out;
}

ClassFunction chi(const Subset& i, int nu) {
  ClassFunction out(nu, i.grade());
  Subset off = i.complement();
  for (std::uint32_t bits = 0; bits < out.num_classes(); ++bits) {
    Subset j = Subset::from_bits(i.grade(), bits);
    int hits = (off & j).size();
    int misses = off.size() - hits;
    out[bits] = power(Rat(nu - 1), misses) * (hits % 2 ? -1 : 1);
  }
  return out;
}

ClassFunction chi_dot(const Subset& i, int nu) {
  return chi(i, nu) * (1 / power(Rat(nu - 1), i.complement().size()));
}

// ---------------------------------------------------------------- ClassTensor

void ClassTensor::add(const Subset& left, const Subset& right, const Rat& c) {
  if (sgn(c) == 0) return;
  Key key{left.grade(), left.bits(), right.grade(), right.bits()};
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ClassTensor& ClassTensor::operator+=(const ClassTensor& o) {
  if (o.nu_ != nu_) throw std::invalid_argument("tensors with different nu");
  for (const auto& [key, c] : o.terms_)
    add(Subset::from_bits(key.left_grade, key.left), Subset::from_bits(key.right_grade, key.right), c);
  return *this;
}

// ---------------------------------------------------------------- product and coproduct

ClassFunction m_A(const ClassFunction& phi, const ClassFunction& psi, const Subset& a) {
  if (phi.nu() != psi.nu()) throw std::invalid_argument("product of class functions with different nu");
  const int nu = phi.nu(), m = phi.grade(), n = psi.grade();
  if (a.grade() != m + n + 1 || a.size() != n) throw std::invalid_argument("A must be an n-subset of [m+n]");
  if (m == 0) return psi * phi.values()[0];
  if (n == 0) return phi * psi.values()[0];

  IndexedClassFunction left = tensor_u(IndexedClassFunction(phi), from_atoms(nu, {{m, Atom::regular_bar()}}));
  IndexedClassFunction right = tensor_u(IndexedClassFunction(psi), from_atoms(nu, {{n, Atom::regular_bar()}}));
  IndexedClassFunction s =
      tensor_u(reindex(left, a.complement().elements()), reindex(right, a.elements()), range(1, m + n));

  IntervalStats st = interval_stats(a);
  IndexedClassFunction r = restrict(s, (Subset::full(m + n) - st.all_ends).elements());
  std::vector<std::pair<int, Atom>> atoms;
  for (int e : st.ends.elements()) atoms.emplace_back(e, Atom::unit());
  for (int e : st.complement_ends.elements()) atoms.emplace_back(e, Atom::regular_bar());
  return tensor_u(r, from_atoms(nu, atoms), range(1, m + n - 1)).to_class_function(m + n);
}

ClassFunction m(const ClassFunction& phi, const ClassFunction& psi) {
  const int total = phi.grade() + psi.grade();
  ClassFunction out(phi.nu(), total);
  for (const auto& a : subsets_of_size(total, psi.grade())) out += m_A(phi, psi, a);
  return out;
}

ClassTensor coprod_k(const ClassFunction& phi, int k) {
  const int n = phi.grade();
  if (k < 0 || k > n) throw std::invalid_argument("split point outside [0, n]");
  ClassTensor out(phi.nu());
  if (k == 0 || k == n) {
    for (std::uint32_t bits = 0; bits < phi.num_classes(); ++bits) {
      Subset j = Subset::from_bits(n, bits);
      if (k == 0)
        out.add(Subset(0), j, phi[bits]);
      else
        out.add(j, Subset(0), phi[bits]);
    }
    return out;
  }
  std::vector<int> t = range(1, k - 1);
  for (int i = k + 1; i <= n - 1; ++i) t.push_back(i);
  IndexedClassFunction r = restrict(IndexedClassFunction(phi), t);
  for (std::uint32_t bits = 0; bits < r.values().size(); ++bits) {
    std::vector<int> left, right;
    for (std::size_t p = 0; p < t.size(); ++p) {
      if (!((bits >> p) & 1u)) continue;
      if (t[p] < k)
        left.push_back(t[p]);
      else
        right.push_back(t[p] - k);
    }
    out.add(Subset(k, left), Subset(n - k, right), r[bits]);
  }
  return out;
}

ClassTensor coprod(const ClassFunction& phi) {
  ClassTensor out(phi.nu());
  for (int k = 0; k <= phi.grade(); ++k) {
    if (phi.grade() == 0 && k > 0) break;
    out += coprod_k(phi, k);
  }
  return out;
}

ClassFunction kappa_product(const Subset& i, const Subset& j, int nu) {
  const int m = i.grade(), n = j.grade();
  if (m == 0) return kappa(j, nu);
  if (n == 0) return kappa(i, nu);
  ClassFunction out(nu, m + n);
  Rat scale = 1 / Rat(1 - nu);
  for (const auto& a : subsets_of_size(m + n, n)) {
    IntervalStats st = interval_stats(a);
    Subset sharp = preshuffle(i, j, a).sharp;
    if (!(sharp & st.all_ends).empty()) continue;
    std::uint32_t free = st.all_ends.bits();
    for (std::uint32_t s = free;; s = (s - 1) & free) {
      Subset extra = Subset::from_bits(m + n, s);
      out[(sharp | extra).bits()] += power(scale, (extra & st.complement_ends).size());
      if (s == 0) break;
    }
  }
  return out;
}

ClassTensor kappa_coproduct(const Composition& gamma, int nu) {
  ClassTensor out(nu);
  for (const auto& [a, b] : near_deconcatenations(gamma)) out.add(set_of(a), set_of(b), 1);
  return out;
}

// ---------------------------------------------------------------- G and M class functions

namespace {

ClassFunction from_atom_list(int nu, int n, const std::vector<std::pair<int, Atom>>& atoms) {
  if (n == 0) return one(nu, 0);
  return from_atoms(nu, atoms).to_class_function(n);
}

}  // namespace

ClassFunction mk_G_classfn(const Subset& i, int nu) {
  std::vector<std::pair<int, Atom>> atoms;
  for (int p = 1; p <= i.universe(); ++p)
    atoms.emplace_back(p, i.contains(p) ? Atom::unit() : Atom{-power(Rat(nu), weight(i, p)), 1});
  return from_atom_list(nu, i.grade(), atoms);
}

ClassFunction mk_M_classfn(const Subset& i, int nu) {
  std::vector<std::pair<int, Atom>> atoms;
  for (int p = 1; p <= i.universe(); ++p)
    atoms.emplace_back(p, i.contains(p) ? Atom::unit() : Atom{-Rat(nu), 1});
  return from_atom_list(nu, i.grade(), atoms);
}

ClassFunction mk_phi_If(const Subset& i, const std::vector<Rat>& f, int nu) {
  if (static_cast<int>(f.size()) != i.universe()) throw std::invalid_argument("f must have one value per position");
  std::vector<std::pair<int, Atom>> atoms;
  for (int p = 1; p <= i.universe(); ++p)
    atoms.emplace_back(p, i.contains(p) ? Atom::unit() : Atom{f[p - 1], 1});
  return from_atom_list(nu, i.grade(), atoms);
}

std::map<Subset, Rat> expand_in_G(const Subset& i, const std::vector<Rat>& f, int nu) {
  if (static_cast<int>(f.size()) != i.universe()) throw std::invalid_argument("f must have one value per position");
  std::map<Subset, Rat> out;
  for (const auto& j : all_subsets(i.grade())) {
    if (!i.is_subset_of(j)) continue;
    Rat c = 1;
    for (int e : (j - i).elements()) c *= power(Rat(nu), weight(j, e)) + f[e - 1];
    if (sgn(c) != 0) out.emplace(j, c);
  }
  return out;
}

std::map<Subset, Rat> expand_in_G(const ClassFunction& phi) {
  QSymElement g(BasisKind::G);
  QSymElement l = ch(phi);
  for (const auto& [alpha, c] : l.terms()) g += l_in_G(alpha) * c;
  std::map<Subset, Rat> out;
  for (const auto& [alpha, c] : g.terms()) {
    Rat v = c.eval(Rat(phi.nu()), 0);
    if (sgn(v) != 0) out.emplace(set_of(alpha), v);
  }
  return out;
}

// ---------------------------------------------------------------- inner product and ch

Rat hall_inner(const ClassFunction& phi, const ClassFunction& psi) {
  check_compatible(phi, psi);
  const int nu = phi.nu();
  Rat sum = 0;
  for (std::uint32_t bits = 0; bits < phi.num_classes(); ++bits) {
    int size = Subset::from_bits(phi.grade(), bits).size();
    sum += power(Rat(nu - 1), size) * phi[bits] * psi[bits];
  }
  return sum / power(Rat(nu), std::max(phi.grade() - 1, 0));
}

QSymElement ch(const ClassFunction& phi) {
  QSymElement out(BasisKind::L);
  for (const auto& i : all_subsets(phi.grade())) out.add(comp_of(i), RatFunc(hall_inner(phi, chi(i, phi.nu()))));
  return out;
}

TensorElement ch(const ClassTensor& t) {
  TensorElement out(BasisKind::L, BasisKind::L);
  for (const auto& [key, c] : t.terms()) {
    QSymElement a = ch(kappa(Subset::from_bits(key.left_grade, key.left), t.nu()));
    QSymElement b = ch(kappa(Subset::from_bits(key.right_grade, key.right), t.nu()));
    for (const auto& [ga, ca] : a.terms())
      for (const auto& [gb, cb] : b.terms()) out.add(ga, gb, RatFunc(c) * ca * cb);
  }
  return out;
}

}  // namespace qsym
