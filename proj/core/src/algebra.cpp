#include "qsym/algebra.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qsym {

// ---------------------------------------------------------------- Basis

Basis::Basis(BasisKind kind) : kind_(kind) {
  if (kind == BasisKind::K) throw std::invalid_argument("the K basis needs a value of nu");
}

Basis Basis::K(int nu) {
  if (nu < 2) throw std::invalid_argument("nu must be at least 2");
  return Basis(BasisKind::K, nu);
}

std::string Basis::name() const {
  switch (kind_) {
    case BasisKind::M: return "M";
    case BasisKind::L: return "L";
    case BasisKind::E: return "E";
    case BasisKind::LambdaStar: return "LambdaStar";
    case BasisKind::Eta: return "Eta";
    case BasisKind::EtaQ: return "EtaQ";
    case BasisKind::D: return "D";
    case BasisKind::G: return "G";
    case BasisKind::Mq: return "Mq";
    case BasisKind::K: return "K";
  }
  return "?";
}

Basis basis_from_name(std::string_view name, std::optional<int> nu) {
  static const std::pair<std::string_view, BasisKind> names[] = {
      {"M", BasisKind::M},       {"L", BasisKind::L},     {"E", BasisKind::E},
      {"LambdaStar", BasisKind::LambdaStar}, {"Eta", BasisKind::Eta}, {"EtaQ", BasisKind::EtaQ},
      {"D", BasisKind::D},       {"G", BasisKind::G},     {"Mq", BasisKind::Mq},
      {"K", BasisKind::K}};
  for (const auto& [n, kind] : names) {
    if (n != name) continue;
    if (kind == BasisKind::K) {
      if (!nu) throw std::invalid_argument("the K basis needs a value of nu");
      return Basis::K(*nu);
    }
    return Basis(kind);
  }
  throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

std::vector<Basis> rule_bases() {
  return {BasisKind::M,   BasisKind::L, BasisKind::E, BasisKind::LambdaStar, BasisKind::Eta,
          BasisKind::EtaQ, BasisKind::D, BasisKind::G, BasisKind::Mq};
}

// ---------------------------------------------------------------- QSymElement

QSymElement QSymElement::single(Basis basis, const Composition& alpha, const RatFunc& coeff) {
  QSymElement x(basis);
  x.add(alpha, coeff);
  return x;
}

RatFunc QSymElement::coefficient(const Composition& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? RatFunc() : it->second;
}

void QSymElement::add(const Composition& alpha, const RatFunc& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QSymElement QSymElement::homogeneous_part(int n) const {
  QSymElement out(basis_);
  for (const auto& [alpha, c] : terms_)
    if (alpha.size() == n) out.terms_.emplace(alpha, c);
  return out;
}

namespace {

void check_basis(const Basis& a, const Basis& b) {
  if (a != b) throw std::invalid_argument("elements live in different bases: " + a.name() + ", " + b.name());
}

}  // namespace

QSymElement& QSymElement::operator+=(const QSymElement& o) {
  check_basis(basis_, o.basis_);
  for (const auto& [alpha, c] : o.terms_) add(alpha, c);
  return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& o) {
  check_basis(basis_, o.basis_);
  for (const auto& [alpha, c] : o.terms_) add(alpha, -c);
  return *this;
}

QSymElement& QSymElement::operator*=(const RatFunc& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const QSymElement& a, const QSymElement& b) {
  if (a.basis_ != b.basis_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

namespace {

std::string basis_label(const Basis& b, const Composition& alpha) {
  std::ostringstream os;
  os << b.name() << '[';
  for (int i = 0; i < alpha.length(); ++i) os << (i ? "," : "") << alpha[i];
  os << ']';
  if (b.kind() == BasisKind::K) os << "(nu=" << b.nu() << ')';
  return os.str();
}

// Appends "+ c*X" with the sign folded into simple coefficients.
void append_term(std::ostringstream& os, bool first, const RatFunc& c, const std::string& label) {
  auto k = c.as_constant();
  bool negative = k && sgn(*k) < 0;
  if (!first) os << (negative ? " - " : " + ");
  else if (negative) os << '-';
  if (k) {
    Rat a = abs(*k);
    if (a != 1) os << a.get_str() << '*';
  } else {
    os << '(' << c.to_string() << ")*";
  }
  os << label;
}

}  // namespace

std::string QSymElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    append_term(os, first, c, basis_label(basis_, alpha));
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- TensorElement

RatFunc TensorElement::coefficient(const Composition& a, const Composition& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? RatFunc() : it->second;
}

void TensorElement::add(const Composition& a, const Composition& b, const RatFunc& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  check_basis(left_, o.left_);
  check_basis(right_, o.right_);
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  check_basis(left_, o.left_);
  check_basis(right_, o.right_);
  for (const auto& [key, c] : o.terms_) add(key.first, key.second, -c);
  return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  if (a.left_ != b.left_ || a.right_ != b.right_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

std::string TensorElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    append_term(os, first, c, basis_label(left_, key.first) + " # " + basis_label(right_, key.second));
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- helpers

namespace {

RatFunc sign(int k) { return k % 2 == 0 ? RatFunc(1) : RatFunc(-1); }

RatFunc qpow(int e) { return RatFunc::q(e); }

RatFunc rf(int c) { return RatFunc(c); }

RatFunc rpow(const RatFunc& base, int e) { return base.pow(e); }

template <class Key, class Value, class F>
Value cached(std::map<Key, Value>& cache, std::mutex& mu, const Key& key, F&& compute) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Value v = compute();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(v)).first->second;
}

QSymElement expand_in_M_uncached(Basis basis, const Composition& alpha) {
  const int n = alpha.size(), l = alpha.length();
  QSymElement out(BasisKind::M);
  if (n == 0) {
    out.add(alpha, 1);
    return out;
  }
  switch (basis.kind()) {
    case BasisKind::M:
      out.add(alpha, 1);
      break;
    case BasisKind::L:
      for (const auto& beta : refinements(alpha)) out.add(beta, 1);
      break;
    case BasisKind::E:
      for (const auto& beta : coarsenings(alpha)) out.add(beta, 1);
      break;
    case BasisKind::LambdaStar:
      for (const auto& beta : coarsenings(alpha)) out.add(beta, sign(n - l));
      break;
    case BasisKind::Eta:
      for (const auto& beta : coarsenings(alpha)) out.add(beta, rpow(rf(2), beta.length()));
      break;
    case BasisKind::EtaQ:
      for (const auto& beta : coarsenings(alpha))
        out.add(beta, rpow(RatFunc::q() + 1, beta.length()));
      break;
    case BasisKind::D:
      for (const auto& beta : coarsenings(alpha))
        out.add(beta, qpow(beta.length() - n) * rpow(-RatFunc::t(), l - beta.length()));
      break;
    case BasisKind::G: {
      QSymElement l = g_in_L(alpha);
      for (const auto& [gamma, c] : l.terms()) out += expand_in_M(BasisKind::L, gamma) * c;
      break;
    }
    case BasisKind::Mq: {
      QSymElement l = mq_in_L(alpha);
      for (const auto& [gamma, c] : l.terms()) out += expand_in_M(BasisKind::L, gamma) * c;
      break;
    }
    case BasisKind::K: {
      const RatFunc nu = rf(basis.nu());
      Subset j = set_of(alpha);
      RatFunc scale = rpow(RatFunc(1) / (1 - nu), j.size());
      RatFunc ratio = (nu - 1) / nu;
      for (const auto& i : all_subsets(n)) {
        if (!(i & j).empty()) continue;
        out.add(comp_of(i), scale * rpow(ratio, n - 1 - i.size()));
      }
      break;
    }
  }
  return out;
}

// Inverts a basis whose M-expansion of B_gamma is gamma plus coarser terms.
QSymElement triangular_from_M(const QSymElement& x, Basis target) {
  QSymElement result(target);
  std::map<Composition, RatFunc> rem = x.terms();
  while (!rem.empty()) {
    auto it = std::max_element(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
      return a.first.length() < b.first.length();
    });
    Composition gamma = it->first;
    QSymElement e = expand_in_M(target, gamma);
    RatFunc coef = it->second / e.coefficient(gamma);
    result.add(gamma, coef);
    for (const auto& [beta, d] : e.terms()) {
      auto [r, inserted] = rem.try_emplace(beta, -(coef * d));
      if (!inserted) r->second -= coef * d;
      if (r->second.is_zero()) rem.erase(r);
    }
  }
  return result;
}

QSymElement l_from_M(const Composition& alpha) {
  QSymElement out(BasisKind::L);
  for (const auto& beta : refinements(alpha)) out.add(beta, sign(beta.length() - alpha.length()));
  return out;
}

QSymElement single_from_M(const Composition& alpha, Basis target) {
  switch (target.kind()) {
    case BasisKind::M:
      return QSymElement::single(target, alpha);
    case BasisKind::L:
      return l_from_M(alpha);
    case BasisKind::G: {
      QSymElement out(target);
      QSymElement l = l_from_M(alpha);
      for (const auto& [gamma, c] : l.terms()) out += l_in_G(gamma) * c;
      return out;
    }
    case BasisKind::Mq: {
      QSymElement out(target);
      QSymElement l = l_from_M(alpha);
      for (const auto& [gamma, c] : l.terms()) out += l_in_Mq(gamma) * c;
      return out;
    }
    case BasisKind::K:
      return m_in_K(alpha, target.nu());
    default:
      return triangular_from_M(QSymElement::single(BasisKind::M, alpha), target);
  }
}

std::mutex expand_mu;
std::map<std::pair<Basis, Composition>, QSymElement> expand_cache;
std::mutex from_mu;
std::map<std::pair<Basis, Composition>, QSymElement> from_cache;

}  // namespace

// ---------------------------------------------------------------- changes of basis

QSymElement expand_in_M(Basis basis, const Composition& alpha) {
  return cached(expand_cache, expand_mu, std::pair{basis, alpha},
                [&] { return expand_in_M_uncached(basis, alpha); });
}

QSymElement to_M(const QSymElement& x) {
  if (x.basis() == Basis(BasisKind::M)) return x;
  QSymElement out(BasisKind::M);
  for (const auto& [alpha, c] : x.terms()) out += expand_in_M(x.basis(), alpha) * c;
  return out;
}

QSymElement from_M(const QSymElement& x, Basis target) {
  check_basis(x.basis(), BasisKind::M);
  if (target == Basis(BasisKind::M)) return x;
  QSymElement out(target);
  for (const auto& [alpha, c] : x.terms())
    out += cached(from_cache, from_mu, std::pair{target, alpha},
                  [&] { return single_from_M(alpha, target); }) * c;
  return out;
}

QSymElement convert(const QSymElement& x, Basis target) {
  if (x.basis() == target) return x;
  return from_M(to_M(x), target);
}

TensorElement convert(const TensorElement& x, Basis left, Basis right) {
  if (x.left_basis() == left && x.right_basis() == right) return x;
  TensorElement out(left, right);
  for (const auto& [key, c] : x.terms()) {
    QSymElement a = convert(QSymElement::single(x.left_basis(), key.first), left);
    QSymElement b = convert(QSymElement::single(x.right_basis(), key.second), right);
    for (const auto& [ga, ca] : a.terms())
      for (const auto& [gb, cb] : b.terms()) out.add(ga, gb, c * ca * cb);
  }
  return out;
}

QSymElement g_in_L(const Composition& alpha) {
  QSymElement out(BasisKind::L);
  Subset i = set_of(alpha);
  for (const auto& j : all_subsets(alpha.size())) {
    if (!i.is_subset_of(j)) continue;
    out.add(comp_of(j), sign((j - i).size()) * qpow(stat_s(i, j)));
  }
  return out;
}

QSymElement l_in_G(const Composition& alpha) {
  QSymElement out(BasisKind::G);
  Subset i = set_of(alpha);
  for (const auto& j : all_subsets(alpha.size())) {
    if (!i.is_subset_of(j)) continue;
    out.add(comp_of(j), qpow(stat_g(i, j)));
  }
  return out;
}

QSymElement mq_in_L(const Composition& alpha) {
  QSymElement out(BasisKind::L);
  for (const auto& beta : refinements(alpha))
    out.add(beta, rpow(-RatFunc::q(), beta.length() - alpha.length()));
  return out;
}

QSymElement l_in_Mq(const Composition& alpha) {
  QSymElement out(BasisKind::Mq);
  for (const auto& beta : refinements(alpha)) out.add(beta, qpow(beta.length() - alpha.length()));
  return out;
}

QSymElement l_in_K(const Composition& alpha, int nu_value) {
  Basis k = Basis::K(nu_value);
  const RatFunc nu = rf(nu_value);
  QSymElement out(k);
  Subset i = set_of(alpha);
  for (const auto& j : all_subsets(alpha.size()))
    out.add(comp_of(j), sign((j - i).size()) * rpow(nu - 1, (i & j).size()));
  return out;
}

QSymElement k_in_L(const Composition& alpha, int nu_value) {
  (void)Basis::K(nu_value);
  const RatFunc nu = rf(nu_value);
  const int n = alpha.size();
  QSymElement out(BasisKind::L);
  if (n == 0) {
    out.add(alpha, 1);
    return out;
  }
  Subset j = set_of(alpha);
  RatFunc scale = rpow(nu, -(n - 1));
  for (const auto& i : all_subsets(n))
    out.add(comp_of(i), scale * sign((j - i).size()) * rpow(nu - 1, (i | j).complement().size()));
  return out;
}

QSymElement m_in_K(const Composition& alpha, int nu_value) {
  Basis k = Basis::K(nu_value);
  const RatFunc nu = rf(nu_value);
  QSymElement out(k);
  Subset i = set_of(alpha);
  Subset full = Subset::full(alpha.size());
  for (const auto& j : all_subsets(alpha.size())) {
    if ((i | j) != full) continue;
    out.add(comp_of(j), rpow(-nu, (j - i).size()) * rpow(nu - 1, (i & j).size()));
  }
  return out;
}

std::vector<std::pair<Composition, QSymElement>> dl_transition(DLTransition dir, int n) {
  std::vector<std::pair<Composition, QSymElement>> rows;
  const RatFunc q = RatFunc::q(), t = RatFunc::t();
  for (const auto& alpha : compositions_of(n)) {
    Subset a = set_of(alpha);
    switch (dir) {
      case DLTransition::LtoD: {
        QSymElement row(BasisKind::D);
        for (const auto& j : all_subsets(n))
          row.add(comp_of(j), rpow(t, (a - j).size()) * rpow(q + t, (a | j).complement().size()));
        rows.emplace_back(alpha, row);
        break;
      }
      case DLTransition::DtoL: {
        QSymElement row(BasisKind::L);
        for (const auto& i : all_subsets(n))
          row.add(comp_of(i), sign((i - a).size() + (a - i).size()) * rpow(t, (a - i).size()) *
                                  qpow(std::min(1 - n, 0)) * rpow(q + t, (i & a).size()));
        rows.emplace_back(alpha, row);
        break;
      }
      case DLTransition::MtoD: {
        QSymElement row(BasisKind::D);
        for (const auto& beta : coarsenings(alpha))
          row.add(beta, qpow(n - alpha.length()) * rpow(t, alpha.length() - beta.length()));
        rows.emplace_back(alpha, row);
        break;
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------- antipode, counit, coefficients

RatFunc counit(const QSymElement& x) { return x.coefficient(Composition()); }

QSymElement antipode_M(const QSymElement& x) {
  check_basis(x.basis(), BasisKind::M);
  QSymElement out(BasisKind::M);
  for (const auto& [alpha, c] : x.terms())
    for (const auto& gamma : coarsenings(reverse(alpha))) out.add(gamma, sign(alpha.length()) * c);
  return out;
}

QSymElement antipode(const QSymElement& x) { return from_M(antipode_M(to_M(x)), x.basis()); }

QSymElement substitute(const QSymElement& x, const RatFunc& q, const RatFunc& t) {
  QSymElement out(x.basis());
  for (const auto& [alpha, c] : x.terms()) out.add(alpha, c.substitute(q, t));
  return out;
}

QSymElement evaluate(const QSymElement& x, const Rat& q, const Rat& t) {
  QSymElement out(x.basis());
  for (const auto& [alpha, c] : x.terms()) out.add(alpha, RatFunc(c.eval(q, t)));
  return out;
}

}  // namespace qsym
