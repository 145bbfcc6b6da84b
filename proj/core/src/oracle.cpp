#include "qsym/oracle.hpp"

#include <set>

namespace qsym {

int degree(const TruncPoly::Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

TruncPoly::TruncPoly(int nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
  if (max_degree < 0 || max_degree > 255) throw std::invalid_argument("unsupported truncation degree");
}

void TruncPoly::add(const Exponents& e, const RatFunc& c) {
  if (c.is_zero() || degree(e) > max_degree_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TruncPoly TruncPoly::homogeneous_part(int d) const {
  TruncPoly out(nvars_, max_degree_);
  for (const auto& [e, c] : terms_)
    if (degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

TruncPoly& TruncPoly::operator*=(const RatFunc& c) {
  if (c.is_zero()) terms_.clear();
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomials in different variables");
  TruncPoly out(a.nvars_, std::min(a.max_degree_, b.max_degree_));
  for (const auto& [ea, ca] : a.terms_) {
    int da = degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + degree(eb) > out.max_degree_) continue;
      TruncPoly::Exponents e{};
      for (int k = 0; k < a.nvars_; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      out.add(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const TruncPoly& a, const TruncPoly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
    if (i->first != j->first || !(i->second == j->second)) return false;
  return true;
}

TruncPoly expand_M(const Composition& alpha, int nvars, int max_degree) {
  TruncPoly out(nvars, max_degree);
  const int l = alpha.length();
  // Fewer variables than parts would give zero and hide mistakes.
  if (l > nvars) throw std::invalid_argument("M" + alpha.to_string() + " needs at least " + std::to_string(l) + " variables");
  if (alpha.size() > max_degree) return out;
  if (l == 0) {
    out.add(TruncPoly::Exponents{}, 1);
    return out;
  }
  for (const auto& pos : subsets_of_size(nvars, l)) {
    TruncPoly::Exponents e{};
    auto idx = pos.elements();
    for (int k = 0; k < l; ++k) e[idx[k] - 1] = static_cast<std::uint8_t>(alpha[k]);
    out.add(e, 1);
  }
  return out;
}

TruncPoly expand(const QSymElement& x, int nvars, int max_degree) {
  TruncPoly out(nvars, max_degree);
  QSymElement xm = to_M(x);
  for (const auto& [alpha, c] : xm.terms()) {
    if (alpha.size() > max_degree) continue;
    TruncPoly p = expand_M(alpha, nvars, max_degree);
    p *= c;
    out += p;
  }
  return out;
}

QSymElement extract_M(const TruncPoly& p, int d) {
  QSymElement out(BasisKind::M);
  TruncPoly part = p.homogeneous_part(d);
  for (const auto& [e, c] : part.terms()) {
    // Packed-left exponent vectors are the M-monomial leaders.
    std::vector<int> parts;
    bool packed = true;
    for (int k = 0; k < p.nvars(); ++k) {
      if (e[k] == 0) {
        for (int r = k + 1; r < p.nvars(); ++r) packed = packed && e[r] == 0;
        break;
      }
      parts.push_back(e[k]);
    }
    if (packed) out.add(Composition(parts), c);
  }
  TruncPoly check(p.nvars(), p.max_degree());
  for (const auto& [alpha, c] : out.terms()) {
    TruncPoly m = expand_M(alpha, p.nvars(), p.max_degree());
    m *= c;
    check += m;
  }
  if (!(check == part)) throw NotQuasisymmetricError("polynomial is not quasisymmetric in degree " + std::to_string(d));
  return out;
}

std::vector<DiffEntry> diff(const QSymElement& rule, const QSymElement& oracle) {
  std::set<Composition> keys;
  for (const auto& [alpha, c] : rule.terms()) keys.insert(alpha);
  for (const auto& [alpha, c] : oracle.terms()) keys.insert(alpha);
  std::vector<DiffEntry> out;
  for (const auto& alpha : keys) {
    RatFunc a = rule.coefficient(alpha), b = oracle.coefficient(alpha);
    if (!(a == b)) out.push_back({alpha, a, b});
  }
  return out;
}

QSymElement oracle_product(Basis basis, const Composition& alpha, const Composition& beta,
                           std::optional<int> nvars) {
  const int d = alpha.size() + beta.size();
  const int vars = nvars.value_or(d);
  if (vars < d) throw std::invalid_argument("the oracle needs at least |alpha| + |beta| variables");
  TruncPoly a = expand(QSymElement::single(basis, alpha), vars, d);
  TruncPoly b = expand(QSymElement::single(basis, beta), vars, d);
  return from_M(extract_M(a * b, d), basis);
}

ProductCheck verify_product(Basis basis, const Composition& alpha, const Composition& beta,
                            std::optional<int> nvars) {
  ProductCheck out{product_rule(basis, alpha, beta), oracle_product(basis, alpha, beta, nvars), {}};
  out.diffs = diff(out.rule, out.oracle);
  return out;
}

}  // namespace qsym
