#include <stdexcept>

#include "qsym/algebra.hpp"

namespace qsym {

namespace {

RatFunc sign(int k) { return k % 2 == 0 ? RatFunc(1) : RatFunc(-1); }

QSymElement from_multiset(Basis basis, const Multiset<Composition>& ms) {
  QSymElement out(basis);
  for (const auto& [gamma, k] : ms.counts()) out.add(gamma, RatFunc(static_cast<int>(k)));
  return out;
}

QSymElement two_way_rule(Basis basis, const Composition& alpha, const Composition& beta,
                         const RatFunc& plus1, const RatFunc& plus2) {
  QSymElement out(basis);
  for (const auto& s : two_way_shuffles(alpha, beta))
    out.add(s.plus(), plus1.pow(s.c1()) * plus2.pow(s.c2()));
  return out;
}

QSymElement l_rule(const Composition& alpha, const Composition& beta) {
  QSymElement out(BasisKind::L);
  int m = alpha.size(), n = beta.size();
  Subset i = set_of(alpha), j = set_of(beta);
  for (const auto& a : subsets_of_size(m + n, n)) out.add(comp_of(preshuffle(i, j, a).shuffle), 1);
  return out;
}

QSymElement mq_rule(const Composition& alpha, const Composition& beta) {
  QSymElement out(BasisKind::Mq);
  int m = alpha.size(), n = beta.size();
  Subset i = set_of(alpha), j = set_of(beta);
  RatFunc one_minus_q = 1 - RatFunc::q();
  for (const auto& a : subsets_of_size(m + n, n)) {
    IntervalStats st = interval_stats(a);
    Preshuffle p = preshuffle(i, j, a);
    RatFunc c = one_minus_q.pow((st.all_ends - p.sharp).size() - 1);
    std::uint32_t free = st.complement_ends.bits();
    for (std::uint32_t s = free;; s = (s - 1) & free) {
      Subset extra = Subset::from_bits(m + n, s);
      out.add(comp_of(p.shuffle | extra), c * RatFunc::q(extra.size()));
      if (s == 0) break;
    }
  }
  return out;
}

QSymElement k_rule(int nu_value, const Composition& alpha, const Composition& beta) {
  QSymElement out(Basis::K(nu_value));
  RatFunc nu_minus_one(nu_value - 1);
  int m = alpha.size(), n = beta.size();
  Subset i = set_of(alpha), j = set_of(beta);
  for (const auto& a : subsets_of_size(m + n, n)) {
    IntervalStats st = interval_stats(a);
    Subset sharp = preshuffle(i, j, a).sharp;
    if (!(sharp & st.all_ends).empty()) continue;
    std::uint32_t free = st.all_ends.bits();
    for (std::uint32_t s = free;; s = (s - 1) & free) {
      Subset extra = Subset::from_bits(m + n, s);
      out.add(comp_of(sharp | extra),
              sign((extra & st.complement_ends).size()) * nu_minus_one.pow((extra & st.ends).size()));
      if (s == 0) break;
    }
  }
  return out;
}

}  // namespace

QSymElement g_product(const Word& u, const Word& v) {
  if (!is_permutation(u) || !is_permutation(v)) throw std::invalid_argument("representatives must be permutations");
  const int m = static_cast<int>(u.size()), n = static_cast<int>(v.size());
  Subset i = descents(u), j = descents(v);
  Word vs = shift_word(v, m);
  QSymElement out(BasisKind::G);
  for (const auto& a : subsets_of_size(m + n, n)) {
    Word w = shuffle_by(u, vs, a);
    Subset des = descents(w);
    ShuffleWeights sw = shuffle_weights(w, m);
    RatFunc c = 1;
    for (int x : (sw.sdes_low - i).elements()) c *= 1 - RatFunc::q(weight(i, x));
    for (int x : (sw.sdes_high - j).elements()) c *= 1 - RatFunc::q(weight(j, x));
    if (c.is_zero()) continue;
    std::uint32_t free = des.complement().bits();
    for (std::uint32_t s = free;; s = (s - 1) & free) {
      Subset k = Subset::from_bits(m + n, des.bits() | s);
      RatFunc coeff = c;
      for (int x : Subset::from_bits(m + n, s).elements())
        coeff *= RatFunc::q(weight(k, x)) - sw.sw[x - 1];
      out.add(comp_of(k), coeff);
      if (s == 0) break;
    }
  }
  return out;
}

QSymElement product_rule(Basis basis, const Composition& alpha, const Composition& beta) {
  if (alpha.empty()) return QSymElement::single(basis, beta);
  if (beta.empty()) return QSymElement::single(basis, alpha);
  const RatFunc q = RatFunc::q(), t = RatFunc::t();
  switch (basis.kind()) {
    case BasisKind::M:
      return from_multiset(basis, overlapping_shuffles(alpha, beta));
    case BasisKind::LambdaStar:
      return from_multiset(basis, overlapping_shuffles(alpha, beta));
    case BasisKind::E: {
      QSymElement out(basis);
      Multiset<Composition> shuffled = overlapping_shuffles(alpha, beta);
      for (const auto& [gamma, k] : shuffled.counts())
        out.add(gamma, sign(alpha.length() + beta.length() - gamma.length()) * RatFunc(static_cast<int>(k)));
      return out;
    }
    case BasisKind::L:
      return l_rule(alpha, beta);
    case BasisKind::D:
      return two_way_rule(basis, alpha, beta, q + t, t);
    case BasisKind::Eta:
      return two_way_rule(basis, alpha, beta, RatFunc(1), RatFunc(-1));
    case BasisKind::EtaQ:
      return two_way_rule(basis, alpha, beta, q, RatFunc(-1));
    case BasisKind::G:
      return g_product(descent_rep_blocks(set_of(alpha)), descent_rep_blocks(set_of(beta)));
    case BasisKind::Mq:
      return mq_rule(alpha, beta);
    case BasisKind::K:
      return k_rule(basis.nu(), alpha, beta);
  }
  throw std::logic_error("unhandled basis");
}

QSymElement mul(const QSymElement& x, const QSymElement& y) {
  if (x.basis() != y.basis()) throw std::invalid_argument("product of elements in different bases");
  QSymElement out(x.basis());
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out += product_rule(x.basis(), a, b) * (ca * cb);
  return out;
}

QSymElement mul_via_M(const QSymElement& x, const QSymElement& y) {
  return from_M(mul(to_M(x), to_M(y)), x.basis());
}

TensorElement coproduct_rule(Basis basis, const Composition& gamma) {
  TensorElement out(basis, basis);
  const int n = gamma.size();
  auto add_deconcat = [&] {
    out.add(Composition(), gamma, 1);
    if (!gamma.empty()) out.add(gamma, Composition(), 1);
    for (const auto& [a, b] : deconcatenations(gamma)) out.add(a, b, 1);
  };
  switch (basis.kind()) {
    case BasisKind::M:
    case BasisKind::E:
    case BasisKind::LambdaStar:
    case BasisKind::Eta:
    case BasisKind::EtaQ:
    case BasisKind::D:
      add_deconcat();
      break;
    case BasisKind::L:
      add_deconcat();
      for (const auto& [a, b] : near_deconcatenations(gamma))
        if (!a.empty() && !b.empty()) out.add(a, b, 1);
      break;
    case BasisKind::Mq:
      add_deconcat();
      for (const auto& [a, b] : near_deconcatenations(gamma))
        if (!a.empty() && !b.empty()) out.add(a, b, 1 - RatFunc::q());
      break;
    case BasisKind::K:
      for (const auto& [a, b] : near_deconcatenations(gamma)) out.add(a, b, 1);
      break;
    case BasisKind::G: {
      out.add(Composition(), gamma, 1);
      if (n == 0) break;
      out.add(gamma, Composition(), 1);
      Subset s = set_of(gamma);
      for (int k = 1; k < n; ++k) {
        std::vector<int> left, right;
        for (int e : s.elements()) {
          if (e < k) left.push_back(e);
          if (e > k) right.push_back(e - k);
        }
        Subset i(k, left), j(n - k, right);
        Composition alpha = comp_of(i);
        int extra = s.contains(k) ? 0 : 1;
        for (const auto& jj : all_subsets(n - k)) {
          if (!j.is_subset_of(jj)) continue;
          RatFunc c = RatFunc::q(stat_g(j, jj)) * RatFunc(cq(alpha.length(), (jj - j).size() + extra));
          out.add(alpha, comp_of(jj), c);
        }
      }
      break;
    }
  }
  return out;
}

TensorElement comul(const QSymElement& x) {
  TensorElement out(x.basis(), x.basis());
  for (const auto& [gamma, c] : x.terms()) {
    TensorElement t = coproduct_rule(x.basis(), gamma);
    for (const auto& [key, d] : t.terms()) out.add(key.first, key.second, c * d);
  }
  return out;
}

TensorElement comul_via_M(const QSymElement& x) {
  return convert(comul(to_M(x)), x.basis(), x.basis());
}

TensorElement tensor_mul(const TensorElement& x, const TensorElement& y) {
  if (x.left_basis() != y.left_basis() || x.right_basis() != y.right_basis())
    throw std::invalid_argument("product of tensors in different bases");
  TensorElement out(x.left_basis(), x.right_basis());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      QSymElement a = product_rule(x.left_basis(), kx.first, ky.first);
      QSymElement b = product_rule(x.right_basis(), kx.second, ky.second);
      RatFunc c = cx * cy;
      for (const auto& [ga, ca] : a.terms())
        for (const auto& [gb, cb] : b.terms()) out.add(ga, gb, c * ca * cb);
    }
  }
  return out;
}

}  // namespace qsym
