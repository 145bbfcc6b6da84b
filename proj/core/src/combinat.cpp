#include "qsym/combinat.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsym {

// ---------------------------------------------------------------- Composition

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
    size_ += p;
  }
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------- Subset

namespace {

void check_grade(int grade) {
  if (grade < 0 || grade > Subset::kMaxGrade) throw std::invalid_argument("subset grade out of range");
}

std::uint32_t universe_mask(int grade) {
  int u = grade > 0 ? grade - 1 : 0;
  return u >= 32 ? 0xffffffffu : ((1u << u) - 1u);
}

}  // namespace

Subset::Subset(int grade) : grade_(grade) { check_grade(grade); }

Subset::Subset(int grade, std::initializer_list<int> elems) : Subset(grade, std::vector<int>(elems)) {}

Subset::Subset(int grade, const std::vector<int>& elems) : grade_(grade) {
  check_grade(grade);
  for (int e : elems) {
    if (e < 1 || e > universe())
      throw std::invalid_argument("element " + std::to_string(e) + " outside [" +
                                  std::to_string(universe()) + "]");
    bits_ |= 1u << (e - 1);
  }
}

Subset Subset::from_bits(int grade, std::uint32_t bits) {
  Subset s(grade);
  if (bits & ~universe_mask(grade)) throw std::invalid_argument("bits outside the universe");
  s.bits_ = bits;
  return s;
}

Subset Subset::full(int grade) { return from_bits(grade, universe_mask(grade)); }

Subset Subset::interval(int grade, int lo, int hi) {
  Subset s(grade);
  for (int i = std::max(lo, 1); i <= std::min(hi, s.universe()); ++i) s.bits_ |= 1u << (i - 1);
  return s;
}

int Subset::size() const { return std::popcount(bits_); }

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::optional<int> Subset::max() const {
  if (!bits_) return std::nullopt;
  return 32 - std::countl_zero(bits_);
}

std::optional<int> Subset::min() const {
  if (!bits_) return std::nullopt;
  return std::countr_zero(bits_) + 1;
}

Subset Subset::complement() const { return from_bits(grade_, ~bits_ & universe_mask(grade_)); }

bool Subset::is_subset_of(const Subset& o) const {
  if (grade_ != o.grade_) throw std::invalid_argument("subset comparison across grades");
  return (bits_ & ~o.bits_) == 0;
}

Subset Subset::with_grade(int grade) const {
  check_grade(grade);
  if (bits_ & ~universe_mask(grade)) throw std::invalid_argument("subset does not fit the new grade");
  Subset s(grade);
  s.bits_ = bits_;
  return s;
}

Subset Subset::shifted(int k, int grade) const {
  std::vector<int> out;
  for (int e : elements()) out.push_back(e + k);
  return Subset(grade, out);
}

Subset Subset::inserted(int i) const {
  if (i < 1 || i > universe()) throw std::invalid_argument("element outside the universe");
  Subset s = *this;
  s.bits_ |= 1u << (i - 1);
  return s;
}

Subset Subset::erased(int i) const {
  Subset s = *this;
  if (i >= 1 && i <= 32) s.bits_ &= ~(1u << (i - 1));
  return s;
}

namespace {

void check_same(const Subset& a, const Subset& b) {
  if (a.grade() != b.grade()) throw std::invalid_argument("set operation across grades");
}

}  // namespace

Subset operator|(const Subset& a, const Subset& b) {
  check_same(a, b);
  return Subset::from_bits(a.grade_, a.bits_ | b.bits_);
}

Subset operator&(const Subset& a, const Subset& b) {
  check_same(a, b);
  return Subset::from_bits(a.grade_, a.bits_ & b.bits_);
}

Subset operator-(const Subset& a, const Subset& b) {
  check_same(a, b);
  return Subset::from_bits(a.grade_, a.bits_ & ~b.bits_);
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.grade_ <=> b.grade_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.elements() <=> b.elements();
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  auto e = elements();
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << '}';
  return os.str();
}

std::vector<Subset> all_subsets(int grade) {
  check_grade(grade);
  std::vector<Subset> out;
  std::uint32_t mask = universe_mask(grade);
  for (std::uint64_t b = 0; b <= mask; ++b) out.push_back(Subset::from_bits(grade, static_cast<std::uint32_t>(b)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> subsets_of_size(int N, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > N) return out;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 1);
  while (true) {
    out.emplace_back(N + 1, c);
    int i = k - 1;
    while (i >= 0 && c[i] == N - k + i + 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// ---------------------------------------------------------------- compositions

Subset set_of(const Composition& alpha) {
  std::vector<int> out;
  int s = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i) out.push_back(s += alpha[i]);
  return Subset(alpha.size(), out);
}

Composition comp_of(const Subset& s) {
  if (s.grade() == 0) return Composition();
  std::vector<int> parts;
  int prev = 0;
  for (int e : s.elements()) {
    parts.push_back(e - prev);
    prev = e;
  }
  parts.push_back(s.grade() - prev);
  return Composition(std::move(parts));
}

bool refines(const Composition& alpha, const Composition& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("refinement across different sizes");
  return set_of(beta).is_subset_of(set_of(alpha));
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  for (const auto& s : all_subsets(n)) out.push_back(comp_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> coarsenings(const Composition& alpha) {
  std::vector<Composition> out;
  Subset s = set_of(alpha);
  for (std::uint32_t b = s.bits();; b = (b - 1) & s.bits()) {
    out.push_back(comp_of(Subset::from_bits(s.grade(), b)));
    if (b == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> refinements(const Composition& alpha) {
  std::vector<Composition> out;
  Subset s = set_of(alpha);
  Subset rest = s.complement();
  for (std::uint32_t b = rest.bits();; b = (b - 1) & rest.bits()) {
    out.push_back(comp_of(Subset::from_bits(s.grade(), s.bits() | b)));
    if (b == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition complement(const Composition& alpha) { return comp_of(set_of(alpha).complement()); }

Composition reverse(const Composition& alpha) {
  std::vector<int> p = alpha.parts();
  std::reverse(p.begin(), p.end());
  return Composition(std::move(p));
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(p));
}

Composition near_concat(const Composition& a, const Composition& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  std::vector<int> p = a.parts();
  p.back() += b[0];
  p.insert(p.end(), b.parts().begin() + 1, b.parts().end());
  return Composition(std::move(p));
}

std::vector<std::pair<Composition, Composition>> deconcatenations(const Composition& gamma) {
  std::vector<std::pair<Composition, Composition>> out;
  const auto& p = gamma.parts();
  for (std::size_t i = 1; i < p.size(); ++i)
    out.emplace_back(Composition(std::vector<int>(p.begin(), p.begin() + i)),
                     Composition(std::vector<int>(p.begin() + i, p.end())));
  return out;
}

std::vector<std::pair<Composition, Composition>> near_deconcatenations(const Composition& gamma) {
  std::vector<std::pair<Composition, Composition>> out;
  out.emplace_back(Composition(), gamma);
  if (gamma.empty()) return out;
  out.emplace_back(gamma, Composition());
  const auto& p = gamma.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (int a = 1; a < p[i]; ++a) {
      std::vector<int> left(p.begin(), p.begin() + i);
      left.push_back(a);
      std::vector<int> right{p[i] - a};
      right.insert(right.end(), p.begin() + i + 1, p.end());
      out.emplace_back(Composition(std::move(left)), Composition(std::move(right)));
    }
  }
  return out;
}

Subset standardize(const Subset& k, const std::vector<int>& s, int grade) {
  std::vector<int> out;
  for (int e : k.elements()) {
    auto it = std::lower_bound(s.begin(), s.end(), e);
    if (it == s.end() || *it != e) throw std::invalid_argument("standardizing an element outside S");
    out.push_back(static_cast<int>(it - s.begin()) + 1);
  }
  return Subset(grade, out);
}

Subset lift(const Subset& i, const std::vector<int>& s, int grade) {
  std::vector<int> out;
  for (int e : i.elements()) {
    if (e > static_cast<int>(s.size())) throw std::invalid_argument("lifting an index beyond |S|");
    out.push_back(s[e - 1]);
  }
  return Subset(grade, out);
}

// ---------------------------------------------------------------- intervals

namespace {

// Right endpoints of the maximal intervals of s (elements of [N]), minus N.
Subset right_ends(const std::vector<int>& s, int N) {
  std::vector<int> out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    bool end = k + 1 == s.size() || s[k + 1] != s[k] + 1;
    if (end && s[k] != N) out.push_back(s[k]);
  }
  return Subset(N, out);
}

}  // namespace

IntervalStats interval_stats(const Subset& a) {
  int N = a.universe();
  IntervalStats st;
  auto elems = a.elements();
  for (std::size_t k = 0; k < elems.size();) {
    std::size_t j = k;
    while (j + 1 < elems.size() && elems[j + 1] == elems[j] + 1) ++j;
    st.intervals.emplace_back(elems[k], elems[j]);
    k = j + 1;
  }
  st.ends = right_ends(elems, N);
  st.complement_ends = right_ends(a.complement().elements(), N);
  st.all_ends = st.ends | st.complement_ends;
  if (a.contains(N)) {
    st.z = a.complement().max();
  } else {
    st.z = a.max();
  }
  return st;
}

Preshuffle preshuffle(const Subset& i, const Subset& j, const Subset& a) {
  int m = i.grade(), n = j.grade();
  if (a.grade() != m + n + 1 || a.size() != n)
    throw std::invalid_argument("preshuffle needs A to be an n-subset of [m+n]");
  auto a_elems = a.elements();
  auto ac_elems = a.complement().elements();
  Subset sharp = lift(i, ac_elems, m + n) | lift(j, a_elems, m + n);
  IntervalStats st = interval_stats(a);
  return {sharp, st.ends | (sharp - st.all_ends)};
}

// ---------------------------------------------------------------- words

Subset descents(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return Subset(static_cast<int>(w.size()), out);
}

Word shift_word(const Word& w, int k) {
  Word out = w;
  for (int& x : out) x += k;
  return out;
}

bool is_permutation(const Word& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Word shuffle_by(const Word& u, const Word& v, const Subset& a) {
  int total = static_cast<int>(u.size() + v.size());
  if (a.grade() != total + 1 || a.size() != static_cast<int>(v.size()))
    throw std::invalid_argument("shuffle positions do not match the words");
  Word out;
  std::size_t iu = 0, iv = 0;
  for (int p = 1; p <= total; ++p) out.push_back(a.contains(p) ? v[iv++] : u[iu++]);
  return out;
}

Multiset<Word> shuffles(const Word& u, const Word& v) {
  Multiset<Word> out;
  int total = static_cast<int>(u.size() + v.size());
  for (const auto& a : subsets_of_size(total, static_cast<int>(v.size()))) out.insert(shuffle_by(u, v, a));
  return out;
}

// ---------------------------------------------------------------- weights

int weight(const Subset& i, int pos) {
  if (pos < 1) throw std::invalid_argument("weight at a nonpositive position");
  int w = 1;
  for (int e : i.elements())
    if (e < pos) ++w;
  return w;
}

std::vector<int> weights(const Subset& i) {
  std::vector<int> out;
  for (int p = 1; p <= i.universe(); ++p) out.push_back(weight(i, p));
  return out;
}

namespace {

void check_nested(const Subset& i, const Subset& j) {
  if (!i.is_subset_of(j)) throw std::invalid_argument("statistic needs I contained in J");
}

}  // namespace

int stat_s(const Subset& i, const Subset& j) {
  check_nested(i, j);
  int s = 0;
  for (int e : (j - i).elements()) s += weight(i, e);
  return s;
}

int stat_g(const Subset& i, const Subset& j) {
  check_nested(i, j);
  int s = 0;
  for (int e : (j - i).elements()) s += weight(j, e);
  return s;
}

std::vector<int> breakpoints(const Subset& i, const Subset& j) {
  check_nested(i, j);
  auto je = j.elements();
  std::vector<int> out;
  for (int e : i.elements())
    out.push_back(static_cast<int>(std::upper_bound(je.begin(), je.end(), e) - je.begin()));
  return out;
}

int stat_s_bre(const Subset& i, const Subset& j) {
  auto bre = breakpoints(i, j);
  // The trailing block beyond max I is closed by a sentinel at |J| + 1.
  bre.push_back(j.size() + 1);
  int s = 0, prev = 0;
  for (std::size_t t = 0; t < bre.size(); ++t) {
    s += static_cast<int>(t + 1) * (bre[t] - prev - 1);
    prev = bre[t];
  }
  return s;
}

int stat_g_bre(const Subset& i, const Subset& j) {
  auto bre = breakpoints(i, j);
  int s = 0;
  for (int k = 1; k <= j.size(); ++k)
    if (std::find(bre.begin(), bre.end(), k) == bre.end()) s += k;
  return s;
}

namespace {

// sDes of a word with zeros: descents standardized to the nonzero
// positions, with the largest position dropped.
Subset standardized_descents(const Word& v) {
  std::vector<int> nonzero;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) nonzero.push_back(static_cast<int>(i) + 1);
  int p = static_cast<int>(nonzero.size());
  Subset d = standardize(descents(v), nonzero, p + 1);
  return d.erased(p).with_grade(p);
}

}  // namespace

ShuffleWeights shuffle_weights(const Word& w, int m) {
  if (!is_permutation(w)) throw std::invalid_argument("shuffle weights need a permutation");
  int total = static_cast<int>(w.size());
  if (m < 0 || m > total) throw std::invalid_argument("split point outside the word");
  Word low0, high0, low, high;
  std::vector<int> pos(total + 1);
  for (int x : w) {
    low0.push_back(x <= m ? x : 0);
    high0.push_back(x > m ? x : 0);
    if (x <= m) {
      low.push_back(x);
      pos[x] = static_cast<int>(low.size());
    } else {
      high.push_back(x);
      pos[x] = static_cast<int>(high.size());
    }
  }
  ShuffleWeights out{standardized_descents(low0), standardized_descents(high0), {}};
  Subset dlow = descents(low), dhigh = descents(high);
  for (int i = 0; i + 1 < total; ++i) {
    int a = w[i], b = w[i + 1];
    if (a <= m && b <= m) {
      out.sw.push_back(RatFunc::q(weight(dlow, pos[a])));
    } else if (a > m && b > m) {
      out.sw.push_back(RatFunc::q(weight(dhigh, pos[a])));
    } else {
      out.sw.push_back(RatFunc());
    }
  }
  return out;
}

Word descent_rep_blocks(const Subset& i) {
  Composition c = comp_of(i);
  Word w;
  int top = i.grade();
  for (int part : c.parts()) {
    for (int k = top - part + 1; k <= top; ++k) w.push_back(k);
    top -= part;
  }
  return w;
}

Word descent_rep_runs(const Subset& i) {
  Word w(i.grade());
  std::iota(w.begin(), w.end(), 1);
  auto elems = i.elements();
  for (std::size_t k = 0; k < elems.size();) {
    std::size_t j = k;
    while (j + 1 < elems.size() && elems[j + 1] == elems[j] + 1) ++j;
    std::reverse(w.begin() + (elems[k] - 1), w.begin() + elems[j] + 1);
    k = j + 1;
  }
  return w;
}

// ---------------------------------------------------------------- Ψ and Φ

namespace {

void check_nonempty(const Composition& alpha, const Composition& beta) {
  if (alpha.empty() || beta.empty()) throw std::invalid_argument("Ψ/Φ need nonempty compositions");
}

}  // namespace

std::vector<Subset> admissible_sets(const Composition& alpha, const Composition& beta) {
  check_nonempty(alpha, beta);
  int m = alpha.size(), n = beta.size();
  Subset i = set_of(alpha), j = set_of(beta);
  std::vector<Subset> out;
  for (const auto& a : subsets_of_size(m + n, n)) {
    IntervalStats st = interval_stats(a);
    Subset sharp = preshuffle(i, j, a).sharp;
    if (st.all_ends.erased(*st.z).is_subset_of(sharp)) out.push_back(a);
  }
  return out;
}

Subset psi(const Subset& a, const Composition& alpha, const Composition& beta) {
  check_nonempty(alpha, beta);
  int m = alpha.size(), n = beta.size(), N = m + n;
  Subset i = set_of(alpha), j = set_of(beta);
  IntervalStats st = interval_stats(a);
  Subset sharp = preshuffle(i, j, a).sharp;
  if (!st.all_ends.erased(*st.z).is_subset_of(sharp)) throw std::invalid_argument("A is not admissible");
  Subset x = sharp.with_grade(N + 1).inserted(*st.z).inserted(N);
  Subset jt = lift(j, a.elements(), N + 1).inserted(a.contains(N) ? N : *st.z);
  return standardize(jt, x.elements(), x.size() + 1);
}

Subset phi(const Subset& d, const Composition& alpha, const Composition& beta) {
  check_nonempty(alpha, beta);
  int l = alpha.length(), k = beta.length(), N = alpha.size() + beta.size();
  if (d.grade() != l + k + 1 || d.size() != k) throw std::invalid_argument("D must be a k-subset of [l+k]");
  std::vector<int> out;
  int sigma = 0;
  int ia = 0, ib = 0;
  for (int p = 1; p <= l + k; ++p) {
    if (d.contains(p)) {
      int b = beta[ib++];
      for (int x = sigma + 1; x <= sigma + b; ++x) out.push_back(x);
      sigma += b;
    } else {
      sigma += alpha[ia++];
    }
  }
  return Subset(N + 1, out);
}

}  // namespace qsym
