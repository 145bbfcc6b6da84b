#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsym/coeff.hpp"

namespace qsym {

// A composition of n: a finite sequence of positive integers.  size() is
// the sum of the parts, length() the number of parts.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  // Size first, then length, then lexicographic.
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// A subset of [n-1] for a fixed grade n.  The grade travels with the set
// so that mixing ambients is caught.  A subset of [N] is a Subset of grade
// N + 1.
class Subset {
 public:
  static constexpr int kMaxGrade = 32;

  Subset() = default;
  explicit Subset(int grade);
  Subset(int grade, std::initializer_list<int> elems);
  Subset(int grade, const std::vector<int>& elems);

  static Subset from_bits(int grade, std::uint32_t bits);
  static Subset full(int grade);
  // Elements of [lo, hi] inside [grade-1].
  static Subset interval(int grade, int lo, int hi);

  int grade() const { return grade_; }
  int universe() const { return grade_ > 0 ? grade_ - 1 : 0; }
  std::uint32_t bits() const { return bits_; }

  bool contains(int i) const { return i >= 1 && i <= universe() && ((bits_ >> (i - 1)) & 1u); }
  int size() const;
  bool empty() const { return bits_ == 0; }
  std::vector<int> elements() const;
  std::optional<int> max() const;
  std::optional<int> min() const;

  Subset complement() const;
  bool is_subset_of(const Subset& o) const;
  // Same elements in another ambient; throws if they do not fit.
  Subset with_grade(int grade) const;
  // {s + k : s in S} in the given grade; throws if an element leaves it.
  Subset shifted(int k, int grade) const;
  Subset inserted(int i) const;
  Subset erased(int i) const;

  friend Subset operator|(const Subset& a, const Subset& b);
  friend Subset operator&(const Subset& a, const Subset& b);
  friend Subset operator-(const Subset& a, const Subset& b);
  friend bool operator==(const Subset& a, const Subset& b) = default;
  // Grade, then size, then lexicographic on the sorted elements.
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

  std::string to_string() const;

 private:
  int grade_ = 0;
  std::uint32_t bits_ = 0;
};

// Every subset of [grade-1], ordered by size then lexicographically.
std::vector<Subset> all_subsets(int grade);
// k-element subsets of [N] (as Subsets of grade N+1) in lexicographic order.
std::vector<Subset> subsets_of_size(int N, int k);

Subset set_of(const Composition& alpha);
Composition comp_of(const Subset& s);

// alpha refines beta, i.e. set(beta) is contained in set(alpha).
bool refines(const Composition& alpha, const Composition& beta);
std::vector<Composition> compositions_of(int n);
std::vector<Composition> coarsenings(const Composition& alpha);
std::vector<Composition> refinements(const Composition& alpha);

Composition complement(const Composition& alpha);
Composition reverse(const Composition& alpha);
Composition concat(const Composition& a, const Composition& b);
// a ⊙ b: last part of a merged with first part of b; empty sides pass through.
Composition near_concat(const Composition& a, const Composition& b);

// Pairs (a, b) with a·b = gamma (proper, both sides nonempty).
std::vector<std::pair<Composition, Composition>> deconcatenations(const Composition& gamma);
// Pairs (a, b) with a ⊙ b = gamma, including (∅, gamma) and (gamma, ∅).
std::vector<std::pair<Composition, Composition>> near_deconcatenations(const Composition& gamma);

// std_S and its inverse for a sorted list S.
Subset standardize(const Subset& k, const std::vector<int>& s, int grade);
Subset lift(const Subset& i, const std::vector<int>& s, int grade);

// ---- interval statistics of A inside [N] (A has grade N + 1)

struct IntervalStats {
  std::vector<std::pair<int, int>> intervals;
  Subset ends;             // e(A), inside [N-1]
  Subset complement_ends;  // e(A^c)
  Subset all_ends;         // e(A) ⊔ e(A^c)
  std::optional<int> z;    // empty when A or A^c needed for z is empty
};

IntervalStats interval_stats(const Subset& a);

struct Preshuffle {
  Subset sharp;    // I #_A J, inside [m+n-1]
  Subset shuffle;  // I ⧢_A J
};

// I of grade m, J of grade n, A an n-subset of [m+n].
Preshuffle preshuffle(const Subset& i, const Subset& j, const Subset& a);

// ---- words

using Word = std::vector<int>;

Subset descents(const Word& w);
Word shift_word(const Word& w, int k);
bool is_permutation(const Word& w);
// v placed at the positions of A, u filling the rest, in order.
Word shuffle_by(const Word& u, const Word& v, const Subset& a);

template <class T>
class Multiset {
 public:
  void insert(const T& x, std::size_t k = 1) {
    if (k > 0) counts_[x] += k;
  }
  std::size_t count(const T& x) const {
    auto it = counts_.find(x);
    return it == counts_.end() ? 0 : it->second;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [x, k] : counts_) n += k;
    return n;
  }
  const std::map<T, std::size_t>& counts() const { return counts_; }
  friend bool operator==(const Multiset& a, const Multiset& b) = default;

 private:
  std::map<T, std::size_t> counts_;
};

Multiset<Word> shuffles(const Word& u, const Word& v);

// ---- composition shuffles

// alpha ⧢_D beta: parts of beta at the positions in D.
Composition shuffle_at(const Composition& alpha, const Composition& beta, const Subset& d);
Multiset<Composition> comp_shuffles(const Composition& alpha, const Composition& beta);
Multiset<Composition> overlapping_shuffles(const Composition& alpha, const Composition& beta);

enum class Origin : std::uint8_t { Left, Right };
enum class Join : std::uint8_t { Comma, Plus1, Plus2 };

struct ShuffleEntry {
  int value;
  Origin origin;
  friend bool operator==(const ShuffleEntry&, const ShuffleEntry&) = default;
};

class TwoWayShuffle {
 public:
  TwoWayShuffle(std::vector<ShuffleEntry> items, std::vector<Join> joins);

  const std::vector<ShuffleEntry>& items() const { return items_; }
  const std::vector<Join>& joins() const { return joins_; }
  // gamma^+: evaluate every +1 and +2.
  Composition plus() const;
  int c1() const;
  int c2() const;
  std::string to_string() const;
  friend bool operator==(const TwoWayShuffle&, const TwoWayShuffle&) = default;

 private:
  std::vector<ShuffleEntry> items_;
  std::vector<Join> joins_;
};

std::vector<TwoWayShuffle> two_way_shuffles(const Composition& alpha, const Composition& beta);

// ---- weights and the s, g statistics

// wt_I(i) = |[1, i-1] ∩ I| + 1
int weight(const Subset& i, int pos);
std::vector<int> weights(const Subset& i);
int stat_s(const Subset& i, const Subset& j);
int stat_g(const Subset& i, const Subset& j);
// Breakpoint forms of the same statistics.
std::vector<int> breakpoints(const Subset& i, const Subset& j);
int stat_s_bre(const Subset& i, const Subset& j);
int stat_g_bre(const Subset& i, const Subset& j);

struct ShuffleWeights {
  Subset sdes_low;          // sDes(w^0_{<=m})
  Subset sdes_high;         // sDes(w^0_{>m})
  std::vector<RatFunc> sw;  // sw(i) at index i - 1
};

ShuffleWeights shuffle_weights(const Word& w, int m);

// Descent representatives: permutations of [n] with descent set I.
Word descent_rep_blocks(const Subset& i);
Word descent_rep_runs(const Subset& i);

// ---- the Ψ/Φ correspondence, alpha and beta nonempty

std::vector<Subset> admissible_sets(const Composition& alpha, const Composition& beta);
Subset psi(const Subset& a, const Composition& alpha, const Composition& beta);
Subset phi(const Subset& d, const Composition& alpha, const Composition& beta);

}  // namespace qsym
